#include <doctest.h>

#include "newbasis/intervals.hpp"
#include "oracles.hpp"

using namespace newbasis;

TEST_CASE("interval relations")
{
  CHECK(is_prec({2, 3}, {1, 4}));
  CHECK_FALSE(is_prec({1, 3}, {1, 4}));
  CHECK_FALSE(is_prec({1, 4}, {1, 4}));
  CHECK(is_nontouching({1, 1}, {3, 4}));
  CHECK_FALSE(is_nontouching({1, 2}, {3, 4}));
  CHECK(is_nontouching({5, 6}, {1, 3}));
}

TEST_CASE("xi and t_i")
{
  // xi_i shifts, keeps or stretches
  CHECK(xi(6, 2, {3, 4}) == Interval{5, 6});
  CHECK(xi(6, 5, {1, 2}) == Interval{1, 2});
  CHECK(xi(6, 3, {2, 3}) == Interval{2, 5});
  CHECK(xi(6, 2, {2, 2}) == Interval{4, 4});
  CHECK_THROWS_AS(xi(6, 7, {1, 1}), ContractError);

  IntervalSet bp = parse_interval_set(2, "<12>");
  IntervalSet b = t_map(4, 2, bp);
  CHECK(render(b) == "<1234,2>");
  CHECK(t_inverse(b, 2) == bp);
  CHECK(t_map(4, 2, bp).size() == bp.size() + 1);
  CHECK_THROWS_AS(t_inverse(b, 3), ContractError);
}

TEST_CASE("t_inverse undoes t_i on all of S_{D-2}")
{
  for (int d = 2; d <= 8; d += 2)
    for (const auto& bp : enumerate_S(d - 2))
      for (int i = 1; i <= d; ++i) CHECK(t_inverse(t_map(d, i, bp), i) == bp);
}

TEST_CASE("primitive sets")
{
  auto p = primitive_sets(6);
  REQUIRE(p.size() == 4);
  CHECK(render(p[0]) == "∅");
  CHECK(render(p[3]) == "<123456,2345,34>");
  CHECK_THROWS_AS(primitive_sets(3), ContractError);
}

TEST_CASE("enumeration sizes")
{
  for (int d = 0; d <= 8; d += 2) CHECK(enumerate_S(d).size() == (std::size_t{1} << d));
}

TEST_CASE("axioms agree with an independent filter over R_D")
{
  for (int d = 0; d <= 6; d += 2) {
    std::set<oracle::Family> lib;
    for (const auto& b : enumerate_S(d)) {
      CHECK(check_axioms(b).ok());
      lib.insert(oracle::family_of(b));
    }
    CHECK(lib == oracle::brute_force_S(d));
  }
}

TEST_CASE("check_axioms rejects bad sets")
{
  // [1,2] and [2,3] overlap without nesting
  CHECK_FALSE(check_axioms(parse_interval_set(4, "<12,23>")).p0);
  // odd [1,5] needs 2 and 4 covered by odd members inside [2,4]
  CHECK_FALSE(check_axioms(parse_interval_set(6, "<12345>")).p1);
  CHECK(check_axioms(parse_interval_set(6, "<2,4,12345>")).p1);
  // a lone even member must start at an odd position
  CHECK_FALSE(check_axioms(parse_interval_set(4, "<23>")).p2);
}

TEST_CASE("h-sequence")
{
  auto hs = h_sequence(parse_interval_set(6, "<123456,2345>"));
  CHECK(hs.k == 2);
  CHECK(hs.h == std::vector<int>{0, 1, 2, 5, 6, 7});
  CHECK_THROWS_AS(h_sequence(parse_interval_set(4, "<23>")), ContractError);
}

TEST_CASE("tau is an involution of S_D")
{
  for (int d = 0; d <= 8; d += 2) {
    auto s = enumerate_S(d);
    std::set<IntervalSet> all(s.begin(), s.end());
    for (const auto& b : s) {
      CHECK(all.count(tau(b)));
      CHECK(tau(tau(b)) == b);
    }
  }
}

TEST_CASE("counts by |B^0| are binomial")
{
  for (int d = 0; d <= 10; d += 2) {
    auto c = count_by_m(d);
    for (int m = 0; m <= d / 2; ++m) CHECK(c[m] == oracle::binomial(d + 1, d / 2 - m));
  }
}

TEST_CASE("B -> B^1 restricted to |B| = D/2 is a bijection onto S^0_D")
{
  for (int d = 0; d <= 6; d += 2) {
    std::set<IntervalSet> s0, image;
    for (const auto& b : enumerate_S(d))
      if (b.count_part(0) == 0) s0.insert(b);
    std::size_t n = 0;
    for (const auto& [b, odd] : odd_part_map(d)) {
      CHECK(s0.count(odd));
      if (static_cast<int>(b.size()) == d / 2) {
        ++n;
        image.insert(odd);
      }
    }
    CHECK(image == s0);
    CHECK(n == s0.size());
  }
}

TEST_CASE("move B[i] stays in S_D")
{
  for (int d = 2; d <= 8; d += 2) {
    auto s = enumerate_S(d);
    std::set<IntervalSet> all(s.begin(), s.end());
    for (const auto& b : s)
      for (int i = 1; i <= d; ++i)
        if (b.contains({i, i})) {
          IntervalSet c = move(b, i);
          CHECK(all.count(c));
          CHECK(move_case(b, i) >= 1);
        }
  }
  CHECK_THROWS_AS(move(parse_interval_set(4, "<1234>"), 2), ContractError);
}

TEST_CASE("render and parse round trip")
{
  for (const auto& b : enumerate_S(6)) CHECK(parse_interval_set(6, render(b)) == b);
  CHECK(render(parse_interval_set(4, "<2,[1..4]>")) == "<1234,2>");
  CHECK_THROWS_AS(parse_interval_set(4, "<13>"), std::invalid_argument);
  CHECK_THROWS_AS(parse_interval_set(4, "12"), std::invalid_argument);
}
