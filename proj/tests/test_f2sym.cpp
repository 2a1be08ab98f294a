#include <doctest.h>

#include "newbasis/f2sym.hpp"
#include "oracles.hpp"

using namespace newbasis;

namespace {

F2Vector vec(int d, std::uint64_t bits) { return F2Vector{d, bits}; }

} // namespace

TEST_CASE("pairing matches the oracle form")
{
  for (int d = 1; d <= 6; ++d)
    for (std::uint64_t x = 0; x < (1U << d); ++x)
      for (std::uint64_t y = 0; y < (1U << d); ++y) CHECK(pairing(vec(d, x), vec(d, y)) == oracle::form(d, x, y));
}

TEST_CASE("radical for odd D")
{
  // e1 + e3 + e5 pairs to zero with everything when D = 5
  std::uint64_t z = oracle::e(1) | oracle::e(3) | oracle::e(5);
  for (std::uint64_t y = 0; y < 32; ++y) CHECK(pairing(vec(5, z), vec(5, y)) == 0);
}

TEST_CASE("T_i agrees with the oracle and preserves the form")
{
  for (int d = 2; d <= 8; d += 2)
    for (int i = 1; i <= d; ++i)
      for (std::uint64_t xp = 0; xp < (std::uint64_t{1} << (d - 2)); ++xp) {
        F2Vector t = T_map(d, i, vec(d - 2, xp));
        CHECK(t.bits == oracle::T(d, i, xp));
        for (std::uint64_t yp = 0; yp < (std::uint64_t{1} << (d - 2)); yp += 3)
          CHECK(pairing(t, T_map(d, i, vec(d - 2, yp))) == oracle::form(d - 2, xp, yp));
      }
}

TEST_CASE("e_i-perp is V_i plus F2 e_i")
{
  for (int d = 2; d <= 8; d += 2)
    for (int i = 1; i <= d; ++i) {
      std::set<std::uint64_t> perp, image;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x)
        if (!oracle::form(d, x, oracle::e(i))) perp.insert(x);
      for (std::uint64_t xp = 0; xp < (std::uint64_t{1} << (d - 2)); ++xp) {
        std::uint64_t t = T_map(d, i, vec(d - 2, xp)).bits;
        image.insert(t);
        image.insert(t ^ oracle::e(i));
      }
      CHECK(perp == image);
      CHECK(image.size() == (std::size_t{1} << (d - 1)));
    }
}

TEST_CASE("decompose gives maximal runs")
{
  for (int d = 1; d <= 8; ++d)
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
      auto parts = decompose(vec(d, x));
      auto want = oracle::runs(d, x);
      REQUIRE(parts.size() == want.size());
      for (std::size_t k = 0; k < parts.size(); ++k) {
        CHECK(parts[k].a == want[k].first);
        CHECK(parts[k].b == want[k].second);
      }
    }
}

TEST_CASE("u and u-tilde")
{
  for (int d = 1; d <= 8; ++d)
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
      CHECK(u_stat(vec(d, x)) == oracle::u(d, x));
      CHECK(utilde(vec(d, x)) == oracle::utilde(d, x));
    }
  CHECK(u_stat(parse_vector(4, "23")) == 1);
  CHECK(u_stat(parse_vector(4, "12")) == -1);
  CHECK(utilde(parse_vector(4, "12")) == 1);
}

TEST_CASE("u(T_i(v') + c e_i) = u'(v')")
{
  for (int d = 2; d <= 8; d += 2)
    for (int i = 1; i <= d; ++i)
      for (std::uint64_t xp = 0; xp < (std::uint64_t{1} << (d - 2)); ++xp)
        for (int c = 0; c < 2; ++c) {
          std::uint64_t v = oracle::T(d, i, xp) ^ (c ? oracle::e(i) : 0);
          CHECK(u_stat(vec(d, v)) == oracle::u(d - 2, xp));
        }
}

TEST_CASE("V(s) membership and u-tilde on V(s)")
{
  for (int d = 2; d <= 8; d += 2)
    for (int s = 0; s <= d / 2; ++s)
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << d); ++x) {
        bool in = in_V_s(vec(d, x), s);
        CHECK(in == oracle::in_V(d, s, x));
        if (in) CHECK(utilde(vec(d, x)) == s);
      }
}

TEST_CASE("graph components are the fibres of u")
{
  for (int d = 2; d <= 8; d += 2) {
    auto lib = components(d);
    auto ref = oracle::components(d);
    std::size_t n = std::size_t{1} << d;
    std::map<int, int> u_of_comp;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; y += 7) {
        CHECK((lib[x] == lib[y]) == (ref[x] == ref[y]));
        CHECK((ref[x] == ref[y]) == (oracle::u(d, x) == oracle::u(d, y)));
      }
    // each V(s) is inside one component and every component meets some V(s)
    std::set<int> hit;
    for (int s = 0; s <= d / 2; ++s) {
      std::set<int> comps;
      for (std::size_t x = 0; x < n; ++x)
        if (oracle::in_V(d, s, x)) comps.insert(ref[x]);
      CHECK(comps.size() == 1);
      hit.insert(comps.begin(), comps.end());
    }
    std::set<int> all(ref.begin(), ref.end());
    CHECK(hit == all);
  }
}

TEST_CASE("graph adjacency")
{
  for (int d = 2; d <= 6; d += 2)
    for (std::uint64_t x = 0; x < (1U << d); ++x)
      for (int i = 1; i <= d; ++i) {
        std::uint64_t y = x ^ oracle::e(i);
        CHECK(graph_adjacent(vec(d, x), vec(d, y)) == !oracle::form(d, x, oracle::e(i)));
      }
}

TEST_CASE("eps(B) lies in <B>, <B> is isotropic and e_I is a basis")
{
  for (int d = 0; d <= 8; d += 2)
    for (const auto& b : enumerate_S(d)) {
      auto fam = oracle::family_of(b);
      auto gens = oracle::generators(fam);
      auto members = oracle::span(gens);
      CHECK(members.count(eps_vector(b).bits));
      CHECK(members.size() == (std::size_t{1} << fam.size()));
      for (auto x : gens)
        for (auto y : gens) CHECK(oracle::form(d, x, y) == 0);
      F2Subspace s = span(b);
      CHECK(s.dim() == static_cast<int>(fam.size()));
      CHECK(s.is_isotropic());
    }
}

TEST_CASE("eps and <B> under t_i")
{
  for (int d = 2; d <= 8; d += 2)
    for (const auto& bp : enumerate_S(d - 2))
      for (int i = 1; i <= d; ++i) {
        IntervalSet b = t_map(d, i, bp);
        std::uint64_t diff = eps_vector(b).bits ^ oracle::T(d, i, eps_vector(bp).bits);
        CHECK((diff == 0 || diff == oracle::e(i)));
        std::set<std::uint64_t> want;
        for (auto y : oracle::span(oracle::generators(oracle::family_of(bp)))) {
          want.insert(oracle::T(d, i, y));
          want.insert(oracle::T(d, i, y) ^ oracle::e(i));
        }
        CHECK(oracle::span(oracle::generators(oracle::family_of(b))) == want);
      }
}

TEST_CASE("u-tilde(eps(B)) = |B^0| and eps is injective")
{
  for (int d = 0; d <= 8; d += 2) {
    std::set<std::uint64_t> seen;
    for (const auto& b : enumerate_S(d)) {
      std::uint64_t x = eps_vector(b).bits;
      CHECK(oracle::utilde(d, x) == b.count_part(0));
      CHECK(seen.insert(x).second);
    }
    CHECK(seen.size() == (std::size_t{1} << d));
  }
}

TEST_CASE("primitive sets: eps in V(s) and a unique maximiser of u-tilde in <B>")
{
  for (int d = 2; d <= 8; d += 2) {
    auto prims = primitive_sets(d);
    for (int s = 0; s <= d / 2; ++s) {
      const auto& b = prims[s];
      CHECK(oracle::in_V(d, s, eps_vector(b).bits));
      int best = -1, count = 0;
      for (auto x : oracle::span(oracle::generators(oracle::family_of(b)))) {
        int v = oracle::utilde(d, x);
        if (v > best) {
          best = v;
          count = 1;
        } else if (v == best) {
          ++count;
        }
      }
      CHECK(best == s);
      CHECK(count == 1);
    }
  }
}

TEST_CASE("eps(B[i]) = eps(B) + e_i with eps(B) in e_i-perp")
{
  for (int d = 2; d <= 8; d += 2)
    for (const auto& b : enumerate_S(d))
      for (int i = 1; i <= d; ++i)
        if (b.contains({i, i})) {
          std::uint64_t x = eps_vector(b).bits;
          CHECK(eps_vector(move(b, i)).bits == (x ^ oracle::e(i)));
          CHECK(oracle::form(d, x, oracle::e(i)) == 0);
        }
}

TEST_CASE("F2Subspace basics")
{
  F2Subspace s(4, {parse_vector(4, "12"), parse_vector(4, "2")});
  CHECK(s.dim() == 2);
  CHECK(s.contains(parse_vector(4, "1")));
  CHECK_FALSE(s.contains(parse_vector(4, "4")));
  CHECK_FALSE(s.add(parse_vector(4, "1")));
  CHECK(s.members().size() == 4);
  CHECK_FALSE(s.is_isotropic());
  CHECK(render(parse_vector(6, "1346")) == "1346");
  CHECK(bit_string(parse_vector(4, "13")) == "1010");
}

TEST_CASE("EpsTable is a bijection with a compatible linear order")
{
  for (int d = 0; d <= 6; d += 2) {
    EpsTable t(d);
    const auto& order = t.linear_order();
    CHECK(order.size() == (std::size_t{1} << d));
    for (std::size_t a = 0; a < order.size(); ++a) {
      CHECK(eps_vector(t.preimage(order[a])) == order[a]);
      for (std::size_t b = a + 1; b < order.size(); ++b) CHECK_FALSE((t.le(order[b], order[a]) && order[a] != order[b]));
    }
  }
}
