#include <doctest.h>

#include "newbasis/fixtures.hpp"
#include "newbasis/mspace.hpp"

using namespace newbasis;

namespace {

const std::vector<std::string> groups = {"S1", "S2", "S3", "S4", "S5", "S2xS2", "S3xS2", "D10"};

Cyclo br(long c) { return Cyclo::root_of_unity(5, c) + Cyclo::root_of_unity(5, -c); }

std::string zlabel(int l) { return l == 0 ? "1" : "zeta" + std::to_string(l); }

// A(1,1) as sum of dim(sigma)/|Z(x)| (x, sigma)
MVector closed_form_a11(const MSpace& s)
{
  MVector v = s.zero();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PermGroup& z = s.centralizer(s.pair(i).cls);
    v[i] = Cyclo(ratio(z.char_table().degree(s.pair(i).irr), z.size()));
  }
  return v;
}

// the D10 part common to the A(1,1) and A(1,eps) displays
MVector d10_rotation_tail(const MSpace& s)
{
  MVector v = s.zero();
  for (std::string k : {"g5", "g5^2"})
    for (int l = 0; l <= 4; ++l) v[s.index("(" + k + "," + zlabel(l) + ")")] = Cyclo(ratio(1, 5));
  return v;
}

// the Fourier matrix of S_3 in the order (1,1),(1,r),(1,eps),(g2,1),(g2,eps),(g3,1),(g3,theta),(g3,theta2)
const long s3_matrix[8][8] = {{1, 2, 1, 3, 3, 2, 2, 2},      {2, 4, 2, 0, 0, -2, -2, -2},
                              {1, 2, 1, -3, -3, 2, 2, 2},    {3, 0, -3, 3, -3, 0, 0, 0},
                              {3, 0, -3, -3, 3, 0, 0, 0},    {2, -2, 2, 0, 0, 4, -2, -2},
                              {2, -2, 2, 0, 0, -2, 4, -2},   {2, -2, 2, 0, 0, -2, -2, 4}};
const char* s3_order[8] = {"(1,1)", "(1,r)", "(1,eps)", "(g2,1)", "(g2,eps)", "(g3,1)", "(g3,theta)", "(g3,theta2)"};

} // namespace

TEST_CASE("labels and parsing")
{
  const MSpace& s = mspace("S3");
  CHECK(s.size() == 8);
  CHECK(s.label(s.index("(g3,theta)")) == "(g3,theta)");
  MVector v = s.parse("(g2,eps)+2(1,r)-1/2(1,1)");
  CHECK(v.at("(1,r)") == Cyclo(2));
  CHECK(v.at("(1,1)") == Cyclo(ratio(-1, 2)));
  CHECK(v.str() == "(g2,eps)+2(1,r)-1/2(1,1)");
  CHECK_THROWS(s.parse("(g7,1)"));
  CHECK_THROWS(s.parse("(1,1"));
  CHECK_THROWS(s.index("(g2,theta)"));
  CHECK(mspace("S4").size() == 21);
  CHECK(mspace("S5").size() == 39);
  CHECK(mspace("D10").size() == 16);
}

TEST_CASE("vector arithmetic checks the space")
{
  MVector a = mspace("S2").basis("(1,1)");
  MVector b = mspace("S3").basis("(1,1)");
  CHECK_THROWS(a += b);
  CHECK((a - a).is_zero());
  CHECK((Cyclo(3) * a).at("(1,1)") == Cyclo(3));
}

TEST_CASE("A on S2")
{
  const MSpace& s = mspace("S2");
  CHECK(s.fourier(s.basis("(1,1)")) == Cyclo(ratio(1, 2)) * s.parse("(1,1)+(1,eps)+(g2,1)+(g2,eps)"));
  CHECK(s.fourier(s.basis("(g2,eps)")) == Cyclo(ratio(1, 2)) * s.parse("(1,1)-(1,eps)-(g2,1)+(g2,eps)"));
}

TEST_CASE("A on S3 is the known 8 x 8 matrix")
{
  const MSpace& s = mspace("S3");
  for (int i = 0; i < 8; ++i) {
    MVector want = s.zero();
    for (int j = 0; j < 8; ++j) want[s.index(s3_order[j])] = Cyclo(ratio(s3_matrix[i][j], 6));
    CHECK(s.fourier(s.basis(s3_order[i])) == want);
  }
}

TEST_CASE("A is a symmetric involution with the closed form at (1,1)")
{
  for (const auto& g : groups) {
    const MSpace& s = mspace(g);
    const auto& a = s.fourier_matrix();
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) CHECK(a[i][j] == a[j][i]);
      CHECK(s.fourier(s.fourier(s.basis(i))) == s.basis(i));
    }
    CHECK(s.fourier(s.basis("(1,1)")) == closed_form_a11(s));
  }
}

TEST_CASE("A on D10: the displayed values")
{
  const MSpace& s = mspace("D10");
  MVector tail = d10_rotation_tail(s);
  CHECK(s.fourier(s.basis("(1,1)")) ==
        s.parse("1/10(1,1)+1/5(1,r)+1/5(1,r')+1/10(1,eps)+1/2(g2,1)+1/2(g2,eps)") + tail);
  CHECK(s.fourier(s.basis("(1,eps)")) ==
        s.parse("1/10(1,1)+1/5(1,r)+1/5(1,r')+1/10(1,eps)-1/2(g2,1)-1/2(g2,eps)") + tail);
  CHECK(s.fourier(s.basis("(g2,1)")) == s.parse("1/2(1,1)-1/2(1,eps)+1/2(g2,1)-1/2(g2,eps)"));
  for (int k = 1; k <= 2; ++k)
    for (int l = 0; l <= 4; ++l) {
      MVector want = s.parse("1/5(1,1)+1/5(1,eps)");
      want[s.index("(1,r)")] = Cyclo(ratio(1, 5)) * br(k);
      want[s.index("(1,r')")] = Cyclo(ratio(1, 5)) * br(2 * k);
      for (int kp = 1; kp <= 2; ++kp)
        for (int lp = 0; lp <= 4; ++lp)
          want[s.index("(" + std::string(kp == 1 ? "g5" : "g5^2") + "," + zlabel(lp) + ")")] =
              Cyclo(ratio(1, 5)) * br(k * lp - kp * l);
      std::string src = "(" + std::string(k == 1 ? "g5" : "g5^2") + "," + zlabel(l) + ")";
      CHECK(s.fourier(s.basis(src)) == want);
    }
}

TEST_CASE("D10: the fixed vector and the nonnegative combination")
{
  const MSpace& s = mspace("D10");
  for (int l = 1; l <= 4; ++l) {
    MVector v = s.parse("(g5," + zlabel(l) + ")+(g5^2," + zlabel(2 * l % 5) + ")+(g2,1)+(1,1)");
    CHECK(v == d10_fixed_vector(l));
    CHECK(s.fourier(v) == v);
  }
  for (int k = 1; k <= 2; ++k)
    for (int l = 0; l <= 4; ++l) {
      MVector v = s.parse("(" + std::string(k == 1 ? "g5" : "g5^2") + "," + zlabel(l) + ")+(1,eps)+(1,1)");
      CHECK(is_ge0(s.fourier(v)));
    }
}

TEST_CASE("expand_pair")
{
  const MSpace& s2 = mspace("S2");
  const PermGroup& g2 = s2.group();
  // regular character of S2 at the identity
  MVector v = s2.expand_pair(g2.identity(), [&](const Perm& p) { return Cyclo(p == g2.element(g2.identity()) ? 2 : 0); });
  CHECK(v == s2.parse("(1,1)+(1,eps)"));
  const MSpace& s3 = mspace("S3");
  const PermGroup& g3 = s3.group();
  int t = g3.index(cycles(3, {{1, 2}}));
  MVector w = s3.expand_pair(t, [&](const Perm& p) { return Cyclo(p == g3.element(g3.identity()) ? 2 : 0); });
  CHECK(w == s3.parse("(g2,1)+(g2,eps)"));
}

TEST_CASE("i, p and ss on small cases")
{
  const MSpace& s2 = mspace("S2");
  const MSpace& s3 = mspace("S3");
  CHECK(i_map(mspace("H21@S3"), s3, mspace("H21@S3").basis("(1,1)")) == s3.parse("(1,1)+(1,r)"));
  CHECK(i_map(mspace("1@S3"), s3, mspace("1@S3").basis("(1,1)")) == s3.parse("(1,1)+2(1,r)+(1,eps)"));
  CHECK_THROWS(i_map(mspace("H22@S4"), s3, mspace("H22@S4").basis("(1,1)")));

  QuotientMap q22 = make_quotient("S2", "S2", "S1", {});
  CHECK(p_map(q22, mspace("S1").basis("(1,1)")) == s2.parse("(1,1)+(g2,1)"));
  QuotientMap q33 = make_quotient("S3", "S3", "S1", {});
  CHECK(p_map(q33, mspace("S1").basis("(1,1)")) == s3.parse("(1,1)+(g2,1)+(g3,1)"));
  QuotientMap id = make_quotient("1@S3", "S3", "S3", {cycles(3, {{1, 2}}), cycles(3, {{1, 2, 3}})});
  for (std::size_t i = 0; i < s3.size(); ++i) CHECK(p_map(id, s3.basis(i)) == s3.basis(i));

  QuotientMap q12 = make_quotient("1@S2", "S2", "S2", {cycles(2, {{1, 2}})});
  CHECK(ss_map(s2, q12, lambda("Lambda(-1)")) == s2.parse("(g2,eps)+(1,1)"));
  QuotientMap q11 = make_quotient("1@S3", "1@S3", "S1", {});
  CHECK(ss_map(s3, q11, mspace("S1").basis("(1,1)")) == s3.parse("(1,eps)+2(1,r)+(1,1)"));
  const MSpace& s4 = mspace("S4");
  QuotientMap q14 = make_quotient("1@S4", "S4", "S4", standard_generators("S4"));
  for (std::string k : {"i", "-i"})
    CHECK(ss_map(s4, q14, lambda("Lambda(" + k + ")")) ==
          s4.parse("(g4," + k + ")+(g4,-1)+(g3,1)+(1,lambda2)+(1,1)"));

  CHECK_THROWS(make_quotient("H211@S4", "S4", "S1", {}));
}

TEST_CASE("i and p commute with A")
{
  const MSpace& s4 = mspace("S4");
  for (std::string h : {"H31@S4", "H22@S4", "tH@S4", "H211@S4"}) {
    const MSpace& hs = mspace(h);
    for (std::size_t j = 0; j < hs.size(); ++j)
      CHECK(i_map(hs, s4, hs.fourier(hs.basis(j))) == s4.fourier(i_map(hs, s4, hs.basis(j))));
  }
  QuotientMap q = make_quotient("tH22@S4", "tH@S4", "S2", {cycles(4, {{1, 3}, {2, 4}})});
  for (std::size_t j = 0; j < q.q->size(); ++j)
    CHECK(p_map(q, q.q->fourier(q.q->basis(j))) == q.hp->fourier(p_map(q, q.q->basis(j))));
}

TEST_CASE("tensor products")
{
  const MSpace& p = mspace("S3xS2");
  const MSpace& s3 = mspace("S3");
  const MSpace& s2 = mspace("S2");
  CHECK(tensor(s3.basis("(1,1)"), s2.basis("(1,1)"), p) == p.basis("(1,1)"));
  for (std::size_t a = 0; a < s3.size(); ++a)
    for (std::size_t b = 0; b < s2.size(); ++b) {
      MVector t = tensor(s3.basis(a), s2.basis(b), p);
      CHECK(t.support().size() == 1);
      CHECK(p.fourier(t) == tensor(s3.fourier(s3.basis(a)), s2.fourier(s2.basis(b)), p));
    }
  CHECK(lambda("Lambda(-1,1)") == tensor(lambda("Lambda(-1)"), mspace("S2").basis("(1,1)"), mspace("S2xS2")));
  CHECK(lambda("Lambda(theta,-1)") == tensor(lambda("Lambda(theta)"), lambda("Lambda(-1)"), p));
}

TEST_CASE("Lambda elements")
{
  CHECK(lambda("Lambda(-1)") == mspace("S2").parse("(g2,eps)+(1,1)"));
  CHECK(lambda("Lambda(theta)") == mspace("S3").parse("(g3,theta)+(g2,eps)+(1,1)"));
  CHECK(lambda("Lambda'(theta2)") == mspace("S3").parse("(g3,theta2)+(g2,1)+(1,1)"));
  for (int j = 1; j <= 4; ++j)
    CHECK(lambda("Lambda(zeta" + std::to_string(j) + ")") ==
          mspace("S5").parse("(g5,zeta" + std::to_string(j) + ")+(1,lambda4)+2(1,lambda2)+(1,nu)+(1,nu')+(1,1)"));
  for (std::string n : {"Lambda(-1)", "Lambda'(theta)", "Lambda'(theta2)", "Lambda(theta)", "Lambda(theta2)",
                        "Lambda(i)", "Lambda(-i)", "Lambda(-1,-1)", "Lambda(theta,-1)", "Lambda(theta2,-1)"}) {
    MVector v = lambda(n);
    CHECK_MESSAGE(v.space().fourier(v) == v, n);
  }
  for (int j = 1; j <= 4; ++j) {
    MVector v = lambda("Lambda(zeta" + std::to_string(j) + ")");
    CHECK(is_bipositive(v));
    CHECK_FALSE(v.space().fourier(v) == v);
  }
  CHECK_THROWS(lambda("Lambda(7)"));
}

TEST_CASE("ss_{1,D10} sends the D10 vectors to Lambda elements of S5")
{
  const MSpace& d10 = mspace("D10");
  QuotientMap q = make_quotient("1@S5", "D10@S5", "D10", standard_generators("D10"));
  const MSpace& s5 = mspace("S5");
  for (int l = 1; l <= 4; ++l) {
    MVector b = d10.parse("(g5," + zlabel(l) + ")+(1,eps)+(1,1)");
    CHECK(ss_map(s5, q, b) == lambda("Lambda(zeta" + std::to_string(l) + ")"));
    MVector a = ss_map(s5, q, d10_fixed_vector(l));
    CHECK(s5.fourier(a) == a);
    CHECK(is_bipositive(a));
    // the two rotation terms land on zeta^l and zeta^4l
    CHECK(a.at("(g5," + zlabel(l) + ")") == Cyclo(1));
    CHECK(a.at("(g5," + zlabel(4 * l % 5) + ")") == Cyclo(1));
  }
}

TEST_CASE("printed Lambda' display is not fixed by A")
{
  for (int l = 1; l <= 4; ++l) {
    MVector v = lambda_prime_display(l);
    CHECK_FALSE(v.space().fourier(v) == v);
  }
}

TEST_CASE("positivity tests")
{
  const MSpace& s2 = mspace("S2");
  for (const auto& g : groups) CHECK(is_bipositive(mspace(g).basis("(1,1)")));
  CHECK_FALSE(is_ge0(s2.parse("(1,1)-(1,eps)")));
  MVector c = s2.zero();
  c[0] = Cyclo::root_of_unity(4, 1);
  CHECK_THROWS(is_ge0(c));
}

TEST_CASE("case aliases")
{
  CHECK(normalize_case("G2") == "iv");
  CHECK(normalize_case("F4") == "vi");
  CHECK(normalize_case("E8") == "vii");
  CHECK(normalize_case("iii") == "iii");
  CHECK_THROWS(normalize_case("viii"));
}

TEST_CASE("exceptional bases: sizes and small cases")
{
  std::map<std::string, std::size_t> sizes{{"i", 1}, {"ii", 4}, {"iii", 4}, {"iv", 8}, {"v", 8}, {"vi", 21}, {"vii", 39}};
  for (const auto& [id, n] : sizes) CHECK(build_exceptional_basis(id).elements.size() == n);
  auto c = build_exceptional_basis("ii");
  std::map<std::string, std::string> want{{"(1,1)", "(1,1)"},
                                          {"(g2,1)", "(g2,1)+(1,1)"},
                                          {"(g2,eps)", "(g2,eps)+(1,1)"},
                                          {"(1,eps)", "(1,eps)+(1,1)"}};
  for (const auto& e : c.elements)
    if (want.count(e.label)) CHECK(e.value == mspace("S2").parse(want[e.label]));
}

TEST_CASE("exceptional bases: properties for cases i to vi")
{
  for (std::string id : {"i", "ii", "iii", "iv", "v", "vi"}) {
    PropertyReport r = check_properties(build_exceptional_basis(id));
    CHECK_MESSAGE(r.ok(), id);
  }
}

TEST_CASE("case vii: the Lambda' recipe collides for l and 4l")
{
  auto c = build_exceptional_basis("vii");
  PropertyReport r = check_properties(c);
  CHECK(r.bipositive);
  CHECK(r.unit_at_one);
  CHECK(r.integral);
  CHECK_FALSE(r.unit_diagonal);
  REQUIRE_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) CHECK(w.rfind("(II)", 0) == 0);
}

TEST_CASE("restricted matrices match the stored ones")
{
  for (std::string id : {"vi", "vii"}) {
    auto c = build_exceptional_basis(id);
    PrintedMatrix m = printed_matrix(c.group);
    CHECK(restricted_matrix(c, m.m0) == m.rows);
  }
  auto c = build_exceptional_basis("vi");
  CHECK_THROWS(restricted_matrix(c, {"(1,1)", "(g2,1)"}));
}
