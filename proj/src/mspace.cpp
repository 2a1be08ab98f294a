#include "newbasis/mspace.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace newbasis {

namespace {

std::string short_name(const std::string& group)
{
  auto at = group.find('@');
  return at == std::string::npos ? group : group.substr(0, at);
}

std::string coeff_prefix(const Cyclo& c, bool first)
{
  if (c.is_rational()) {
    Rational q = c.as_rational();
    if (q == 1) return first ? "" : "+";
    if (q == -1) return "-";
    std::string s = to_string(q);
    return (q > 0 && !first) ? "+" + s : s;
  }
  return std::string(first ? "" : "+") + "[" + c.str() + "]";
}

// value of an irreducible of z at a permutation of z
Cyclo char_at(const PermGroup& z, int irr, const Perm& p)
{
  return z.char_table().value(irr, z.class_of(z.index(p)));
}

} // namespace

// ---------------------------------------------------------------- MVector

MVector::MVector(const MSpace& space) : space_(&space), coeffs_(space.size()) {}

const Cyclo& MVector::at(const std::string& label) const
{
  return coeffs_.at(space_->index(label));
}

void MVector::same_space(const MVector& o) const
{
  if (space_ != o.space_) throw std::invalid_argument("MVector: operands live in different spaces");
}

MVector& MVector::operator+=(const MVector& o)
{
  same_space(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

MVector& MVector::operator-=(const MVector& o)
{
  same_space(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

MVector& MVector::operator*=(const Cyclo& c)
{
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const MVector& a, const MVector& b)
{
  return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
}

bool MVector::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Cyclo& c) { return c.is_zero(); });
}

std::vector<std::size_t> MVector::support() const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.push_back(i);
  return out;
}

std::string MVector::str() const
{
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    s += coeff_prefix(coeffs_[k], s.empty()) + space_->label(k);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- MSpace

MSpace::MSpace(const PermGroup& g) : group_(&g)
{
  for (std::size_t k = 0; k < g.classes().size(); ++k) {
    const auto& z = g.centralizer(static_cast<int>(k));
    for (int t = 0; t < z.char_table().size(); ++t) pairs_.push_back({static_cast<int>(k), t});
  }
}

std::size_t MSpace::index(int cls, int irr) const
{
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (pairs_[i].cls == cls && pairs_[i].irr == irr) return i;
  throw std::out_of_range("MSpace: no pair for class " + std::to_string(cls));
}

std::size_t MSpace::index(const std::string& label) const
{
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (this->label(i) == label) return i;
  throw std::invalid_argument("MSpace " + group_->name() + ": unknown pair " + label);
}

std::string MSpace::label(std::size_t i) const
{
  const auto& p = pairs_.at(i);
  const auto& z = group_->centralizer(p.cls);
  return "(" + group_->classes()[p.cls].label + "," + z.char_table().labels()[p.irr] + ")";
}

MVector MSpace::basis(std::size_t i) const
{
  MVector v(*this);
  v[i] = 1;
  return v;
}

MVector MSpace::basis(const std::string& label) const
{
  return basis(index(label));
}

MVector MSpace::parse(const std::string& expr) const
{
  MVector v(*this);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse \"" + expr + "\" at " + std::to_string(i) + ": " + why);
  };
  skip();
  if (expr.substr(i) == "0") return v;
  while (i < expr.size()) {
    Rational c = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      if (expr[i] == '-') c = -1;
      ++i;
      skip();
    }
    std::size_t start = i;
    while (i < expr.size() && (std::isdigit(static_cast<unsigned char>(expr[i])) || expr[i] == '/')) ++i;
    if (i > start) {
      Rational q(expr.substr(start, i - start));
      q.canonicalize();
      c *= q;
    }
    skip();
    if (i >= expr.size() || expr[i] != '(') fail("expected '('");
    int depth = 0;
    start = i;
    for (; i < expr.size(); ++i) {
      if (expr[i] == '(') ++depth;
      if (expr[i] == ')' && --depth == 0) break;
    }
    if (i >= expr.size()) fail("unbalanced parentheses");
    ++i;
    v[index(expr.substr(start, i - start))] += Cyclo(c);
    skip();
  }
  return v;
}

MVector MSpace::expand_pair(int x, const std::function<Cyclo(const Perm&)>& rho) const
{
  const PermGroup& g = *group_;
  int cls = g.class_of(x);
  const Perm& c = g.element(g.conjugator(x));
  Perm ci = inverse(c);
  const auto& z = g.centralizer(cls);
  const auto& table = z.char_table();
  // rho transported to Z(rep) and evaluated once per class
  std::vector<Cyclo> values;
  for (const auto& k : z.classes()) values.push_back(rho(compose(compose(ci, z.element(k.rep)), c)));
  MVector out(*this);
  for (int t = 0; t < table.size(); ++t) {
    Cyclo m;
    for (std::size_t k = 0; k < values.size(); ++k)
      m += Cyclo(static_cast<long>(z.classes()[k].members.size())) * values[k] * table.value(t, k).conj();
    m *= ratio(1, z.size());
    if (!m.is_integral() || !m.is_rational() || m.as_rational() < 0)
      throw std::invalid_argument("expand_pair: not a character of the centralizer (multiplicity " + m.str() + ")");
    out[index(cls, t)] += m;
  }
  return out;
}

const std::vector<std::vector<Cyclo>>& MSpace::fourier_matrix() const
{
  std::lock_guard<std::mutex> lock(fourier_mu_);
  if (fourier_) return *fourier_;
  const PermGroup& g = *group_;
  std::size_t n = pairs_.size();
  auto a = std::make_shared<std::vector<std::vector<Cyclo>>>(n, std::vector<Cyclo>(n));
  std::size_t nc = g.classes().size();
  for (std::size_t i = 0; i < nc; ++i) {
    int x = g.classes()[i].rep;
    const auto& zx = g.centralizer(static_cast<int>(i));
    for (std::size_t j = 0; j < nc; ++j) {
      int y = g.classes()[j].rep;
      const auto& zy = g.centralizer(static_cast<int>(j));
      // (class of g y g^-1 in Z(x), class of g^-1 x g in Z(y)) -> count
      std::map<std::pair<int, int>, long> counts;
      for (int t = 0; t < g.size(); ++t) {
        int yy = g.conj(t, y);
        if (g.mul(x, yy) != g.mul(yy, x)) continue;
        int xx = g.conj(g.inv(t), x);
        ++counts[{zx.class_of(zx.index(g.element(yy))), zy.class_of(zy.index(g.element(xx)))}];
      }
      Rational scale(1, static_cast<long>(zx.size()) * zy.size());
      for (int s = 0; s < zx.char_table().size(); ++s)
        for (int u = 0; u < zy.char_table().size(); ++u) {
          Cyclo sum;
          for (const auto& [key, cnt] : counts)
            sum += Cyclo(cnt) * zx.char_table().value(s, key.first) * zy.char_table().value(u, key.second).conj();
          sum *= scale;
          (*a)[index(static_cast<int>(i), s)][index(static_cast<int>(j), u)] = sum;
        }
    }
  }
  fourier_ = a;
  return *fourier_;
}

MVector MSpace::fourier(const MVector& f) const
{
  if (&f.space() != this) throw std::invalid_argument("fourier: vector from another space");
  const auto& a = fourier_matrix();
  MVector out(*this);
  for (std::size_t j = 0; j < size(); ++j) {
    if (f[j].is_zero()) continue;
    for (std::size_t i = 0; i < size(); ++i)
      if (!a[i][j].is_zero()) out[i] += a[i][j] * f[j];
  }
  return out;
}

const MSpace& mspace(const std::string& group_name)
{
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<MSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(group_name);
  if (it == cache.end()) it = cache.emplace(group_name, std::make_unique<MSpace>(catalog(group_name))).first;
  return *it->second;
}

// ---------------------------------------------------------------- maps

MVector i_map(const MSpace& h, const MSpace& g, const MVector& f)
{
  const PermGroup& hg = h.group();
  const PermGroup& gg = g.group();
  if (!hg.is_subgroup_of(gg)) throw GroupError("i_map: " + hg.name() + " is not a subgroup of " + gg.name());
  MVector out(g);
  for (auto i : f.support()) {
    const auto& p = h.pair(i);
    const Perm& x = hg.element(hg.classes()[p.cls].rep);
    const auto& zh = h.centralizer(p.cls);
    std::vector<Perm> zg = gg.centralizer_elements(x);
    int irr = p.irr;
    // Frobenius formula for Ind from Z_H(x) to Z_G(x)
    auto induced = [&](const Perm& q) {
      Cyclo v;
      for (const auto& t : zg) {
        Perm w = compose(compose(inverse(t), q), t);
        if (zh.contains(w)) v += char_at(zh, irr, w);
      }
      v *= ratio(1, zh.size());
      return v;
    };
    MVector term = g.expand_pair(gg.index(x), induced);
    term *= f[i];
    out += term;
  }
  return out;
}

QuotientMap make_quotient(const std::string& h, const std::string& hp, const std::string& q,
                          const std::vector<Perm>& lifts)
{
  const PermGroup& hg = catalog(h);
  const PermGroup& hpg = catalog(hp);
  const PermGroup& qg = catalog(q);
  if (!hg.is_subgroup_of(hpg) || !hg.is_normal_in(hpg))
    throw GroupError("make_quotient: " + h + " is not normal in " + hp);
  if (hpg.size() != hg.size() * qg.size()) throw GroupError("make_quotient: order mismatch for " + hp + "/" + h);
  const auto& gens = standard_generators(q);
  if (gens.size() != lifts.size()) throw GroupError("make_quotient: need one lift per generator of " + q);
  std::vector<int> gen_idx, lift_idx;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    gen_idx.push_back(qg.index(gens[k]));
    lift_idx.push_back(hpg.index(lifts[k]));
  }
  // lift of every element of q, by search over words in the generators
  std::vector<int> lift(qg.size(), -1);
  lift[qg.identity()] = hpg.identity();
  std::deque<int> todo{qg.identity()};
  while (!todo.empty()) {
    int s = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < gen_idx.size(); ++k) {
      int s2 = qg.mul(s, gen_idx[k]);
      if (lift[s2] >= 0) continue;
      lift[s2] = hpg.mul(lift[s], lift_idx[k]);
      todo.push_back(s2);
    }
  }
  QuotientMap r;
  r.hp = &mspace(hp);
  r.q = &mspace(q);
  r.h_name = h;
  r.kernel_size = hg.size();
  r.proj.assign(hpg.size(), -1);
  for (int a = 0; a < hpg.size(); ++a)
    for (int s = 0; s < qg.size(); ++s)
      if (hg.contains(hpg.element(hpg.mul(hpg.inv(lift[s]), a)))) {
        if (r.proj[a] >= 0) throw GroupError("make_quotient: lifts do not separate cosets of " + h);
        r.proj[a] = s;
      }
  for (int a = 0; a < hpg.size(); ++a) {
    if (r.proj[a] < 0) throw GroupError("make_quotient: lifts do not generate " + hp + "/" + h);
    for (int b = 0; b < hpg.size(); ++b)
      if (r.proj[hpg.mul(a, b)] != qg.mul(r.proj[a], r.proj[b]))
        throw GroupError("make_quotient: lifts do not define a homomorphism onto " + q);
  }
  return r;
}

MVector p_map(const QuotientMap& quot, const MVector& f)
{
  if (&f.space() != quot.q) throw std::invalid_argument("p_map: vector not in the quotient space");
  const PermGroup& hpg = quot.hp->group();
  const PermGroup& qg = quot.q->group();
  MVector out(*quot.hp);
  for (auto i : f.support()) {
    const auto& p = quot.q->pair(i);
    int xq = qg.classes()[p.cls].rep;
    const auto& zq = quot.q->centralizer(p.cls);
    int irr = p.irr;
    for (int y = 0; y < hpg.size(); ++y) {
      if (quot.proj[y] != xq) continue;
      long zy = hpg.size() / static_cast<long>(hpg.classes()[hpg.class_of(y)].members.size());
      auto inflated = [&](const Perm& z) { return char_at(zq, irr, qg.element(quot.proj[hpg.index(z)])); };
      MVector term = quot.hp->expand_pair(y, inflated);
      term *= Cyclo(ratio(zy, static_cast<long>(quot.kernel_size) * zq.size())) * f[i];
      out += term;
    }
  }
  return out;
}

MVector ss_map(const MSpace& gamma, const QuotientMap& quot, const MVector& f)
{
  return i_map(*quot.hp, gamma, p_map(quot, f));
}

MVector tensor(const MVector& f1, const MVector& f2, const MSpace& product)
{
  const auto& s1 = f1.space();
  const auto& s2 = f2.space();
  const PermGroup& g1 = s1.group();
  const PermGroup& g2 = s2.group();
  const PermGroup& gp = product.group();
  int d1 = g1.degree();
  if (gp.degree() != d1 + g2.degree() || gp.size() != g1.size() * g2.size())
    throw GroupError("tensor: " + gp.name() + " is not " + g1.name() + " x " + g2.name());
  MVector out(product);
  for (auto i : f1.support())
    for (auto j : f2.support()) {
      const auto& p1 = s1.pair(i);
      const auto& p2 = s2.pair(j);
      const Perm& x1 = g1.element(g1.classes()[p1.cls].rep);
      const Perm& x2 = g2.element(g2.classes()[p2.cls].rep);
      const auto& z1 = s1.centralizer(p1.cls);
      const auto& z2 = s2.centralizer(p2.cls);
      auto rho = [&](const Perm& q) {
        Perm a(q.begin(), q.begin() + d1);
        Perm b;
        for (auto it = q.begin() + d1; it != q.end(); ++it) b.push_back(*it - d1);
        return char_at(z1, p1.irr, a) * char_at(z2, p2.irr, b);
      };
      MVector term = product.expand_pair(gp.index(direct_sum(x1, x2)), rho);
      term *= f1[i] * f2[j];
      out += term;
    }
  return out;
}

bool is_ge0(const MVector& f)
{
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!is_nonneg_real(f[i])) return false;
  return true;
}

bool is_bipositive(const MVector& f)
{
  return is_ge0(f) && is_ge0(f.space().fourier(f));
}

// ---------------------------------------------------------------- Lambda library

namespace {

std::string zeta_name(long l)
{
  return "zeta" + std::to_string(((l % 5) + 5) % 5);
}

MVector unit(const std::string& group)
{
  return mspace(group).parse("(1,1)");
}

QuotientMap quotient_by(const std::string& h, const std::string& hp, const std::string& q,
                        const std::vector<std::vector<std::vector<int>>>& lift_cycles)
{
  int n = catalog(hp).degree();
  std::vector<Perm> lifts;
  for (const auto& cs : lift_cycles) lifts.push_back(cycles(n, cs));
  return make_quotient(h, hp, q, lifts);
}

MVector build_lambda(const std::string& name)
{
  if (name.rfind("(1,1)@", 0) == 0) return unit(name.substr(6));
  if (name == "Lambda(-1)") return mspace("S2").parse("(g2,eps)+(1,1)");
  for (int j : {1, 2}) {
    std::string th = j == 1 ? "theta" : "theta2";
    if (name == "Lambda'(" + th + ")") return mspace("S3").parse("(g3," + th + ")+(g2,1)+(1,1)");
    if (name == "Lambda(" + th + ")") return mspace("S3").parse("(g3," + th + ")+(g2,eps)+(1,1)");
    if (name == "Lambda(" + th + ",-1)") return tensor(lambda("Lambda(" + th + ")"), lambda("Lambda(-1)"), mspace("S3xS2"));
    if (name == "Lambda(" + th + ",1)") return tensor(lambda("Lambda(" + th + ")"), unit("S2"), mspace("S3xS2"));
  }
  for (std::string ik : {"i", "-i"})
    if (name == "Lambda(" + ik + ")")
      return mspace("S4").parse("(g4," + ik + ")+(g4,-1)+(g3,1)+(1,lambda2)+(1,1)");
  for (int l = 1; l <= 4; ++l) {
    if (name == "Lambda(" + zeta_name(l) + ")")
      return mspace("S5").parse("(g5," + zeta_name(l) + ")+(1,lambda4)+2(1,lambda2)+(1,nu)+(1,nu')+(1,1)");
    if (name == "Lambda'(" + zeta_name(l) + "," + zeta_name(2 * l) + ")") {
      // ss_{1,D10} of the A-fixed vector of D10
      auto q = quotient_by("1@S5", "D10@S5", "D10", {{{1, 2, 3, 4, 5}}, {{2, 5}, {3, 4}}});
      return ss_map(mspace("S5"), q, d10_fixed_vector(l));
    }
  }
  if (name == "Lambda(-1,-1)") return tensor(lambda("Lambda(-1)"), lambda("Lambda(-1)"), mspace("S2xS2"));
  if (name == "Lambda(-1,1)") return tensor(lambda("Lambda(-1)"), unit("S2"), mspace("S2xS2"));
  if (name == "Lambda(1,-1)") return tensor(unit("S3"), lambda("Lambda(-1)"), mspace("S3xS2"));
  throw std::invalid_argument("unknown Lambda element " + name);
}

} // namespace

MVector lambda(const std::string& name)
{
  static std::mutex mu;
  static std::map<std::string, MVector> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  MVector v = build_lambda(name);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(name, v);
  return v;
}

std::vector<std::string> lambda_names()
{
  std::vector<std::string> out{"Lambda(-1)", "Lambda'(theta)", "Lambda'(theta2)", "Lambda(theta)", "Lambda(theta2)",
                               "Lambda(i)", "Lambda(-i)"};
  for (int l = 1; l <= 4; ++l) out.push_back("Lambda(" + zeta_name(l) + ")");
  for (int l = 1; l <= 4; ++l) out.push_back("Lambda'(" + zeta_name(l) + "," + zeta_name(2 * l) + ")");
  for (std::string s : {"Lambda(-1,-1)", "Lambda(-1,1)", "Lambda(1,-1)", "Lambda(theta,-1)", "Lambda(theta2,-1)",
                        "Lambda(theta,1)", "Lambda(theta2,1)"})
    out.push_back(s);
  return out;
}

MVector lambda_prime_display(int l)
{
  if (l < 1 || l > 4) throw std::invalid_argument("lambda_prime_display: l must be in 1..4");
  return mspace("S5").parse("(g5," + zeta_name(l) + ")+(g5," + zeta_name(2 * l) +
                            ")+(g2',1)+(g2',eps')+(g2',eps'')+(g2',eps)+(1,lambda2)+(1,nu)+(1,1)");
}

MVector d10_fixed_vector(int l)
{
  if (l < 1 || l > 4) throw std::invalid_argument("d10_fixed_vector: l must be in 1..4");
  return mspace("D10").parse("(g5," + zeta_name(l) + ")+(g5^2," + zeta_name(2 * l) + ")+(g2,1)+(1,1)");
}

// ---------------------------------------------------------------- exceptional bases

namespace {

using Cycles = std::vector<std::vector<int>>;

struct Recipe {
  std::string label;
  std::string h;   // empty: the seed itself, already in M(Gamma)
  std::string hp;
  std::string q;
  std::vector<Cycles> lifts;
  std::string seed; // "1" for (1,1) of the quotient, else a Lambda name
};

std::vector<Recipe> s2_recipes()
{
  return {{"(1,1)", "1@S2", "S2", "S2", {{{1, 2}}}, "1"},
          {"(g2,1)", "S2", "S2", "S1", {}, "1"},
          {"(1,eps)", "1@S2", "1@S2", "S1", {}, "1"},
          {"(g2,eps)", "1@S2", "S2", "S2", {{{1, 2}}}, "Lambda(-1)"}};
}

std::vector<Recipe> s3_recipes(bool simply_laced)
{
  Cycles t12{{1, 2}}, c123{{1, 2, 3}};
  std::vector<Recipe> r = {{"(1,1)", "1@S3", "S3", "S3", {t12, c123}, "1"},
                           {"(1,r)", "1@S3", "H21@S3", "S2", {t12}, "1"},
                           {"(g2,1)", "H21@S3", "H21@S3", "S1", {}, "1"},
                           {"(g3,1)", "S3", "S3", "S1", {}, "1"},
                           {"(1,eps)", "1@S3", "1@S3", "S1", {}, "1"},
                           {"(g2,eps)", "1@S3", "H21@S3", "S2", {t12}, "Lambda(-1)"}};
  std::string lam = simply_laced ? "Lambda(" : "Lambda'(";
  for (std::string th : {"theta", "theta2"})
    r.push_back({"(g3," + th + ")", "1@S3", "S3", "S3", {t12, c123}, lam + th + ")"});
  return r;
}

std::vector<Recipe> s4_recipes()
{
  Cycles t12{{1, 2}}, t34{{3, 4}}, c123{{1, 2, 3}}, c1234{{1, 2, 3, 4}}, d{{1, 3}, {2, 4}};
  std::vector<Recipe> r = {
      {"(1,1)", "1@S4", "S4", "S4", {t12, c1234}, "1"},
      {"(1,lambda1)", "1@S4", "H31@S4", "S3", {t12, c123}, "1"},
      {"(1,sigma)", "1@S4", "H22@S4", "S2xS2", {t12, t34}, "1"},
      {"(1,lambda2)", "1@S4", "H211@S4", "S2", {t12}, "1"},
      {"(g2,1)", "tH211@S4", "H22@S4", "S2", {t12}, "1"},
      {"(g2',1)", "tH22@S4", "tH@S4", "S2", {d}, "1"},
      {"(g2,eps'')", "H211@S4", "H211@S4", "S1", {}, "1"},
      {"(g3,1)", "H31@S4", "H31@S4", "S1", {}, "1"},
      {"(g4,1)", "S4", "S4", "S1", {}, "1"},
      {"(g2',eps'')", "H22@S4", "H22@S4", "S1", {}, "1"},
      {"(g2',eps')", "tH@S4", "tH@S4", "S1", {}, "1"},
      {"(g2,eps')", "1@S4", "H22@S4", "S2xS2", {t12, t34}, "Lambda(-1,1)"},
      {"(g2',r)", "tH211@S4", "H22@S4", "S2", {t12}, "Lambda(-1)"},
      {"(g4,-1)", "H22@S4", "tH@S4", "S2", {d}, "Lambda(-1)"},
      {"(1,lambda3)", "1@S4", "1@S4", "S1", {}, "1"},
      {"(g2,eps)", "1@S4", "H211@S4", "S2", {t12}, "Lambda(-1)"},
      {"(g2',eps)", "1@S4", "H22@S4", "S2xS2", {t12, t34}, "Lambda(-1,-1)"}};
  for (std::string th : {"theta", "theta2"})
    r.push_back({"(g3," + th + ")", "1@S4", "H31@S4", "S3", {t12, c123}, "Lambda'(" + th + ")"});
  for (std::string ik : {"i", "-i"})
    r.push_back({"(g4," + ik + ")", "1@S4", "S4", "S4", {t12, c1234}, "Lambda(" + ik + ")"});
  return r;
}

std::vector<Recipe> s5_recipes()
{
  Cycles t12{{1, 2}}, t45{{4, 5}}, c123{{1, 2, 3}}, c1234{{1, 2, 3, 4}}, c12345{{1, 2, 3, 4, 5}},
      d{{1, 4}, {2, 5}};
  std::vector<Cycles> p32{t12, c123, t45}, p22{t12, t45};
  std::vector<Recipe> r = {
      {"(1,1)", "1@S5", "S5", "S5", {t12, c12345}, "1"},
      {"(1,lambda1)", "1@S5", "H41@S5", "S4", {t12, c1234}, "1"},
      {"(1,nu)", "1@S5", "H32@S5", "S3xS2", p32, "1"},
      {"(1,lambda2)", "1@S5", "H311@S5", "S3", {t12, c123}, "1"},
      {"(1,nu')", "1@S5", "H221@S5", "S2xS2", p22, "1"},
      {"(1,lambda3)", "1@S5", "H2111@S5", "S2", {t12}, "1"},
      {"(g2,1)", "tH2111@S5", "H32@S5", "S3", {t12, c123}, "1"},
      {"(g2,r)", "tH2111@S5", "H221@S5", "S2", {t12}, "1"},
      {"(g3,1)", "tH311@S5", "H32@S5", "S2", {t45}, "1"},
      {"(g2',1)", "tH221@S5", "tH@S5", "S2", {d}, "1"},
      {"(g2',eps'')", "H221@S5", "H221@S5", "S1", {}, "1"},
      {"(g6,1)", "H32@S5", "H32@S5", "S1", {}, "1"},
      {"(g2,eps)", "H2111@S5", "H2111@S5", "S1", {}, "1"},
      {"(g3,eps)", "H311@S5", "H311@S5", "S1", {}, "1"},
      {"(g4,1)", "H41@S5", "H41@S5", "S1", {}, "1"},
      {"(g5,1)", "S5", "S5", "S1", {}, "1"},
      {"(g2',eps')", "tH@S5", "tH@S5", "S1", {}, "1"},
      {"(g2,-1)", "1@S5", "H32@S5", "S3xS2", p32, "Lambda(1,-1)"},
      {"(g2,-r)", "1@S5", "H221@S5", "S2xS2", p22, "Lambda(-1,1)"},
      {"(g2',r)", "tH2111@S5", "H221@S5", "S2", {t12}, "Lambda(-1)"},
      {"(g4,-1)", "tH221@S5", "tH@S5", "S2", {d}, "Lambda(-1)"},
      {"(g6,-1)", "tH311@S5", "H32@S5", "S2", {t45}, "Lambda(-1)"}};
  for (std::string th : {"theta", "theta2"}) {
    r.push_back({"(g3," + th + ")", "1@S5", "H32@S5", "S3xS2", p32, "Lambda(" + th + ",1)"});
    r.push_back({"(g6," + th + ")", "tH2111@S5", "H32@S5", "S3", {t12, c123}, "Lambda(" + th + ")"});
  }
  r.push_back({"(1,lambda4)", "1@S5", "1@S5", "S1", {}, "1"});
  r.push_back({"(g2,-eps)", "1@S5", "H2111@S5", "S2", {t12}, "Lambda(-1)"});
  for (std::string th : {"theta", "theta2"})
    r.push_back({"(g3,eps." + th + ")", "1@S5", "H311@S5", "S3", {t12, c123}, "Lambda(" + th + ")"});
  r.push_back({"(g2',eps)", "1@S5", "H221@S5", "S2xS2", p22, "Lambda(-1,-1)"});
  for (std::string th : {"theta", "theta2"})
    r.push_back({"(g6,-" + th + ")", "1@S5", "H32@S5", "S3xS2", p32, "Lambda(" + th + ",-1)"});
  for (std::string ik : {"i", "-i"})
    r.push_back({"(g4," + ik + ")", "1@S5", "H41@S5", "S4", {t12, c1234}, "Lambda(" + ik + ")"});
  r.push_back({"(g5,zeta1)", "", "", "", {}, "Lambda(zeta1)"});
  r.push_back({"(g5,zeta2)", "", "", "", {}, "Lambda'(zeta1,zeta2)"});
  r.push_back({"(g5,zeta3)", "", "", "", {}, "Lambda'(zeta3,zeta1)"});
  r.push_back({"(g5,zeta4)", "", "", "", {}, "Lambda'(zeta2,zeta4)"});
  return r;
}

std::vector<Recipe> case_recipes(const std::string& id, std::string& group)
{
  if (id == "i") {
    group = "S1";
    return {{"(1,1)", "S1", "S1", "S1", {}, "1"}};
  }
  if (id == "ii" || id == "iii") {
    group = "S2";
    return s2_recipes();
  }
  if (id == "iv" || id == "v") {
    group = "S3";
    return s3_recipes(id == "v");
  }
  if (id == "vi") {
    group = "S4";
    return s4_recipes();
  }
  group = "S5";
  return s5_recipes();
}

std::string recipe_string(const Recipe& r)
{
  if (r.h.empty()) return r.seed;
  std::string seed = r.seed == "1" ? "(1,1)" : r.seed;
  return "ss_{" + short_name(r.h) + "," + short_name(r.hp) + "}" + seed;
}

} // namespace

std::string normalize_case(const std::string& name)
{
  std::string s;
  for (char ch : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  static const std::map<std::string, std::string> alias = {{"g2", "iv"}, {"f4", "vi"}, {"e8", "vii"}};
  if (auto it = alias.find(s); it != alias.end()) return it->second;
  static const std::set<std::string> ids = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  if (!ids.count(s)) throw std::invalid_argument("unknown case " + name + " (expected i..vii, G2, F4 or E8)");
  return s;
}

ExceptionalCase build_exceptional_basis(const std::string& case_id)
{
  std::string id = normalize_case(case_id);
  ExceptionalCase c;
  c.id = id;
  std::vector<Recipe> recipes = case_recipes(id, c.group);
  const MSpace& gamma = mspace(c.group);
  for (const auto& r : recipes) {
    BasisElement e;
    e.label = r.label;
    e.recipe = recipe_string(r);
    if (r.h.empty()) {
      e.value = lambda(r.seed);
    } else {
      auto quot = quotient_by(r.h, r.hp, r.q, r.lifts);
      MVector seed = r.seed == "1" ? unit(r.q) : lambda(r.seed);
      if (&seed.space() != quot.q)
        throw std::logic_error("recipe " + r.label + ": seed " + r.seed + " does not live in M(" + r.q + ")");
      e.value = ss_map(gamma, quot, seed);
    }
    c.elements.push_back(std::move(e));
  }
  return c;
}

std::vector<SsStep> ss_steps(const std::string& case_id)
{
  std::string id = normalize_case(case_id);
  ExceptionalCase shape;
  std::vector<Recipe> recipes = case_recipes(id, shape.group);
  std::vector<SsStep> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : recipes) {
    if (r.h.empty() || !seen.insert({r.h, r.hp}).second) continue;
    SsStep s{shape.group, r.h, r.hp, r.q, {}};
    for (const auto& cs : r.lifts) s.lifts.push_back(cycles(catalog(r.hp).degree(), cs));
    out.push_back(s);
  }
  if (id == "vii") out.push_back({"S5", "1@S5", "D10@S5", "D10", {cycles(5, {{1, 2, 3, 4, 5}}), cycles(5, {{2, 5}, {3, 4}})}});
  return out;
}

PropertyReport check_properties(const ExceptionalCase& c)
{
  PropertyReport rep;
  const MSpace& gamma = mspace(c.group);
  std::size_t one = gamma.index("(1,1)");
  std::size_t n = gamma.size();
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    const auto& e = c.elements[k];
    std::size_t self = gamma.index(e.label);
    if (owner[self] >= 0) {
      rep.unit_diagonal = false;
      rep.witnesses.push_back("(II) two elements labelled " + e.label);
    }
    owner[self] = static_cast<int>(k);
    if (!is_bipositive(e.value)) {
      rep.bipositive = false;
      rep.witnesses.push_back("(I) hat" + e.label + " is not bipositive");
    }
    if (!(e.value[self] == Cyclo(1))) {
      rep.unit_diagonal = false;
      rep.witnesses.push_back("(II) coefficient of " + e.label + " in hat" + e.label + " is " + e.value[self].str());
    }
    if (!(e.value[one] == Cyclo(1))) {
      rep.unit_at_one = false;
      rep.witnesses.push_back("(IV) coefficient of (1,1) in hat" + e.label + " is " + e.value[one].str());
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!e.value[i].is_integral()) {
        rep.integral = false;
        rep.witnesses.push_back("hat" + e.label + " has non-integral coefficient at " + gamma.label(i));
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (owner[i] < 0) {
      rep.unit_diagonal = false;
      rep.witnesses.push_back("(II) no element labelled " + gamma.label(i));
    }
  if (!rep.unit_diagonal) {
    rep.partial_order = false;
    return rep;
  }
  // (III): support relation acyclic apart from loops, (1,1) its unique minimal element
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : c.elements[owner[i]].value.support())
      if (j != i) below[i].push_back(j);
  std::vector<int> state(n, 0);
  bool cyclic = false;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    state[v] = 1;
    for (auto w : below[v]) {
      if (state[w] == 1) cyclic = true;
      if (state[w] == 0) visit(w);
    }
    state[v] = 2;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (state[i] == 0) visit(i);
  if (cyclic) {
    rep.partial_order = false;
    rep.witnesses.push_back("(III) the support relation has a cycle");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool minimal = below[i].empty();
    if (minimal != (i == one)) {
      rep.partial_order = false;
      rep.witnesses.push_back("(III) " + gamma.label(i) + (minimal ? " is minimal" : " is not minimal"));
    }
  }
  return rep;
}

std::vector<std::vector<long>> restricted_matrix(const ExceptionalCase& c, const std::vector<std::string>& m0)
{
  const MSpace& gamma = mspace(c.group);
  std::vector<std::size_t> cols;
  for (const auto& l : m0) cols.push_back(gamma.index(l));
  std::vector<std::vector<long>> out;
  for (const auto& l : m0) {
    auto it = std::find_if(c.elements.begin(), c.elements.end(), [&](const BasisElement& e) { return e.label == l; });
    if (it == c.elements.end()) throw std::invalid_argument("restricted_matrix: no element " + l);
    for (auto j : it->value.support())
      if (std::find(cols.begin(), cols.end(), j) == cols.end())
        throw std::invalid_argument("restricted_matrix: hat" + l + " involves " + gamma.label(j) + " outside M0");
    std::vector<long> row;
    for (auto j : cols) {
      if (!it->value[j].is_integral()) throw std::invalid_argument("restricted_matrix: non-integral entry");
      row.push_back(it->value[j].as_rational().get_num().get_si());
    }
    out.push_back(row);
  }
  return out;
}

} // namespace newbasis
