#include "newbasis/grouprep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace newbasis {

Perm identity_perm(int n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& p, const Perm& q)
{
  if (p.size() != q.size()) throw GroupError("compose: degree mismatch");
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p)
{
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm cycles(int n, const std::vector<std::vector<int>>& cs)
{
  Perm p = identity_perm(n);
  for (const auto& c : cs)
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k];
      int b = c[(k + 1) % c.size()];
      if (a < 1 || a > n || b < 1 || b > n) throw GroupError("cycles: point out of range");
      p[a - 1] = b - 1;
    }
  return p;
}

int perm_order(const Perm& p)
{
  Perm e = identity_perm(static_cast<int>(p.size()));
  Perm y = p;
  int k = 1;
  while (y != e) {
    y = compose(p, y);
    ++k;
  }
  return k;
}

std::string cycle_string(const Perm& p)
{
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm direct_sum(const Perm& p, const Perm& q)
{
  Perm r = p;
  int n1 = static_cast<int>(p.size());
  for (int v : q) r.push_back(v + n1);
  return r;
}

// ---------------------------------------------------------------- PermGroup

PermGroup::PermGroup(std::string name, int degree, const std::vector<Perm>& gens)
    : name_(std::move(name)), degree_(degree), gens_(gens)
{
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != degree) throw GroupError("generator of wrong degree in " + name_);
  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  build({seen.begin(), seen.end()});
}

PermGroup PermGroup::from_elements(std::string name, std::vector<Perm> elements)
{
  if (elements.empty()) throw GroupError("from_elements: empty element list");
  PermGroup g;
  g.name_ = std::move(name);
  g.degree_ = static_cast<int>(elements.front().size());
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  g.gens_ = elements;
  g.build(std::move(elements));
  return g;
}

void PermGroup::build(std::vector<Perm> elements)
{
  elements_ = std::move(elements);
  int n = size();
  for (int i = 0; i < n; ++i) index_[elements_[i]] = i;
  identity_ = index(identity_perm(degree_));
  table_.assign(static_cast<std::size_t>(n) * n, 0);
  inverse_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto it = index_.find(compose(elements_[i], elements_[j]));
      if (it == index_.end()) throw GroupError(name_ + ": not closed under composition");
      table_[i * n + j] = it->second;
    }
    auto it = index_.find(newbasis::inverse(elements_[i]));
    if (it == index_.end()) throw GroupError(name_ + ": not closed under inverse");
    inverse_[i] = it->second;
  }
  build_classes();
}

void PermGroup::build_classes()
{
  int n = size();
  classes_.clear();
  class_of_.assign(n, -1);
  conjugator_.assign(n, -1);
  std::vector<ConjClass> found;
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ConjClass c;
    c.rep = x;
    std::set<int> orbit;
    for (int g = 0; g < n; ++g) orbit.insert(conj(g, x));
    c.members.assign(orbit.begin(), orbit.end());
    for (int m : c.members) seen[m] = true;
    found.push_back(c);
  }
  std::stable_sort(found.begin(), found.end(), [&](const ConjClass& a, const ConjClass& b) {
    int oa = perm_order(elements_[a.rep]);
    int ob = perm_order(elements_[b.rep]);
    if (oa != ob) return oa < ob;
    return a.members.size() < b.members.size();
  });
  std::vector<Perm> reps;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < found.size(); ++i) {
    reps.push_back(elements_[found[i].rep]);
    labels.push_back(i == 0 ? "1" : "c" + std::to_string(i));
  }
  classes_ = found;
  set_classes(reps, labels);
}

void PermGroup::set_classes(const std::vector<Perm>& reps, const std::vector<std::string>& labels)
{
  int n = size();
  if (reps.size() != labels.size()) throw GroupError("set_classes: size mismatch");
  std::vector<ConjClass> out;
  std::vector<int> cls(n, -1);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    int x = index(reps[k]);
    ConjClass c;
    c.rep = x;
    c.label = labels[k];
    std::set<int> orbit;
    for (int g = 0; g < n; ++g) orbit.insert(conj(g, x));
    c.members.assign(orbit.begin(), orbit.end());
    for (int m : c.members) {
      if (cls[m] >= 0) throw GroupError("set_classes: two representatives are conjugate");
      cls[m] = static_cast<int>(k);
    }
    out.push_back(c);
  }
  for (int v : cls)
    if (v < 0) throw GroupError("set_classes: representatives miss a class");
  if (elements_[out.front().rep] != identity_perm(degree_)) throw GroupError("set_classes: identity must come first");
  classes_ = out;
  class_of_ = cls;
  conjugator_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (const auto& c : classes_)
      for (int m : c.members)
        if (conjugator_[m] < 0 && conj(g, m) == c.rep) conjugator_[m] = g;
  table_cache_.reset();
  cent_cache_.assign(classes_.size(), nullptr);
}

int PermGroup::index(const Perm& p) const
{
  auto it = index_.find(p);
  if (it == index_.end()) throw GroupError(cycle_string(p) + " is not in " + name_);
  return it->second;
}

int PermGroup::class_by_label(const std::string& label) const
{
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return static_cast<int>(i);
  throw GroupError("no class named " + label + " in " + name_);
}

int PermGroup::power_class(int cls, long k) const
{
  int x = classes_.at(cls).rep;
  int o = perm_order(elements_[x]);
  long e = ((k % o) + o) % o;
  int y = identity_;
  for (long t = 0; t < e; ++t) y = mul(x, y);
  return class_of_[y];
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const
{
  if (g.degree() != degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return g.contains(p); });
}

bool PermGroup::is_normal_in(const PermGroup& g) const
{
  if (!is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& h : gens_)
      if (!contains(compose(compose(x, h), newbasis::inverse(x)))) return false;
  return true;
}

std::vector<Perm> PermGroup::centralizer_elements(const Perm& x) const
{
  std::vector<Perm> out;
  for (const auto& g : elements_)
    if (compose(g, x) == compose(x, g)) out.push_back(g);
  return out;
}

const CharTable& PermGroup::char_table() const
{
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  if (!table_cache_) table_cache_ = std::make_shared<CharTable>(*this);
  return *table_cache_;
}

void PermGroup::set_irreducible_labels(std::vector<std::string> labels) const
{
  const auto& t = char_table();
  if (static_cast<int>(labels.size()) != t.size()) throw GroupError("set_irreducible_labels: size mismatch");
  table_cache_->set_labels(std::move(labels));
}

const PermGroup& PermGroup::centralizer(int cls) const
{
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cent_cache_.at(cls);
  if (!slot) {
    const auto& x = elements_[classes_[cls].rep];
    slot = std::make_shared<PermGroup>(
        PermGroup::from_elements("Z(" + cycle_string(x) + ")@" + name_, centralizer_elements(x)));
  }
  return *slot;
}

// ------------------------------------------------------- character tables

namespace {

constexpr long prime = 61;     // 61 = 1 mod 60 and 61 > 2 sqrt(120)
constexpr long root60 = 2;     // a primitive 60th root of unity mod 61

long mod(long a)
{
  a %= prime;
  return a < 0 ? a + prime : a;
}

long power_mod(long a, long e)
{
  long r = 1;
  a = mod(a);
  e %= prime - 1;
  if (e < 0) e += prime - 1;
  while (e > 0) {
    if (e & 1) r = r * a % prime;
    a = a * a % prime;
    e >>= 1;
  }
  return r;
}

long inv_mod(long a)
{
  if (mod(a) == 0) throw ArithmeticError("inverse of 0 mod p");
  return power_mod(a, prime - 2);
}

using ModMatrix = std::vector<std::vector<long>>;

// basis of {c : m c = 0} for an r x k matrix m
std::vector<std::vector<long>> nullspace(ModMatrix m, std::size_t k)
{
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    long iv = inv_mod(m[row][col]);
    for (auto& v : m[row]) v = v * iv % prime;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      long f = m[r][col];
      for (std::size_t c = 0; c < k; ++c) m[r][c] = mod(m[r][c] - f * m[row][c]);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<std::vector<long>> basis;
  std::vector<bool> is_pivot(k, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long> v(k, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = mod(-m[r][free]);
    basis.push_back(v);
  }
  return basis;
}

} // namespace

CharTable::CharTable(const PermGroup& g)
{
  const auto& cls = g.classes();
  std::size_t r = cls.size();
  long order = g.size();

  // structure constants: m[j][i][l] = #{y in C_j : g_l y^-1 in C_i}
  std::vector<ModMatrix> m(r, ModMatrix(r, std::vector<long>(r, 0)));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l)
      for (int y : cls[j].members) {
        int a = g.mul(cls[l].rep, g.inv(y));
        ++m[j][g.class_of(a)][l];
      }

  // simultaneous eigenvectors w (m_j w = omega_j w), split space by space
  std::vector<std::vector<std::vector<long>>> spaces;
  {
    std::vector<std::vector<long>> full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<long> e(r, 0);
      e[i] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::vector<std::vector<long>>> next;
    for (const auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      std::size_t k = basis.size();
      std::size_t found = 0;
      for (long lambda = 0; lambda < prime; ++lambda) {
        ModMatrix a(r, std::vector<long>(k, 0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t t = 0; t < k; ++t) {
            long s = 0;
            for (std::size_t l = 0; l < r; ++l) s += m[j][i][l] * basis[t][l];
            s -= lambda * basis[t][i];
            a[i][t] = mod(s);
          }
        auto ns = nullspace(a, k);
        if (ns.empty()) continue;
        std::vector<std::vector<long>> sub;
        for (const auto& c : ns) {
          std::vector<long> v(r, 0);
          for (std::size_t t = 0; t < k; ++t)
            for (std::size_t l = 0; l < r; ++l) v[l] = mod(v[l] + c[t] * basis[t][l]);
          sub.push_back(v);
        }
        found += sub.size();
        next.push_back(sub);
      }
      if (found != k) throw ArithmeticError(g.name() + ": class algebra does not split mod p");
    }
    spaces = next;
  }
  for (const auto& s : spaces)
    if (s.size() != 1) throw ArithmeticError(g.name() + ": eigenspaces not one-dimensional");

  std::vector<long> inv_cls(r);
  for (std::size_t i = 0; i < r; ++i) inv_cls[i] = g.class_of(g.inv(cls[i].rep));

  for (const auto& s : spaces) {
    auto w = s.front();
    long w0 = inv_mod(w[0]);
    for (auto& v : w) v = v * w0 % prime;
    long sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      sum = mod(sum + w[i] * w[inv_cls[i]] % prime * inv_mod(static_cast<long>(cls[i].members.size())));
    long d2 = order % prime * inv_mod(sum) % prime;
    long deg = 0;
    for (long d = 1; d * d <= order; ++d)
      if (mod(d * d) == d2) deg = d;
    if (deg == 0) throw ArithmeticError(g.name() + ": no character degree fits");
    std::vector<long> chi_p(r);
    for (std::size_t i = 0; i < r; ++i)
      chi_p[i] = deg * w[i] % prime * inv_mod(static_cast<long>(cls[i].members.size())) % prime;

    // lift through eigenvalue multiplicities on each cyclic subgroup
    std::vector<Cyclo> row(r);
    for (std::size_t i = 0; i < r; ++i) {
      int n = perm_order(g.element(cls[i].rep));
      if (60 % n != 0) throw ArithmeticError("element order does not divide 60");
      long zn = power_mod(root60, 60 / n);
      Cyclo value;
      for (int k = 0; k < n; ++k) {
        long acc = 0;
        for (int l = 0; l < n; ++l) acc = mod(acc + chi_p[g.power_class(static_cast<int>(i), l)] * power_mod(zn, -static_cast<long>(k) * l));
        long mult = acc * inv_mod(n) % prime;
        if (mult > deg) throw ArithmeticError(g.name() + ": eigenvalue multiplicity out of range");
        if (mult) value += Cyclo(mult) * Cyclo::root_of_unity(n, k);
      }
      row[i] = value;
    }
    chars_.push_back(row);
  }

  std::vector<std::string> keys;
  for (const auto& row : chars_) {
    std::string k;
    for (const auto& v : row) k += v.str() + "|";
    keys.push_back(k);
  }
  std::vector<std::size_t> perm(chars_.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto trivial = [&](std::size_t t) {
    return std::all_of(chars_[t].begin(), chars_[t].end(), [](const Cyclo& v) { return v == Cyclo(1); });
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (trivial(a) != trivial(b)) return trivial(a);
    auto da = chars_[a][0].as_rational();
    auto db = chars_[b][0].as_rational();
    if (da != db) return da < db;
    return keys[a] < keys[b];
  });
  std::vector<std::vector<Cyclo>> sorted;
  for (auto t : perm) sorted.push_back(chars_[t]);
  chars_ = sorted;
  for (std::size_t t = 0; t < chars_.size(); ++t) labels_.push_back(t == 0 ? "1" : "chi" + std::to_string(t));
}

long CharTable::degree(int chi) const
{
  return chars_.at(chi).at(0).as_rational().get_num().get_si();
}

int CharTable::by_label(const std::string& label) const
{
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw GroupError("no irreducible named " + label);
}

ClassFunction character(const PermGroup& g, int chi)
{
  return g.char_table().row(chi);
}

Cyclo inner_product(const PermGroup& g, const ClassFunction& a, const ClassFunction& b)
{
  Cyclo s;
  const auto& cls = g.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) s += Cyclo(static_cast<long>(cls[i].members.size())) * a[i] * b[i].conj();
  s *= ratio(1, g.size());
  return s;
}

bool validate_table(const PermGroup& g)
{
  const auto& t = g.char_table();
  std::size_t r = g.classes().size();
  if (static_cast<std::size_t>(t.size()) != r) return false;
  long squares = 0;
  for (int a = 0; a < t.size(); ++a) {
    squares += t.degree(a) * t.degree(a);
    for (int b = 0; b < t.size(); ++b)
      if (!(inner_product(g, t.row(a), t.row(b)) == Cyclo(a == b ? 1 : 0))) return false;
  }
  if (squares != g.size()) return false;
  // column orthogonality
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Cyclo s;
      for (int a = 0; a < t.size(); ++a) s += t.value(a, static_cast<int>(i)) * t.value(a, static_cast<int>(j)).conj();
      long expect = i == j ? g.size() / static_cast<long>(g.classes()[i].members.size()) : 0;
      if (!(s == Cyclo(expect))) return false;
    }
  return true;
}

ClassFunction induce(const PermGroup& h, const ClassFunction& chi, const PermGroup& g)
{
  if (!h.is_subgroup_of(g)) throw GroupError(h.name() + " is not a subgroup of " + g.name());
  ClassFunction out;
  for (const auto& c : g.classes()) {
    const auto& y = g.element(c.rep);
    Cyclo s;
    for (const auto& t : g.elements()) {
      Perm u = compose(compose(inverse(t), y), t);
      if (h.contains(u)) s += chi[h.class_of(h.index(u))];
    }
    s *= ratio(1, h.size());
    out.push_back(s);
  }
  return out;
}

ClassFunction restrict(const PermGroup& g, const ClassFunction& chi, const PermGroup& h)
{
  if (!h.is_subgroup_of(g)) throw GroupError(h.name() + " is not a subgroup of " + g.name());
  ClassFunction out;
  for (const auto& c : h.classes()) out.push_back(chi[g.class_of(g.index(h.element(c.rep)))]);
  return out;
}

long multiplicity(const PermGroup& g, const ClassFunction& chi, int irr)
{
  Cyclo m = inner_product(g, chi, g.char_table().row(irr));
  if (!m.is_rational()) throw ArithmeticError("multiplicity is not rational");
  Rational q = m.as_rational();
  if (q.get_den() != 1 || q < 0) throw ArithmeticError("multiplicity " + to_string(q) + " is not a natural number");
  return q.get_num().get_si();
}

PermGroup subgroup(const std::string& name, int degree, const std::vector<Perm>& gens)
{
  return PermGroup(name, degree, gens);
}

// ------------------------------------------------------------------ catalog

namespace {

Perm c(int n, std::vector<std::vector<int>> cs)
{
  return cycles(n, cs);
}

int value_sign(const Cyclo& v)
{
  if (v == Cyclo(1)) return 1;
  if (v == Cyclo(-1)) return -1;
  if (v.is_zero()) return 0;
  if (v.is_rational()) return static_cast<int>(v.as_rational().get_num().get_si());
  throw GroupError("unexpected character value " + v.str());
}

// chi(p) for p in the group z
Cyclo at(const PermGroup& z, int chi, const Perm& p)
{
  return z.char_table().value(chi, z.class_of(z.index(p)));
}

long degree_of(const PermGroup& z, int chi)
{
  return z.char_table().degree(chi);
}

std::string root_name(const Cyclo& v, int n, const std::vector<std::string>& names)
{
  for (int k = 0; k < n; ++k)
    if (v == Cyclo::root_of_unity(n, k)) return names.at(k);
  throw GroupError("value " + v.str() + " is not a root of unity of order " + std::to_string(n));
}

using Labeler = std::function<std::string(const PermGroup& z, int chi)>;

void label_centralizer(const PermGroup& g, int cls, const Labeler& f)
{
  const auto& z = g.centralizer(cls);
  std::vector<std::string> labels;
  for (int t = 0; t < z.char_table().size(); ++t) labels.push_back(f(z, t));
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size()) throw GroupError("duplicate irreducible labels in " + z.name());
  z.set_irreducible_labels(labels);
}

std::string symmetric_label(int n, const PermGroup& z, int t)
{
  if (n == 1) return "1";
  long d = degree_of(z, t);
  int tr = value_sign(at(z, t, c(z.degree(), {{1, 2}})));
  if (n == 2) return tr == 1 ? "1" : "eps";
  std::map<std::pair<long, int>, std::string> names;
  if (n == 3) names = {{{1, 1}, "1"}, {{1, -1}, "eps"}, {{2, 0}, "r"}};
  if (n == 4) names = {{{1, 1}, "1"}, {{1, -1}, "lambda3"}, {{2, 0}, "sigma"}, {{3, 1}, "lambda1"}, {{3, -1}, "lambda2"}};
  if (n == 5)
    names = {{{1, 1}, "1"},  {{1, -1}, "lambda4"}, {{4, 2}, "lambda1"}, {{4, -2}, "lambda3"},
             {{5, 1}, "nu"}, {{5, -1}, "nu'"},     {{6, 0}, "lambda2"}};
  return names.at({d, tr});
}

std::string d8_label(const PermGroup& z, int t)
{
  if (degree_of(z, t) == 2) return "r";
  int a = value_sign(at(z, t, c(z.degree(), {{1, 2}})));
  int b = value_sign(at(z, t, c(z.degree(), {{1, 3}, {2, 4}})));
  std::map<std::pair<int, int>, std::string> names = {
      {{1, 1}, "1"}, {{-1, 1}, "eps'"}, {{1, -1}, "eps''"}, {{-1, -1}, "eps"}};
  return names.at({a, b});
}

std::string theta_part(const PermGroup& z, int t)
{
  return root_name(at(z, t, c(z.degree(), {{1, 2, 3}})), 3, {"", "theta", "theta2"});
}

void label_symmetric(PermGroup& g, int n)
{
  std::map<int, std::vector<Perm>> reps = {
      {1, {c(1, {})}},
      {2, {c(2, {}), c(2, {{1, 2}})}},
      {3, {c(3, {}), c(3, {{1, 2}}), c(3, {{1, 2, 3}})}},
      {4, {c(4, {}), c(4, {{1, 2}}), c(4, {{1, 2}, {3, 4}}), c(4, {{1, 2, 3}}), c(4, {{1, 2, 3, 4}})}},
      {5,
       {c(5, {}), c(5, {{1, 2}}), c(5, {{1, 2}, {3, 4}}), c(5, {{1, 2, 3}}), c(5, {{1, 2, 3}, {4, 5}}),
        c(5, {{1, 2, 3, 4}}), c(5, {{1, 2, 3, 4, 5}})}}};
  std::map<int, std::vector<std::string>> names = {{1, {"1"}},
                                                   {2, {"1", "g2"}},
                                                   {3, {"1", "g2", "g3"}},
                                                   {4, {"1", "g2", "g2'", "g3", "g4"}},
                                                   {5, {"1", "g2", "g2'", "g3", "g6", "g4", "g5"}}};
  g.set_classes(reps.at(n), names.at(n));
  {
    std::vector<std::string> labels;
    for (int t = 0; t < g.char_table().size(); ++t) labels.push_back(symmetric_label(n, g, t));
    g.set_irreducible_labels(labels);
  }
  for (std::size_t k = 0; k < g.classes().size(); ++k) {
    const std::string& cl = g.classes()[k].label;
    int ci = static_cast<int>(k);
    if (cl == "1") {
      label_centralizer(g, ci, [n](const PermGroup& z, int t) { return symmetric_label(n, z, t); });
    } else if (cl == "g2") {
      label_centralizer(g, ci, [n](const PermGroup& z, int t) -> std::string {
        if (n <= 3) return value_sign(at(z, t, c(n, {{1, 2}}))) == 1 ? "1" : "eps";
        if (n == 4) {
          int a = value_sign(at(z, t, c(4, {{1, 2}})));
          int b = value_sign(at(z, t, c(4, {{3, 4}})));
          std::map<std::pair<int, int>, std::string> names = {
              {{1, 1}, "1"}, {{-1, 1}, "eps'"}, {{1, -1}, "eps''"}, {{-1, -1}, "eps"}};
          return names.at({a, b});
        }
        long d = degree_of(z, t);
        int a = value_sign(at(z, t, c(5, {{1, 2}}))) / static_cast<int>(d);
        int b = value_sign(at(z, t, c(5, {{3, 4}})));
        std::map<std::pair<long, int>, std::string> base = {{{1, 1}, "1"}, {{1, -1}, "eps"}, {{2, 0}, "r"}};
        return (a == 1 ? "" : "-") + base.at({d, b});
      });
    } else if (cl == "g2'") {
      label_centralizer(g, ci, d8_label);
    } else if (cl == "g3") {
      label_centralizer(g, ci, [n](const PermGroup& z, int t) -> std::string {
        std::string th = theta_part(z, t);
        if (n == 5 && value_sign(at(z, t, c(5, {{4, 5}}))) == -1) return th.empty() ? "eps" : "eps." + th;
        return th.empty() ? "1" : th;
      });
    } else if (cl == "g6") {
      label_centralizer(g, ci, [](const PermGroup& z, int t) -> std::string {
        std::string th = theta_part(z, t);
        if (th.empty()) th = "1";
        return value_sign(at(z, t, c(5, {{4, 5}}))) == -1 ? "-" + th : th;
      });
    } else if (cl == "g4") {
      label_centralizer(g, ci, [](const PermGroup& z, int t) {
        return root_name(at(z, t, c(z.degree(), {{1, 2, 3, 4}})), 4, {"1", "i", "-1", "-i"});
      });
    } else if (cl == "g5") {
      label_centralizer(g, ci, [](const PermGroup& z, int t) {
        return root_name(at(z, t, c(5, {{1, 2, 3, 4, 5}})), 5, {"1", "zeta1", "zeta2", "zeta3", "zeta4"});
      });
    }
  }
}

void label_generic(PermGroup& g)
{
  for (std::size_t k = 0; k < g.classes().size(); ++k) g.centralizer(static_cast<int>(k));
}

void label_d10(PermGroup& g)
{
  Perm g5 = c(5, {{1, 2, 3, 4, 5}});
  Perm g2 = c(5, {{2, 5}, {3, 4}});
  g.set_classes({identity_perm(5), g2, g5, compose(g5, g5)}, {"1", "g2", "g5", "g5^2"});
  Cyclo r_value = Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4);
  auto at_one = [=](const PermGroup& z, int t) -> std::string {
    if (degree_of(z, t) == 1) return value_sign(at(z, t, g2)) == 1 ? "1" : "eps";
    return at(z, t, g5) == r_value ? "r" : "r'";
  };
  {
    std::vector<std::string> labels;
    for (int t = 0; t < g.char_table().size(); ++t) labels.push_back(at_one(g, t));
    g.set_irreducible_labels(labels);
  }
  label_centralizer(g, 0, at_one);
  label_centralizer(g, 1, [=](const PermGroup& z, int t) { return value_sign(at(z, t, g2)) == 1 ? "1" : "eps"; });
  for (int k : {2, 3})
    label_centralizer(g, k, [=](const PermGroup& z, int t) {
      return root_name(at(z, t, g5), 5, {"1", "zeta1", "zeta2", "zeta3", "zeta4"});
    });
}

struct CatalogEntry {
  std::shared_ptr<PermGroup> group;
  std::vector<Perm> std_gens;
};

std::map<std::string, CatalogEntry> build_catalog()
{
  std::map<std::string, CatalogEntry> cat;
  auto add = [&](const std::string& name, int n, std::vector<Perm> gens) {
    auto g = std::make_shared<PermGroup>(name, n, gens);
    cat[name] = {g, gens};
    return g;
  };
  add("S1", 1, {});
  add("S2", 2, {c(2, {{1, 2}})});
  add("S3", 3, {c(3, {{1, 2}}), c(3, {{1, 2, 3}})});
  add("S4", 4, {c(4, {{1, 2}}), c(4, {{1, 2, 3, 4}})});
  add("S5", 5, {c(5, {{1, 2}}), c(5, {{1, 2, 3, 4, 5}})});
  for (int n = 1; n <= 5; ++n) label_symmetric(*cat["S" + std::to_string(n)].group, n);

  add("S2xS2", 4, {direct_sum(c(2, {{1, 2}}), c(2, {})), direct_sum(c(2, {}), c(2, {{1, 2}}))});
  add("S3xS2", 5,
      {direct_sum(c(3, {{1, 2}}), c(2, {})), direct_sum(c(3, {{1, 2, 3}}), c(2, {})),
       direct_sum(c(3, {}), c(2, {{1, 2}}))});
  label_d10(*add("D10", 5, {c(5, {{1, 2, 3, 4, 5}}), c(5, {{2, 5}, {3, 4}})}));

  // subgroups of S4
  add("1@S4", 4, {});
  add("H31@S4", 4, {c(4, {{1, 2}}), c(4, {{1, 2, 3}})});
  add("H22@S4", 4, {c(4, {{1, 2}}), c(4, {{3, 4}})});
  add("H211@S4", 4, {c(4, {{1, 2}})});
  add("tH211@S4", 4, {c(4, {{3, 4}})});
  add("tH22@S4", 4, {c(4, {{1, 2}}), c(4, {{3, 4}})});
  add("tH@S4", 4, {c(4, {{1, 2}}), c(4, {{3, 4}}), c(4, {{1, 3}, {2, 4}})});
  // subgroups of S5
  add("1@S5", 5, {});
  add("H41@S5", 5, {c(5, {{1, 2}}), c(5, {{1, 2, 3, 4}})});
  add("H32@S5", 5, {c(5, {{1, 2}}), c(5, {{1, 2, 3}}), c(5, {{4, 5}})});
  add("H311@S5", 5, {c(5, {{1, 2}}), c(5, {{1, 2, 3}})});
  add("H221@S5", 5, {c(5, {{1, 2}}), c(5, {{4, 5}})});
  add("H2111@S5", 5, {c(5, {{1, 2}})});
  add("tH2111@S5", 5, {c(5, {{4, 5}})});
  add("tH311@S5", 5, {c(5, {{1, 2}}), c(5, {{1, 2, 3}})});
  add("tH221@S5", 5, {c(5, {{1, 2}}), c(5, {{4, 5}})});
  add("tH@S5", 5, {c(5, {{1, 2}}), c(5, {{4, 5}}), c(5, {{1, 4}, {2, 5}})});
  add("D10@S5", 5, {c(5, {{1, 2, 3, 4, 5}}), c(5, {{2, 5}, {3, 4}})});
  // subgroups of S3 and S2
  add("1@S3", 3, {});
  add("H21@S3", 3, {c(3, {{1, 2}})});
  add("1@S2", 2, {});
  for (auto& [name, e] : cat)
    if (name.find('@') != std::string::npos || name == "S2xS2" || name == "S3xS2") label_generic(*e.group);
  return cat;
}

const std::map<std::string, CatalogEntry>& catalog_map()
{
  static const std::map<std::string, CatalogEntry> cat = build_catalog();
  return cat;
}

} // namespace

const PermGroup& catalog(const std::string& name)
{
  const auto& cat = catalog_map();
  auto it = cat.find(name);
  if (it == cat.end()) throw GroupError("unknown group " + name);
  return *it->second.group;
}

std::vector<std::string> catalog_names()
{
  std::vector<std::string> out;
  for (const auto& [name, e] : catalog_map()) out.push_back(name);
  return out;
}

const std::vector<Perm>& standard_generators(const std::string& name)
{
  const auto& cat = catalog_map();
  auto it = cat.find(name);
  if (it == cat.end()) throw GroupError("unknown group " + name);
  return it->second.std_gens;
}

} // namespace newbasis
