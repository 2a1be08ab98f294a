#include "newbasis/intervals.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace newbasis {

namespace {

void check_interval(int d, const Interval& iv)
{
  if (iv.a < 1 || iv.a > iv.b || iv.b > d)
    throw ContractError("interval " + render(iv) + " does not fit in [1," + std::to_string(d) + "]");
}

// {a+1, a+3, ..., b-1} is contained in X_B[a+1, b-1]
bool covers_discrete(const IntervalSet& b, int lo, int hi)
{
  auto x = xcal(b, lo, hi);
  for (int c = lo; c <= hi; c += 2)
    if (!x.count(c)) return false;
  return true;
}

// h-sequence built from B^0 alone; false on failure
bool build_h(const IntervalSet& b, HSequence& out)
{
  auto even = b.part(0);
  int k = static_cast<int>(even.size());
  std::sort(even.begin(), even.end());
  std::vector<int> h(2 * k + 2);
  h[0] = 0;
  h[2 * k + 1] = b.d() + 1;
  for (int j = 0; j < k; ++j) {
    h[j + 1] = even[j].a;
    h[2 * k - j] = even[j].b;
  }
  for (int j = 0; j <= 2 * k; ++j)
    if (h[j] >= h[j + 1]) return false;
  for (int j = 0; j <= 2 * k + 1; ++j)
    if (((h[j] - j) % 2 + 2) % 2 != 0) return false;
  out.k = k;
  out.h = std::move(h);
  return true;
}

Interval xi_inverse(int i, const Interval& iv)
{
  if (iv.a >= i + 2) return {iv.a - 2, iv.b - 2};
  if (iv.b <= i - 2) return iv;
  if (iv.a < i && i < iv.b) return {iv.a, iv.b - 2};
  throw ContractError("interval " + render(iv) + " is not in the image of xi_" + std::to_string(i));
}

} // namespace

IntervalSet::IntervalSet(int d, std::vector<Interval> items) : d_(d)
{
  for (const auto& iv : items) insert(iv);
}

bool IntervalSet::contains(const Interval& iv) const
{
  return std::binary_search(items_.begin(), items_.end(), iv);
}

void IntervalSet::insert(const Interval& iv)
{
  check_interval(d_, iv);
  auto it = std::lower_bound(items_.begin(), items_.end(), iv);
  if (it != items_.end() && *it == iv) return;
  items_.insert(it, iv);
}

void IntervalSet::erase(const Interval& iv)
{
  auto it = std::lower_bound(items_.begin(), items_.end(), iv);
  if (it == items_.end() || *it != iv)
    throw ContractError("interval " + render(iv) + " is not a member");
  items_.erase(it);
}

std::vector<Interval> IntervalSet::part(int h) const
{
  std::vector<Interval> out;
  for (const auto& iv : items_)
    if (iv.size() % 2 == h) out.push_back(iv);
  return out;
}

int IntervalSet::count_part(int h) const
{
  return static_cast<int>(part(h).size());
}

bool is_prec(const Interval& i1, const Interval& i2)
{
  return i2.a < i1.a && i1.a <= i1.b && i1.b < i2.b;
}

bool is_nontouching(const Interval& i1, const Interval& i2)
{
  return i2.a - i1.b >= 2 || i1.a - i2.b >= 2;
}

std::set<int> xcal(const IntervalSet& b, int a, int bnd)
{
  std::set<int> out;
  Interval box{a, bnd};
  for (const auto& iv : b.items())
    if (iv.odd() && box.contains(iv))
      for (int c = iv.a; c <= iv.b; ++c) out.insert(c);
  return out;
}

Interval xi(int d, int i, const Interval& iv)
{
  if (d < 2 || i < 1 || i > d) throw ContractError("xi: index out of range");
  check_interval(d - 2, iv);
  if (i <= iv.a) return {iv.a + 2, iv.b + 2};
  if (i >= iv.b + 2) return iv;
  return {iv.a, iv.b + 2};
}

IntervalSet t_map(int d, int i, const IntervalSet& bprime)
{
  if (bprime.d() != d - 2) throw ContractError("t_map: B' must live over d-2");
  IntervalSet out(d);
  for (const auto& iv : bprime.items()) out.insert(xi(d, i, iv));
  out.insert({i, i});
  return out;
}

IntervalSet t_inverse(const IntervalSet& b, int i)
{
  if (!b.contains({i, i})) throw ContractError("t_inverse: {" + std::to_string(i) + "} is not a member");
  IntervalSet out(b.d() - 2);
  for (const auto& iv : b.items())
    if (iv != Interval{i, i}) out.insert(xi_inverse(i, iv));
  return out;
}

std::vector<IntervalSet> primitive_sets(int d)
{
  if (d < 0 || d % 2 != 0) throw ContractError("primitive_sets: d must be even and nonnegative");
  std::vector<IntervalSet> out;
  IntervalSet cur(d);
  out.push_back(cur);
  for (int k = 1; k <= d / 2; ++k) {
    cur.insert({k, d + 1 - k});
    out.push_back(cur);
  }
  return out;
}

std::vector<IntervalSet> enumerate_S(int d)
{
  if (d < 0 || d % 2 != 0) throw ContractError("enumerate_S: d must be even and nonnegative");
  static std::map<int, std::vector<IntervalSet>> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  std::set<IntervalSet> acc;
  for (auto& p : primitive_sets(d)) acc.insert(p);
  if (d >= 2) {
    for (const auto& bp : enumerate_S(d - 2))
      for (int i = 1; i <= d; ++i) acc.insert(t_map(d, i, bp));
  }
  std::vector<IntervalSet> out(acc.begin(), acc.end());
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[d] = out;
  return out;
}

AxiomReport check_axioms(const IntervalSet& b)
{
  AxiomReport r;
  const auto& items = b.items();
  r.p0 = true;
  for (std::size_t x = 0; x < items.size() && r.p0; ++x)
    for (std::size_t y = x + 1; y < items.size(); ++y) {
      const auto& I = items[x];
      const auto& J = items[y];
      if (!(is_nontouching(I, J) || is_prec(I, J) || is_prec(J, I))) {
        r.p0 = false;
        break;
      }
    }
  r.p1 = true;
  for (const auto& iv : b.part(1))
    if (iv.b - iv.a >= 2 && !covers_discrete(b, iv.a + 1, iv.b - 1)) {
      r.p1 = false;
      break;
    }
  HSequence hs;
  r.p2 = build_h(b, hs);
  if (r.p2 && hs.k >= 1) {
    const auto& h = hs.h;
    int k = hs.k;
    for (int j = 0; j <= 2 * k && r.p2; ++j) {
      if (j == k || h[j + 1] < h[j] + 3) continue;
      if (j <= k - 1)
        r.p2 = covers_discrete(b, h[j] + 1, h[j + 1] - 2);
      else
        r.p2 = covers_discrete(b, h[j] + 2, h[j + 1] - 1);
    }
  }
  return r;
}

HSequence h_sequence(const IntervalSet& b)
{
  HSequence hs;
  if (!build_h(b, hs)) throw ContractError("h_sequence: no valid sequence for " + render(b));
  return hs;
}

IntervalSet tau(const IntervalSet& b)
{
  IntervalSet out(b.d());
  for (const auto& iv : b.items()) out.insert({b.d() + 1 - iv.b, b.d() + 1 - iv.a});
  return out;
}

FEps f_eps(const IntervalSet& b)
{
  int d = b.d();
  int kappa = b.count_part(0) % 2;
  FEps r;
  r.f.assign(d, -kappa);
  for (const auto& iv : b.items())
    for (int j = iv.a; j <= iv.b; ++j) r.f[j - 1] += iv.odd() ? 1 : -1;
  r.eps.resize(d);
  for (int j = 0; j < d; ++j) {
    int m = ((r.f[j] % 4) + 4) % 4;
    r.eps[j] = (m == 1 || m == 2) ? 1 : 0;
  }
  return r;
}

namespace {

struct MoveData {
  HSequence hs;
  int s = -1;
  bool has_z = false;
  Interval zmin;
};

MoveData move_data(const IntervalSet& b, int i)
{
  if (!b.contains({i, i})) throw ContractError("move: {" + std::to_string(i) + "} is not a member");
  MoveData m;
  m.hs = h_sequence(b);
  const auto& h = m.hs.h;
  for (int s = 0; s + 1 < static_cast<int>(h.size()); ++s)
    if (h[s] < i && i < h[s + 1]) m.s = s;
  if (m.s < 0) throw ContractError("move: singleton meets the h-sequence");
  for (const auto& iv : b.part(1)) {
    if (!(iv.a < i && i < iv.b)) continue;
    if (!m.has_z || iv.size() < m.zmin.size()) m.zmin = iv;
    m.has_z = true;
  }
  return m;
}

int classify(const MoveData& m, int i)
{
  int k = m.hs.k;
  int s = m.s;
  bool same = (i - s) % 2 == 0;
  if (s == k) return m.has_z ? 2 : 1;
  if (s <= k - 1) {
    if (same) {
      if (!m.has_z) throw ContractError("move: case (iii) requires Z_i nonempty");
      return 3;
    }
    return m.has_z ? 4 : 7;
  }
  if (!same) {
    if (!m.has_z) throw ContractError("move: case (v) requires Z_i nonempty");
    return 5;
  }
  return m.has_z ? 6 : 8;
}

} // namespace

int move_case(const IntervalSet& b, int i)
{
  return classify(move_data(b, i), i);
}

IntervalSet move(const IntervalSet& b, int i)
{
  MoveData m = move_data(b, i);
  int c = classify(m, i);
  const auto& h = m.hs.h;
  int k = m.hs.k;
  int s = m.s;
  IntervalSet out = b;
  out.erase({i, i});
  switch (c) {
  case 1:
    break;
  case 2: case 3: case 4: case 5: case 6:
    out.erase(m.zmin);
    out.insert({m.zmin.a, i - 1});
    out.insert({i + 1, m.zmin.b});
    break;
  case 7:
    out.erase({h[s + 1], h[2 * k - s]});
    out.insert({i, h[2 * k - s]});
    out.insert({i + 1, h[s + 1] - 1});
    break;
  case 8:
    out.erase({h[2 * k - s + 1], h[s]});
    out.insert({h[2 * k + 1 - s], i});
    out.insert({h[s] + 1, i - 1});
    break;
  default:
    throw ContractError("move: no case applies");
  }
  return out;
}

std::vector<long> count_by_m(int d)
{
  std::vector<long> out(d / 2 + 1, 0);
  for (const auto& b : enumerate_S(d)) ++out.at(b.count_part(0));
  return out;
}

std::map<IntervalSet, IntervalSet> odd_part_map(int d)
{
  std::map<IntervalSet, IntervalSet> out;
  for (const auto& b : enumerate_S(d)) out.emplace(b, IntervalSet(d, b.part(1)));
  return out;
}

std::string render(const Interval& iv)
{
  std::string s;
  if (iv.b <= 9) {
    for (int c = iv.a; c <= iv.b; ++c) s += static_cast<char>('0' + c);
    return s;
  }
  return "[" + std::to_string(iv.a) + ".." + std::to_string(iv.b) + "]";
}

std::string render(const IntervalSet& b)
{
  if (b.empty()) return "∅";
  std::string s = "<";
  for (std::size_t x = 0; x < b.items().size(); ++x) {
    if (x) s += ',';
    s += render(b.items()[x]);
  }
  return s + ">";
}

IntervalSet parse_interval_set(int d, const std::string& text)
{
  if (text == "∅" || text == "<>") return IntervalSet(d);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw std::invalid_argument("interval set must look like <2,123>: " + text);
  IntervalSet out(d);
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty interval in " + text);
    Interval iv;
    if (tok.front() == '[') {
      auto dots = tok.find("..");
      if (dots == std::string::npos || tok.back() != ']') throw std::invalid_argument("bad interval " + tok);
      iv = {std::stoi(tok.substr(1, dots - 1)), std::stoi(tok.substr(dots + 2, tok.size() - dots - 3))};
    } else {
      for (std::size_t x = 0; x < tok.size(); ++x) {
        if (tok[x] < '1' || tok[x] > '9') throw std::invalid_argument("bad digit in " + tok);
        if (x && tok[x] != tok[x - 1] + 1) throw std::invalid_argument("not an interval: " + tok);
      }
      iv = {tok.front() - '0', tok.back() - '0'};
    }
    out.insert(iv);
  }
  return out;
}

} // namespace newbasis
