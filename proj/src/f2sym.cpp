#include "newbasis/f2sym.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace newbasis {

namespace {

std::uint64_t mask(int d)
{
  return d >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
}

void same_dim(const F2Vector& x, const F2Vector& y)
{
  if (x.d != y.d) throw std::invalid_argument("dimension mismatch");
}

int top_bit(std::uint64_t x)
{
  return 63 - std::countl_zero(x);
}

} // namespace

F2Vector F2Vector::operator+(const F2Vector& o) const
{
  same_dim(*this, o);
  return {d, bits ^ o.bits};
}

F2Subspace::F2Subspace(int d, const std::vector<F2Vector>& gens) : d_(d)
{
  for (const auto& g : gens) add(g);
}

std::uint64_t F2Subspace::reduce(std::uint64_t x) const
{
  for (auto r : rows_)
    if ((x >> top_bit(r)) & 1U) x ^= r;
  return x;
}

bool F2Subspace::contains(const F2Vector& x) const
{
  return reduce(x.bits) == 0;
}

bool F2Subspace::add(const F2Vector& x)
{
  if (x.d != d_) throw std::invalid_argument("dimension mismatch");
  std::uint64_t v = reduce(x.bits);
  if (v == 0) return false;
  int p = top_bit(v);
  for (auto& r : rows_)
    if ((r >> p) & 1U) r ^= v;
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(), std::greater<>());
  return true;
}

std::vector<F2Vector> F2Subspace::members() const
{
  std::vector<F2Vector> out;
  std::size_t n = rows_.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < n; ++j)
      if ((m >> j) & 1U) v ^= rows_[j];
    out.push_back({d_, v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool F2Subspace::is_isotropic() const
{
  for (auto r : rows_)
    for (auto s : rows_)
      if (pairing({d_, r}, {d_, s})) return false;
  return true;
}

F2Vector unit(int d, int i)
{
  if (i < 1 || i > d) throw std::out_of_range("unit vector index out of range");
  return {d, std::uint64_t{1} << (i - 1)};
}

int pairing(const F2Vector& x, const F2Vector& y)
{
  same_dim(x, y);
  std::uint64_t s = (x.bits & (y.bits << 1)) ^ (x.bits & (y.bits >> 1));
  return std::popcount(s & mask(x.d)) & 1;
}

F2Vector e_of_interval(int d, const Interval& iv)
{
  if (iv.a < 1 || iv.b > d || iv.a > iv.b) throw std::out_of_range("interval does not fit");
  std::uint64_t v = mask(iv.b) & ~mask(iv.a - 1);
  return {d, v};
}

F2Vector T_map(int d, int i, const F2Vector& xp)
{
  if (xp.d != d - 2 || i < 1 || i > d) throw std::invalid_argument("T_map: bad arguments");
  F2Vector out{d, 0};
  for (int j = 1; j <= d - 2; ++j) {
    if (!xp.test(j)) continue;
    if (j <= i - 2)
      out.bits ^= unit(d, j).bits;
    else if (j == i - 1)
      out.bits ^= e_of_interval(d, {i - 1, i + 1}).bits;
    else
      out.bits ^= unit(d, j + 2).bits;
  }
  return out;
}

F2Vector eps_vector(const IntervalSet& b)
{
  auto fe = f_eps(b);
  F2Vector out{b.d(), 0};
  for (int j = 0; j < b.d(); ++j)
    if (fe.eps[j]) out.bits |= std::uint64_t{1} << j;
  return out;
}

F2Subspace span(const IntervalSet& b)
{
  F2Subspace s(b.d());
  for (const auto& iv : b.items()) s.add(e_of_interval(b.d(), iv));
  return s;
}

std::vector<Interval> decompose(const F2Vector& x)
{
  std::vector<Interval> out;
  int i = 1;
  while (i <= x.d) {
    if (!x.test(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= x.d && x.test(j + 1)) ++j;
    out.push_back({i, j});
    i = j + 1;
  }
  return out;
}

int u_stat(const F2Vector& x)
{
  int u = 0;
  for (const auto& iv : decompose(x)) {
    if (iv.a % 2 == 0 && iv.b % 2 == 1) ++u;
    if (iv.a % 2 == 1 && iv.b % 2 == 0) --u;
  }
  return u;
}

int utilde(const F2Vector& x)
{
  int u = u_stat(x);
  return u >= 0 ? 2 * u : -2 * u - 1;
}

bool in_V_s(const F2Vector& x, int s)
{
  int t = s % 2 == 0 ? s / 2 : (s + 1) / 2;
  auto parts = decompose(x);
  if (static_cast<int>(parts.size()) != t) return false;
  for (const auto& iv : parts)
    if ((iv.a - s) % 2 != 0 || (iv.b - s - 1) % 2 != 0) return false;
  return true;
}

bool graph_adjacent(const F2Vector& x, const F2Vector& y)
{
  same_dim(x, y);
  std::uint64_t diff = x.bits ^ y.bits;
  if (std::popcount(diff) != 1) return false;
  return pairing(x, {x.d, diff}) == 0;
}

std::vector<int> components(int d)
{
  if (d > 20) throw std::invalid_argument("components: d too large for exhaustive search");
  std::size_t n = std::size_t{1} << d;
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::deque<std::uint64_t> queue{start};
    comp[start] = next;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (int i = 1; i <= d; ++i) {
        F2Vector x{d, v};
        if (pairing(x, unit(d, i))) continue;
        auto w = v ^ (std::uint64_t{1} << (i - 1));
        if (comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::string render(const F2Vector& x)
{
  if (x.bits == 0) return "0";
  std::string s;
  for (int i = 1; i <= x.d; ++i)
    if (x.test(i)) s += i <= 9 ? std::string(1, static_cast<char>('0' + i)) : "[" + std::to_string(i) + "]";
  return s;
}

F2Vector parse_vector(int d, const std::string& text)
{
  F2Vector x{d, 0};
  if (text == "0") return x;
  for (char c : text) {
    int i = c - '0';
    if (i < 1 || i > d) throw std::invalid_argument("bad vector digit in " + text);
    x.bits ^= std::uint64_t{1} << (i - 1);
  }
  return x;
}

std::string bit_string(const F2Vector& x)
{
  std::string s;
  for (int i = 1; i <= x.d; ++i) s += x.test(i) ? '1' : '0';
  return s;
}

bool order_le(const IntervalSet& b1, const IntervalSet& b2)
{
  int m1 = b1.count_part(0);
  int m2 = b2.count_part(0);
  if (m1 != m2) return m1 < m2;
  auto f1 = f_eps(b1).f;
  auto f2 = f_eps(b2).f;
  for (std::size_t j = 0; j < f1.size(); ++j)
    if (f1[j] > f2[j]) return false;
  return true;
}

EpsTable::EpsTable(int d) : d_(d)
{
  std::size_t n = std::size_t{1} << d;
  pre_.resize(n);
  stats_.resize(n);
  std::vector<bool> seen(n, false);
  for (const auto& b : enumerate_S(d)) {
    auto x = eps_vector(b);
    if (seen[x.bits]) throw ContractError("epsilon is not injective at " + render(x));
    seen[x.bits] = true;
    pre_[x.bits] = b;
    stats_[x.bits] = f_eps(b);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw ContractError("epsilon is not surjective");

  for (std::size_t v = 0; v < n; ++v) order_.push_back({d, v});
  auto key = [&](const F2Vector& x) {
    const auto& f = stats_[x.bits].f;
    return std::make_tuple(pre_[x.bits].count_part(0), std::accumulate(f.begin(), f.end(), 0), x.bits);
  };
  std::sort(order_.begin(), order_.end(), [&](const F2Vector& x, const F2Vector& y) { return key(x) < key(y); });

  nu_.assign(n, -1);
  nu_[0] = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const auto& x = order_[p];
    for (std::size_t q = 0; q < p; ++q) {
      const auto& y = order_[q];
      if (nu_[y.bits] >= 0 && le(y, x) && nu_[y.bits] + 1 > nu_[x.bits]) nu_[x.bits] = nu_[y.bits] + 1;
    }
  }
}

const IntervalSet& EpsTable::preimage(const F2Vector& x) const
{
  return pre_.at(x.bits);
}

const FEps& EpsTable::stats(const F2Vector& x) const
{
  return stats_.at(x.bits);
}

bool EpsTable::le(const F2Vector& x, const F2Vector& y) const
{
  int m1 = pre_[x.bits].count_part(0);
  int m2 = pre_[y.bits].count_part(0);
  if (m1 != m2) return m1 < m2;
  const auto& f1 = stats_[x.bits].f;
  const auto& f2 = stats_[y.bits].f;
  for (std::size_t j = 0; j < f1.size(); ++j)
    if (f1[j] > f2[j]) return false;
  return true;
}

int EpsTable::nu(const F2Vector& x) const
{
  return nu_.at(x.bits);
}

} // namespace newbasis
