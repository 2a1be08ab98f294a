#include "newbasis/odd_variant.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace newbasis {

namespace {

void require_odd(int d, const char* what)
{
  if (d < 1 || d % 2 == 0) throw ContractError(std::string(what) + ": d must be odd and positive");
}

} // namespace

F2Vector zeta_vector(int d)
{
  require_odd(d, "zeta_vector");
  F2Vector z{d, 0};
  for (int i = 1; i <= d; i += 2) z.bits |= std::uint64_t{1} << (i - 1);
  return z;
}

QuotientVector QuotientVector::of(const F2Vector& x)
{
  QuotientVector q;
  q.d = x.d;
  q.rep = x.test(x.d) ? x + zeta_vector(x.d) : x;
  return q;
}

std::vector<IntervalSet> primitive_sets_odd(int d)
{
  require_odd(d, "primitive_sets_odd");
  std::vector<IntervalSet> out{IntervalSet(d)};
  for (int k = 1; 2 * k <= d - 1; k += 2) {
    IntervalSet b(d);
    for (int j = 1; j <= k; ++j) b.insert({j, d - j});
    out.push_back(b);
  }
  return out;
}

std::vector<IntervalSet> enumerate_S_odd(int d)
{
  require_odd(d, "enumerate_S_odd");
  if (d == 1) return {IntervalSet(1)};
  std::set<IntervalSet> acc;
  for (auto& p : primitive_sets_odd(d)) acc.insert(p);
  for (const auto& bp : enumerate_S_odd(d - 2)) {
    int top = bp.count_part(0) != 0 ? d : d - 1;
    for (int i = 1; i <= top; ++i) acc.insert(t_map(d, i, bp));
  }
  return {acc.begin(), acc.end()};
}

F2Subspace alpha(const IntervalSet& b)
{
  F2Subspace s = span(b);
  s.add(zeta_vector(b.d()));
  return s;
}

bool alpha_injective(const IntervalSet& b)
{
  return !span(b).contains(zeta_vector(b.d()));
}

OddBijection e_bijection_odd(int d)
{
  OddBijection r;
  r.d = d;
  r.sets = enumerate_S_odd(d);
  for (const auto& b : r.sets) r.spaces.push_back(alpha(b));

  std::vector<QuotientVector> pts;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (d - 1)); ++v) pts.push_back(QuotientVector::of({d, v}));
  std::size_t n = pts.size();
  if (r.sets.size() != n) throw ContractError("e_bijection_odd: |S_D| differs from |V/F2 zeta|");

  // Kuhn augmenting paths; point p may take space s when p lies in s
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t s = 0; s < n; ++s)
      if (r.spaces[s].contains(pts[p].rep)) adj[p].push_back(s);
  std::vector<long> owner(n, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t p, std::vector<bool>& seen) {
    for (auto s : adj[p]) {
      if (seen[s]) continue;
      seen[s] = true;
      if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]), seen)) {
        owner[s] = static_cast<long>(p);
        return true;
      }
    }
    return false;
  };
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<bool> seen(n, false);
    if (!augment(p, seen)) throw ContractError("e_bijection_odd: no perfect matching");
  }
  std::vector<F2Vector> order_pts(n);
  std::vector<F2Subspace> order_spaces(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto p = static_cast<std::size_t>(owner[s]);
    r.e[pts[p]] = s;
    order_pts[s] = pts[p].rep;
    order_spaces[s] = r.spaces[s];
  }
  r.unique = membership_acyclic(order_pts, order_spaces);
  return r;
}

std::map<IntervalSet, IntervalSet> compare_bijection(int d)
{
  require_odd(d, "compare_bijection");
  auto odd = e_bijection_odd(d);
  std::map<IntervalSet, IntervalSet> out;
  for (const auto& b : enumerate_S(d - 1)) {
    // ebar^{-1} alphabar (B) = eps(B), read in V/F2 zeta through e_i -> pi(e_i)
    F2Vector x = eps_vector(b);
    auto q = QuotientVector::of({d, x.bits});
    const auto& c = odd.sets.at(odd.e.at(q));
    out.emplace(b, c);
  }
  return out;
}

std::vector<TableRow> table_rows_odd(int d)
{
  auto odd = e_bijection_odd(d);
  std::vector<std::pair<QuotientVector, std::size_t>> entries(odd.e.begin(), odd.e.end());
  std::vector<TableRow> rows;
  // rows in a topological order of the membership relation
  std::vector<bool> placed(odd.sets.size(), false);
  while (rows.size() < odd.sets.size()) {
    bool progress = false;
    for (const auto& [x, s] : entries) {
      if (placed[s]) continue;
      bool ready = true;
      for (const auto& [y, t] : entries)
        if (t != s && !placed[t] && odd.spaces[s].contains(y.rep)) ready = false;
      if (!ready) continue;
      TableRow row;
      row.set = odd.sets[s];
      row.boxed = x.rep;
      std::set<QuotientVector> members;
      for (const auto& v : span(row.set).members()) members.insert(QuotientVector::of(v));
      for (const auto& m : members)
        if (!(m == x)) row.members.push_back(m.rep);
      rows.push_back(row);
      placed[s] = true;
      progress = true;
    }
    if (!progress) throw ContractError("table_rows_odd: membership relation has a cycle");
  }
  return rows;
}

std::string render_table_odd(int d)
{
  std::string out;
  for (const auto& row : table_rows_odd(d)) out += render_row(row) + "\n";
  return out;
}

std::string render_table_odd_like(int d, const std::string& reference)
{
  return render_rows_like(
      d, table_rows_odd(d), reference,
      [](const F2Vector& a, const F2Vector& b) { return QuotientVector::of(a) == QuotientVector::of(b); },
      [](const F2Vector& x) { return render(QuotientVector::of(x).rep); });
}

} // namespace newbasis
