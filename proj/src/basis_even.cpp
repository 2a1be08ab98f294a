#include "newbasis/basis_even.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace newbasis {

VFunction::VFunction(int dim) : d(dim), values(std::size_t{1} << dim)
{
}

VFunction& VFunction::operator+=(const VFunction& o)
{
  if (o.d != d) throw std::invalid_argument("dimension mismatch");
  for (std::size_t j = 0; j < values.size(); ++j) values[j] += o.values[j];
  return *this;
}

bool VFunction::is_nonneg() const
{
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q >= 0; });
}

VFunction psi(int d, const F2Vector& x)
{
  VFunction f(d);
  f.at(x) = 1;
  return f;
}

VFunction indicator(const F2Subspace& s)
{
  VFunction f(s.d());
  for (const auto& x : s.members()) f.at(x) = 1;
  return f;
}

VFunction Psi(const IntervalSet& b)
{
  return indicator(span(b));
}

VFunction theta_map(int d, int i, const VFunction& fp)
{
  if (fp.d != d - 2) throw std::invalid_argument("theta_map: f' must live over d-2");
  VFunction f(d);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (d - 2)); ++v) {
    F2Vector xp{d - 2, v};
    F2Vector x = T_map(d, i, xp);
    f.at(x) = fp.at(xp);
    f.at(x + unit(d, i)) = fp.at(xp);
  }
  return f;
}

BasisMatrix membership_matrix(const EpsTable& table)
{
  BasisMatrix m;
  m.order = table.linear_order();
  std::size_t n = m.order.size();
  m.entries.assign(n, std::vector<long>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    auto s = span(table.preimage(m.order[r]));
    for (std::size_t c = 0; c < n; ++c)
      if (s.contains(m.order[c])) m.entries[r][c] = 1;
  }
  return m;
}

BasisMatrix change_of_basis(const EpsTable& table)
{
  BasisMatrix d = membership_matrix(table);
  d.entries = integer_inverse(d.entries);
  return d;
}

BasisMatrix membership_matrix(int d)
{
  return membership_matrix(EpsTable(d));
}

BasisMatrix change_of_basis(int d)
{
  return change_of_basis(EpsTable(d));
}

std::vector<std::vector<long>> integer_inverse(const std::vector<std::vector<long>>& m)
{
  std::size_t n = m.size();
  // Bareiss elimination on [M | I]
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r].size() != n) throw std::invalid_argument("integer_inverse: matrix is not square");
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m[r][c];
    a[r][n + r] = 1;
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw ArithmeticError("integer_inverse: matrix is singular");
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      for (std::size_t c = 0; c < 2 * n; ++c) {
        if (c == k) continue;
        mpz_class t = a[k][k] * a[r][c] - a[r][k] * a[k][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = t;
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  std::vector<std::vector<long>> out(n, std::vector<long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpz_class& num = a[r][n + c];
      if (!mpz_divisible_p(num.get_mpz_t(), a[r][r].get_mpz_t()))
        throw ArithmeticError("integer_inverse: inverse is not integral");
      mpz_class q = num / a[r][r];
      if (!q.fits_slong_p()) throw ArithmeticError("integer_inverse: entry overflow");
      out[r][c] = q.get_si();
    }
  return out;
}

std::vector<std::vector<long>> multiply(const std::vector<std::vector<long>>& a,
                                        const std::vector<std::vector<long>>& b)
{
  std::size_t n = a.size();
  std::size_t m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<long>> out(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

bool is_unitriangular(const BasisMatrix& m, const EpsTable& table)
{
  std::size_t n = m.order.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      long v = m.entries[r][c];
      if (r == c && v != 1) return false;
      if (r != c && v != 0 && !table.le(m.order[c], m.order[r])) return false;
    }
  return true;
}

std::map<F2Vector, F2Subspace> e_bijection(int d)
{
  EpsTable table(d);
  std::map<F2Vector, F2Subspace> out;
  std::vector<F2Vector> pts;
  std::vector<F2Subspace> spaces;
  for (const auto& x : table.linear_order()) {
    auto s = span(table.preimage(x));
    if (!s.contains(x)) throw ContractError("e_bijection: x is not in <B>");
    out.emplace(x, s);
    pts.push_back(x);
    spaces.push_back(s);
  }
  if (!membership_acyclic(pts, spaces)) throw ContractError("e_bijection: membership relation has a cycle");
  return out;
}

bool membership_acyclic(const std::vector<F2Vector>& points, const std::vector<F2Subspace>& spaces)
{
  std::size_t n = points.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (k != j && spaces[j].contains(points[k])) {
        out[k].push_back(j);
        ++indeg[j];
      }
  std::vector<std::size_t> ready;
  for (std::size_t j = 0; j < n; ++j)
    if (indeg[j] == 0) ready.push_back(j);
  std::size_t done = 0;
  while (!ready.empty()) {
    auto j = ready.back();
    ready.pop_back();
    ++done;
    for (auto k : out[j])
      if (--indeg[k] == 0) ready.push_back(k);
  }
  return done == n;
}

VFunction symplectic_fourier(const VFunction& f)
{
  if (f.d % 2 != 0) throw std::invalid_argument("symplectic_fourier: d must be even");
  VFunction g(f.d);
  std::uint64_t n = std::uint64_t{1} << f.d;
  for (std::uint64_t y = 0; y < n; ++y) {
    Rational s = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (f.values[x] == 0) continue;
      if (pairing({f.d, x}, {f.d, y}))
        s -= f.values[x];
      else
        s += f.values[x];
    }
    mpz_class scale = 1;
    scale <<= f.d / 2;
    g.values[y] = s / scale;
  }
  return g;
}

std::vector<TableRow> table_rows(int d)
{
  EpsTable table(d);
  std::vector<TableRow> rows;
  for (const auto& x : table.linear_order()) {
    TableRow row;
    row.set = table.preimage(x);
    row.boxed = x;
    for (const auto& y : span(row.set).members())
      if (y != x) row.members.push_back(y);
    std::stable_sort(row.members.begin(), row.members.end(), [](const F2Vector& p, const F2Vector& q) {
      return render(p) < render(q);
    });
    auto zero = std::find(row.members.begin(), row.members.end(), F2Vector{d, 0});
    if (zero != row.members.end()) std::rotate(row.members.begin(), zero, zero + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TextRow> parse_table_text(const std::string& text)
{
  std::vector<TextRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto colon = line.find(":(");
    if (colon == std::string::npos || line.back() != ')') throw std::invalid_argument("bad table row: " + line);
    TextRow row;
    row.set = line.substr(0, colon);
    std::string body = line.substr(colon + 2, line.size() - colon - 3);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.size() >= 2 && tok.front() == '[' && tok.back() == ']')
        row.boxed = tok.substr(1, tok.size() - 2);
      else
        row.members.push_back(tok);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_row(const TextRow& row)
{
  std::string s = row.set + ":(";
  for (const auto& m : row.members) s += m + ",";
  return s + "[" + row.boxed + "])";
}

std::string render_row(const TableRow& row)
{
  TextRow t;
  t.set = render(row.set);
  for (const auto& m : row.members) t.members.push_back(render(m));
  t.boxed = render(row.boxed);
  return format_row(t);
}

std::string render_table(int d)
{
  std::string out;
  for (const auto& row : table_rows(d)) out += render_row(row) + "\n";
  return out;
}

std::string render_rows_like(int d, const std::vector<TableRow>& rows, const std::string& reference,
                             const std::function<bool(const F2Vector&, const F2Vector&)>& same,
                             const std::function<std::string(const F2Vector&)>& spell)
{
  std::vector<bool> used(rows.size(), false);
  std::string out;
  for (const auto& ref : parse_table_text(reference)) {
    IntervalSet key(d);
    bool parsed = true;
    try {
      key = parse_interval_set(d, ref.set);
    } catch (const std::exception&) {
      parsed = false;
    }
    std::size_t hit = rows.size();
    for (std::size_t j = 0; parsed && j < rows.size(); ++j)
      if (!used[j] && rows[j].set == key) hit = j;
    if (hit == rows.size()) {
      out += ref.set + ":(not in the computed family)\n";
      continue;
    }
    used[hit] = true;
    const TableRow& row = rows[hit];
    TextRow t;
    t.set = ref.set;
    std::vector<bool> taken(row.members.size(), false);
    std::vector<int> slot(ref.members.size(), -1);
    for (std::size_t p = 0; p < ref.members.size(); ++p) {
      F2Vector v;
      try {
        v = parse_vector(d, ref.members[p]);
      } catch (const std::exception&) {
        continue;
      }
      for (std::size_t q = 0; q < row.members.size(); ++q)
        if (!taken[q] && same(row.members[q], v)) {
          taken[q] = true;
          slot[p] = static_cast<int>(q);
          break;
        }
    }
    std::size_t next = 0;
    auto next_free = [&]() {
      while (next < row.members.size() && taken[next]) ++next;
      return next;
    };
    for (std::size_t p = 0; p < ref.members.size(); ++p) {
      if (slot[p] >= 0) {
        t.members.push_back(ref.members[p]);
      } else if (auto q = next_free(); q < row.members.size()) {
        taken[q] = true;
        t.members.push_back(spell(row.members[q]));
      }
    }
    for (std::size_t q = 0; q < row.members.size(); ++q)
      if (!taken[q]) t.members.push_back(spell(row.members[q]));
    F2Vector rb;
    bool boxed_ok = false;
    try {
      rb = parse_vector(d, ref.boxed);
      boxed_ok = same(row.boxed, rb);
    } catch (const std::exception&) {
    }
    t.boxed = boxed_ok ? ref.boxed : spell(row.boxed);
    out += format_row(t) + "\n";
  }
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (!used[j]) {
      TextRow t;
      t.set = render(rows[j].set);
      for (const auto& m : rows[j].members) t.members.push_back(spell(m));
      t.boxed = spell(rows[j].boxed);
      out += format_row(t) + "\n";
    }
  return out;
}

std::string render_table_like(int d, const std::string& reference)
{
  return render_rows_like(
      d, table_rows(d), reference, [](const F2Vector& a, const F2Vector& b) { return a == b; },
      [](const F2Vector& x) { return render(x); });
}

} // namespace newbasis
