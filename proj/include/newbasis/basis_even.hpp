#ifndef NEWBASIS_BASIS_EVEN_HPP
#define NEWBASIS_BASIS_EVEN_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "newbasis/exactnum.hpp"
#include "newbasis/f2sym.hpp"

namespace newbasis {

// function V -> Q, indexed by the bit pattern of the argument
struct VFunction {
  int d = 0;
  std::vector<Rational> values;

  explicit VFunction(int dim = 0);
  const Rational& at(const F2Vector& x) const { return values.at(x.bits); }
  Rational& at(const F2Vector& x) { return values.at(x.bits); }
  VFunction& operator+=(const VFunction& o);
  bool operator==(const VFunction& o) const { return d == o.d && values == o.values; }
  bool is_nonneg() const;
};

struct BasisMatrix {
  std::vector<F2Vector> order;
  std::vector<std::vector<long>> entries; // entries[row][col], both in `order`
};

VFunction psi(int d, const F2Vector& x);
VFunction Psi(const IntervalSet& b);
VFunction indicator(const F2Subspace& s);
VFunction theta_map(int d, int i, const VFunction& fp);

BasisMatrix membership_matrix(const EpsTable& table);
BasisMatrix change_of_basis(const EpsTable& table);
BasisMatrix membership_matrix(int d);
BasisMatrix change_of_basis(int d);

// exact inverse of an integer matrix by fraction-free elimination;
// throws if the inverse is not integral
std::vector<std::vector<long>> integer_inverse(const std::vector<std::vector<long>>& m);
std::vector<std::vector<long>> multiply(const std::vector<std::vector<long>>& a,
                                        const std::vector<std::vector<long>>& b);

// nonzero entries only on or below the diagonal (in the given order) and
// the diagonal is all ones; `le` decides the order between two indices
bool is_unitriangular(const BasisMatrix& m, const EpsTable& table);

std::map<F2Vector, F2Subspace> e_bijection(int d);

// the relation x' in E(x), x' != x, has no directed cycle
bool membership_acyclic(const std::vector<F2Vector>& points, const std::vector<F2Subspace>& spaces);

VFunction symplectic_fourier(const VFunction& f);

// one printed row "<2,123>:(0,2,13,[123])"
struct TextRow {
  std::string set;
  std::vector<std::string> members;
  std::string boxed;
};

std::vector<TextRow> parse_table_text(const std::string& text);
std::string format_row(const TextRow& row);

struct TableRow {
  IntervalSet set;
  std::vector<F2Vector> members; // boxed entry excluded
  F2Vector boxed;
};

std::vector<TableRow> table_rows(int d);
std::string render_row(const TableRow& row);
std::string render_table(int d);

// rows laid out in the order and spelling of a reference text; content is
// always the computed one
std::string render_table_like(int d, const std::string& reference);

// shared layout step; `same` decides when a printed token names a computed
// member, `spell` prints members that have no printed counterpart
std::string render_rows_like(int d, const std::vector<TableRow>& rows, const std::string& reference,
                             const std::function<bool(const F2Vector&, const F2Vector&)>& same,
                             const std::function<std::string(const F2Vector&)>& spell);

} // namespace newbasis

#endif
