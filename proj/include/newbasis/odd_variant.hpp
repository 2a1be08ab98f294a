#ifndef NEWBASIS_ODD_VARIANT_HPP
#define NEWBASIS_ODD_VARIANT_HPP

#include <map>
#include <string>
#include <vector>

#include "newbasis/basis_even.hpp"
#include "newbasis/f2sym.hpp"
#include "newbasis/intervals.hpp"

namespace newbasis {

// e_1 + e_3 + ... + e_D, d odd
F2Vector zeta_vector(int d);

// coset x + F2 zeta in V/F2 zeta; the representative has the e_D bit clear
struct QuotientVector {
  int d = 0;
  F2Vector rep;

  static QuotientVector of(const F2Vector& x);
  bool operator==(const QuotientVector&) const = default;
  auto operator<=>(const QuotientVector&) const = default;
};

std::vector<IntervalSet> primitive_sets_odd(int d);
std::vector<IntervalSet> enumerate_S_odd(int d);

// preimage of pi(<B>) in V, i.e. <B> + F2 zeta
F2Subspace alpha(const IntervalSet& b);
// pi restricted to <B> is injective
bool alpha_injective(const IntervalSet& b);

struct OddBijection {
  int d = 0;
  std::vector<IntervalSet> sets;                 // S_D
  std::vector<F2Subspace> spaces;                // alpha of each set
  std::map<QuotientVector, std::size_t> e;       // x -> index into sets
  bool unique = false;                           // acyclic membership relation
};

// the bijection e: V/F2 zeta -> F(V) with x in e(x), by perfect matching
OddBijection e_bijection_odd(int d);

// alpha^{-1} e ebar^{-1} alphabar : S_{D-1} -> S_D
std::map<IntervalSet, IntervalSet> compare_bijection(int d);

std::vector<TableRow> table_rows_odd(int d);
std::string render_table_odd(int d);
std::string render_table_odd_like(int d, const std::string& reference);

} // namespace newbasis

#endif
