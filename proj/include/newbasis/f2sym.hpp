#ifndef NEWBASIS_F2SYM_HPP
#define NEWBASIS_F2SYM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "newbasis/intervals.hpp"

namespace newbasis {

// bit i-1 holds the coefficient of e_i
struct F2Vector {
  int d = 0;
  std::uint64_t bits = 0;

  bool operator==(const F2Vector&) const = default;
  auto operator<=>(const F2Vector&) const = default;
  F2Vector operator+(const F2Vector& o) const;
  bool test(int i) const { return (bits >> (i - 1)) & 1U; }
};

class F2Subspace {
public:
  F2Subspace() = default;
  explicit F2Subspace(int d) : d_(d) {}
  F2Subspace(int d, const std::vector<F2Vector>& gens);

  int d() const { return d_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool contains(const F2Vector& x) const;
  // returns false when x already lies in the span
  bool add(const F2Vector& x);
  std::vector<F2Vector> members() const;
  bool is_isotropic() const;

  bool operator==(const F2Subspace&) const = default;
  auto operator<=>(const F2Subspace&) const = default;

private:
  std::uint64_t reduce(std::uint64_t x) const;
  int d_ = 0;
  std::vector<std::uint64_t> rows_; // reduced row echelon, sorted by pivot descending
};

F2Vector unit(int d, int i);
int pairing(const F2Vector& x, const F2Vector& y);
F2Vector e_of_interval(int d, const Interval& iv);
F2Vector T_map(int d, int i, const F2Vector& xp);

F2Vector eps_vector(const IntervalSet& b);
F2Subspace span(const IntervalSet& b);

std::vector<Interval> decompose(const F2Vector& x);
int u_stat(const F2Vector& x);
int utilde(const F2Vector& x);
bool in_V_s(const F2Vector& x, int s);
bool graph_adjacent(const F2Vector& x, const F2Vector& y);
// component id for every vector of V, indexed by bits
std::vector<int> components(int d);

// "1235" for e1+e2+e3+e5, "0" for zero
std::string render(const F2Vector& x);
F2Vector parse_vector(int d, const std::string& text);
// "101100", e_1 leftmost
std::string bit_string(const F2Vector& x);

// epsilon^{-1} for even d, with the order of the interval sets
class EpsTable {
public:
  explicit EpsTable(int d);

  int d() const { return d_; }
  const IntervalSet& preimage(const F2Vector& x) const;
  const FEps& stats(const F2Vector& x) const;
  bool le(const F2Vector& x, const F2Vector& y) const;
  int nu(const F2Vector& x) const;
  // all of V in a linear extension of the order
  const std::vector<F2Vector>& linear_order() const { return order_; }

private:
  int d_;
  std::vector<IntervalSet> pre_;
  std::vector<FEps> stats_;
  std::vector<int> nu_;
  std::vector<F2Vector> order_;
};

bool order_le(const IntervalSet& b1, const IntervalSet& b2);

} // namespace newbasis

#endif
