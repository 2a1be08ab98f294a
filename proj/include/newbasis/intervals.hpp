#ifndef NEWBASIS_INTERVALS_HPP
#define NEWBASIS_INTERVALS_HPP

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace newbasis {

class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// [a,b] inside [1,D], 1-based
struct Interval {
  int a = 1;
  int b = 1;

  int size() const { return b - a + 1; }
  bool contains(int i) const { return a <= i && i <= b; }
  bool contains(const Interval& o) const { return a <= o.a && o.b <= b; }
  bool odd() const { return size() % 2 == 1; }
  auto operator<=>(const Interval&) const = default;
};

class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(int d) : d_(d) {}
  IntervalSet(int d, std::vector<Interval> items);

  int d() const { return d_; }
  const std::vector<Interval>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(const Interval& iv) const;

  void insert(const Interval& iv);
  void erase(const Interval& iv);

  // B^h: members whose length is congruent to h mod 2
  std::vector<Interval> part(int h) const;
  int count_part(int h) const;

  auto operator<=>(const IntervalSet&) const = default;

private:
  int d_ = 0;
  std::vector<Interval> items_;
};

struct HSequence {
  int k = 0;
  std::vector<int> h;
};

struct AxiomReport {
  bool p0 = false;
  bool p1 = false;
  bool p2 = false;
  bool ok() const { return p0 && p1 && p2; }
};

struct FEps {
  std::vector<int> f;
  std::vector<int> eps;
};

bool is_prec(const Interval& i1, const Interval& i2);
bool is_nontouching(const Interval& i1, const Interval& i2);

std::set<int> xcal(const IntervalSet& b, int a, int bnd);

Interval xi(int d, int i, const Interval& iv);
IntervalSet t_map(int d, int i, const IntervalSet& bprime);

std::vector<IntervalSet> primitive_sets(int d);
std::vector<IntervalSet> enumerate_S(int d);

AxiomReport check_axioms(const IntervalSet& b);
HSequence h_sequence(const IntervalSet& b);

IntervalSet tau(const IntervalSet& b);
FEps f_eps(const IntervalSet& b);

// C = B[i]; requires {i} in b
IntervalSet move(const IntervalSet& b, int i);
// which of the cases (i)..(viii) applies, as 1..8
int move_case(const IntervalSet& b, int i);

std::vector<long> count_by_m(int d);
std::map<IntervalSet, IntervalSet> odd_part_map(int d);

// B' with t_i(B') = B, for {i} in B
IntervalSet t_inverse(const IntervalSet& b, int i);

// "<2,123>" style; "∅" for the empty set
std::string render(const IntervalSet& b);
std::string render(const Interval& iv);
IntervalSet parse_interval_set(int d, const std::string& text);

} // namespace newbasis

#endif
