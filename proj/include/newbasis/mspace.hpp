#ifndef NEWBASIS_MSPACE_HPP
#define NEWBASIS_MSPACE_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "newbasis/exactnum.hpp"
#include "newbasis/grouprep.hpp"

namespace newbasis {

// (x, sigma): class of x in the group, irreducible of the centralizer of its representative
struct MPair {
  int cls = 0;
  int irr = 0;
};

class MSpace;

class MVector {
public:
  MVector() = default;
  explicit MVector(const MSpace& space);

  const MSpace& space() const { return *space_; }
  std::size_t size() const { return coeffs_.size(); }
  const Cyclo& operator[](std::size_t i) const { return coeffs_.at(i); }
  Cyclo& operator[](std::size_t i) { return coeffs_.at(i); }
  const Cyclo& at(const std::string& label) const;

  MVector& operator+=(const MVector& o);
  MVector& operator-=(const MVector& o);
  MVector& operator*=(const Cyclo& c);
  friend MVector operator+(MVector a, const MVector& b) { return a += b; }
  friend MVector operator-(MVector a, const MVector& b) { return a -= b; }
  friend MVector operator*(const Cyclo& c, MVector a) { return a *= c; }
  friend bool operator==(const MVector& a, const MVector& b);

  bool is_zero() const;
  // indices with a nonzero coefficient
  std::vector<std::size_t> support() const;
  // "(g2,eps)+2(1,r)+(1,1)", terms in decreasing pair order
  std::string str() const;

private:
  void same_space(const MVector& o) const;
  const MSpace* space_ = nullptr;
  std::vector<Cyclo> coeffs_;
};

class MSpace {
public:
  explicit MSpace(const PermGroup& g);

  const PermGroup& group() const { return *group_; }
  std::size_t size() const { return pairs_.size(); }
  const MPair& pair(std::size_t i) const { return pairs_.at(i); }
  std::size_t index(int cls, int irr) const;
  std::size_t index(const std::string& label) const;
  std::string label(std::size_t i) const;
  const PermGroup& centralizer(int cls) const { return group_->centralizer(cls); }

  MVector zero() const { return MVector(*this); }
  MVector basis(std::size_t i) const;
  MVector basis(const std::string& label) const;
  // "(g2,eps)+2(1,r)-1/2(1,1)"
  MVector parse(const std::string& expr) const;

  // (x, rho) = sum of (sigma : rho)(x, sigma), x any element (index into the
  // group), rho a class function on Z(x) given pointwise
  MVector expand_pair(int x, const std::function<Cyclo(const Perm&)>& rho) const;

  // pairing matrix {(x,sigma),(y,tau)}, built once
  const std::vector<std::vector<Cyclo>>& fourier_matrix() const;
  MVector fourier(const MVector& f) const;

private:
  const PermGroup* group_;
  std::vector<MPair> pairs_;
  mutable std::mutex fourier_mu_;
  mutable std::shared_ptr<std::vector<std::vector<Cyclo>>> fourier_;
};

// the space of a catalog group, cached
const MSpace& mspace(const std::string& group_name);

// i_{H,G}
MVector i_map(const MSpace& h, const MSpace& g, const MVector& f);

// H normal in H', with H'/H identified with a standard group q through
// lifts of the standard generators of q
struct QuotientMap {
  const MSpace* hp = nullptr;
  const MSpace* q = nullptr;
  std::string h_name;
  std::vector<int> proj; // element of H' -> element of q
  int kernel_size = 0;
};

QuotientMap make_quotient(const std::string& h, const std::string& hp, const std::string& q,
                          const std::vector<Perm>& lifts);

// p_{H,H'}
MVector p_map(const QuotientMap& quot, const MVector& f);
// ss_{H,H'} = i_{H',G} p_{H,H'}
MVector ss_map(const MSpace& gamma, const QuotientMap& quot, const MVector& f);

// f1 (x) f2 in the space of the direct product
MVector tensor(const MVector& f1, const MVector& f2, const MSpace& product);

// coefficients nonnegative real; throws on a non-real coefficient
bool is_ge0(const MVector& f);
bool is_bipositive(const MVector& f);

// named elements: "Lambda(-1)", "Lambda'(theta)", "Lambda(theta2)", "Lambda(i)",
// "Lambda(-i)", "Lambda(zeta3)", "Lambda'(zeta1,zeta2)", "Lambda(-1,-1)",
// "Lambda(-1,1)", "Lambda(1,-1)", "Lambda(theta,-1)", "Lambda(theta2,1)", "(1,1)@S3"
MVector lambda(const std::string& name);
std::vector<std::string> lambda_names();
// Lambda'(zeta^l, zeta^2l) as displayed, in M(S5)
MVector lambda_prime_display(int l);
// sum over the D10 elements fixed by A, before ss_{1,D10}
MVector d10_fixed_vector(int l);

struct BasisElement {
  std::string label;   // the pair (x, sigma)
  std::string recipe;  // e.g. "ss_{1,H22}Lambda(-1,1)"
  MVector value;
};

struct ExceptionalCase {
  std::string id;          // "i" .. "vii"
  std::string group;       // Gamma_c
  std::vector<BasisElement> elements;
};

// case ids "i".."vii"; aliases "G2" -> iv, "F4" -> vi, "E8" -> vii
std::string normalize_case(const std::string& name);
ExceptionalCase build_exceptional_basis(const std::string& case_id);

struct PropertyReport {
  bool bipositive = true;       // (I)
  bool unit_diagonal = true;    // (II)
  bool partial_order = true;    // (III)
  bool unit_at_one = true;      // (IV)
  bool integral = true;
  std::vector<std::string> witnesses;
  bool ok() const { return bipositive && unit_diagonal && partial_order && unit_at_one && integral; }
};

// the ss data behind the elements of a case, including ss_{1,D10} for case vii
struct SsStep {
  std::string gamma;
  std::string h;
  std::string hp;
  std::string q;
  std::vector<Perm> lifts;
};
std::vector<SsStep> ss_steps(const std::string& case_id);

PropertyReport check_properties(const ExceptionalCase& c);

// the elements indexed by m0, as rows over m0; throws if some element has
// support outside m0
std::vector<std::vector<long>> restricted_matrix(const ExceptionalCase& c, const std::vector<std::string>& m0);

} // namespace newbasis

#endif
