#ifndef NEWBASIS_GROUPREP_HPP
#define NEWBASIS_GROUPREP_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "newbasis/exactnum.hpp"

namespace newbasis {

class GroupError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// images of 0..n-1
using Perm = std::vector<int>;

Perm identity_perm(int n);
// (p*q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// 1-based cycle notation, e.g. cycles(5, {{1,2,3},{4,5}})
Perm cycles(int n, const std::vector<std::vector<int>>& cs);
int perm_order(const Perm& p);
// "(1,2,3)(4,5)", "()" for the identity
std::string cycle_string(const Perm& p);
// p on [0,n1) and q on [n1,n1+n2)
Perm direct_sum(const Perm& p, const Perm& q);

struct ConjClass {
  int rep = 0;                 // element index
  std::vector<int> members;    // element indices, sorted
  std::string label;
};

class CharTable;

class PermGroup {
public:
  PermGroup() = default;
  // closure of the generators
  PermGroup(std::string name, int degree, const std::vector<Perm>& gens);
  static PermGroup from_elements(std::string name, std::vector<Perm> elements);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_.at(i); }
  const std::vector<Perm>& generators() const { return gens_; }
  int index(const Perm& p) const; // throws if p is not in the group
  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return table_[i * size() + j]; }
  int inv(int i) const { return inverse_[i]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(int i) const { return class_of_[i]; }
  // some g with g x g^-1 = rep of the class of x
  int conjugator(int i) const { return conjugator_[i]; }
  // put the classes in the order of the given representatives and name them
  void set_classes(const std::vector<Perm>& reps, const std::vector<std::string>& labels);
  int class_by_label(const std::string& label) const;
  int power_class(int cls, long k) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool is_normal_in(const PermGroup& g) const;
  std::vector<Perm> centralizer_elements(const Perm& x) const;

  const CharTable& char_table() const;
  // names for the rows of the character table
  void set_irreducible_labels(std::vector<std::string> labels) const;
  // centralizer of the class representative, built once
  const PermGroup& centralizer(int cls) const;

private:
  void build(std::vector<Perm> elements);
  void build_classes();

  std::string name_;
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> conjugator_;
  mutable std::shared_ptr<CharTable> table_cache_;
  mutable std::vector<std::shared_ptr<PermGroup>> cent_cache_;
};

// complex characters, one row per irreducible, columns by class
class CharTable {
public:
  explicit CharTable(const PermGroup& g);
  int size() const { return static_cast<int>(chars_.size()); }
  const Cyclo& value(int chi, int cls) const { return chars_.at(chi).at(cls); }
  const std::vector<Cyclo>& row(int chi) const { return chars_.at(chi); }
  long degree(int chi) const;
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  int by_label(const std::string& label) const;

private:
  std::vector<std::vector<Cyclo>> chars_;
  std::vector<std::string> labels_;
};

// class function as values on the classes of g
using ClassFunction = std::vector<Cyclo>;

ClassFunction character(const PermGroup& g, int chi);
// exact orthogonality and sum of squared degrees
bool validate_table(const PermGroup& g);
// Frobenius formula; h must be a subgroup of g
ClassFunction induce(const PermGroup& h, const ClassFunction& chi, const PermGroup& g);
ClassFunction restrict(const PermGroup& g, const ClassFunction& chi, const PermGroup& h);
Cyclo inner_product(const PermGroup& g, const ClassFunction& a, const ClassFunction& b);
// multiplicity of an irreducible; throws when not a nonnegative integer
long multiplicity(const PermGroup& g, const ClassFunction& chi, int irr);

// catalog: "S1".."S5", "S2xS2", "S3xS2", "D10", and named subgroups
// "H31@S4", "tH22@S4", "H2111@S5", ... . Irreducibles of S_N and of the
// centralizers of class representatives carry the usual names.
const PermGroup& catalog(const std::string& name);
std::vector<std::string> catalog_names();
// standard generators used for isomorphisms onto quotients
const std::vector<Perm>& standard_generators(const std::string& name);

// the subgroup generated by gens, labelled generically
PermGroup subgroup(const std::string& name, int degree, const std::vector<Perm>& gens);

} // namespace newbasis

#endif
