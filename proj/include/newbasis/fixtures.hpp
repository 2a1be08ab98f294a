#ifndef NEWBASIS_FIXTURES_HPP
#define NEWBASIS_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "newbasis/mspace.hpp"

namespace newbasis {

class FixtureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// directory holding the committed data files
std::string data_dir();
std::string read_fixture(const std::string& relative_path);

// "sd2" .. "sd6", "odd3" .. "odd7"
std::string table_fixture(const std::string& name);

struct PrintedExpansion {
  std::vector<std::string> cases;
  std::string label;
  std::string rhs;
};
std::vector<PrintedExpansion> printed_expansions();

struct PrintedLambda {
  std::string name;
  std::string group;
  std::string rhs;
};
std::vector<PrintedLambda> printed_lambdas();

struct PrintedMatrix {
  std::vector<std::string> m0;
  std::vector<std::vector<long>> rows;
};
// "S4" or "S5"
PrintedMatrix printed_matrix(const std::string& group);

// a printed right-hand side as a vector; a bare Lambda name stands for its display
MVector printed_value(const std::string& group, const std::string& rhs);

} // namespace newbasis

#endif
