#include "newbasis/fixtures.hpp"

#include <fstream>
#include <sstream>

namespace newbasis {

namespace {

std::string trim(const std::string& s)
{
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(trim(part));
  return out;
}

// non-comment, non-empty lines
std::vector<std::string> data_lines(const std::string& relative_path)
{
  std::vector<std::string> out;
  std::stringstream in(read_fixture(relative_path));
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

} // namespace

std::string data_dir()
{
  return NEWBASIS_DATA_DIR;
}

std::string read_fixture(const std::string& relative_path)
{
  std::string path = data_dir() + "/" + relative_path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot open fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string table_fixture(const std::string& name)
{
  return read_fixture("tables/" + name + ".txt");
}

std::vector<PrintedExpansion> printed_expansions()
{
  std::vector<PrintedExpansion> out;
  for (const auto& line : data_lines("exceptional/expansions.txt")) {
    auto f = split(line, '|');
    if (f.size() != 3) throw FixtureError("expansions.txt: bad line " + line);
    out.push_back({split(f[0], ','), f[1], f[2]});
  }
  return out;
}

std::vector<PrintedLambda> printed_lambdas()
{
  std::vector<PrintedLambda> out;
  for (const auto& line : data_lines("exceptional/lambdas.txt")) {
    auto f = split(line, '|');
    if (f.size() != 3) throw FixtureError("lambdas.txt: bad line " + line);
    out.push_back({f[0], f[1], f[2]});
  }
  return out;
}

PrintedMatrix printed_matrix(const std::string& group)
{
  std::string file = group == "S4" ? "exceptional/matrix_s4.txt"
                     : group == "S5" ? "exceptional/matrix_s5.txt"
                                     : throw FixtureError("no printed matrix for " + group);
  PrintedMatrix m;
  for (const auto& line : data_lines(file)) {
    std::stringstream in(line);
    std::string tok;
    if (line.rfind("M0", 0) == 0) {
      in >> tok;
      while (in >> tok) m.m0.push_back(tok);
      continue;
    }
    std::vector<long> row;
    long v;
    while (in >> v) row.push_back(v);
    m.rows.push_back(row);
  }
  if (m.m0.empty() || m.rows.size() != m.m0.size()) throw FixtureError(file + ": malformed matrix");
  for (const auto& r : m.rows)
    if (r.size() != m.m0.size()) throw FixtureError(file + ": ragged row");
  return m;
}

MVector printed_value(const std::string& group, const std::string& rhs)
{
  if (rhs.rfind("Lambda", 0) == 0) {
    for (const auto& l : printed_lambdas())
      if (l.name == rhs) {
        if (l.group != group) throw FixtureError(rhs + " lives in M(" + l.group + "), not M(" + group + ")");
        return mspace(group).parse(l.rhs);
      }
    throw FixtureError("no displayed value for " + rhs);
  }
  return mspace(group).parse(rhs);
}

} // namespace newbasis
