#include "commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "newbasis/basis_even.hpp"
#include "newbasis/fixtures.hpp"
#include "newbasis/intervals.hpp"
#include "newbasis/mspace.hpp"
#include "newbasis/odd_variant.hpp"

namespace newbasis::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string coeff_string(const Cyclo& c)
{
  return c.is_rational() ? to_string(c.as_rational()) : c.str();
}

json terms_json(const MVector& v)
{
  json terms = json::array();
  for (std::size_t k = v.size(); k-- > 0;)
    if (!v[k].is_zero()) terms.push_back({{"pair", v.space().label(k)}, {"coeff", coeff_string(v[k])}});
  return terms;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("format " + format + " is not available for this command");
}

std::string table_fixture_name(int d)
{
  return (d % 2 == 0 ? "sd" : "odd") + std::to_string(d);
}

// ---------------------------------------------------------------- sd-*

int cmd_sd_enum(int d, int m, const std::string& format, std::ostream& out)
{
  if (d < 0) throw UsageError("--d must be nonnegative");
  auto sets = d % 2 == 0 ? enumerate_S(d) : enumerate_S_odd(d);
  std::vector<IntervalSet> keep;
  for (const auto& b : sets)
    if (m < 0 || b.count_part(0) == m) keep.push_back(b);
  if (format == "json") {
    json j{{"d", d}, {"count", keep.size()}, {"sets", json::array()}};
    if (m >= 0) j["m"] = m;
    for (const auto& b : keep) j["sets"].push_back(render(b));
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "set,m\n";
    for (const auto& b : keep) out << render(b) << "," << b.count_part(0) << "\n";
  } else {
    for (const auto& b : keep) out << render(b) << "\n";
  }
  return ok;
}

std::string table_text(int d, bool odd)
{
  std::string ref;
  try {
    ref = table_fixture(table_fixture_name(d));
  } catch (const FixtureError&) {
    return odd ? render_table_odd(d) : render_table(d);
  }
  return odd ? render_table_odd_like(d, ref) : render_table_like(d, ref);
}

int cmd_sd_table(int d, bool odd, const std::string& format, std::ostream& out)
{
  if (odd ? (d < 1 || d % 2 == 0) : (d < 0 || d % 2 != 0))
    throw UsageError(odd ? "sd-odd-table needs an odd --d" : "sd-table needs an even --d");
  std::string text = table_text(d, odd);
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : parse_table_text(text)) {
      json span = r.members;
      span.push_back(r.boxed);
      rows.push_back({{"set", r.set}, {"span", span}, {"boxed", r.boxed}});
    }
    out << json{{"rows", rows}}.dump(2) << "\n";
  } else {
    require_format(format, {"text"});
    out << text;
  }
  return ok;
}

int cmd_sd_matrix(int d, const std::string& kind, const std::string& format, std::ostream& out)
{
  if (d < 2 || d % 2 != 0) throw UsageError("sd-matrix needs an even --d >= 2");
  BasisMatrix m = kind == "inverse" ? change_of_basis(d) : membership_matrix(d);
  if (kind != "inverse" && kind != "membership") throw UsageError("--kind must be membership or inverse");
  std::vector<std::string> labels;
  for (const auto& x : m.order) labels.push_back(render(x));
  if (format == "json") {
    out << json{{"d", d}, {"kind", kind}, {"order", labels}, {"entries", m.entries}}.dump() << "\n";
    return ok;
  }
  std::string sep = format == "csv" ? "," : " ";
  if (format == "csv") {
    for (const auto& l : labels) out << sep << l;
    out << "\n";
  } else {
    require_format(format, {"text"});
  }
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (format == "csv") out << labels[r] << sep;
    for (std::size_t c = 0; c < labels.size(); ++c) out << (c ? sep : "") << m.entries[r][c];
    out << "\n";
  }
  return ok;
}

// ---------------------------------------------------------------- mg-*

int cmd_mg_fourier(const std::string& group, const std::string& vector, const std::string& format, std::ostream& out)
{
  const MSpace& s = mspace(group);
  if (!vector.empty()) {
    MVector v = s.parse(vector);
    MVector a = s.fourier(v);
    if (format == "json")
      out << json{{"group", group}, {"input", terms_json(v)}, {"fourier", terms_json(a)}}.dump(2) << "\n";
    else
      out << a.str() << "\n";
    return ok;
  }
  const auto& a = s.fourier_matrix();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.size(); ++i) labels.push_back(s.label(i));
  if (format == "json") {
    json m = json::array();
    for (const auto& row : a) {
      json r = json::array();
      for (const auto& c : row) r.push_back(coeff_string(c));
      m.push_back(r);
    }
    out << json{{"group", group}, {"pairs", labels}, {"matrix", m}}.dump() << "\n";
  } else if (format == "csv") {
    out << "pair";
    for (const auto& l : labels) out << ",\"" << l << "\"";
    out << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << "\"" << labels[i] << "\"";
      for (const auto& c : a[i]) out << "," << coeff_string(c);
      out << "\n";
    }
  } else {
    require_format(format, {"text"});
    for (std::size_t i = 0; i < s.size(); ++i) out << "A" << labels[i] << " = " << s.fourier(s.basis(i)).str() << "\n";
  }
  return ok;
}

int cmd_mg_lambda(const std::string& name, const std::string& format, std::ostream& out)
{
  std::vector<std::string> names = name.empty() ? lambda_names() : std::vector<std::string>{name};
  json arr = json::array();
  for (const auto& n : names) {
    MVector v = lambda(n);
    bool fixed = v.space().fourier(v) == v;
    bool bip = is_bipositive(v);
    if (format == "json") {
      arr.push_back({{"name", n}, {"group", v.space().group().name()}, {"terms", terms_json(v)}, {"fixed", fixed},
                     {"bipositive", bip}});
    } else {
      require_format(format, {"text"});
      out << n << " in M(" << v.space().group().name() << ") = " << v.str() << (fixed ? "  [A-fixed]" : "")
          << (bip ? "  [bipositive]" : "  [not bipositive]") << "\n";
    }
  }
  if (format == "json") out << arr.dump(2) << "\n";
  return ok;
}

// ---------------------------------------------------------------- exc

int cmd_exc(const std::string& case_name, const std::string& emit, const std::string& format, std::ostream& out,
            std::ostream& err)
{
  ExceptionalCase c = build_exceptional_basis(case_name);
  if (emit == "json") {
    json els = json::array();
    for (const auto& e : c.elements)
      els.push_back({{"label", e.label}, {"recipe", e.recipe}, {"terms", terms_json(e.value)}});
    out << json{{"case", c.id}, {"group", c.group}, {"elements", els}}.dump(2) << "\n";
    return ok;
  }
  if (emit == "matrix") {
    if (c.group != "S4" && c.group != "S5") throw UsageError("--emit matrix needs case vi (F4) or vii (E8)");
    PrintedMatrix printed = printed_matrix(c.group);
    std::vector<std::vector<long>> m;
    try {
      m = restricted_matrix(c, printed.m0);
    } catch (const std::invalid_argument& e) {
      err << "exc: " << e.what() << "\n";
      return verification_failed;
    }
    std::string sep = format == "csv" ? "," : " ";
    if (format == "csv") {
      for (const auto& l : printed.m0) out << ",\"" << l << "\"";
      out << "\n";
    } else {
      require_format(format, {"text"});
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (format == "csv") out << "\"" << printed.m0[r] << "\",";
      for (std::size_t k = 0; k < m[r].size(); ++k) out << (k ? sep : "") << m[r][k];
      out << "\n";
    }
    return ok;
  }
  if (emit != "list") throw UsageError("--emit must be list, matrix or json");
  for (const auto& e : c.elements) out << "hat" << e.label << " = " << e.recipe << " = " << e.value.str() << "\n";
  return ok;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Suite = std::function<void(int max_d, std::vector<Check>&)>;

long binomial(long n, long k)
{
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void suite_enum(int max_d, std::vector<Check>& out)
{
  for (int d = 0; d <= max_d; ++d) {
    std::size_t n = d % 2 == 0 ? enumerate_S(d).size() : enumerate_S_odd(d).size();
    std::size_t want = std::size_t{1} << (d % 2 == 0 ? d : d - 1);
    out.push_back({"enum d=" + std::to_string(d), n == want, std::to_string(n) + " sets"});
  }
}

void suite_axioms(int max_d, std::vector<Check>& out)
{
  for (int d = 0; d <= max_d; d += 2) {
    std::string bad;
    for (const auto& b : enumerate_S(d))
      if (!check_axioms(b).ok()) bad = render(b);
    out.push_back({"axioms d=" + std::to_string(d), bad.empty(), bad.empty() ? "" : "violated by " + bad});
  }
}

void suite_counts(int max_d, std::vector<Check>& out)
{
  for (int d = 0; d <= max_d; d += 2) {
    auto c = count_by_m(d);
    bool pass = true;
    for (int m = 0; m <= d / 2; ++m)
      if (m >= static_cast<int>(c.size()) || c[m] != binomial(d + 1, d / 2 - m)) pass = false;
    out.push_back({"counts d=" + std::to_string(d), pass, ""});
  }
}

void suite_triangular(int max_d, std::vector<Check>& out)
{
  for (int d = 2; d <= max_d; d += 2) {
    EpsTable table(d);
    BasisMatrix dm = membership_matrix(table);
    BasisMatrix cm = change_of_basis(table);
    auto prod = multiply(cm.entries, dm.entries);
    bool identity = true;
    for (std::size_t r = 0; r < prod.size(); ++r)
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (prod[r][k] != (r == k ? 1 : 0)) identity = false;
    bool pass = identity && is_unitriangular(dm, table) && is_unitriangular(cm, table);
    out.push_back({"triangular d=" + std::to_string(d), pass, ""});
  }
  for (int d = 1; d <= max_d; d += 2)
    out.push_back({"acyclic odd d=" + std::to_string(d), e_bijection_odd(d).unique, ""});
}

void suite_bipositive(int max_d, std::vector<Check>& out)
{
  for (int d = 0; d <= max_d; d += 2) {
    std::string bad;
    for (const auto& b : enumerate_S(d)) {
      VFunction f = Psi(b);
      if (!f.is_nonneg() || !symplectic_fourier(f).is_nonneg()) bad = render(b);
    }
    out.push_back({"bipositive Psi d=" + std::to_string(d), bad.empty(), bad});
  }
}

void suite_fourier(int, std::vector<Check>& out)
{
  for (std::string g : {"S1", "S2", "S3", "S4", "S5", "S2xS2", "S3xS2", "D10"}) {
    const MSpace& s = mspace(g);
    bool pass = true;
    for (std::size_t i = 0; i < s.size() && pass; ++i) {
      MVector e = s.basis(i);
      pass = s.fourier(s.fourier(e)) == e;
    }
    out.push_back({"A^2 = 1 on M(" + g + ")", pass, ""});
  }
}

void suite_commutation(int, std::vector<Check>& out)
{
  std::set<std::string> seen;
  for (std::string id : {"ii", "iv", "vi", "vii"})
    for (const auto& step : ss_steps(id)) {
      std::string key = step.gamma + ":" + step.h + ":" + step.hp;
      if (!seen.insert(key).second) continue;
      QuotientMap q = make_quotient(step.h, step.hp, step.q, step.lifts);
      const MSpace& gamma = mspace(step.gamma);
      bool pass = true;
      for (std::size_t j = 0; j < q.hp->size() && pass; ++j) {
        MVector e = q.hp->basis(j);
        pass = i_map(*q.hp, gamma, q.hp->fourier(e)) == gamma.fourier(i_map(*q.hp, gamma, e));
      }
      for (std::size_t j = 0; j < q.q->size() && pass; ++j) {
        MVector e = q.q->basis(j);
        pass = p_map(q, q.q->fourier(e)) == q.hp->fourier(p_map(q, e));
      }
      out.push_back({"commutation " + step.h + " < " + step.hp + " < " + step.gamma, pass, ""});
    }
}

void suite_tables(int, std::vector<Check>& out)
{
  for (int d : {2, 4, 6, 3, 5, 7}) {
    std::string ref = table_fixture(table_fixture_name(d));
    std::string got = d % 2 == 0 ? render_table_like(d, ref) : render_table_odd_like(d, ref);
    std::string detail;
    if (got != ref) {
      std::istringstream a(got), b(ref);
      std::string la, lb;
      while (std::getline(a, la) && std::getline(b, lb))
        if (la != lb) {
          detail = "computed " + la + " printed " + lb;
          break;
        }
    }
    out.push_back({"table " + table_fixture_name(d), got == ref, detail});
  }
}

void suite_expansions(int, std::vector<Check>& out)
{
  std::map<std::string, ExceptionalCase> cases;
  for (const auto& p : printed_expansions())
    for (const auto& id : p.cases) {
      if (!cases.count(id)) cases[id] = build_exceptional_basis(id);
      const auto& c = cases[id];
      auto it = std::find_if(c.elements.begin(), c.elements.end(), [&](const BasisElement& e) { return e.label == p.label; });
      if (it == c.elements.end()) {
        out.push_back({"case " + id + " hat" + p.label, false, "no such element"});
        continue;
      }
      MVector printed = printed_value(c.group, p.rhs);
      bool pass = printed == it->value;
      out.push_back({"case " + id + " hat" + p.label, pass, pass ? "" : "computed " + it->value.str()});
    }
}

void suite_matrices(int, std::vector<Check>& out)
{
  for (std::string id : {"vi", "vii"}) {
    ExceptionalCase c = build_exceptional_basis(id);
    PrintedMatrix m = printed_matrix(c.group);
    bool pass = false;
    std::string detail;
    try {
      pass = restricted_matrix(c, m.m0) == m.rows;
    } catch (const std::invalid_argument& e) {
      detail = e.what();
    }
    out.push_back({"matrix " + c.group, pass, detail});
  }
}

void suite_properties(int, std::vector<Check>& out)
{
  for (std::string id : {"i", "ii", "iii", "iv", "v", "vi", "vii"}) {
    PropertyReport r = check_properties(build_exceptional_basis(id));
    std::string detail;
    for (const auto& w : r.witnesses) detail += (detail.empty() ? "" : "; ") + w;
    out.push_back({"properties I-IV case " + id, r.ok(), detail});
  }
}

const std::map<std::string, Suite>& suites()
{
  static const std::map<std::string, Suite> s = {
      {"enum", suite_enum},           {"axioms", suite_axioms},         {"counts", suite_counts},
      {"triangular", suite_triangular}, {"bipositive", suite_bipositive}, {"fourier", suite_fourier},
      {"commutation", suite_commutation}, {"tables", suite_tables},     {"expansions", suite_expansions},
      {"matrices", suite_matrices},   {"properties", suite_properties}};
  return s;
}

const std::vector<std::string> invariant_suites = {"enum",     "axioms",  "counts",     "triangular",
                                                   "bipositive", "fourier", "commutation"};
const std::vector<std::string> printed_suites = {"tables", "expansions", "matrices", "properties"};

int cmd_verify(const std::string& suite, int max_d, const std::string& format, std::ostream& out)
{
  if (max_d < 0 || max_d > 10) throw UsageError("--max-d must be in 0..10");
  std::vector<std::string> names;
  if (suite == "all" || suite == "invariants")
    names = invariant_suites;
  else if (suite == "printed")
    names = printed_suites;
  else if (suites().count(suite))
    names = {suite};
  else
    throw UsageError("unknown suite " + suite);
  std::vector<Check> checks;
  for (const auto& n : names) suites().at(n)(max_d, checks);
  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << json{{"suite", suite}, {"pass", all}, {"checks", arr}}.dump(2) << "\n";
  } else {
    require_format(format, {"text"});
    for (const auto& c : checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return all ? ok : verification_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"newbasis: interval sets, F2 models and Fourier calculus on M(Gamma)"};
  app.require_subcommand(1);
  std::string format = "text";
  int d = -1;
  int m = -1;

  auto* sd_enum = app.add_subcommand("sd-enum", "list the interval sets S_D");
  sd_enum->add_option("--d", d, "ambient size D")->required();
  sd_enum->add_option("--m", m, "keep sets with |B^0| = m");
  sd_enum->add_option("--format", format, "text|json|csv");

  auto* sd_table = app.add_subcommand("sd-table", "the table of S_D, <B> and e for even D");
  sd_table->add_option("--d", d, "even D")->required();
  sd_table->add_option("--format", format, "text|json");

  auto* sd_odd = app.add_subcommand("sd-odd-table", "the table for odd D");
  sd_odd->add_option("--d", d, "odd D")->required();
  sd_odd->add_option("--format", format, "text|json");

  std::string kind = "membership";
  auto* sd_matrix = app.add_subcommand("sd-matrix", "membership matrix d or its inverse c");
  sd_matrix->add_option("--d", d, "even D")->required();
  sd_matrix->add_option("--kind", kind, "membership|inverse");
  sd_matrix->add_option("--format", format, "text|csv|json");

  std::string group;
  std::string vector;
  auto* mg_fourier = app.add_subcommand("mg-fourier", "non-abelian Fourier transform on M(Gamma)");
  mg_fourier->add_option("--group", group, "catalog group, e.g. S4, D10, S3xS2")->required();
  mg_fourier->add_option("--vector", vector, "apply A to this element, e.g. \"(g2,eps)+(1,1)\"");
  mg_fourier->add_option("--format", format, "text|csv|json");

  std::string name;
  auto* mg_lambda = app.add_subcommand("mg-lambda", "the Lambda elements");
  mg_lambda->add_option("--name", name, "one element, e.g. \"Lambda'(zeta1,zeta2)\"");
  mg_lambda->add_option("--format", format, "text|json");

  std::string case_name;
  std::string emit = "list";
  auto* exc = app.add_subcommand("exc", "the new basis for an exceptional case");
  exc->add_option("--case", case_name, "i..vii, or G2, F4, E8")->required();
  exc->add_option("--emit", emit, "list|matrix|json");
  exc->add_option("--format", format, "text|csv (for --emit matrix)");

  std::string suite = "all";
  int max_d = 6;
  auto* verify = app.add_subcommand("verify", "run checks; exit 1 on any failure");
  verify->add_option("--suite", suite, "all|invariants|printed|<suite name>");
  verify->add_option("--max-d", max_d, "largest D for the interval suites");
  verify->add_option("--format", format, "text|json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return usage_error;
  }

  try {
    require_format(format, {"text", "json", "csv"});
    if (*sd_enum) return cmd_sd_enum(d, m, format, out);
    if (*sd_table) return cmd_sd_table(d, false, format, out);
    if (*sd_odd) return cmd_sd_table(d, true, format, out);
    if (*sd_matrix) return cmd_sd_matrix(d, kind, format, out);
    if (*mg_fourier) return cmd_mg_fourier(group, vector, format, out);
    if (*mg_lambda) return cmd_mg_lambda(name, format, out);
    if (*exc) return cmd_exc(case_name, emit, format, out, err);
    if (*verify) return cmd_verify(suite, max_d, format, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return usage_error;
  } catch (const GroupError& e) {
    err << e.what() << "\n";
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return usage_error;
  } catch (const ContractError& e) {
    err << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

} // namespace newbasis::cli
