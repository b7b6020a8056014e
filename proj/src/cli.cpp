#include "hilburch/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hilburch/cells.hpp"
#include "hilburch/errors.hpp"
#include "hilburch/gorenstein.hpp"
#include "hilburch/localstd.hpp"
#include "hilburch/parse.hpp"

namespace hilburch {

std::string render_matrix(const PolyMatrix& m) {
  std::string s;
  for (int i = 1; i <= m.rows(); ++i) {
    s += "[";
    for (int j = 1; j <= m.cols(); ++j) {
      if (j > 1) s += ", ";
      s += to_string(m.at(i, j));
    }
    s += "]\n";
  }
  return s;
}

std::string render_matrix(const Deformation& n) { return render_matrix(to_matrix(n)); }

nlohmann::json render_matrix_json(const Deformation& n) { return to_json(n); }

PolyMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows,
                            const Field& field) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  PolyMatrix m(r, c, field);
  for (int i = 1; i <= r; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != c)
      throw DomainError("ragged matrix rows");
    for (int j = 1; j <= c; ++j) m.at(i, j) = parse_poly(rows[i - 1][j - 1], field);
  }
  return m;
}

Deformation deformation_from_rows(const Staircase& e,
                                  const std::vector<std::vector<std::string>>& rows,
                                  const Field& field) {
  nlohmann::json j;
  j["staircase"] = {{"t", e.t()}, {"m", e.m()}};
  j["entries"] = rows;
  return deformation_from_json(j, field);
}

namespace {

Fixtures build_fixtures() {
  const Field q;
  Fixtures f;

  f.off_family.N.set(4, 3, parse_ypoly("1", q));
  f.off_family.expected_minors = {"x^3-x^2", "x^2y-xy", "xy^3-y^3", "y^5"};
  f.off_family.expected_H = matrix_from_rows({{"y", "0", "0"},
                                       {"-x", "y^2", "0"},
                                       {"0", "-x", "y^2"},
                                       {"0", "0", "-x"}},
                                      q);

  f.quartic.gens = "x^4+x^3*y; y^2+x^3+x^2*y";
  f.quartic.unreduced_basis = {"x^4+x^3*y", "x^3*y^2+y^5", "x^2*y^2", "x*y^2",
                                "y^2+x^3+x^2*y"};
  f.quartic.reduced_basis = {"x^4+x^3*y", "x^3*y^2", "x^2*y^2", "x*y^2",
                              "y^2+x^3+x^2*y"};

  f.truncated.N_bar = deformation_from_rows(f.quartic.expected_E,
                                            {{"0", "0", "0", "1"},
                                             {"-y-y^2-y^3", "y+y^2+y^3", "0", "0"},
                                             {"-y^3", "y^2+y^3", "0", "0"},
                                             {"y^3", "0", "0", "0"},
                                             {"0", "-y^3", "0", "0"}},
                                            q);
  f.truncated.expected_f0_bar =
      "x^4+x^3*y+y^4-x*y^4+y^5-x^2*y^4-x*y^5+y^6-x^2*y^5-x*y^6";

  f.shared_image.N_prime = deformation_from_rows(f.quartic.expected_E,
                                           {{"0", "0", "0", "1"},
                                            {"-y", "0", "0", "0"},
                                            {"0", "0", "0", "0"},
                                            {"0", "0", "0", "0"},
                                            {"0", "0", "0", "0"}},
                                           q);

  f.sextic.gens = "x^6; x*y^2-y^5; y^8";
  f.sextic.expected_canonical = matrix_from_rows({{"y^2", "0", "0", "0", "0", "0"},
                                                 {"-x", "1", "0", "0", "0", "0"},
                                                 {"0", "-x", "1", "0", "0", "0"},
                                                 {"0", "0", "-x", "1", "0", "0"},
                                                 {"0", "0", "0", "-x", "1", "0"},
                                                 {"0", "0", "0", "0", "-x", "y^6"},
                                                 {"0", "0", "0", "0", "0", "-x+y^3"}},
                                                q);
  f.sextic.first_moves = {{6, 5}, {7, 5}};

  f.lex_cell.expected_coordinates = {{3, 1, 0}, {4, 1, 0}, {3, 2, 1},
                                     {4, 2, 0}, {4, 2, 1}, {4, 3, 1}};
  f.diagonal.third_diagonal = {{3, 1, 0}, {4, 2, 0}};

  f.cover.target = "x^3-2x*y^2; x^2*y-2y^3; y^3";
  f.cover.expected_hf = {1, 2, 3, 1};
  f.cover.point = "1,0,0,1,0,0";
  f.cover.expected_generators = {"x^3-2xy^2", "x^2y-y^3"};

  f.hilb3.staircases = {Staircase({0, 3}), Staircase({0, 1, 2}), Staircase({0, 1, 1, 1})};
  f.hilb3.hilbert_functions = {{1, 1, 1}, {1, 2}, {1, 1, 1}};
  f.hilb3.cell_members = {"y-x^2; x^3", "y+1/2x^2; x^3", "y-3x^2; x^3",
                          "y+x^2; x^3"};
  return f;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string staircase, gens, field = "q", target, point, deformation;
  int cap = 0;
  bool json = false;
  std::uint64_t seed = 0;
  std::uint32_t prime = 0;
  std::uint64_t budget = 1000000;
  std::uint64_t samples = 10000;
  int bound = 5;
  int colength = 0;
};

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.rfind("p=", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(text.substr(2), &used);
      if (used != text.size() - 2) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
      throw UsageError("--field: expected q or p=NNN, got '" + text + "'");
    }
    try {
      return Field::prime(p);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  throw UsageError("--field: expected q or p=NNN, got '" + text + "'");
}

// Malformed flag values are usage errors.
template <class F>
auto flag_value(const char* flag, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require(const std::string& value, const char* flag, const char* command) {
  if (value.empty())
    throw UsageError(std::string(flag) + " is required for " + command);
}

Staircase staircase_flag(const Options& o, const char* command) {
  require(o.staircase, "--staircase", command);
  return flag_value("--staircase", [&] { return parse_staircase(o.staircase); });
}

IdealPresentation ideal_flag(const Options& o, const std::string& text, const char* flag,
                             const char* command) {
  require(text, flag, command);
  Field field = parse_field(o.field);
  int cap = o.cap > 0 ? o.cap : kUnbounded;
  return flag_value(flag, [&] { return parse_ideal(text, field, cap); });
}

void check_cap(const Options& o, const Staircase& e) {
  if (o.cap > 0 && o.cap < e.socle_degree() + 2)
    throw DomainError("--cap " + std::to_string(o.cap) + " is below s+2 = " +
                      std::to_string(e.socle_degree() + 2));
}

nlohmann::json staircase_json(const Staircase& e) { return {{"t", e.t()}, {"m", e.m()}}; }

bool is_staircase_json(const nlohmann::json& j) {
  return j.is_object() && j.size() == 2 && j.contains("t") && j.contains("m");
}

std::string scalar_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (is_staircase_json(j))
    return Staircase(j.at("m").get<std::vector<int>>()).to_string();
  return j.dump();
}

bool is_primitive_array(const nlohmann::json& j) {
  return std::all_of(j.begin(), j.end(), [](const nlohmann::json& v) {
    return v.is_primitive() && !v.is_string();
  });
}

// Key/value text form of a JSON object; nested objects and lists are indented.
void render_text(const nlohmann::json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    out << indent << it.key();
    if (v.is_array() && v.empty()) {
      out << " none\n";
    } else if (v.is_array() && is_primitive_array(v)) {
      out << " ";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << scalar_text(v[k]);
      out << "\n";
    } else if (v.is_array()) {
      out << "\n";
      for (const auto& item : v) {
        if (item.is_array()) {
          out << indent << "  [";
          for (std::size_t k = 0; k < item.size(); ++k)
            out << (k ? ", " : "") << scalar_text(item[k]);
          out << "]\n";
        } else if (item.is_object() && !is_staircase_json(item)) {
          out << indent << "  -\n";
          render_text(item, out, indent + "    ");
        } else {
          out << indent << "  " << scalar_text(item) << "\n";
        }
      }
    } else if (v.is_object() && !is_staircase_json(v)) {
      out << "\n";
      render_text(v, out, indent + "  ");
    } else {
      out << " " << scalar_text(v) << "\n";
    }
  }
}

nlohmann::json strings(const std::vector<BiPoly>& v) {
  auto a = nlohmann::json::array();
  for (const auto& f : v) a.push_back(to_string(f));
  return a;
}

nlohmann::json matrix_rows(const PolyMatrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 1; j <= m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Deformation deformation_flag(const Options& o, const char* command) {
  Field field = parse_field(o.field);
  if (!o.deformation.empty()) {
    std::string text = o.deformation;
    if (text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw UsageError("--deformation: cannot read " + text.substr(1));
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--deformation: ") + e.what());
    }
    return flag_value("--deformation", [&] { return deformation_from_json(j, field); });
  }
  Staircase e = staircase_flag(o, command);
  require(o.point, "--point or --deformation", command);
  CellPoint p = flag_value("--point", [&] { return parse_cellpoint(e, o.point, field); });
  return decode_cellpoint(p);
}

nlohmann::json cmd_info(const Options& o) {
  Staircase e = o.staircase.empty()
                    ? lt_ideal_local(ideal_flag(o, o.gens, "--gens", "info")).E
                    : staircase_flag(o, "info");
  auto flags = classify(e);
  nlohmann::json j;
  j["staircase"] = staircase_json(e);
  j["ideal"] = e.ideal_string();
  j["colength"] = e.colength();
  j["socle_degree"] = e.socle_degree();
  j["hilbert_function"] = e.hilbert_function();
  j["lex_segment"] = flags.lex_segment;
  j["lex_gb_condition"] = flags.lex_gb_condition;
  j["gorenstein_admissible"] = flags.gorenstein_admissible;
  j["cell_dimension"] = flags.lex_gb_condition ? nlohmann::json(cell_dimension(e))
                                               : nlohmann::json(nullptr);
  return j;
}

nlohmann::json cmd_basis(const Options& o) {
  auto j = ideal_flag(o, o.gens, "--gens", "basis");
  StandardBasis sb = reduced_standard_basis(j);
  check_cap(o, sb.E);
  return {{"staircase", staircase_json(sb.E)}, {"basis", strings(sb.elements)}};
}

nlohmann::json cmd_phi(const Options& o) {
  Deformation n = deformation_flag(o, "phi");
  auto f = classify_deformation(n);
  IdealPresentation j{signed_minors(n, kUnbounded), n.field(), kUnbounded};
  nlohmann::json out;
  out["staircase"] = staircase_json(n.E());
  out["matrix"] = matrix_rows(to_matrix(n));
  out["minors"] = strings(j.gens);
  out["in_N"] = f.in_N;
  out["in_M"] = f.in_M;
  out["lt"] = staircase_json(lt_ideal_local(j).E);
  return out;
}

nlohmann::json cmd_canonical(const Options& o) {
  auto j = ideal_flag(o, o.gens, "--gens", "canonical");
  CanonicalResult r = canonical_deformation(j);
  check_cap(o, r.N0.E());
  nlohmann::json out;
  out["staircase"] = staircase_json(r.N0.E());
  out["matrix"] = matrix_rows(to_matrix(r.N0));
  out["deformation"] = render_matrix_json(r.N0)["entries"];
  auto point = nlohmann::json::array();
  if (r.point)
    for (const auto& c : r.point->coords) point.push_back(c.to_string());
  out["point"] = r.point ? point : nlohmann::json(nullptr);
  auto moves = nlohmann::json::array();
  for (auto [i, k] : r.moves) moves.push_back({i, k});
  out["moves"] = moves;
  return out;
}

nlohmann::json cmd_stratify(const Options& o) {
  if (o.colength <= 0) throw UsageError("--colength is required for stratify");
  auto strata = nlohmann::json::array();
  for (const Staircase& e : enumerate_staircases(o.colength)) {
    auto flags = classify(e);
    strata.push_back({{"staircase", staircase_json(e)},
                      {"ideal", e.ideal_string()},
                      {"hilbert_function", e.hilbert_function()},
                      {"lex_segment", flags.lex_segment},
                      {"lex_gb_condition", flags.lex_gb_condition},
                      {"cell_dimension", cell_dimension(e)}});
  }
  return {{"colength", o.colength}, {"strata", strata}};
}

void print_strata(const nlohmann::json& j, std::ostream& out) {
  std::vector<std::array<std::string, 5>> rows{{"ideal", "HF", "lex", "lexgb", "dim"}};
  for (const auto& s : j.at("strata")) {
    std::string hf;
    for (int h : s.at("hilbert_function")) hf += (hf.empty() ? "" : ",") + std::to_string(h);
    rows.push_back({s.at("ideal").get<std::string>(), hf,
                    s.at("lex_segment").get<bool>() ? "yes" : "no",
                    s.at("lex_gb_condition").get<bool>() ? "yes" : "no",
                    std::to_string(s.at("cell_dimension").get<int>())});
  }
  std::array<std::size_t, 5> w{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < 5; ++c) w[c] = std::max(w[c], r[c].size());
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < 5; ++c) {
      std::string cell = r[c];
      if (c + 1 < 5) cell.resize(w[c] + 2, ' ');
      line += cell;
    }
    out << line << "\n";
  }
}

nlohmann::json cmd_probe(const Options& o) {
  Staircase e = staircase_flag(o, "probe");
  if (o.prime == 0) throw UsageError("--prime is required for probe");
  return conjecture_probe(e, o.prime, o.budget).to_json();
}

nlohmann::json cmd_gorenstein(const Options& o) {
  if (!o.gens.empty()) {
    auto j = ideal_flag(o, o.gens, "--gens", "gorenstein");
    int mu = minimal_generator_count(j);
    return {{"staircase", staircase_json(lt_ideal_local(j).E)},
            {"mu", mu},
            {"gorenstein", mu <= 2}};
  }
  Staircase e = staircase_flag(o, "gorenstein");
  require(o.point, "--point or --gens", "gorenstein");
  Field field = parse_field(o.field);
  CellPoint p = flag_value("--point", [&] { return parse_cellpoint(e, o.point, field); });
  auto mu = rank_profile(decode_cellpoint(p)).mu;
  return {{"staircase", staircase_json(e)},
          {"point", p.to_string()},
          {"mu", mu},
          {"gorenstein", is_gorenstein_point(p)}};
}

bool sampling(const Field& f) { return f.is_rational(); }

void require_seed(const Options& o, bool seeded, const char* command) {
  if (o.json && !seeded)
    throw UsageError(std::string("--seed is required for ") + command + " with --json");
}

nlohmann::json cmd_cover(const Options& o, bool seeded) {
  auto target = ideal_flag(o, o.target, "--target", "cover");
  Staircase e = staircase_flag(o, "cover");
  CoverStrategy st;
  st.kind = sampling(target.field) ? CoverStrategy::Kind::RandomQ
                                   : CoverStrategy::Kind::ExhaustiveP;
  if (st.kind == CoverStrategy::Kind::RandomQ) require_seed(o, seeded, "cover");
  st.seed = o.seed;
  st.samples = o.samples;
  st.bound = o.bound;
  st.budget = o.budget;
  if (!o.point.empty())
    st.extra_points.push_back(
        flag_value("--point", [&] { return parse_cellpoint(e, o.point, target.field); }));
  auto res = cover_search(target, e, st);
  if (res.empty()) return nullptr;
  return res.front().to_json();
}

nlohmann::json cmd_gcl(const Options& o, bool seeded) {
  auto target = ideal_flag(o, o.target, "--target", "gcl");
  GclOptions g;
  g.exhaustive = !sampling(target.field);
  if (!g.exhaustive) require_seed(o, seeded, "gcl");
  g.max_colength = o.colength;
  g.budget = o.budget;
  g.samples = o.samples;
  g.bound = o.bound;
  g.seed = o.seed;
  if (!o.point.empty()) {
    Staircase e = staircase_flag(o, "gcl");
    g.extra_points.push_back(
        flag_value("--point", [&] { return parse_cellpoint(e, o.point, target.field); }));
  }
  return gcl_bound(target, g).to_json();
}

nlohmann::json cmd_gin(const Options& o, bool seeded) {
  require_seed(o, seeded, "gin");
  auto j = ideal_flag(o, o.gens, "--gens", "gin");
  GinResult r = generic_initial(j, o.seed, o.bound);
  auto draws = nlohmann::json::array();
  for (const auto& e : r.draws) draws.push_back(staircase_json(e));
  auto changes = nlohmann::json::array();
  for (const auto& g : r.changes) {
    auto row = nlohmann::json::array();
    for (const auto& c : g) row.push_back(c.to_string());
    changes.push_back(row);
  }
  return {{"conclusive", r.conclusive},
          {"staircase", r.E ? staircase_json(*r.E) : nlohmann::json(nullptr)},
          {"draws", draws},
          {"changes", changes}};
}

}  // namespace

const Fixtures& fixtures() {
  static const Fixtures f = build_fixtures();
  return f;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical Hilbert-Burch matrices and Groebner cells in k[[x,y]]", "hilburch"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
  };
  const std::vector<Entry> entries{
      {"info", "Numerical data and flags of a staircase", {"staircase", "gens", "field", "cap"}},
      {"lt", "Leading term ideal under the local degree order", {"gens", "field", "cap"}},
      {"basis", "Reduced standard basis", {"gens", "field", "cap"}},
      {"phi", "Maximal minors of H+N", {"staircase", "point", "deformation", "field"}},
      {"canonical", "Canonical Hilbert-Burch matrix of an ideal", {"gens", "field", "cap"}},
      {"dim", "Dimension of the Groebner cell", {"staircase"}},
      {"stratify", "All staircases of a colength", {"colength"}},
      {"probe", "Exhaustive check of N(E)_{<d} over F_p", {"staircase", "prime", "budget"}},
      {"gorenstein", "Gorenstein test", {"staircase", "point", "gens", "field", "cap"}},
      {"cover", "Gorenstein covers from a cell",
       {"target", "staircase", "point", "field", "seed", "samples", "bound", "budget"}},
      {"gcl", "Gorenstein colength",
       {"target", "staircase", "point", "field", "colength", "seed", "samples", "bound",
        "budget"}},
      {"gin", "Generic initial ideal", {"gens", "field", "seed", "bound"}},
  };

  std::map<std::string, CLI::App*> subs;
  std::map<std::string, CLI::Option*> seed_opts;
  for (const auto& s : entries) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_flag("--json", o.json, "JSON output");
    for (const auto& f : s.flags) {
      if (f == "staircase") sub->add_option("--staircase", o.staircase, "m0,m1,... or t=..; m=..");
      if (f == "gens") sub->add_option("--gens", o.gens, "\"p1; p2; ...\"");
      if (f == "field") sub->add_option("--field", o.field, "q or p=NNN");
      if (f == "cap") sub->add_option("--cap", o.cap, "truncation degree")->check(CLI::PositiveNumber);
      if (f == "point") sub->add_option("--point", o.point, "cell coordinates c1,c2,...");
      if (f == "deformation") sub->add_option("--deformation", o.deformation, "JSON or @file");
      if (f == "colength") sub->add_option("--colength", o.colength, "colength")->check(CLI::PositiveNumber);
      if (f == "prime") sub->add_option("--prime", o.prime, "prime");
      if (f == "budget") sub->add_option("--budget", o.budget, "enumeration budget");
      if (f == "samples") sub->add_option("--samples", o.samples, "random samples");
      if (f == "bound") sub->add_option("--bound", o.bound, "coefficient bound")->check(CLI::PositiveNumber);
      if (f == "seed") seed_opts[s.name] = sub->add_option("--seed", o.seed, "random seed");
      if (f == "target") sub->add_option("--target", o.target, "\"p1; p2; ...\"");
    }
    subs[s.name] = sub;
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::string cmd;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cmd = name;
  auto seeded = [&] { return seed_opts.count(cmd) && seed_opts.at(cmd)->count() > 0; };

  try {
    if (cmd == "dim") {
      int d = cell_dimension(staircase_flag(o, "dim"));
      if (o.json) out << nlohmann::json{{"dimension", d}}.dump() << "\n";
      else out << d << "\n";
      return 0;
    }
    if (cmd == "lt") {
      LtResult r = lt_ideal_local(ideal_flag(o, o.gens, "--gens", "lt"));
      check_cap(o, r.E);
      if (o.json) out << nlohmann::json{{"staircase", staircase_json(r.E)}}.dump() << "\n";
      else out << r.E.to_string() << "\n";
      return 0;
    }
    nlohmann::json result;
    if (cmd == "info") result = cmd_info(o);
    else if (cmd == "basis") result = cmd_basis(o);
    else if (cmd == "phi") result = cmd_phi(o);
    else if (cmd == "canonical") result = cmd_canonical(o);
    else if (cmd == "stratify") result = cmd_stratify(o);
    else if (cmd == "probe") result = cmd_probe(o);
    else if (cmd == "gorenstein") result = cmd_gorenstein(o);
    else if (cmd == "cover") result = cmd_cover(o, seeded());
    else if (cmd == "gcl") result = cmd_gcl(o, seeded());
    else if (cmd == "gin") result = cmd_gin(o, seeded());

    if (o.json) {
      out << result.dump() << "\n";
    } else if (cmd == "stratify") {
      print_strata(result, out);
    } else if (result.is_null()) {
      out << "no cover found\n";
    } else {
      render_text(result, out);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hilburch
