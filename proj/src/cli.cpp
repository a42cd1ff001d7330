#include "knotcalc/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotcalc/fpgroups.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/laurent.hpp"
#include "knotcalc/nestcurves.hpp"
#include "knotcalc/serialize.hpp"
#include "knotcalc/swcalc.hpp"

namespace knotcalc {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconclusive = 2;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string render_matrix(const IntMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    out << "[";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : " ") << row[j];
    out << " ]\n";
  }
  return out.str();
}

struct GroupAnalysis {
  AbelianInvariants abelian;
  std::optional<int> order;  // nullopt: enumeration overflowed
  bool cyclic_of_order = false;
};

GroupAnalysis analyze(const Presentation& p, int max_cosets) {
  GroupAnalysis a;
  a.abelian = abelianize(p);
  const auto table = todd_coxeter(p, max_cosets);
  if (table) {
    a.order = table->size();
    const auto certified = is_cyclic_of_order(p, table->size(), max_cosets);
    a.cyclic_of_order = certified.value_or(false);
  }
  return a;
}

SeifertMatrix seifert_from_file(const std::string& path) {
  const json j = load_json_file(path);
  if (!j.is_array()) throw std::invalid_argument(path + ": expected an array of arrays");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument(path + ": expected an array of arrays");
    std::vector<long long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw std::invalid_argument(path + ": matrix entries must be integers");
      r.push_back(x.get<long long>());
    }
    rows.push_back(std::move(r));
  }
  return SeifertMatrix(std::move(rows));
}

int cmd_alexander(const std::string& expr, const std::string& seifert_path, bool as_json,
                  std::ostream& out) {
  if (expr.empty() == seifert_path.empty())
    throw std::invalid_argument("alexander: give exactly one of <expr> or --seifert");
  const KnotExpr k = seifert_path.empty()
                         ? knot_parse(expr)
                         : KnotExpr::seifert(seifert_from_file(seifert_path));
  const LaurentPoly delta = alexander(k);
  const BigInt det = knot_determinant(k);
  if (as_json) {
    json j{{"knot", to_string(k)},
           {"alexander", laurent_to_json(delta)},
           {"alexander_text", to_string(delta)},
           {"degree", degree(delta)},
           {"terms", term_count(delta)},
           {"determinant", bigint_to_json(det)}};
    print_json(out, j);
  } else {
    out << "knot: " << to_string(k) << "\n";
    out << "alexander: " << to_string(delta) << "\n";
    out << "degree: " << degree(delta) << "\n";
    out << "terms: " << term_count(delta) << "\n";
    out << "determinant: " << det << "\n";
  }
  return kExitOk;
}

int cmd_group(const Presentation& p, int max_cosets, bool as_json, std::ostream& out) {
  const GroupAnalysis a = analyze(p, max_cosets);
  if (as_json) {
    json j{{"presentation", presentation_to_json(p)},
           {"presentation_text", presentation_to_text(p)},
           {"abelianization", abelian_to_json(a.abelian)},
           {"max_cosets", max_cosets}};
    if (a.order) {
      j["order"] = *a.order;
      j["cyclic"] = a.cyclic_of_order;
    } else {
      j["order"] = nullptr;
      j["overflow"] = true;
    }
    print_json(out, j);
  } else {
    out << "presentation: " << presentation_to_text(p) << "\n";
    out << "abelianization: free rank " << a.abelian.free_rank << ", torsion [";
    for (std::size_t i = 0; i < a.abelian.torsion.size(); ++i)
      out << (i ? ", " : "") << a.abelian.torsion[i];
    out << "]\n";
    if (a.order) {
      out << "certified order: " << *a.order << "\n";
      out << "cyclic of order " << *a.order << ": " << (a.cyclic_of_order ? "yes" : "no")
          << "\n";
    } else {
      out << "certified order: overflow (cap " << max_cosets << ")\n";
    }
  }
  return a.order ? kExitOk : kExitInconclusive;
}

int cmd_nest_report(int k, int membrane, int max_cosets, bool as_json, std::ostream& out) {
  const NestInvariants inv = nest_invariants(k);
  const auto regions = nest_regions(k);
  const Presentation p = complement_presentation(k, membrane);
  const GroupAnalysis a = analyze(p, max_cosets);
  const bool certified =
      a.order && *a.order == inv.expected_pi1_order && a.cyclic_of_order;
  if (as_json) {
    json j = nest_invariants_to_json(inv);
    json region_names = json::array();
    for (const auto& r : regions) region_names.push_back(to_string(r.topology));
    j["regions"] = std::move(region_names);
    j["membrane"] = membrane;
    j["presentation"] = presentation_to_json(p);
    j["presentation_text"] = presentation_to_text(p);
    j["abelianization"] = abelian_to_json(a.abelian);
    j["max_cosets"] = max_cosets;
    if (a.order) {
      j["certified_order"] = *a.order;
      j["cyclic_of_expected_order"] = certified;
    } else {
      j["certified_order"] = nullptr;
      j["overflow"] = true;
    }
    print_json(out, j);
  } else {
    out << "k: " << inv.k << "\n";
    out << "degree: " << inv.degree << "\n";
    out << "homology class: " << inv.homology_class << "\n";
    out << "genus: " << inv.genus << "\n";
    out << "regions:";
    for (const auto& r : regions) out << " " << to_string(r.topology);
    out << "\n";
    out << "membrane: " << membrane << "\n";
    out << "presentation: " << presentation_to_text(p) << "\n";
    out << "abelianization: free rank " << a.abelian.free_rank << ", torsion [";
    for (std::size_t i = 0; i < a.abelian.torsion.size(); ++i)
      out << (i ? ", " : "") << a.abelian.torsion[i];
    out << "]\n";
    if (a.order) {
      out << "certified pi1 order: " << *a.order << "\n";
      out << "cyclic of order " << inv.expected_pi1_order << ": "
          << (certified ? "certified" : "NOT certified") << "\n";
    } else {
      out << "certified pi1 order: overflow (cap " << max_cosets << ")\n";
    }
  }
  return a.order ? kExitOk : kExitInconclusive;
}

int cmd_distinguish(const std::string& family_name, int count, const std::string& sw_path,
                    bool as_json, std::ostream& out) {
  if (family_name != "trefoil")
    throw std::invalid_argument("unknown family '" + family_name + "' (available: trefoil)");
  const SWPolynomial sw_y =
      sw_path.empty() ? SWPolynomial::two_class_fixture() : sw_from_json(load_json_file(sw_path));
  const auto family = trefoil_family(count);
  const DistinguishReport report = distinguish(sw_y, family);
  if (as_json) {
    json counts = json::array();
    for (const auto c : report.basic_class_counts) counts.push_back(c);
    json j{{"family", family_name},
           {"count", count},
           {"sw_input", sw_to_json(sw_y)},
           {"counts", std::move(counts)},
           {"pairwise_distinct", report.pairwise_distinct},
           {"citations", report.citations}};
    print_json(out, j);
  } else {
    out << "family: connected sums of " << family_name << ", i = 1.." << count << "\n";
    out << "sw input: " << sw_y.terms().size() << " classes\n";
    out << "counts:";
    for (const auto c : report.basic_class_counts) out << " " << c;
    out << "\n";
    out << "pairwise distinct: " << (report.pairwise_distinct ? "yes" : "no") << "\n";
    for (const auto& line : report.citations) out << "note: " << line << "\n";
  }
  return kExitOk;
}

int cmd_snf(const std::string& matrix_path, bool as_json, std::ostream& out) {
  const IntMatrix m = intmatrix_from_json(load_json_file(matrix_path));
  const SmithForm snf = smith_normal_form(m);
  if (as_json) {
    json divisors = json::array();
    for (const auto& d : snf.divisors) divisors.push_back(bigint_to_json(d));
    json j{{"divisors", std::move(divisors)},
           {"U", intmatrix_to_json(snf.u)},
           {"V", intmatrix_to_json(snf.v)}};
    print_json(out, j);
  } else {
    out << "divisors:";
    for (const auto& d : snf.divisors) out << " " << d;
    out << "\n";
    out << "U:\n" << render_matrix(snf.u);
    out << "V:\n" << render_matrix(snf.v);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants for knots, nest-curve complements and knot surgery"};
  app.require_subcommand(1);

  // alexander
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a knot expression");
  std::string knot_expr, alex_seifert;
  bool alex_json = false;
  alex->add_option("expr", knot_expr,
                   "e.g. \"trefoil # torus(2,5)\" or \"seifert [[-1,1],[0,-1]]\"");
  alex->add_option("--seifert", alex_seifert, "Seifert matrix JSON file");
  alex->add_flag("--json", alex_json, "emit JSON");

  // group
  auto* group = app.add_subcommand("group", "abelian invariants and certified order of a "
                                            "finitely presented group");
  int group_k = 0, group_membrane = 1, group_cap = 100000;
  std::string group_text, group_json_path;
  bool group_json = false;
  group->add_option("--k", group_k, "analyze the nest-curve complement presentation for k");
  group->add_option("--membrane", group_membrane, "annulus region left unpunctured (with --k)")
      ->capture_default_str();
  group->add_option("--max-cosets", group_cap, "enumeration cap")->capture_default_str();
  group->add_option("--presentation", group_text,
                    "inline presentation, e.g. \"gens: a ; rels: a^5\"");
  group->add_option("--presentation-json", group_json_path, "presentation JSON file");
  group->add_flag("--json", group_json, "emit JSON");

  // nest-report
  auto* nest = app.add_subcommand("nest-report", "invariants and certified fundamental group "
                                                 "of a maximal nest curve complement");
  int nest_k = 0, nest_membrane = 1, nest_cap = 100000;
  bool nest_json = false;
  nest->add_option("--k", nest_k, "half-degree of the curve (degree 2k)")->required();
  nest->add_option("--membrane", nest_membrane, "annulus region used as the membrane")
      ->capture_default_str();
  nest->add_option("--max-cosets", nest_cap, "enumeration cap")->capture_default_str();
  nest->add_flag("--json", nest_json, "emit JSON");

  // distinguish
  auto* dist = app.add_subcommand("distinguish", "basic-class counts after annulus rim surgery "
                                                 "over a knot family");
  std::string dist_family = "trefoil", dist_sw;
  int dist_count = 0;
  bool dist_json = false;
  dist->add_option("--family", dist_family, "knot family")->capture_default_str();
  dist->add_option("--count", dist_count, "number of family members")->required();
  dist->add_option("--sw", dist_sw, "SW polynomial JSON file (default: two-class fixture)");
  dist->add_flag("--json", dist_json, "emit JSON");

  // snf
  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string snf_matrix;
  bool snf_json = false;
  snf->add_option("--matrix", snf_matrix, "JSON file, array of arrays of integers")->required();
  snf->add_flag("--json", snf_json, "emit JSON");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("knotcalc");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (alex->parsed()) return cmd_alexander(knot_expr, alex_seifert, alex_json, out);

    if (group->parsed()) {
      const int sources = (group->count("--k") > 0) + !group_text.empty() +
                          !group_json_path.empty();
      if (sources != 1)
        throw std::invalid_argument(
            "group: give exactly one of --k, --presentation, --presentation-json");
      Presentation p = !group_text.empty()       ? presentation_from_text(group_text)
                       : !group_json_path.empty() ? presentation_from_json(
                                                        load_json_file(group_json_path))
                                                  : complement_presentation(group_k,
                                                                            group_membrane);
      return cmd_group(p, group_cap, group_json, out);
    }

    if (nest->parsed())
      return cmd_nest_report(nest_k, nest_membrane, nest_cap, nest_json, out);

    if (dist->parsed()) return cmd_distinguish(dist_family, dist_count, dist_sw, dist_json, out);

    if (snf->parsed()) return cmd_snf(snf_matrix, snf_json, out);

    err << "error: no subcommand\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace knotcalc
