#include "achiral/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <numeric>
#include <optional>

#include "achiral/alexander.hpp"
#include "achiral/census.hpp"
#include "achiral/error.hpp"
#include "achiral/json_io.hpp"
#include "achiral/numtheory.hpp"
#include "achiral/realize.hpp"
#include "achiral/selfdual.hpp"

namespace achiral::cli {
namespace {

using nlohmann::json;

json twosquares(std::uint64_t n, bool coprime_only) {
  json pairs = json::array();
  for (const auto& p : numtheory::two_square_decompositions(n)) {
    if (coprime_only && std::gcd(p.a, p.b) != 1) continue;
    pairs.push_back({p.a, p.b});
  }
  json out = {{"n", n}, {"decompositions", pairs}, {"r2", numtheory::r2(n)}};
  if (n > 1) out["r2_0"] = numtheory::r2_0(n);
  return out;
}

json realize(std::uint64_t n, bool rational, bool square) {
  const auto cert = rational ? realize::realize_achiral_rational(n)
                   : square  ? realize::realize_square_prime_alternating(n)
                             : realize::realize_achiral(n);
  // Independent recheck of what is about to be printed.
  if (cert.diagram && diagrams::det(*cert.diagram, diagrams::DetMethod::All) != n) {
    throw Error("certificate for " + std::to_string(n) + " failed its determinant recheck");
  }
  return io::certificate_to_json(cert);
}

json determinant(const std::string& file, const std::string& method) {
  const auto d = io::diagram_from_json(io::read_json_file(file));
  const auto report = diagrams::det_report(d, diagrams::parse_det_method(method));
  json methods = json::object();
  for (const auto& [m, v] : report.values) methods[diagrams::to_string(m)] = v;
  return {{"det", report.value}, {"crossings", d.crossing_count()}, {"methods", methods}};
}

std::string census(std::uint64_t n, bool achiral_only, bool count, bool csv) {
  if (count) {
    const std::uint64_t c = achiral_only ? census::count_achiral_rational(n) : census::count_rational_by_det(n);
    return std::to_string(c) + "\n";
  }
  auto classes = census::rational_classes(n);
  if (achiral_only) std::erase_if(classes, [](const auto& c) { return !c.achiral; });
  return csv ? io::classes_to_csv(n, classes) : io::classes_to_json(n, classes).dump(2) + "\n";
}

json selfdual_build(std::uint64_t n) {
  const auto g = plangraph::realize_selfdual(n);
  json out = io::graph_to_json(g);
  out["spanning_trees"] = plangraph::spanning_tree_count(g).str();
  out["self_dual"] = g.edge_count() <= plangraph::kSelfDualEdgeBudget ? json(plangraph::is_self_dual(g)) : json(nullptr);
  return out;
}

json selfdual_check(const std::string& file) {
  const auto g = io::graph_from_json(io::read_json_file(file));
  json out = {{"vertices", g.vertex_count()},
              {"edges", g.edge_count()},
              {"spanning_trees", plangraph::spanning_tree_count(g).str()},
              {"cut_vertex", plangraph::has_cut_vertex(g)}};
  if (!g.has_rotation()) throw InvalidInput("self-duality needs a rotation system in the graph file");
  out["self_dual"] = plangraph::is_self_dual(g, plangraph::SelfDualMode::Abstract);
  out["self_dual_map"] = plangraph::is_self_dual(g, plangraph::SelfDualMode::Map);
  out["tree_bound"] = g.edge_count() % 2 == 0 ? json(plangraph::selfdual_tree_bound_check(g)) : json(nullptr);
  return out;
}

json alex(std::int64_t p, std::int64_t q) {
  const auto poly = alexander::alexander_rational(p, q);
  const auto expansion = alexander::even_expansion(p, q);
  const census::SchubertForm form(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q));
  json out = {{"polynomial", alexander::to_text(poly)},
              {"expansion", expansion.entries},
              {"genus", expansion.genus()},
              {"leading_coefficient", alexander::leading_coeff(expansion)},
              {"achiral", census::is_achiral_rational(form)}};
  if (census::is_achiral_rational(form)) out["leading_is_square"] = alexander::square_leading_check(p, q);
  return out;
}

json chirality(std::uint64_t det, std::optional<std::int64_t> signed_det) {
  const auto v = numtheory::chirality_filter(det, signed_det);
  return {{"det", det}, {"verdict", numtheory::to_string(v.verdict)}, {"reason", numtheory::to_string(v.reason)}};
}

json bounds(const std::string& file) {
  const auto d = io::diagram_from_json(io::read_json_file(file));
  json out = {{"crossings", d.crossing_count()}, {"det", diagrams::det(d, diagrams::DetMethod::Goeritz)}};
  if (diagrams::is_alternating(d) && diagrams::is_reduced(d)) {
    out["crowell"] = realize::crowell_bound_check(d);
    out["torus"] = realize::is_two_bridge_torus_diagram(d);
  } else {
    out["crowell"] = nullptr;
  }
  out["achiral_bound"] = d.crossing_count() % 2 == 0 ? json(realize::achiral_bound_check(d)) : json(nullptr);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinants of achiral knots: realization, census and checks", "achiral"};
  app.require_subcommand(1);

  std::uint64_t n = 0;
  bool coprime = false;
  auto* ts = app.add_subcommand("twosquares", "Decompositions of N as a sum of two squares");
  ts->add_option("N", n)->required();
  ts->add_flag("--coprime", coprime, "Only coprime pairs");

  bool rational = false;
  bool square = false;
  auto* rz = app.add_subcommand("realize", "Achiral knot certificate with determinant N");
  rz->add_option("N", n)->required();
  auto* rational_flag = rz->add_flag("--rational", rational, "Require a rational knot");
  rz->add_flag("--square", square, "Prime alternating candidate for a square N")->excludes(rational_flag);

  std::string file;
  std::string method = "all";
  auto* dt = app.add_subcommand("det", "Determinant of a diagram file");
  dt->add_option("--pd", file, "Diagram JSON")->required();
  dt->add_option("--method", method)->check(CLI::IsMember({"goeritz", "states", "trees", "all"}));

  bool achiral_only = false;
  bool list = false;
  bool count = false;
  bool csv = false;
  auto* cs = app.add_subcommand("census", "Rational knots with determinant N");
  cs->add_option("--det", n)->required();
  cs->add_flag("--achiral", achiral_only);
  auto* list_flag = cs->add_flag("--list", list);
  cs->add_flag("--count", count)->excludes(list_flag);
  cs->add_flag("--csv", csv, "CSV rows instead of JSON for --list");

  std::optional<std::uint64_t> selfdual_n;
  std::string check_file;
  auto* sd = app.add_subcommand("selfdual", "Self-dual graph with N spanning trees, or check a graph file");
  auto* sd_n = sd->add_option("N", selfdual_n);
  sd->add_option("--check", check_file, "Graph JSON")->excludes(sd_n);

  std::int64_t p = 0;
  std::int64_t q = 0;
  auto* al = app.add_subcommand("alex", "Alexander polynomial of S(P, Q)");
  al->add_option("P", p)->required();
  al->add_option("Q", q)->required();

  std::optional<std::int64_t> signed_det;
  auto* ch = app.add_subcommand("chirality", "Determinant-only chirality test");
  ch->add_option("--det", n)->required();
  ch->add_option("--signed", signed_det);

  auto* bd = app.add_subcommand("bounds", "Crowell and achiral determinant bounds of a diagram file");
  bd->add_option("--pd", file, "Diagram JSON")->required();

  std::vector<std::string> argv_storage{"achiral"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*ts) {
      out << twosquares(n, coprime).dump(2) << '\n';
    } else if (*rz) {
      out << realize(n, rational, square).dump(2) << '\n';
    } else if (*dt) {
      out << determinant(file, method).dump(2) << '\n';
    } else if (*cs) {
      out << census(n, achiral_only, count, csv);
    } else if (*sd) {
      if (!check_file.empty()) {
        out << selfdual_check(check_file).dump(2) << '\n';
      } else if (selfdual_n) {
        out << selfdual_build(*selfdual_n).dump(2) << '\n';
      } else {
        err << "error: selfdual needs N or --check FILE\n";
        return kInvalidInput;
      }
    } else if (*al) {
      out << alex(p, q).dump(2) << '\n';
    } else if (*ch) {
      out << chirality(n, signed_det).dump(2) << '\n';
    } else if (*bd) {
      out << bounds(file).dump(2) << '\n';
    }
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const MethodDisagreement& e) {
    err << "error: " << e.what();
    for (const auto& line : e.transcript()) err << ' ' << line;
    err << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  }
  return kOk;
}

}  // namespace achiral::cli
