#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <thread>

#include "specht/errors.hpp"
#include "specht/io.hpp"
#include "specht/oracle.hpp"
#include "specht/sweep.hpp"
#include "specht/young_rep.hpp"

using namespace specht;
using io::Json;

namespace {

constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Output {
  std::string format = "json";
  bool text() const { return format == "text"; }
};

std::string boxes_text(const BoxSet& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + to_string(b[i]);
  return s + "}";
}

std::string multiplicities_text(const MultiplicityVector& m) {
  std::string s;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    s += (s.empty() ? "" : " + ") + (it->second == 1 ? "" : std::to_string(it->second) + "*") + to_string(it->first);
  return s.empty() ? "0" : s;
}

void emit(const Output& out, const Json& j, const std::string& text) {
  if (out.text())
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

int cmd_classify(const std::string& path, const Output& out) {
  const Diagram d = io::parse_diagram_any(io::read_file(path));
  const Verdict v = shared_classifier().branches_completely(d);
  Json j = io::to_json(v);
  j = Json{{"diagram", io::to_json(d)}, {"n", d.size()}, {"verdict", j}};
  // The certificate follows one set; list every top-level alternative too.
  if (v.answer == Answer::CompletelyBranching) {
    Json sets = Json::array();
    for (const BoxSet& b : shared_classifier().complete_branching_sets(d)) sets.push_back(io::boxes_json(b));
    j["complete_branching_sets"] = sets;
  }
  std::string text = to_string(v.answer) + "\n";
  if (v.certificate) text += "branching set " + boxes_text(v.certificate->branching_set) + "\n";
  if (v.refutation)
    text += std::to_string(v.refutation->candidates.size()) + " candidate special transversal(s), none branches completely\n";
  emit(out, j, text);
  std::cerr << path << ": " << to_string(v.answer) << " (" << d.size() << " boxes)\n";
  return v.answer == Answer::CompletelyBranching ? 0 : kExitNo;
}

int cmd_verify(const std::string& dpath, const std::string& bpath, bool oracle, const std::string& targeted,
               const Output& out) {
  const Diagram d = io::parse_diagram_any(io::read_file(dpath));
  const BoxSet b = io::parse_boxset(io::read_file(bpath));
  const TransversalResult st = is_special_transversal(d, b);
  const bool hitting = is_exact_hitting_set(d, b);
  Json j{{"diagram", io::to_json(d)},
         {"boxes", io::boxes_json(b)},
         {"special_transversal", io::to_json(st)},
         {"alternating_cycle_free", is_special_transversal_graph(d, b)},
         {"exact_hitting_set", hitting}};
  std::string text = std::string("special transversal: ") + (st.accepted ? "yes" : "no (" + st.reason + ")") +
                     "\nexact hitting set: " + (hitting ? "yes" : "no") + "\n";
  bool all = st.accepted && hitting;
  if (oracle) {
    if (static_cast<int>(d.size()) > kTargetedBound) throw CapacityError("oracle bound exceeded");
    const MultiplicityVector res = restrict_multiplicities(cached_decomposition(d));
    const MultiplicityVector sum = branch_sum(d, b);
    const bool iso = res == sum;
    j["oracle"] = {{"restriction", io::to_json(res)}, {"branch_sum", io::to_json(sum)}, {"isomorphic", iso}};
    text += "restriction: " + multiplicities_text(res) + "\nbranch sum:  " + multiplicities_text(sum) +
            "\nisomorphic: " + (iso ? "yes" : "no") + "\n";
    all = all && iso;
  }
  if (!targeted.empty()) {
    const Partition lambda = parse_partition(targeted);
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t res = restriction_multiplicity_targeted(d, lambda);
    const std::int64_t sum = branch_multiplicity_targeted(d, b, lambda);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    j["targeted"] = {{"partition", to_string(lambda)},
                     {"restriction_multiplicity", res},
                     {"branch_sum_multiplicity", sum},
                     {"equal", res == sum},
                     {"seconds", secs}};
    text += "multiplicity of " + to_string(lambda) + ": restriction " + std::to_string(res) + ", branch sum " +
            std::to_string(sum) + "\n";
    all = all && res == sum;
  }
  j["verdict"] = all;
  emit(out, j, text);
  std::cerr << dpath << ": " << (all ? "all checks hold" : "some check fails") << "\n";
  return all ? 0 : kExitNo;
}

int cmd_decompose(const std::string& path, bool targeted, const Output& out) {
  const Diagram d = io::parse_diagram_any(io::read_file(path));
  const MultiplicityVector m = targeted ? decompose_targeted(d) : decompose(d);
  Json j{{"diagram", io::to_json(d)},
         {"method", targeted ? "targeted" : "regular"},
         {"decomposition", io::to_json(m)},
         {"restriction", io::to_json(restrict_multiplicities(m))},
         {"dimension", dimension_of(m)}};
  emit(out, j, multiplicities_text(m) + "\n");
  std::cerr << path << ": dimension " << dimension_of(m) << "\n";
  return 0;
}

std::pair<int, int> parse_grid(const std::string& g) {
  const auto x = g.find_first_of("xX");
  if (x == std::string::npos) throw DomainError("grid must look like RxC");
  return {std::stoi(g.substr(0, x)), std::stoi(g.substr(x + 1))};
}

Json diagrams_json(const std::vector<Diagram>& ds) {
  Json a = Json::array();
  for (const Diagram& d : ds) a.push_back(io::to_json(d)["cells"]);
  return a;
}

int cmd_sweep(int max_boxes, const std::string& grid, bool oracle, int jobs, const Output& out) {
  SweepOptions o;
  o.max_boxes = max_boxes;
  std::tie(o.rows, o.cols) = parse_grid(grid);
  o.oracle = oracle;
  o.oracle_max_boxes = oracle_bound();
  o.jobs = jobs > 0 ? jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const SweepReport r = run_sweep(o);
  Json by_size = Json::object();
  for (const auto& [n, c] : r.by_size)
    by_size[std::to_string(n)] = {{"CompletelyBranching", c.first}, {"NotCompletelyBranching", c.second}};
  Json j{{"max_boxes", o.max_boxes},
         {"grid", std::to_string(o.rows) + "x" + std::to_string(o.cols)},
         {"classes", r.classes},
         {"counts", {{"CompletelyBranching", r.completely_branching}, {"NotCompletelyBranching", r.not_completely_branching}}},
         {"by_size", by_size},
         {"recognized", {{"northwest", r.northwest}, {"forest", r.forest}, {"gamma_freeable", r.gamma_freeable}}},
         {"violations",
          {{"northwest_not_branching", diagrams_json(r.northwest_not_branching)},
           {"forest_not_branching", diagrams_json(r.forest_not_branching)},
           {"branching_not_gamma_freeable", diagrams_json(r.branching_not_gamma_freeable)},
           {"induced_closure", diagrams_json(r.induced_closure_failures)}}},
         {"oracle",
          {{"enabled", o.oracle},
           {"max_boxes", o.oracle ? o.oracle_max_boxes : 0},
           {"checked", r.oracle_checked},
           {"disagreements", diagrams_json(r.oracle_disagreements)}}},
         {"not_completely_branching", diagrams_json(r.nonbranching_classes)},
         {"completely_branching", diagrams_json(r.branching_classes)},
         {"seconds", r.seconds}};
  std::string text = std::to_string(r.classes) + " classes: " + std::to_string(r.completely_branching) +
                     " completely branching, " + std::to_string(r.not_completely_branching) + " not\n";
  for (const Diagram& d : r.nonbranching_classes) text += render_diagram(d) + "\n";
  emit(out, j, text);
  std::cerr << "sweep n<=" << o.max_boxes << " grid " << grid << ": " << r.classes << " classes, "
            << r.not_completely_branching << " not completely branching";
  if (o.oracle) std::cerr << ", oracle checked " << r.oracle_checked << " with " << r.oracle_disagreements.size() << " disagreement(s)";
  std::cerr << (r.clean() ? "; no violations\n" : "; VIOLATIONS\n");
  return r.clean() ? 0 : kExitNo;
}

int cmd_straighten(const std::string& dpath, const std::string& tpath, const std::string& choice_name,
                   const std::string& top, const Output& out) {
  const Diagram d = io::parse_diagram_any(io::read_file(dpath));
  const Tableau t = io::parse_tableau(d, io::read_file(tpath));
  if (!shared_classifier().is_completely_branching(d)) {
    std::cerr << dpath << ": diagram does not branch completely\n";
    return kExitNo;
  }
  ChoiceFunction choice = choice_name == "first" ? young_corner_choice() : lex_choice();
  if (!top.empty()) choice = with_top_choice(choice, d, io::parse_boxset(io::read_file(top)));
  const StraightenResult r = straighten(t, choice);
  const TraceCheck check = verify_trace(*r.trace);
  if (!check.ok) throw ConsistencyError("produced trace fails verification: " + check.reason);
  Json j{{"tableau", to_string(t)}, {"verified", io::to_json(check)}, {"trace", io::to_json(*r.trace)}};
  std::string text;
  for (const auto& [tab, c] : r.coordinates) text += to_string(c) + "  " + to_string(tab) + "\n";
  emit(out, j, text);
  std::cerr << to_string(t) << ": " << r.coordinates.size() << " chain coordinate(s), " << r.trace->steps.size()
            << " top-level step(s), trace verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specht modules of diagrams: complete branching, oracle checks, straightening"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string diagram, boxset, tableau, targeted, grid = "3x3", choice = "lex", top;
  bool oracle = false, use_targeted = false;
  int max_boxes = 4, jobs = 0;

  auto* classify = app.add_subcommand("classify", "Decide complete branching and print a certificate");
  classify->add_option("diagram", diagram, "Diagram file (ASCII grid or JSON)")->required();

  auto* verify = app.add_subcommand("verify", "Check a box set against a diagram");
  verify->add_option("diagram", diagram, "Diagram file")->required();
  verify->add_option("boxset", boxset, "Box set JSON file")->required();
  verify->add_flag("--oracle", oracle, "Compare restriction and branch sum");
  verify->add_option("--targeted", targeted, "Compare one multiplicity, e.g. 5,1,1,1,1");

  auto* sweep = app.add_subcommand("sweep", "Classify every diagram class in a grid");
  sweep->add_option("--max-boxes", max_boxes, "Largest diagram size")->check(CLI::NonNegativeNumber);
  sweep->add_option("--grid", grid, "Grid as RxC");
  sweep->add_flag("--oracle", oracle, "Cross-check against representation theory up to the oracle bound");
  sweep->add_option("--jobs", jobs, "Worker threads (default: all cores)");

  auto* straight = app.add_subcommand("straighten", "Expand e_T in the chain basis with a verified trace");
  straight->add_option("diagram", diagram, "Diagram file")->required();
  straight->add_option("tableau", tableau, "Tableau file")->required();
  straight->add_option("--choice", choice, "Branching-set choice")->check(CLI::IsMember({"lex", "first"}));
  straight->add_option("--top", top, "Box set JSON file overriding the top-level branching set");

  auto* dec = app.add_subcommand("decompose", "Irreducible decomposition of S^D");
  dec->add_option("diagram", diagram, "Diagram file")->required();
  dec->add_flag("--targeted", use_targeted, "Use Young's natural representation instead of the regular module");

  for (auto* sub : {classify, verify, sweep, straight, dec})
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*classify) return cmd_classify(diagram, out);
    if (*verify) return cmd_verify(diagram, boxset, oracle, targeted, out);
    if (*sweep) return cmd_sweep(max_boxes, grid, oracle, jobs, out);
    if (*straight) return cmd_straighten(diagram, tableau, choice, top, out);
    if (*dec) return cmd_decompose(diagram, use_targeted, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
