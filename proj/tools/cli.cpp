#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "ccs/search.hpp"
#include "ccs/zx.hpp"

namespace ccs::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int ok = 0, mismatch = 1, usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw UsageError("cannot open " + p.string());
  return json::parse(in);
}

std::vector<Name> names_from(const json& j) {
  std::vector<Name> out;
  for (const auto& x : j) out.push_back(Name::from_json(x));
  return out;
}

std::string with_commas(std::size_t v) {
  std::string s = std::to_string(v);
  for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(static_cast<std::size_t>(i), ",");
  return s;
}

std::set<std::string> name_set(const std::vector<Name>& names) {
  std::set<std::string> s;
  for (const auto& n : names) s.insert(n.str());
  return s;
}

std::set<std::string> canonical_set(const std::vector<Name>& names) {
  std::set<std::string> s;
  for (const auto& n : names) s.insert(canonical_under_permutation(n).str());
  return s;
}

std::ostream* open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return &std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot write " + path);
  return &file;
}

int rules_verify(const std::string& id) {
  std::vector<const zx::Rule*> rules;
  if (id.empty())
    for (const auto& r : zx::rule_catalog()) rules.push_back(&r);
  else
    rules.push_back(&zx::find_rule(id));
  int failed = 0;
  for (const auto* r : rules) {
    auto v = zx::verify_rule(*r);
    failed += !v.holds_up_to_scalar;
    std::cout << r->id << '\t' << (v.holds_up_to_scalar ? "holds" : "FAILS") << '\t' << v.instances << " instance(s)"
              << '\t' << (v.scalar ? "scalar " + v.scalar->str() : std::string("no scalar"))
              << (r->scalar_rule ? "\texact scalar equality" : "") << '\t' << r->title << '\n';
  }
  return failed ? mismatch : ok;
}

int enumerate(int n) {
  for (const auto& cs : enumerate_composites(n)) {
    json j = cs;
    j["name"] = name_of(cs).to_json();
    j["class"] = to_string(entanglement_class(cs));
    std::cout << j.dump() << '\n';
  }
  return ok;
}

int generators(int n) {
  std::size_t passes = 0;
  const auto gens = enumerate_generators(n);
  for (const auto& g : gens) {
    passes += g.passes;
    std::cout << json{{"a", g.a}, {"b", g.b}, {"cd", g.cd.to_json()}, {"pass", g.passes}, {"pruned", g.pruned}}.dump()
              << '\n';
  }
  std::cerr << gens.size() << " entangled generator CDs, " << passes << " pass; pass set up to permutation has "
            << pass_set_up_to_permutation(n).size() << " members\n";
  return ok;
}

int graph(int n, const std::string& mode, const std::string& output, int threads) {
  std::vector<GraphMode> modes;
  if (mode == "both")
    modes = {GraphMode::semantic, GraphMode::names};
  else
    modes = {graph_mode_from_string(mode)};
  std::vector<ComplementarityGraph> graphs;
  for (auto m : modes) {
    graphs.push_back(build_graph(n, m, threads));
    std::cout << to_string(m) << ": " << graphs.back().size() << " vertices, " << graphs.back().edge_count()
              << " edges\n";
  }
  const std::size_t v = graphs.front().size(), pairs = v * (v - 1) / 2;
  int rc = ok;
  if (graphs.size() == 2) {
    std::size_t differ = 0;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b) differ += graphs[0].adjacent(a, b) != graphs[1].adjacent(a, b);
    if (differ == 0) {
      std::cout << "modes agree on all " << with_commas(pairs) << " pairs\n";
    } else {
      std::cout << "modes disagree on " << differ << " of " << with_commas(pairs) << " pairs\n";
      rc = mismatch;
    }
  }
  if (!output.empty()) {
    std::ofstream file;
    std::ostream& out = *open_output(output, file);
    json j{{"n", n}, {"mode", mode}, {"vertices", json::array()}, {"edges", json::array()}};
    for (const auto& cs : graphs.front().vertices) j["vertices"].push_back(cs);
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b)
        if (graphs.front().adjacent(a, b)) j["edges"].push_back({a, b});
    out << j.dump() << '\n';
  }
  return rc;
}

int cliques(int n, const std::string& output, const std::string& summary, int threads) {
  const auto g = build_graph(n, GraphMode::semantic, threads);
  const auto all = classified_cliques(g, threads);
  const std::size_t full = (std::size_t{1} << n) + 1;
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& c : all) ++by_size[c.members.size()];
  std::cout << by_size[full] << " maximal cliques of size " << full << '\n';
  for (const auto& [size, count] : by_size)
    if (size != full) std::cout << "finding: " << count << " maximal cliques of size " << size << '\n';
  const std::string csv = config_summary_csv(all, full);
  std::cout << csv;
  if (!output.empty()) {
    std::ofstream file;
    std::ostream& out = *open_output(output, file);
    for (const auto& c : all)
      if (c.members.size() == full) out << clique_record(g, c).dump() << '\n';
  }
  if (!summary.empty()) {
    std::ofstream file(summary);
    if (!file) throw UsageError("cannot write " + summary);
    file << csv;
  }
  return ok;
}

int ent(int m, const std::string& input) {
  const auto names = names_from(read_json(input));
  json out = json::array();
  for (const auto& n : names) out.push_back(apply_ent(n, m).to_json());
  std::cout << "[\n";
  for (std::size_t i = 0; i < out.size(); ++i) std::cout << "  " << out[i].dump() << (i + 1 < out.size() ? ",\n" : "\n");
  std::cout << "]\n";
  return ok;
}

CompositeCS parse_structure(const std::string& text) {
  if (!text.empty() && text.front() == '{') return json::parse(text).get<CompositeCS>();
  return CompositeCS::parse(text);
}

int basis(const std::string& text) {
  const CompositeCS cs = parse_structure(text);
  const Basis b = underlying_basis(cs);
  json kets = json::array();
  for (std::size_t s = 0; s < b.size(); ++s) {
    json amps = json::array(), approx = json::array();
    for (const auto& e : b[s].entries()) {
      amps.push_back(e.str());
      auto z = e.to_complex();
      approx.push_back({z.real(), z.imag()});
    }
    kets.push_back({{"index", s}, {"exact", amps}, {"approx", approx}});
  }
  json j = cs;
  j["name"] = name_of(cs).to_json();
  j["class"] = to_string(entanglement_class(cs));
  j["basis"] = kets;
  std::cout << j.dump() << '\n';
  return ok;
}

struct Checker {
  int failures = 0;
  void report(bool pass, const std::string& what, const std::string& detail = {}) {
    failures += !pass;
    std::cout << (pass ? "ok   " : "FAIL ") << what << (detail.empty() ? "" : ": " + detail) << '\n';
  }
};

std::vector<int> indices_of(const std::vector<Name>& names) {
  std::vector<int> idx;
  for (const auto& n : names) {
    int i = structure_index(n);
    if (i < 0) throw std::runtime_error("fixture holds an unknown name " + n.str());
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

int verify_golden(const fs::path& dir, int threads) {
  Checker c;
  const json counts = read_json(dir / "counts.json");

  const auto p2 = canonical_set(names_from(read_json(dir / "p2.json")));
  const auto ours = name_set(pass_set_up_to_permutation(2));
  c.report(p2 == ours, "two-qubit pass set", std::to_string(ours.size()) + " members, listing has " +
                                                  std::to_string(p2.size()));

  const auto g2 = build_graph(2, GraphMode::semantic, threads);
  const auto cl2 = maximal_cliques(g2, threads);
  std::set<std::set<std::string>> found, listed;
  std::size_t full2 = 0;
  for (const auto& m : cl2) {
    if (m.size() != 5) continue;
    ++full2;
    std::set<std::string> s;
    for (int v : m) s.insert(name_of(g2.vertices[v]).str());
    found.insert(s);
  }
  for (const auto& set : read_json(dir / "sets2.json")) listed.insert(name_set(names_from(set)));
  c.report(full2 == counts["sets2"].get<std::size_t>() && found == listed, "two-qubit maximal sets",
           std::to_string(full2) + " found");

  const auto gen2 = enumerate_generators(2), gen3 = enumerate_generators(3);
  c.report(gen2.size() == counts["generators2"].get<std::size_t>(), "two-qubit generator count",
           std::to_string(gen2.size()) + " vs " + counts["generators2"].dump());
  c.report(gen3.size() == counts["generators3"].get<std::size_t>(), "three-qubit generator count",
           std::to_string(gen3.size()) + " vs " + counts["generators3"].dump());
  const auto pass3 = pass_set_up_to_permutation(3).size();
  c.report(pass3 == counts["pass3"].get<std::size_t>(), "three-qubit pass set size",
           std::to_string(pass3) + " vs " + counts["pass3"].dump());

  const auto g3 = build_graph(3, GraphMode::semantic, threads);
  const auto cl3 = classified_cliques(g3, threads);
  const std::size_t full3 =
      std::count_if(cl3.begin(), cl3.end(), [](const Clique& q) { return q.members.size() == 9; });
  c.report(full3 == counts["sets3"].get<std::size_t>(), "three-qubit maximal set count",
           std::to_string(full3) + " vs " + counts["sets3"].dump());

  const std::vector<std::pair<std::string, EntConfig>> examples{
      {"set3_306.json", {3, 0, 6}}, {"set3_234.json", {2, 3, 4}},     {"set3_162.json", {1, 6, 2}},
      {"set3_090.json", {0, 9, 0}},    {"set3_162_alt.json", {1, 6, 2}}, {"set3_306_alt.json", {3, 0, 6}}};
  for (const auto& [file, want] : examples) {
    const auto idx = indices_of(names_from(read_json(dir / file)));
    std::vector<CompositeCS> members;
    for (int i : idx) members.push_back(g3.vertices[i]);
    const auto cfg = classify_set(members);
    c.report(is_maximal_clique(g3, idx) && cfg == want, file, "config " + cfg.str());
  }

  const auto eg = names_from(read_json(dir / "set3_090.json"));
  std::vector<Name> e1, e2;
  for (const auto& n : eg) e1.push_back(apply_ent(n, 1));
  for (const auto& n : e1) e2.push_back(apply_ent(n, 2));
  c.report(e1 == names_from(read_json(dir / "ent1.json")), "ent1 image of the (0,9,0) example");
  c.report(e2 == names_from(read_json(dir / "ent2.json")), "ent2 after ent1 image of the (0,9,0) example");
  return c.failures ? mismatch : ok;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Composite classical structures on qubits"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->check(CLI::Range(0, 256));

  auto* rules = app.add_subcommand("rules", "ZX rule catalogue");
  auto* rules_verify_cmd = rules->add_subcommand("verify", "Verify rules by exact evaluation");
  rules->require_subcommand(1);
  std::string rule_id;
  rules_verify_cmd->add_option("--id", rule_id, "Single rule id");

  int qubits = 2;
  auto qubit_opt = [&qubits](CLI::App* sub) {
    sub->add_option("--qubits", qubits, "Number of qubits")->required()->check(CLI::Range(2, 3));
  };
  auto* enum_cmd = app.add_subcommand("enumerate", "List composite structures as JSON lines");
  qubit_opt(enum_cmd);
  auto* gen_cmd = app.add_subcommand("generators", "Generator CD representatives with pass/fail");
  qubit_opt(gen_cmd);

  std::string mode = "both", output, summary;
  auto* graph_cmd = app.add_subcommand("graph", "Build the complementarity graph");
  qubit_opt(graph_cmd);
  graph_cmd->add_option("--mode", mode, "semantic, names or both")
      ->check(CLI::IsMember({"semantic", "names", "both"}));
  graph_cmd->add_option("--output", output, "Write adjacency JSON");

  auto* clique_cmd = app.add_subcommand("cliques", "Enumerate maximal complete sets");
  qubit_opt(clique_cmd);
  clique_cmd->add_option("--output", output, "Write cliques as JSON lines");
  clique_cmd->add_option("--summary", summary, "Write the config,count CSV");

  int m = 1;
  std::string input;
  auto* ent_cmd = app.add_subcommand("ent", "Apply an ent map to a JSON array of names");
  ent_cmd->add_option("--m", m, "Index 0, 1 or 2")->required()->check(CLI::Range(0, 2));
  ent_cmd->add_option("--input", input, "JSON file")->required();

  std::string structure;
  auto* basis_cmd = app.add_subcommand("basis", "Print the underlying basis of one structure");
  basis_cmd->add_option("--structure", structure, "JSON record or compact form such as ZZX[13,23]")->required();

  std::string golden;
  auto* verify_cmd = app.add_subcommand("verify", "Compare against golden fixtures");
  verify_cmd->add_option("--golden", golden, "Fixture directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*rules) return rules_verify(rule_id);
    if (*enum_cmd) return enumerate(qubits);
    if (*gen_cmd) return generators(qubits);
    if (*graph_cmd) return graph(qubits, mode, output, threads);
    if (*clique_cmd) return cliques(qubits, output, summary, threads);
    if (*ent_cmd) return ent(m, input);
    if (*basis_cmd) return basis(structure);
    if (*verify_cmd) return verify_golden(golden, threads);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace ccs::cli
