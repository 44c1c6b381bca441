#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <map>
#include <set>

#include "ccs/search.hpp"

using namespace ccs;

namespace {

CompositeCS cs(const std::string& s) { return CompositeCS::parse(s); }

nlohmann::json fixture(const std::string& file) {
  std::ifstream in(std::string(CCS_TEST_DATA) + "/" + file);
  REQUIRE(in);
  return nlohmann::json::parse(in);
}

std::vector<Name> fixture_names(const std::string& file) {
  std::vector<Name> out;
  for (const auto& j : fixture(file)) out.push_back(Name::from_json(j));
  return out;
}

std::vector<int> indices(const std::vector<Name>& names) {
  std::vector<int> idx;
  for (const auto& n : names) idx.push_back(structure_index(n));
  std::sort(idx.begin(), idx.end());
  return idx;
}

int index_of(const ComplementarityGraph& g, const std::string& s) {
  return static_cast<int>(std::find(g.vertices.begin(), g.vertices.end(), cs(s)) - g.vertices.begin());
}

// Exhaustive maximal cliques of a small graph.
std::vector<std::vector<int>> brute_cliques(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    bool clique = true;
    for (std::size_t a = 0; a < s.size() && clique; ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) clique = clique && adj[s[a]][s[b]];
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask >> v & 1) continue;
      bool all = true;
      for (int u : s) all = all && adj[u][v];
      if (all) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("two-qubit graph") {
  const auto g = build_graph(2, GraphMode::semantic);
  CHECK(g.size() == 18);
  const int zz = index_of(g, "ZZ");
  CHECK(g.adjacent(zz, index_of(g, "XX")));
  CHECK(g.adjacent(zz, index_of(g, "YY")));
  CHECK_FALSE(g.adjacent(zz, index_of(g, "ZX")));
  for (std::size_t v = 0; v < g.size(); ++v) CHECK_FALSE(g.adjacent(v, v));
}

TEST_CASE("modes give identical adjacency") {
  for (int n = 2; n <= 3; ++n) {
    const auto a = build_graph(n, GraphMode::semantic, 2), b = build_graph(n, GraphMode::names, 2);
    CHECK(a.adjacency == b.adjacency);
    CHECK(a.vertices == b.vertices);
  }
}

TEST_CASE("clique enumeration against exhaustive search") {
  CHECK(maximal_cliques(graph_from_adjacency({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 10;
    std::bernoulli_distribution edge(0.2 + 0.01 * trial);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) adj[a][b] = adj[b][a] = edge(rng);
    CHECK(maximal_cliques(graph_from_adjacency(adj), 1 + trial % 3) == brute_cliques(adj));
  }
}

TEST_CASE("two-qubit maximal sets") {
  const auto g = build_graph(2, GraphMode::semantic);
  const auto cl = classified_cliques(g);
  std::set<std::set<std::string>> found, listed;
  for (const auto& c : cl) {
    if (c.members.size() != 5) continue;
    CHECK(c.config.bs == 0);
    CHECK(c.config.sc + c.config.ns == 5);
    std::set<std::string> s;
    for (int v : c.members) s.insert(name_of(g.vertices[v]).str());
    found.insert(s);
  }
  for (const auto& set : fixture("sets2.json")) {
    std::set<std::string> s;
    for (const auto& j : set) s.insert(Name::from_json(j).str());
    listed.insert(s);
  }
  CHECK(found.size() == 13);
  CHECK(found == listed);
  std::size_t smaller = 0;
  for (const auto& c : cl) smaller += c.members.size() != 5;
  MESSAGE("two-qubit graph also has " << smaller << " maximal cliques below size 5");
}

TEST_CASE("three-qubit example sets") {
  const auto g = build_graph(3, GraphMode::semantic);
  const std::vector<std::pair<std::string, EntConfig>> examples{
      {"set3_306.json", {3, 0, 6}}, {"set3_234.json", {2, 3, 4}},     {"set3_162.json", {1, 6, 2}},
      {"set3_090.json", {0, 9, 0}},    {"set3_162_alt.json", {1, 6, 2}}, {"set3_306_alt.json", {3, 0, 6}}};
  for (const auto& [file, want] : examples) {
    CAPTURE(file);
    const auto idx = indices(fixture_names(file));
    CHECK(idx.size() == 9);
    CHECK(is_maximal_clique(g, idx));
    std::vector<CompositeCS> members;
    for (int i : idx) members.push_back(g.vertices[i]);
    CHECK(classify_set(members) == want);
  }
}

TEST_CASE("three-qubit cliques") {
  const auto g = build_graph(3, GraphMode::semantic, 2);
  const auto cl = classified_cliques(g, 2);
  const std::set<EntConfig> allowed{{3, 0, 6}, {2, 3, 4}, {1, 6, 2}, {0, 9, 0}};
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& c : cl) {
    ++sizes[c.members.size()];
    if (c.members.size() == 9) CHECK(allowed.count(c.config));
  }
  for (const auto& [size, count] : sizes) MESSAGE(count << " maximal cliques of size " << size);
  CHECK(sizes.size() == 2);
  CHECK(sizes[9] == 34782);
  CHECK(sizes[5] == 211190);
  const std::string csv = config_summary_csv(cl, 9);
  CHECK(csv.rfind("config,count\n", 0) == 0);
  CHECK(csv.find("\"(0,9,0)\",672\n") != std::string::npos);
}

TEST_CASE("deterministic output across thread counts") {
  const auto g = build_graph(3, GraphMode::names, 3);
  CHECK(maximal_cliques(g, 1) == maximal_cliques(g, 4));
  CHECK(build_graph(3, GraphMode::semantic, 1).adjacency == build_graph(3, GraphMode::semantic, 4).adjacency);
}

TEST_CASE("ent maps on the listed sets") {
  const auto eg = fixture_names("set3_090.json");
  std::vector<Name> e1, e2;
  for (const auto& n : eg) e1.push_back(apply_ent(n, 1));
  for (const auto& n : e1) e2.push_back(apply_ent(n, 2));
  CHECK(e1 == fixture_names("ent1.json"));
  CHECK(e2 == fixture_names("ent2.json"));
  const auto g = build_graph(3, GraphMode::semantic);
  for (const auto& [set, want] : {std::pair{e1, EntConfig{2, 3, 4}}, std::pair{e2, EntConfig{1, 6, 2}}}) {
    const auto idx = indices(set);
    CHECK(is_maximal_clique(g, idx));
    std::vector<CompositeCS> members;
    for (int i : idx) members.push_back(g.vertices[i]);
    CHECK(classify_set(members) == want);
  }
}

TEST_CASE("ent maps leave diagonal structures alone") {
  for (int m = 0; m < 3; ++m) {
    CHECK(apply_ent(name_of(cs("ZZZ")), m) == name_of(cs("ZZZ")));
  }
  // qubits 0 and 1 are acted on by ent_1; a wire between two Z constituents there is unchanged
  CHECK(apply_ent(name_of(cs("ZZX")), 1) == name_of(cs("ZZX")));
  CHECK_THROWS(apply_ent(name_of(cs("ZZ")), 1));
  CHECK_THROWS(apply_ent(name_of(cs("ZZZ")), 3));
  Name bogus(3);
  bogus.at(1, 1) = NameEntry::parse("1");
  CHECK_THROWS(apply_ent(bogus, 0));
}

TEST_CASE("ent maps send maximal sets to maximal sets") {
  const auto g = build_graph(3, GraphMode::semantic);
  auto cl = maximal_cliques(g);
  cl.erase(std::remove_if(cl.begin(), cl.end(), [](const auto& c) { return c.size() != 9; }), cl.end());
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, cl.size() - 1);
  for (int s = 0; s < 100; ++s) {
    const auto& c = cl[pick(rng)];
    for (int m = 0; m < 3; ++m) {
      std::vector<Name> image;
      for (int v : c) image.push_back(apply_ent(name_of(g.vertices[v]), m));
      CHECK(is_maximal_clique(g, indices(image)));
    }
  }
}

TEST_CASE("clique records") {
  const auto g = build_graph(2, GraphMode::semantic);
  const auto cl = classified_cliques(g);
  const auto it = std::find_if(cl.begin(), cl.end(), [](const Clique& c) { return c.members.size() == 5; });
  REQUIRE(it != cl.end());
  const auto j = clique_record(g, *it);
  CHECK(j["members"].size() == 5);
  CHECK(j["config"] == nlohmann::json::array({3, 0, 2}));
}
