#pragma once

#include <bitset>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccs/composites.hpp"
#include "ccs/names.hpp"

namespace ccs {

enum class GraphMode { semantic, names };
const char* to_string(GraphMode m);
GraphMode graph_mode_from_string(const std::string& s);

constexpr std::size_t max_vertices = 256;
using VertexSet = std::bitset<max_vertices>;

struct ComplementarityGraph {
  int qubits = 0;
  GraphMode mode = GraphMode::semantic;
  std::vector<CompositeCS> vertices;
  std::vector<VertexSet> adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adjacency[a][b]; }
  std::size_t edge_count() const;
};

/// `threads` <= 0 means one per hardware thread.
ComplementarityGraph build_graph(int n, GraphMode mode, int threads = 1);
ComplementarityGraph graph_from_adjacency(const std::vector<std::vector<bool>>& adj);

struct Clique {
  std::vector<int> members;
  EntConfig config;
};

/// Every maximal clique once, members ascending, cliques in lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const ComplementarityGraph& g, int threads = 1);
std::vector<Clique> classified_cliques(const ComplementarityGraph& g, int threads = 1);

EntConfig classify_set(const std::vector<CompositeCS>& members);
bool is_clique(const ComplementarityGraph& g, const std::vector<int>& members);
bool is_maximal_clique(const ComplementarityGraph& g, const std::vector<int>& members);

/// Index of the structure with this name in enumerate_composites(N), or -1.
int structure_index(const Name& n);

/// Controlled-Z on qubits m and m+2 (mod 3) applied to the structure's legs, read back as a name.
Name apply_ent(const Name& n, int m);

nlohmann::json clique_record(const ComplementarityGraph& g, const Clique& c);
/// "config,count" CSV over cliques of the given size.
std::string config_summary_csv(const std::vector<Clique>& cliques, std::size_t size);

}  // namespace ccs
