#include "ccs/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace ccs {

const char* to_string(GraphMode m) { return m == GraphMode::semantic ? "semantic" : "names"; }

GraphMode graph_mode_from_string(const std::string& s) {
  if (s == "semantic") return GraphMode::semantic;
  if (s == "names") return GraphMode::names;
  throw std::invalid_argument("unknown graph mode: " + s);
}

std::size_t ComplementarityGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : adjacency) e += row.count();
  return e / 2;
}

namespace {

int worker_count(int threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  const int t = std::min<int>(worker_count(threads), static_cast<int>(std::max<std::size_t>(n, 1)));
  if (t <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

ComplementarityGraph build_graph(int n, GraphMode mode, int threads) {
  ComplementarityGraph g;
  g.qubits = n;
  g.mode = mode;
  g.vertices = enumerate_composites(n);
  const std::size_t v = g.vertices.size();
  g.adjacency.assign(v, VertexSet{});
  std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
  if (mode == GraphMode::semantic) {
    std::vector<Basis> bases(v);
    parallel_for(v, threads, [&](std::size_t i) { bases[i] = underlying_basis(g.vertices[i]); });
    parallel_for(v, threads, [&](std::size_t a) {
      for (std::size_t b = a + 1; b < v; ++b) adj[a][b] = is_complementary(bases[a], bases[b]);
    });
  } else {
    const NameSet t = build_test_set(n);
    std::vector<Name> names;
    for (const auto& cs : g.vertices) names.push_back(name_of(cs));
    parallel_for(v, threads, [&](std::size_t a) {
      for (std::size_t b = a + 1; b < v; ++b) adj[a][b] = t.count(star(names[a], names[b])) > 0;
    });
  }
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      if (adj[a][b]) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
  return g;
}

ComplementarityGraph graph_from_adjacency(const std::vector<std::vector<bool>>& adj) {
  if (adj.size() > max_vertices) throw std::invalid_argument("graph too large");
  ComplementarityGraph g;
  g.vertices.resize(adj.size());
  g.adjacency.assign(adj.size(), VertexSet{});
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b = 0; b < adj.size(); ++b)
      if (a != b && (adj[a][b] || adj[b][a])) g.adjacency[a].set(b);
  return g;
}

namespace {

struct Enumerator {
  const std::vector<VertexSet>& adj;
  std::vector<std::vector<int>>& out;
  std::vector<int> r;

  void expand(VertexSet p, VertexSet x) {
    if (p.none()) {
      if (x.none()) {
        out.push_back(r);
        std::sort(out.back().begin(), out.back().end());
      }
      return;
    }
    // Tomita pivot: vertex of P u X with most neighbours in P.
    std::size_t pivot = 0, best = 0;
    bool any = false;
    const VertexSet px = p | x;
    for (std::size_t u = px._Find_first(); u < max_vertices; u = px._Find_next(u)) {
      std::size_t c = (p & adj[u]).count();
      if (!any || c > best) {
        pivot = u;
        best = c;
        any = true;
      }
    }
    const VertexSet cand = p & ~adj[pivot];
    for (std::size_t v = cand._Find_first(); v < max_vertices; v = cand._Find_next(v)) {
      r.push_back(static_cast<int>(v));
      expand(p & adj[v], x & adj[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

std::vector<int> degeneracy_order(const std::vector<VertexSet>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> order;
  VertexSet left;
  for (std::size_t i = 0; i < n; ++i) left.set(i);
  while (left.any()) {
    std::size_t best = max_vertices, deg = max_vertices + 1;
    for (std::size_t u = left._Find_first(); u < max_vertices; u = left._Find_next(u)) {
      std::size_t d = (adj[u] & left).count();
      if (d < deg) {
        deg = d;
        best = u;
      }
    }
    order.push_back(static_cast<int>(best));
    left.reset(best);
  }
  return order;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const ComplementarityGraph& g, int threads) {
  const auto order = degeneracy_order(g.adjacency);
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::vector<std::vector<int>>> parts(order.size());
  parallel_for(order.size(), threads, [&](std::size_t i) {
    const int v = order[i];
    VertexSet later, earlier;
    for (std::size_t u = g.adjacency[v]._Find_first(); u < max_vertices; u = g.adjacency[v]._Find_next(u))
      (rank[u] > i ? later : earlier).set(u);
    Enumerator e{g.adjacency, parts[i], {v}};
    e.expand(later, earlier);
  });
  std::vector<std::vector<int>> all;
  for (auto& p : parts)
    for (auto& c : p) all.push_back(std::move(c));
  std::sort(all.begin(), all.end());
  return all;
}

EntConfig classify_set(const std::vector<CompositeCS>& members) {
  EntConfig c;
  for (const auto& m : members) {
    switch (entanglement_class(m)) {
      case EntClass::SC: ++c.sc; break;
      case EntClass::BS: ++c.bs; break;
      case EntClass::NS: ++c.ns; break;
    }
  }
  return c;
}

std::vector<Clique> classified_cliques(const ComplementarityGraph& g, int threads) {
  std::vector<Clique> out;
  for (auto& m : maximal_cliques(g, threads)) {
    std::vector<CompositeCS> members;
    for (int v : m) members.push_back(g.vertices[v]);
    out.push_back({std::move(m), classify_set(members)});
  }
  return out;
}

bool is_clique(const ComplementarityGraph& g, const std::vector<int>& members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (!g.adjacent(members[a], members[b])) return false;
  return true;
}

bool is_maximal_clique(const ComplementarityGraph& g, const std::vector<int>& members) {
  if (!is_clique(g, members)) return false;
  VertexSet common;
  common.set();
  for (int v : members) common &= g.adjacency[v];
  return common.none();
}

namespace {

struct StructureTable {
  std::vector<CompositeCS> all;
  std::vector<Name> names;
  std::unordered_map<std::string, int> by_name;
  std::unordered_map<std::string, std::vector<int>> by_basis;
};

std::string projective_key(const Basis& b) {
  std::vector<std::string> kets;
  for (const auto& k : b) {
    ExactScalar lead;
    for (const auto& e : k.entries())
      if (!e.is_zero()) {
        lead = e.conj();
        break;
      }
    std::string s;
    for (const auto& e : k.entries()) s += (e * lead).str() + ';';
    kets.push_back(std::move(s));
  }
  std::sort(kets.begin(), kets.end());
  std::string key;
  for (const auto& s : kets) key += s + '|';
  return key;
}

const StructureTable& table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<StructureTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<StructureTable>();
    slot->all = enumerate_composites(n);
    for (std::size_t i = 0; i < slot->all.size(); ++i) {
      slot->names.push_back(name_of(slot->all[i]));
      slot->by_name[slot->names.back().key()] = static_cast<int>(i);
      slot->by_basis[projective_key(underlying_basis(slot->all[i]))].push_back(static_cast<int>(i));
    }
  }
  return *slot;
}

int changed_entries(const Name& a, const Name& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.cells().size(); ++i) d += a.cells()[i] != b.cells()[i];
  return d;
}

}  // namespace

int structure_index(const Name& n) {
  if (n.qubits() < 2 || n.qubits() > 3) return -1;
  const auto& t = table(n.qubits());
  auto it = t.by_name.find(n.key());
  return it == t.by_name.end() ? -1 : it->second;
}

Name apply_ent(const Name& n, int m) {
  if (n.qubits() != 3) throw std::invalid_argument("ent maps act on three-qubit names");
  if (m < 0 || m > 2) throw std::invalid_argument("ent index must be 0, 1 or 2");
  const int idx = structure_index(n);
  if (idx < 0) throw std::invalid_argument("not the name of a composite structure: " + n.str());
  const auto& t = table(3);
  const int p = std::min(m, (m + 2) % 3), q = std::max(m, (m + 2) % 3);
  auto it = t.by_basis.find(projective_key(compose_cz_on_legs(t.all[idx], p, q)));
  if (it == t.by_basis.end()) throw std::logic_error("controlled-Z image is not a composite structure");
  const auto& src = t.all[idx];
  auto key = [&](int j) {
    return std::tuple(t.all[j].cons != src.cons, changed_entries(n, t.names[j]), t.names[j].str());
  };
  const int best = *std::min_element(it->second.begin(), it->second.end(),
                                     [&](int a, int b) { return key(a) < key(b); });
  return t.names[best];
}

nlohmann::json clique_record(const ComplementarityGraph& g, const Clique& c) {
  nlohmann::json members = nlohmann::json::array();
  for (int v : c.members) members.push_back(name_of(g.vertices[v]).to_json());
  return {{"members", members}, {"config", {c.config.sc, c.config.bs, c.config.ns}}};
}

std::string config_summary_csv(const std::vector<Clique>& cliques, std::size_t size) {
  std::map<EntConfig, std::size_t> counts;
  for (const auto& c : cliques)
    if (c.members.size() == size) ++counts[c.config];
  std::ostringstream out;
  out << "config,count\n";
  for (const auto& [cfg, k] : counts) out << '"' << cfg.str() << "\"," << k << '\n';
  return out.str();
}

}  // namespace ccs
