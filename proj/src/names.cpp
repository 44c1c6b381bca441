#include "ccs/names.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ccs {

namespace {

constexpr char symbols[] = {'1', 'Z', 'i', 'j', 'k'};

std::uint8_t map_bits(std::uint8_t bits, const std::array<std::uint8_t, 5>& image) {
  std::uint8_t out = 0;
  for (int s = 0; s < 5; ++s)
    if (bits >> s & 1) out ^= image[s];
  return out;
}

using E = NameEntry;
// Hadamard on a slice: entries in its column, entries in its row, and its first-row entry.
constexpr std::array<std::uint8_t, 5> column_map{E::k, E::Z, E::j, E::i, E::one};
constexpr std::array<std::uint8_t, 5> row_map{E::j, E::Z, E::k, E::one, E::i};
constexpr std::array<std::uint8_t, 5> head_map{E::one | E::Z, E::Z, E::i, E::j, E::k};

}  // namespace

std::string NameEntry::str() const {
  if (bits == 0) return "0";
  std::string s;
  for (int b = 0; b < 5; ++b)
    if (bits >> b & 1) {
      if (!s.empty()) s += '+';
      s += symbols[b];
    }
  return s;
}

NameEntry NameEntry::parse(const std::string& text) {
  NameEntry e;
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "0") return e;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    const std::string tok = s.substr(start, end - start);
    const char* hit = tok.size() == 1 ? std::find(std::begin(symbols), std::end(symbols), tok[0]) : std::end(symbols);
    if (hit == std::end(symbols)) throw std::invalid_argument("bad name entry: " + text);
    e.bits ^= static_cast<std::uint8_t>(1u << (hit - std::begin(symbols)));
    start = end + 1;
  }
  return e;
}

bool Name::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](NameEntry e) { return e.empty(); });
}

bool Name::wires_connected() const {
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q)
      if (!at(p + 1, q).empty()) edges.emplace_back(p, q);
  return connected(n_, edges);
}

std::string Name::key() const {
  std::string k(cells_.size(), '\0');
  for (std::size_t i = 0; i < cells_.size(); ++i) k[i] = static_cast<char>(cells_[i].bits);
  return k;
}

nlohmann::json Name::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r <= n_; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < n_; ++c) row.push_back(at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

std::string Name::str() const { return to_json().dump(); }

Name Name::from_json(const nlohmann::json& j) {
  const int n = static_cast<int>(j.size()) - 1;
  if (n < 1) throw std::invalid_argument("name needs at least two rows");
  Name out(n);
  for (int r = 0; r <= n; ++r) {
    if (static_cast<int>(j[r].size()) != n) throw std::invalid_argument("name rows must have N entries");
    for (int c = 0; c < n; ++c) out.at(r, c) = NameEntry::parse(j[r][c].get<std::string>());
  }
  return out;
}

Name name_of(const CompositeCS& cs) {
  const int n = cs.qubits();
  Name out(n);
  for (int q = 0; q < n; ++q) {
    switch (cs.cons[q]) {
      case Constituent::X: break;
      case Constituent::Y: out.at(0, q).bits = E::one; break;
      case Constituent::Z: out.at(0, q).bits = E::Z; break;
    }
  }
  for (auto [p, q] : cs.wires)
    for (auto [r, c] : {std::pair{p, q}, std::pair{q, p}}) {
      const bool rz = cs.cons[r] == Constituent::Z, cz = cs.cons[c] == Constituent::Z;
      out.at(r + 1, c).bits = rz && cz ? E::i : (!rz && !cz ? E::one : (rz ? E::j : E::k));
    }
  return out;
}

Name star(const Name& a, const Name& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("names of different size");
  Name out(a.qubits());
  for (int r = 0; r <= a.qubits(); ++r)
    for (int c = 0; c < a.qubits(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
  return out;
}

Name permute(const Name& n, const std::vector<int>& perm) {
  const int N = n.qubits();
  Name out(N);
  for (int q = 0; q < N; ++q) {
    out.at(0, perm[q]) = n.at(0, q);
    for (int r = 0; r < N; ++r) out.at(perm[r] + 1, perm[q]) = n.at(r + 1, q);
  }
  return out;
}

Name hadamard_slice(const Name& n, int p) {
  const int N = n.qubits();
  Name out = n;
  for (int r = 0; r < N; ++r) {
    if (r == p) continue;
    out.at(r + 1, p).bits = map_bits(n.at(r + 1, p).bits, column_map);
    out.at(p + 1, r).bits = map_bits(n.at(p + 1, r).bits, row_map);
  }
  out.at(0, p).bits = map_bits(n.at(0, p).bits, head_map);
  return out;
}

std::optional<Name> relabel_slice(const Name& n, int p) {
  if (!n.at(0, p).has(E::Z)) return std::nullopt;
  for (int r = 0; r < n.qubits(); ++r)
    if (r != p && (n.at(r + 1, p).bits & (E::i | E::k))) return std::nullopt;
  Name out = n;
  out.at(0, p).bits ^= E::one;
  return out;
}

Name canonical_under_permutation(const Name& n) {
  std::vector<int> perm(static_cast<std::size_t>(n.qubits()));
  std::iota(perm.begin(), perm.end(), 0);
  Name best = n;
  std::string best_key = n.key();
  do {
    Name m = permute(n, perm);
    std::string k = m.key();
    if (k < best_key) {
      best_key = std::move(k);
      best = std::move(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

NameSet orbit_closure(const std::vector<Name>& seeds, bool relabel) {
  NameSet seen(seeds.begin(), seeds.end());
  std::vector<Name> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    const Name x = std::move(stack.back());
    stack.pop_back();
    const int N = x.qubits();
    std::vector<Name> next;
    for (int p = 0; p < N; ++p) {
      next.push_back(hadamard_slice(x, p));
      if (relabel)
        if (auto r = relabel_slice(x, p)) next.push_back(*r);
      for (int q = p + 1; q < N; ++q) {
        std::vector<int> t(static_cast<std::size_t>(N));
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[p], t[q]);
        next.push_back(permute(x, t));
      }
    }
    for (auto& y : next)
      if (seen.insert(y).second) stack.push_back(std::move(y));
  }
  return seen;
}

NameSet equiv_orbit(const Name& n) { return orbit_closure({n}); }

bool pruned_column(const Name& n) {
  for (int p = 0; p < n.qubits(); ++p) {
    if (n.at(0, p).bits != (E::one | E::Z)) continue;
    bool has_ik = false;
    for (int r = 0; r < n.qubits(); ++r)
      if (r != p && (n.at(r + 1, p).bits & (E::i | E::k))) has_ik = true;
    if (!has_ik) return true;
  }
  return false;
}

namespace {

enum class Need { a_wired, b_wired };

// Admissible slices: constituent pair on the qubit and which side must carry a wire there.
std::optional<Need> slice_rule(Constituent a, Constituent b) {
  using C = Constituent;
  if (a == C::X && b == C::Z) return Need::a_wired;
  if (a == C::Y && b == C::X) return Need::a_wired;
  if (a == C::Y && b == C::Y) return Need::a_wired;
  if (a == C::Y && b == C::Z) return Need::b_wired;
  if (a == C::Z && b == C::X) return Need::b_wired;
  if (a == C::Z && b == C::Y) return Need::a_wired;
  return std::nullopt;
}

bool touches(const CompositeCS& cs, int p) {
  return std::any_of(cs.wires.begin(), cs.wires.end(), [p](auto w) { return w.first == p || w.second == p; });
}

bool admissible(const CompositeCS& a, const CompositeCS& b) {
  for (int p = 0; p < a.qubits(); ++p) {
    auto need = slice_rule(a.cons[p], b.cons[p]);
    if (!need) return false;
    if (!touches(*need == Need::a_wired ? a : b, p)) return false;
  }
  return true;
}

}  // namespace

std::vector<GeneratorCD> enumerate_generators(int n) {
  const auto all = enumerate_composites(n);
  std::map<std::string, GeneratorCD> reps;
  for (const auto& a : all)
    for (const auto& b : all) {
      if (!admissible(a, b)) continue;
      Name cd = star(name_of(a), name_of(b));
      if (!cd.wires_connected()) continue;
      cd = canonical_under_permutation(cd);
      reps.try_emplace(cd.key(), GeneratorCD{a, b, cd, false, pruned_column(cd)});
    }
  std::vector<GeneratorCD> out;
  for (auto& [k, g] : reps) {
    g.passes = is_complementary(g.a, g.b);
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.cd < y.cd; });
  return out;
}

std::vector<NameEntry> single_qubit_passes() {
  std::vector<NameEntry> out;
  for (auto a : all_constituents)
    for (auto b : all_constituents) {
      const CompositeCS ca({a}, {}), cb({b}, {});
      if (!is_complementary(underlying_basis(ca), underlying_basis(cb))) continue;
      Name cd = star(name_of(ca), name_of(cb));
      if (pruned_column(cd)) continue;
      if (std::find(out.begin(), out.end(), cd.at(0, 0)) == out.end()) out.push_back(cd.at(0, 0));
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Name> entangled_passes(int n) {
  std::vector<Name> out;
  for (const auto& g : enumerate_generators(n))
    if (g.passes && !g.pruned) out.push_back(g.cd);
  return out;
}

// Places a lower-width name on the leading qubits and a fixed first-row entry on each remaining qubit.
Name lift(const Name& small, const std::vector<NameEntry>& tail) {
  const int m = small.qubits(), n = m + static_cast<int>(tail.size());
  Name out(n);
  for (int q = 0; q < m; ++q) {
    out.at(0, q) = small.at(0, q);
    for (int r = 0; r < m; ++r) out.at(r + 1, q) = small.at(r + 1, q);
  }
  for (std::size_t t = 0; t < tail.size(); ++t) out.at(0, m + static_cast<int>(t)) = tail[t];
  return out;
}

}  // namespace

std::vector<Name> pass_set(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("pass set supports 2 or 3 qubits");
  std::vector<Name> out = entangled_passes(n);
  const auto singles = single_qubit_passes();
  std::vector<NameEntry> row(static_cast<std::size_t>(n));
  auto fill = [&](auto&& self, int q) -> void {
    if (q == n) {
      Name sep(n);
      for (int c = 0; c < n; ++c) sep.at(0, c) = row[c];
      out.push_back(sep);
      return;
    }
    for (auto e : singles) {
      row[q] = e;
      self(self, q + 1);
    }
  };
  fill(fill, 0);
  for (int m = 2; m < n; ++m)
    for (const auto& low : entangled_passes(m))
      for (auto e : singles) out.push_back(lift(low, std::vector<NameEntry>(static_cast<std::size_t>(n - m), e)));
  return out;
}

std::vector<Name> pass_set_up_to_permutation(int n) {
  std::vector<Name> out;
  for (const auto& x : pass_set(n)) out.push_back(canonical_under_permutation(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NameSet build_test_set(int n, bool relabel) { return orbit_closure(pass_set(n), relabel); }

bool name_test(const CompositeCS& a, const CompositeCS& b, const NameSet& t) {
  return t.count(star(name_of(a), name_of(b))) > 0;
}

}  // namespace ccs
