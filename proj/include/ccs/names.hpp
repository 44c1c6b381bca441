#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "ccs/composites.hpp"

namespace ccs {

/// Formal sum over {1, Z, i, j, k} with coefficients mod 2.
struct NameEntry {
  static constexpr std::uint8_t one = 1, Z = 2, i = 4, j = 8, k = 16;
  std::uint8_t bits = 0;

  bool empty() const { return bits == 0; }
  bool has(std::uint8_t s) const { return (bits & s) != 0; }
  NameEntry operator+(NameEntry o) const { return {static_cast<std::uint8_t>(bits ^ o.bits)}; }
  auto operator<=>(const NameEntry&) const = default;

  std::string str() const;
  static NameEntry parse(const std::string& s);
};

/// (N+1) x N grid; row 0 holds constituents, row p+1 the wires leaving qubit p.
class Name {
 public:
  Name() = default;
  explicit Name(int n) : n_(n), cells_(static_cast<std::size_t>((n + 1) * n)) {}

  int qubits() const { return n_; }
  NameEntry& at(int r, int c) { return cells_[r * n_ + c]; }
  NameEntry at(int r, int c) const { return cells_[r * n_ + c]; }
  const std::vector<NameEntry>& cells() const { return cells_; }

  bool is_zero() const;
  /// True when the wire rows, read as a graph on the qubits, connect all of them.
  bool wires_connected() const;
  std::string key() const;
  std::string str() const;
  nlohmann::json to_json() const;
  static Name from_json(const nlohmann::json& j);

  auto operator<=>(const Name&) const = default;
  bool operator==(const Name&) const = default;

 private:
  int n_ = 0;
  std::vector<NameEntry> cells_;
};

struct NameHash {
  std::size_t operator()(const Name& n) const { return std::hash<std::string>{}(n.key()); }
};
using NameSet = std::unordered_set<Name, NameHash>;

Name name_of(const CompositeCS& cs);
Name star(const Name& a, const Name& b);

// Orbit moves.
Name permute(const Name& n, const std::vector<int>& perm);  // qubit q goes to perm[q]
Name hadamard_slice(const Name& n, int p);
/// Z -> 1+Z relabel on column p; nullopt when the column is not eligible.
std::optional<Name> relabel_slice(const Name& n, int p);
Name canonical_under_permutation(const Name& n);

NameSet equiv_orbit(const Name& n);
/// Closure under qubit permutations, slice Hadamards and, when `relabel` is set, the Z -> 1+Z move.
NameSet orbit_closure(const std::vector<Name>& seeds, bool relabel = true);

/// Column whose first entry is 1+Z while no wire entry in it carries i or k.
bool pruned_column(const Name& n);

struct GeneratorCD {
  CompositeCS a, b;
  Name cd;  // canonical under qubit permutation
  bool passes = false;
  bool pruned = false;
};

/// Entangled generator representatives, one per CD name up to qubit permutation.
std::vector<GeneratorCD> enumerate_generators(int n);
/// Names of the single-qubit complementarity diagrams that pass, after the 1+Z filter.
std::vector<NameEntry> single_qubit_passes();
/// Pass set before orbit expansion: entangled passes, separable and lifted biseparable seeds.
std::vector<Name> pass_set(int n);
/// Pass set reduced modulo qubit permutation, sorted.
std::vector<Name> pass_set_up_to_permutation(int n);

NameSet build_test_set(int n, bool relabel = true);
bool name_test(const CompositeCS& a, const CompositeCS& b, const NameSet& t);

}  // namespace ccs
