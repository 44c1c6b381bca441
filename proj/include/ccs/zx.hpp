#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccs/kernel.hpp"

namespace ccs::zx {

enum class Kind { green_spider, red_spider, hadamard, star, wire, swap, cup, cap };

/// Phases are counted in quarter turns: 0, 1 (pi/2), 2 (pi), 3 (-pi/2).
struct Generator {
  Kind kind = Kind::wire;
  int inputs = 1;
  int outputs = 1;
  int phase = 0;

  static Generator green(int m, int n, int phase = 0) { return {Kind::green_spider, m, n, phase & 3}; }
  static Generator red(int m, int n, int phase = 0) { return {Kind::red_spider, m, n, phase & 3}; }
  static Generator had() { return {Kind::hadamard, 1, 1, 0}; }
  static Generator star() { return {Kind::star, 0, 0, 0}; }
  static Generator wire() { return {Kind::wire, 1, 1, 0}; }
  static Generator swap() { return {Kind::swap, 2, 2, 0}; }
  static Generator cup() { return {Kind::cup, 0, 2, 0}; }
  static Generator cap() { return {Kind::cap, 2, 0, 0}; }
};

using Layer = std::vector<Generator>;

/// Layered circuit; layer 0 acts first.
struct Diagram {
  std::vector<Layer> layers;
  int inputs() const;
  int outputs() const;
};

Tensor eval_generator(const Generator& g);
Tensor eval_diagram(const Diagram& d);

// Building blocks.
Layer wires(int n);
Layer with_wires(int before, const Generator& g, int after);
Diagram sequence(const std::vector<Diagram>& parts);
Diagram parallel(const Diagram& a, const Diagram& b);
Diagram single(const Generator& g);
Diagram identity(int n);
/// Swap network realizing out[perm[i]] = in[i].
Diagram permutation(const std::vector<int>& perm);
/// Green-green connecting wire through a Hadamard on qubits (p, q) of n wires: CZ.
Diagram cz_between(int n, int p, int q);
/// Red-red connecting wire: (H x H) CZ (H x H).
Diagram red_edge_between(int n, int p, int q);
/// All pairwise green-green connecting wires among n wires.
Diagram cz_cascade(int n);

struct Verdict {
  bool holds_up_to_scalar = false;
  std::optional<ExactScalar> scalar;
  int instances = 0;
};

struct Instance {
  std::string label;
  Diagram lhs;
  Diagram rhs;
};

struct Rule {
  std::string id;
  std::string title;
  bool scalar_rule = false;  // checked as an exact equality of scalars
  std::vector<Instance> instances;
};

const std::vector<Rule>& rule_catalog();
const Rule& find_rule(const std::string& id);
Verdict verify_rule(const Rule& rule);
Verdict verify_rule(const std::string& id);

/// Injects one pi phase into the left-hand side of every instance.
Rule mutate_with_pi(const Rule& rule);

}  // namespace ccs::zx
