#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ccs/constituents.hpp"
#include "ccs/kernel.hpp"

namespace ccs {

/// N constituents joined by connecting wires. Wires are 0-based pairs p < q, kept sorted.
struct CompositeCS {
  std::vector<Constituent> cons;
  std::vector<std::pair<int, int>> wires;

  CompositeCS() = default;
  CompositeCS(std::vector<Constituent> c, std::vector<std::pair<int, int>> w);

  int qubits() const { return static_cast<int>(cons.size()); }
  bool wired(int p, int q) const;
  /// e.g. "ZZX" or "ZZX[13,23]" (1-based wire endpoints).
  std::string str() const;
  static CompositeCS parse(const std::string& s);

  auto operator<=>(const CompositeCS&) const = default;
  bool operator==(const CompositeCS&) const = default;
};

using Basis = std::vector<Ket>;

/// Product kets plus the unitary applied on every leg.
struct DecoratedBasis {
  Basis product;
  Tensor leg;
  Basis kets() const;
};

enum class EntClass { SC, BS, NS };
const char* to_string(EntClass e);

struct EntConfig {
  int sc = 0, bs = 0, ns = 0;
  auto operator<=>(const EntConfig&) const = default;
  std::string str() const;
};

Tensor wire_gadget(Constituent c1, Constituent c2);
Tensor leg_network(const CompositeCS& cs);
Basis product_basis(const std::vector<Constituent>& cons);
Basis underlying_basis(const CompositeCS& cs);
DecoratedBasis decorated_basis(const CompositeCS& cs);

/// Spider with m input and n output legs; each leg is an N-qubit register, legs are stacked in order.
Tensor composite_spider(const CompositeCS& cs, int m, int n);
Tensor composite_spider(const DecoratedBasis& b, int m, int n);

EntClass entanglement_class(const CompositeCS& cs);
bool connected(int n, const std::vector<std::pair<int, int>>& edges);

bool is_complementary(const Basis& a, const Basis& b);
bool is_complementary(const CompositeCS& a, const CompositeCS& b);

/// Complementarity diagram of a against b: multiplication of a after comultiplication of b,
/// with the antipode on the second branch.
Tensor cd_matrix(const Basis& a, const Basis& b);
Tensor cd_matrix(const CompositeCS& a, const CompositeCS& b);
bool is_rank_one(const Tensor& t);

/// Basis after an extra controlled-Z gadget on legs p < q (0-based).
Basis compose_cz_on_legs(const CompositeCS& cs, int p, int q);
DecoratedBasis compose_cz_on_legs(const DecoratedBasis& b, int p, int q);

/// (1,2)-spider of a followed by the (2,1)-spider of b.
Tensor metric_diagram(const DecoratedBasis& a, const DecoratedBasis& b);
Tensor metric_diagram(const CompositeCS& a, const CompositeCS& b);

std::vector<CompositeCS> enumerate_composites(int n);

/// Dimension of the span of the reduced state of `ket` on the qubits in `part`.
int schmidt_rank(const Ket& ket, const std::vector<int>& part);

void to_json(nlohmann::json& j, const CompositeCS& cs);
void from_json(const nlohmann::json& j, CompositeCS& cs);

}  // namespace ccs
