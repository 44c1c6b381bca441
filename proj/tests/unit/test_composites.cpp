#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ccs/composites.hpp"

using namespace ccs;

namespace {

CompositeCS cs(const std::string& s) { return CompositeCS::parse(s); }

Tensor power(const Tensor& t, int n) {
  Tensor acc = Tensor::identity(0);
  for (int i = 0; i < n; ++i) acc = tensor_product(acc, t);
  return acc;
}

// Same kets up to per-ket scalars, in any order.
bool same_rays(const Basis& a, const Basis& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a) {
    bool hit = false;
    for (const auto& w : b) hit = hit || proportional(v, w).has_value();
    if (!hit) return false;
  }
  return true;
}

bool product_state(const Ket& k) {
  for (int q = 0; q < k.out_qubits(); ++q)
    if (schmidt_rank(k, {q}) != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("structure parsing and printing") {
  CHECK(cs("ZZX[13,23]").str() == "ZZX[13,23]");
  CHECK(cs("ZZX[23,13]") == cs("ZZX[13,23]"));
  CHECK(cs("XY").wires.empty());
  CHECK_THROWS(cs("XQ"));
  CHECK_THROWS(CompositeCS({Constituent::X, Constituent::Y}, {{0, 2}}));
  nlohmann::json j = cs("ZZX[13,23]");
  CHECK(j.dump() == R"({"constituents":["Z","Z","X"],"n":3,"wires":[[1,3],[2,3]]})");
  CHECK(j.get<CompositeCS>() == cs("ZZX[13,23]"));
}

TEST_CASE("wire gadgets") {
  CHECK(wire_gadget(Constituent::X, Constituent::Z) == cnot());
  CHECK(wire_gadget(Constituent::X, Constituent::X) == cz());
  Tensor hh = tensor_product(hadamard(), hadamard());
  CHECK(wire_gadget(Constituent::Z, Constituent::Z) == compose(hh, compose(cz(), hh)));
  for (auto c1 : all_constituents)
    for (auto c2 : all_constituents) {
      Tensor u = wire_gadget(c1, c2);
      CHECK(compose(dagger(u), u) == Tensor::identity(2));
      for (const auto& a : constituent_basis(c1))
        for (const auto& b : constituent_basis(c2)) CHECK(schmidt_rank(compose(u, tensor_product(a, b)), {0}) == 2);
    }
}

TEST_CASE("leg networks") {
  CHECK(leg_network(cs("XYZ")) == Tensor::identity(3));
  CHECK(leg_network(cs("XZ[12]")) == cnot());
  const auto c = cs("ZZX[13,23]");
  Tensor g13 = embed_two(wire_gadget(Constituent::Z, Constituent::X), 3, 0, 2);
  Tensor g23 = embed_two(wire_gadget(Constituent::Z, Constituent::X), 3, 1, 2);
  CHECK(compose(g13, g23) == compose(g23, g13));
  CHECK(leg_network(c) == compose(g13, g23));
}

TEST_CASE("underlying bases") {
  auto x = constituent_basis(Constituent::X);
  Basis xz;
  for (const auto& a : x)
    for (std::size_t z = 0; z < 2; ++z) xz.push_back(tensor_product(a, basis_ket(1, z)));
  CHECK(same_rays(underlying_basis(cs("XZ")), xz));
  Basis comp;
  for (std::size_t s = 0; s < 4; ++s) comp.push_back(basis_ket(2, s));
  CHECK(underlying_basis(cs("ZZ")) == comp);
  for (const auto& k : underlying_basis(cs("XZ[12]"))) CHECK(schmidt_rank(k, {0}) == 2);
  Basis cnot_images;
  for (const auto& k : xz) cnot_images.push_back(compose(cnot(), k));
  CHECK(same_rays(underlying_basis(cs("XZ[12]")), cnot_images));
}

TEST_CASE("orthonormality of every basis") {
  int count = 0;
  for (int n = 2; n <= 3; ++n)
    for (const auto& c : enumerate_composites(n)) {
      ++count;
      const Basis b = underlying_basis(c);
      REQUIRE(b.size() == (std::size_t{1} << n));
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          CHECK(inner(b[i], b[j]) == (i == j ? ExactScalar::one() : ExactScalar::zero()));
    }
  CHECK(count == 234);
}

TEST_CASE("entanglement of bases follows the wire graph") {
  for (const auto& c : enumerate_composites(3)) {
    const auto cls = entanglement_class(c);
    for (const auto& k : underlying_basis(c)) {
      if (cls == EntClass::SC) CHECK(product_state(k));
      if (cls == EntClass::NS)
        for (int q = 0; q < 3; ++q) CHECK(schmidt_rank(k, {q}) == 2);
      if (cls == EntClass::BS) {
        const auto [p, q] = c.wires.front();
        CHECK(schmidt_rank(k, {3 - p - q}) == 1);
        CHECK(schmidt_rank(k, {p}) == 2);
      }
    }
  }
}

TEST_CASE("composite spiders") {
  CHECK(composite_spider(cs("ZZ"), 1, 1) == Tensor::identity(2));
  const auto xz = cs("XZ[12]");
  Tensor units = tensor_product(constituent_spider(Constituent::X, 0, 1), constituent_spider(Constituent::Z, 0, 1));
  CHECK(proportional(composite_spider(xz, 0, 1), compose(cnot(), units)));
  CHECK(proportional(compose(composite_spider(xz, 1, 2), composite_spider(xz, 2, 1)), composite_spider(xz, 2, 2)));
  CHECK_THROWS(composite_spider(xz, 0, 0));
  // the decorated form agrees with the basis sum
  for (const auto& c : enumerate_composites(2))
    CHECK(composite_spider(decorated_basis(c), 1, 2) == composite_spider(c, 1, 2));
}

TEST_CASE("copyability") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& c : enumerate_composites(n)) {
      const Tensor copy = composite_spider(c, 1, 2), del = composite_spider(c, 1, 0);
      for (const auto& v : underlying_basis(c)) {
        CHECK(proportional(compose(copy, v), tensor_product(v, v)));
        CHECK_FALSE(compose(del, v).is_zero());
      }
    }
}

TEST_CASE("fusion on two-qubit structures") {
  std::mt19937 rng(5);
  for (const auto& c : enumerate_composites(2))
    for (int m1 = 0; m1 <= 2; ++m1)
      for (int n2 = 0; n2 <= 2; ++n2) {
        if (m1 + n2 == 0) continue;
        Tensor joined = compose(composite_spider(c, 1, n2), composite_spider(c, m1, 1));
        CHECK(proportional(joined, composite_spider(c, m1, n2)));
      }
  // leg permutation invariance: swapping the two output registers
  const auto c = cs("YX[12]");
  Tensor swap_regs = compose(embed_two(swap_gate(), 4, 1, 3), embed_two(swap_gate(), 4, 0, 2));
  CHECK(compose(swap_regs, composite_spider(c, 1, 2)) == composite_spider(c, 1, 2));
}

TEST_CASE("entanglement classes") {
  CHECK(entanglement_class(cs("XYZ")) == EntClass::SC);
  CHECK(entanglement_class(cs("XYZ[12]")) == EntClass::BS);
  CHECK(entanglement_class(cs("XYZ[12,23]")) == EntClass::NS);
  CHECK(entanglement_class(cs("XY[12]")) == EntClass::NS);
}

TEST_CASE("semantic complementarity") {
  CHECK(is_complementary(cs("ZZ"), cs("XX")));
  CHECK_FALSE(is_complementary(cs("ZZ"), cs("ZZ")));
  CHECK_FALSE(is_complementary(cs("ZZ"), cs("ZX")));
  const std::vector<CompositeCS> set{cs("XX"), cs("XY[12]"), cs("YX[12]"), cs("YY"), cs("ZZ")};
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) CHECK(is_complementary(set[a], set[b]));
}

TEST_CASE("complementarity diagram") {
  CHECK_FALSE(is_rank_one(cd_matrix(cs("ZZ"), cs("ZZ"))));
  CHECK(is_rank_one(cd_matrix(cs("ZZ"), cs("XX"))));
  CHECK_FALSE(is_rank_one(cd_matrix(cs("ZZ"), cs("ZX"))));
  // closed form sum |<v|w>|^2 |v><w|
  const Basis a = underlying_basis(cs("YX[12]")), b = underlying_basis(cs("ZY"));
  Tensor closed(2, 2);
  for (const auto& v : a)
    for (const auto& w : b) closed = closed + compose(v, dagger(w)).scaled(inner(v, w).norm2());
  CHECK(cd_matrix(a, b) == closed);
}

TEST_CASE("CD rank one agrees with unbiasedness on every pair") {
  for (int n = 2; n <= 3; ++n) {
    const auto all = enumerate_composites(n);
    std::vector<Basis> bases;
    for (const auto& c : all) bases.push_back(underlying_basis(c));
    int pairs = 0, disagree = 0;
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        ++pairs;
        disagree += is_rank_one(cd_matrix(bases[a], bases[b])) != is_complementary(bases[a], bases[b]);
      }
    CHECK(disagree == 0);
    CHECK(pairs == (n == 2 ? 153 : 23220));
  }
}

TEST_CASE("stripping the outer legs leaves complementarity unchanged") {
  const auto all = enumerate_composites(2);
  for (const auto& a : all)
    for (const auto& b : all) {
      const Tensor u = leg_network(a);
      Tensor stripped = compose(dagger(u), compose(cd_matrix(a, b), u));
      CHECK(is_rank_one(stripped) == is_complementary(a, b));
    }
}

TEST_CASE("controlled-Z on legs") {
  for (const auto& k : compose_cz_on_legs(cs("XY[12]"), 0, 1)) CHECK(product_state(k));
  for (const auto& k : compose_cz_on_legs(cs("XY"), 0, 1)) CHECK(schmidt_rank(k, {0}) == 2);
  for (const auto& k : compose_cz_on_legs(cs("ZZ"), 0, 1)) CHECK(product_state(k));
  // leg CZ after the Z<>Z gadget equals swap . (H x H) after the leg CZ on ZZ
  Tensor hh = tensor_product(hadamard(), hadamard());
  Basis moved;
  for (const auto& k : compose_cz_on_legs(cs("ZZ"), 0, 1)) moved.push_back(compose(swap_gate(), compose(hh, k)));
  const Basis zz_wired = compose_cz_on_legs(cs("ZZ[12]"), 0, 1);
  CHECK(same_rays(zz_wired, moved));
  CHECK(same_rays(zz_wired, underlying_basis(cs("XX"))));
}

TEST_CASE("metric diagrams") {
  for (const auto& c : enumerate_composites(2)) CHECK(proportional(metric_diagram(c, c), Tensor::identity(2)));
  CHECK(is_rank_one(metric_diagram(cs("ZZ"), cs("XX"))));
  const auto zz = decorated_basis(cs("ZZ"));
  CHECK(proportional(metric_diagram(zz, compose_cz_on_legs(zz, 0, 1)), cz()));
}

TEST_CASE("enumeration") {
  const auto two = enumerate_composites(2);
  CHECK(two.size() == 18);
  CHECK(std::count_if(two.begin(), two.end(), [](const auto& c) { return c.wires.empty(); }) == 9);
  CHECK(two.front().str() == "XX");
  CHECK(two[1].str() == "XX[12]");
  const auto three = enumerate_composites(3);
  CHECK(three.size() == 216);
  CHECK(three[7].str() == "XXX[12,13,23]");
  CHECK_THROWS(enumerate_composites(4));
}
