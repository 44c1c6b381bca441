#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ccs/zx.hpp"

using namespace ccs;
using namespace ccs::zx;

TEST_CASE("generator interpretations") {
  CHECK(eval_diagram(single(Generator::green(1, 1))) == Tensor::identity(1));
  const Tensor unit = eval_diagram(single(Generator::green(0, 1)));
  CHECK(unit == Tensor::ket({ExactScalar::one(), ExactScalar::one()}));
  CHECK(eval_diagram(Diagram{{{Generator::had()}, {Generator::had()}}}) == Tensor::identity(1));
  CHECK(eval_generator(Generator::star()) == Tensor::scalar(ExactScalar::half()));
  CHECK(eval_generator(Generator::green(0, 0, 2)).is_zero());
  CHECK(eval_generator(Generator::green(0, 0, 0)) == Tensor::scalar(ExactScalar::integer(2)));
  CHECK(eval_generator(Generator::green(1, 1, 1)) == phase_gate());
  CHECK(eval_generator(Generator::red(1, 1, 2)) == pauli_x());
  CHECK(eval_generator(Generator::cap()) == dagger(eval_generator(Generator::cup())));
  CHECK(eval_generator(Generator::swap()) == swap_gate());
}

TEST_CASE("diagram width errors") {
  Diagram bad{{{Generator::green(1, 2)}, {Generator::wire()}}};
  CHECK_THROWS_AS(eval_diagram(bad), ShapeError);
}

TEST_CASE("builders") {
  CHECK(proportional(eval_diagram(cz_between(2, 0, 1)), cz()));
  CHECK(proportional(eval_diagram(cz_between(3, 0, 2)), embed_two(cz(), 3, 0, 2)));
  Tensor hh = tensor_product(hadamard(), hadamard());
  CHECK(proportional(eval_diagram(red_edge_between(2, 0, 1)), compose(hh, compose(cz(), hh))));
  // out[perm[i]] = in[i]: sending qubit 0 to position 2 on |100> gives |001>
  Tensor p = eval_diagram(permutation({2, 0, 1}));
  CHECK(compose(p, basis_ket(3, 4)) == basis_ket(3, 1));
  CHECK(eval_diagram(permutation({0, 1})) == Tensor::identity(2));
}

TEST_CASE("named rules") {
  CHECK(verify_rule("zx11").holds_up_to_scalar);
  CHECK(verify_rule("dzx1").holds_up_to_scalar);
  CHECK(verify_rule("zx13").holds_up_to_scalar);
  CHECK_THROWS_AS(verify_rule("zx99"), std::invalid_argument);
}

TEST_CASE("every catalogued rule holds") {
  for (const auto& r : rule_catalog()) {
    CAPTURE(r.id);
    auto v = verify_rule(r);
    CHECK(v.holds_up_to_scalar);
    CHECK(v.instances == static_cast<int>(r.instances.size()));
  }
}

TEST_CASE("catalogue covers the required identifiers") {
  for (std::string id : {"zx1", "zx2", "zx3", "zx4", "zx5", "zx6", "zx7", "zx8", "zx9", "zx10", "zx11", "zx12",
                         "zx13", "zx14", "zx15", "zx16", "dzx1", "dzx2", "dzx3", "dzx4", "dzx5", "dzx6", "dzx7",
                         "hopf-had-green", "hopf-had-red", "gen-bialg-2x2", "gen-bialg-2x3", "y-equiv-1",
                         "y-equiv-2", "cw-delete", "cw-xy-delete", "cw-xy-generate", "cw-z-same", "cw-swap"})
    CHECK_NOTHROW(find_rule(id));
}

TEST_CASE("fuse rules cover all phases") {
  const auto& r = find_rule("zx1");
  std::set<int> phases;
  for (const auto& inst : r.instances) phases.insert(inst.lhs.layers[0][0].phase);
  CHECK(phases.size() == 4);
}

TEST_CASE("mutation oracle") {
  int detected = 0;
  for (const auto& r : rule_catalog()) detected += !verify_rule(mutate_with_pi(r)).holds_up_to_scalar;
  CHECK(detected >= 10);
  CHECK_FALSE(verify_rule(mutate_with_pi(find_rule("dzx1"))).holds_up_to_scalar);
}

TEST_CASE("Euler chain is proportional to the Hadamard") {
  Diagram chain{{{Generator::green(1, 1, 1)}, {Generator::red(1, 1, 1)}, {Generator::green(1, 1, 1)}}};
  auto s = proportional(eval_diagram(chain), hadamard());
  REQUIRE(s);
  CHECK_FALSE(s->is_zero());
}

TEST_CASE("scalar rules are exact") {
  for (std::string id : {"zx15", "zx16", "dzx4"}) {
    CAPTURE(id);
    const auto& r = find_rule(id);
    CHECK(r.scalar_rule);
    for (const auto& inst : r.instances) CHECK(eval_diagram(inst.lhs) == eval_diagram(inst.rhs));
  }
}
