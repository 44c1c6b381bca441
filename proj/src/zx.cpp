#include "ccs/zx.hpp"

#include <algorithm>
#include <numeric>

namespace ccs::zx {

namespace {

Tensor green_tensor(int m, int n, int phase) {
  Tensor t(m, n);
  t.at(0, 0) += ExactScalar::one();
  t.at(t.rows() - 1, t.cols() - 1) += ExactScalar::quarter_turn(phase);
  return t;
}

Tensor power(const Tensor& g, int n) {
  Tensor t = Tensor::identity(0);
  for (int i = 0; i < n; ++i) t = tensor_product(t, g);
  return t;
}

int width_in(const Layer& l) {
  int w = 0;
  for (const auto& g : l) w += g.inputs;
  return w;
}

int width_out(const Layer& l) {
  int w = 0;
  for (const auto& g : l) w += g.outputs;
  return w;
}

}  // namespace

int Diagram::inputs() const { return layers.empty() ? 0 : width_in(layers.front()); }
int Diagram::outputs() const { return layers.empty() ? 0 : width_out(layers.back()); }

Tensor eval_generator(const Generator& g) {
  switch (g.kind) {
    case Kind::green_spider: return green_tensor(g.inputs, g.outputs, g.phase);
    case Kind::red_spider: {
      Tensor h = hadamard();
      return compose(power(h, g.outputs), compose(green_tensor(g.inputs, g.outputs, g.phase), power(h, g.inputs)));
    }
    case Kind::hadamard: return hadamard();
    case Kind::star: return Tensor::scalar(ExactScalar::half());
    case Kind::wire: return Tensor::identity(1);
    case Kind::swap: return swap_gate();
    case Kind::cup: {
      Tensor t(0, 2);
      t.at(0, 0) = ExactScalar::one();
      t.at(3, 0) = ExactScalar::one();
      return t;
    }
    case Kind::cap: {
      Tensor t(2, 0);
      t.at(0, 0) = ExactScalar::one();
      t.at(0, 3) = ExactScalar::one();
      return t;
    }
  }
  throw std::logic_error("unknown generator");
}

Tensor eval_diagram(const Diagram& d) {
  if (d.layers.empty()) return Tensor::identity(0);
  Tensor acc = Tensor::identity(d.inputs());
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const Layer& layer = d.layers[i];
    if (width_in(layer) != acc.out_qubits())
      throw ShapeError("layer " + std::to_string(i) + " expects " + std::to_string(width_in(layer)) +
                       " wires but receives " + std::to_string(acc.out_qubits()));
    Tensor lt = Tensor::identity(0);
    for (const auto& g : layer) lt = tensor_product(lt, eval_generator(g));
    acc = compose(lt, acc);
  }
  return acc;
}

Layer wires(int n) { return Layer(static_cast<std::size_t>(n), Generator::wire()); }

Layer with_wires(int before, const Generator& g, int after) {
  Layer l = wires(before);
  l.push_back(g);
  for (int i = 0; i < after; ++i) l.push_back(Generator::wire());
  return l;
}

Diagram sequence(const std::vector<Diagram>& parts) {
  Diagram d;
  for (const auto& p : parts) d.layers.insert(d.layers.end(), p.layers.begin(), p.layers.end());
  return d;
}

Diagram parallel(const Diagram& a, const Diagram& b) {
  std::size_t depth = std::max(a.layers.size(), b.layers.size());
  Diagram d;
  for (std::size_t i = 0; i < depth; ++i) {
    Layer l = i < a.layers.size() ? a.layers[i] : wires(a.outputs());
    const Layer r = i < b.layers.size() ? b.layers[i] : wires(b.outputs());
    l.insert(l.end(), r.begin(), r.end());
    d.layers.push_back(std::move(l));
  }
  return d;
}

Diagram single(const Generator& g) { return Diagram{{Layer{g}}}; }

Diagram identity(int n) { return Diagram{{wires(n)}}; }

Diagram permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> arr(perm.size());
  std::iota(arr.begin(), arr.end(), 0);
  Diagram d;
  for (bool moved = true; moved;) {
    moved = false;
    for (int p = 0; p + 1 < n; ++p)
      if (perm[arr[p]] > perm[arr[p + 1]]) {
        std::swap(arr[p], arr[p + 1]);
        d.layers.push_back(with_wires(p, Generator::swap(), n - p - 2));
        moved = true;
      }
  }
  if (d.layers.empty()) d = identity(n);
  return d;
}

namespace {

// Moves wire q next to p (p < q) and back again.
std::pair<Diagram, Diagram> bring_adjacent(int n, int p, int q) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int w = p + 1; w < q; ++w) perm[w] = w + 1;
  perm[q] = p + 1;
  std::vector<int> inv(perm.size());
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  return {permutation(perm), permutation(inv)};
}

Diagram adjacent_edge(int n, int p, bool red) {
  Generator split = red ? Generator::red(1, 2) : Generator::green(1, 2);
  Layer l1 = wires(p);
  l1.push_back(split);
  l1.push_back(split);
  for (int i = p + 2; i < n; ++i) l1.push_back(Generator::wire());
  Diagram d{{l1, with_wires(p + 1, Generator::had(), n + 2 - p - 2),
             with_wires(p + 1, Generator::cap(), n + 2 - p - 3)}};
  return d;
}

Diagram edge_between(int n, int p, int q, bool red) {
  if (p > q) std::swap(p, q);
  auto [to, back] = bring_adjacent(n, p, q);
  return sequence({to, adjacent_edge(n, p, red), back});
}

}  // namespace

Diagram cz_between(int n, int p, int q) { return edge_between(n, p, q, false); }
Diagram red_edge_between(int n, int p, int q) { return edge_between(n, p, q, true); }

Diagram cz_cascade(int n) {
  std::vector<Diagram> parts{identity(n)};
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) parts.push_back(cz_between(n, p, q));
  return sequence(parts);
}

namespace {

using G = Generator;

Diagram layer_of(std::vector<Generator> gs) { return Diagram{{Layer(std::move(gs))}}; }

Diagram repeat(const Generator& g, int n) {
  if (n == 0) return Diagram{};
  return layer_of(std::vector<Generator>(static_cast<std::size_t>(n), g));
}

const char* phase_name(int q) {
  static const char* names[] = {"0", "pi/2", "pi", "-pi/2"};
  return names[q & 3];
}

// Ys spider via the controlled-Z cascade on each side of an X spider.
Diagram y_via_cz(int m, int n) {
  std::vector<Diagram> parts;
  if (m > 1) parts.push_back(cz_cascade(m));
  parts.push_back(single(G::red(m, n)));
  if (n > 1) parts.push_back(cz_cascade(n));
  return sequence(parts);
}

Diagram y_phase_form(int m, int n) {
  std::vector<Diagram> parts;
  if (m > 0) parts.push_back(repeat(G::green(1, 1, 3), m));
  parts.push_back(single(G::red(m, n)));
  if (n > 0) parts.push_back(repeat(G::green(1, 1, 1), n));
  return sequence(parts);
}

// Complete bipartite: g green nodes with one input each, r red nodes with one output each.
Diagram complete_bipartite(int g, int r) {
  std::vector<int> perm(static_cast<std::size_t>(g * r));
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < r; ++b) perm[a * r + b] = b * g + a;
  return sequence({repeat(G::green(1, r), g), permutation(perm), repeat(G::red(g, 1), r)});
}


std::vector<Rule> build_catalog() {
  std::vector<Rule> rules;
  auto add = [&](std::string id, std::string title, bool scalar, std::vector<Instance> inst) {
    rules.push_back(Rule{std::move(id), std::move(title), scalar, std::move(inst)});
  };
  auto fuse = [](bool red) {
    std::vector<Instance> v;
    auto sp = [red](int m, int n, int a) { return red ? G::red(m, n, a) : G::green(m, n, a); };
    for (int m1 = 1; m1 <= 2; ++m1)
      for (int a = 0; a <= 1; ++a)
        for (int m2 = 0; m2 <= 1; ++m2)
          for (int n2 = 1; n2 <= 2; ++n2)
            for (int al = 0; al < 4; ++al)
              for (int be = 0; be < 4; ++be) {
                Layer l1{sp(m1, a + 1, al)};
                for (int i = 0; i < m2; ++i) l1.push_back(G::wire());
                Layer l2 = wires(a);
                l2.push_back(sp(1 + m2, n2, be));
                v.push_back({"m1=" + std::to_string(m1) + " a=" + std::to_string(a) + " m2=" +
                                 std::to_string(m2) + " n2=" + std::to_string(n2) + " " + phase_name(al) +
                                 "," + phase_name(be),
                             Diagram{{l1, l2}}, single(sp(m1 + m2, a + n2, al + be))});
              }
    return v;
  };
  add("zx1", "green fuse", false, fuse(false));
  add("zx2", "red fuse", false, fuse(true));

  auto loop = [](bool red) {
    std::vector<Instance> v;
    for (int m = 1; m <= 2; ++m)
      for (int al = 0; al < 4; ++al) {
        Generator s = red ? G::red(m, 3, al) : G::green(m, 3, al);
        Generator t = red ? G::red(m, 1, al) : G::green(m, 1, al);
        v.push_back({"m=" + std::to_string(m) + " " + phase_name(al),
                     Diagram{{Layer{s}, with_wires(1, G::cap(), 0)}}, single(t)});
      }
    return v;
  };
  add("zx3", "green loop", false, loop(false));
  add("zx4", "red loop", false, loop(true));
  add("zx5", "green cup", false, {{"", single(G::green(0, 2)), single(G::cup())}});
  add("zx6", "red cup", false, {{"", single(G::red(0, 2)), single(G::cup())}});

  auto pi_copy = [](bool red) {
    std::vector<Instance> v;
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n)
        for (int al = 0; al < 4; ++al) {
          Generator other_pi = red ? G::green(1, 1, 2) : G::red(1, 1, 2);
          Generator s = red ? G::red(m, n, al) : G::green(m, n, al);
          Generator t = red ? G::red(m, n, -al) : G::green(m, n, -al);
          v.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + phase_name(al),
                       sequence({repeat(other_pi, m), single(s)}), sequence({single(t), repeat(other_pi, n)})});
        }
    return v;
  };
  add("zx7", "green pi-copy", false, pi_copy(false));
  add("zx8", "red pi-copy", false, pi_copy(true));

  auto copy = [](bool red) {
    std::vector<Instance> v;
    for (int n = 1; n <= 3; ++n)
      for (int st = 0; st <= 2; st += 2)
        for (int al = 0; al < 4; ++al) {
          Generator state = red ? G::green(0, 1, st) : G::red(0, 1, st);
          Generator s = red ? G::red(1, n, al) : G::green(1, n, al);
          v.push_back({"n=" + std::to_string(n) + " state " + phase_name(st) + " " + phase_name(al),
                       sequence({single(state), single(s)}), repeat(state, n)});
        }
    return v;
  };
  add("zx9", "green copy", false, copy(false));
  add("zx10", "red copy", false, copy(true));

  add("zx11", "bialgebra", false,
      {{"", sequence({single(G::red(2, 1)), single(G::green(1, 2))}), complete_bipartite(2, 2)}});

  {
    std::vector<Instance> v;
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        if (m + n == 0) continue;
        for (int al = 0; al < 4; ++al)
          v.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + phase_name(al),
                       sequence({repeat(G::had(), m), single(G::green(m, n, al)), repeat(G::had(), n)}),
                       single(G::red(m, n, al))});
      }
    add("zx12", "colour change", false, v);
  }
  add("zx13", "Euler decomposition", false,
      {{"", Diagram{{{G::green(1, 1, 1)}, {G::red(1, 1, 1)}, {G::green(1, 1, 1)}}}, single(G::had())}});
  {
    std::vector<Instance> v;
    for (int al = 0; al < 4; ++al)
      v.push_back({phase_name(al), layer_of({G::green(0, 0, 2), G::red(1, 1, al)}),
                   Diagram{{{G::green(0, 0, 2), G::red(1, 0)}, {G::red(0, 1)}}}});
    add("zx14", "zero rule (pi disconnect)", false, v);
  }
  add("zx15", "zero rule (star)", true, {{"", layer_of({G::star(), G::green(0, 0, 0)}), Diagram{}}});
  {
    std::vector<Instance> v;
    for (int al = 0; al < 4; ++al)
      v.push_back({phase_name(al), layer_of({G::green(0, 0, 2), G::red(0, 0, al)}), single(G::green(0, 0, 2))});
    add("zx16", "zero scalar", true, v);
  }

  add("dzx1", "Hopf", false,
      {{"", sequence({single(G::green(1, 2)), single(G::red(2, 1))}),
        sequence({single(G::green(1, 0)), single(G::red(0, 1))})}});
  add("dzx2", "yanking", false,
      {{"", Diagram{{{G::wire(), G::cup()}, {G::cap(), G::wire()}}}, identity(1)}});
  add("dzx3", "identity", false,
      {{"green", single(G::green(1, 1)), identity(1)}, {"red", single(G::red(1, 1)), identity(1)}});
  add("dzx4", "star inverse", true,
      {{"", Diagram{{{G::star(), G::green(0, 2)}, {G::red(2, 0)}}}, Diagram{}}});
  add("dzx5", "Hadamard unitary", false, {{"", Diagram{{{G::had()}, {G::had()}}}, identity(1)}});
  auto had_loop = [](bool red) {
    std::vector<Instance> v;
    for (int m = 1; m <= 2; ++m)
      for (int al = 0; al < 4; ++al) {
        Generator s = red ? G::red(m, 3, al) : G::green(m, 3, al);
        Generator t = red ? G::red(m, 1, al + 2) : G::green(m, 1, al + 2);
        v.push_back({"m=" + std::to_string(m) + " " + phase_name(al),
                     Diagram{{Layer{s}, with_wires(1, G::had(), 1), with_wires(1, G::cap(), 0)}}, single(t)});
      }
    return v;
  };
  add("dzx6", "green loop through Hadamard", false, had_loop(false));
  add("dzx7", "red loop through Hadamard", false, had_loop(true));

  add("hopf-had-green", "Hopf with two Hadamard edges, green", false,
      {{"", Diagram{{{G::green(1, 2)}, {G::had(), G::had()}, {G::green(2, 1)}}},
        sequence({single(G::green(1, 0)), single(G::green(0, 1))})}});
  add("hopf-had-red", "Hopf with two Hadamard edges, red", false,
      {{"", Diagram{{{G::red(1, 2)}, {G::had(), G::had()}, {G::red(2, 1)}}},
        sequence({single(G::red(1, 0)), single(G::red(0, 1))})}});

  add("gen-bialg-2x2", "complete bipartite bialgebra, 2 green x 2 red", false,
      {{"", complete_bipartite(2, 2), sequence({single(G::red(2, 1)), single(G::green(1, 2))})}});
  add("gen-bialg-2x3", "complete bipartite bialgebra, 2 green x 3 red", false,
      {{"", complete_bipartite(2, 3), sequence({single(G::red(2, 1)), single(G::green(1, 3))})}});

  add("y-equiv-1", "Y spider (2,1): controlled-Z form against phase form", false,
      {{"", y_via_cz(2, 1), y_phase_form(2, 1)}});
  {
    std::vector<Instance> v;
    for (int m = 2; m <= 3; ++m) {
      Diagram lhs = sequence({parallel(y_via_cz(2, 1), identity(m - 1)), y_via_cz(m, 1)});
      v.push_back({"m=" + std::to_string(m), lhs, y_via_cz(m + 1, 1)});
    }
    add("y-equiv-2", "Y spider (2,1) composed into (m,1) gives (m+1,1)", false, v);
  }

  Diagram s_on_second = layer_of({G::wire(), G::green(1, 1, 1)});
  Diagram sdg_on_second = layer_of({G::wire(), G::green(1, 1, 3)});
  Diagram xy_gadget = sequence({sdg_on_second, cz_between(2, 0, 1), s_on_second});
  add("cw-delete", "two green-green connecting wires cancel", false,
      {{"", sequence({cz_between(2, 0, 1), cz_between(2, 0, 1)}), identity(2)}});
  add("cw-xy-delete", "green-green wire deletes the X-Y connecting wire", false,
      {{"", sequence({xy_gadget, cz_between(2, 0, 1)}), identity(2)}});
  add("cw-xy-generate", "green-green wire generates the X-Y connecting wire", false,
      {{"", cz_between(2, 0, 1), xy_gadget}});
  {
    Diagram copy_pair = sequence({layer_of({G::green(1, 2), G::green(1, 2)}), permutation({0, 2, 1, 3})});
    add("cw-z-same", "green-green wire passes through the Z copy spiders", false,
        {{"", sequence({cz_between(2, 0, 1), copy_pair}),
          sequence({copy_pair, parallel(cz_between(2, 0, 1), identity(2))})}});
  }
  add("cw-swap", "green-green after red-red wire", false,
      {{"", sequence({red_edge_between(2, 0, 1), cz_between(2, 0, 1)}),
        sequence({cz_between(2, 0, 1), layer_of({G::had(), G::had()}), single(G::swap())})}});
  return rules;
}

bool inject_pi(Diagram& d) {
  for (auto& layer : d.layers)
    for (auto& g : layer)
      if (g.kind == Kind::green_spider || g.kind == Kind::red_spider) {
        g.phase = (g.phase + 2) & 3;
        return true;
      }
  return false;
}

}  // namespace

const std::vector<Rule>& rule_catalog() {
  static const std::vector<Rule> catalog = build_catalog();
  return catalog;
}

const Rule& find_rule(const std::string& id) {
  for (const auto& r : rule_catalog())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown rule id: " + id);
}

Verdict verify_rule(const Rule& rule) {
  Verdict v;
  v.holds_up_to_scalar = true;
  for (const auto& inst : rule.instances) {
    ++v.instances;
    Tensor l = eval_diagram(inst.lhs);
    Tensor r = eval_diagram(inst.rhs);
    if (l.in_qubits() != r.in_qubits() || l.out_qubits() != r.out_qubits()) {
      v.holds_up_to_scalar = false;
      v.scalar.reset();
      return v;
    }
    auto s = proportional(l, r);
    if (!s || (rule.scalar_rule && !(*s == ExactScalar::one()))) {
      v.holds_up_to_scalar = false;
      v.scalar.reset();
      return v;
    }
    if (v.instances == 1) v.scalar = s;
  }
  return v;
}

Verdict verify_rule(const std::string& id) { return verify_rule(find_rule(id)); }

Rule mutate_with_pi(const Rule& rule) {
  Rule m = rule;
  m.id += "/pi";
  for (auto& inst : m.instances) {
    if (inject_pi(inst.lhs)) continue;
    const int w = std::max(inst.lhs.inputs(), inst.lhs.outputs());
    if (w == 0) {
      inst.lhs = parallel(inst.lhs, single(G::green(0, 0, 2)));
    } else if (inst.lhs.inputs() > 0) {
      inst.lhs = sequence({Diagram{{with_wires(0, G::green(1, 1, 2), inst.lhs.inputs() - 1)}}, inst.lhs});
    } else {
      inst.lhs = sequence({inst.lhs, Diagram{{with_wires(0, G::green(1, 1, 2), inst.lhs.outputs() - 1)}}});
    }
  }
  return m;
}

}  // namespace ccs::zx
