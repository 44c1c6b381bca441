#include "ccs/composites.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ccs {

CompositeCS::CompositeCS(std::vector<Constituent> c, std::vector<std::pair<int, int>> w)
    : cons(std::move(c)), wires(std::move(w)) {
  const int n = qubits();
  for (auto& [p, q] : wires) {
    if (p > q) std::swap(p, q);
    if (p < 0 || q >= n || p == q) throw std::invalid_argument("wire endpoints out of range");
  }
  std::sort(wires.begin(), wires.end());
  wires.erase(std::unique(wires.begin(), wires.end()), wires.end());
}

bool CompositeCS::wired(int p, int q) const {
  if (p > q) std::swap(p, q);
  return std::binary_search(wires.begin(), wires.end(), std::pair{p, q});
}

std::string CompositeCS::str() const {
  std::string s;
  for (auto c : cons) s += to_char(c);
  if (!wires.empty()) {
    s += '[';
    for (std::size_t i = 0; i < wires.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(wires[i].first + 1) + std::to_string(wires[i].second + 1);
    }
    s += ']';
  }
  return s;
}

CompositeCS CompositeCS::parse(const std::string& s) {
  std::vector<Constituent> cons;
  std::size_t i = 0;
  for (; i < s.size() && s[i] != '['; ++i) cons.push_back(constituent_from_char(s[i]));
  std::vector<std::pair<int, int>> wires;
  if (i < s.size()) {
    if (s.back() != ']') throw std::invalid_argument("malformed structure: " + s);
    std::istringstream in(s.substr(i + 1, s.size() - i - 2));
    for (std::string tok; std::getline(in, tok, ',');) {
      if (tok.size() != 2) throw std::invalid_argument("malformed wire: " + tok);
      wires.emplace_back(tok[0] - '1', tok[1] - '1');
    }
  }
  return CompositeCS(std::move(cons), std::move(wires));
}

const char* to_string(EntClass e) {
  switch (e) {
    case EntClass::SC: return "SC";
    case EntClass::BS: return "BS";
    case EntClass::NS: return "NS";
  }
  return "?";
}

std::string EntConfig::str() const {
  return "(" + std::to_string(sc) + "," + std::to_string(bs) + "," + std::to_string(ns) + ")";
}

Tensor wire_gadget(Constituent c1, Constituent c2) {
  Tensor frames = tensor_product(local_frame(c1), local_frame(c2));
  return compose(dagger(frames), compose(cz(), frames));
}

Tensor leg_network(const CompositeCS& cs) {
  const int n = cs.qubits();
  Tensor t = Tensor::identity(n);
  for (auto [p, q] : cs.wires) t = compose(embed_two(wire_gadget(cs.cons[p], cs.cons[q]), n, p, q), t);
  return t;
}

Basis product_basis(const std::vector<Constituent>& cons) {
  const int n = static_cast<int>(cons.size());
  Basis out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    Ket k = Tensor::identity(0);
    for (int j = 0; j < n; ++j) k = tensor_product(k, constituent_basis(cons[j])[(s >> (n - 1 - j)) & 1]);
    out.push_back(std::move(k));
  }
  return out;
}

Basis DecoratedBasis::kets() const {
  Basis out;
  out.reserve(product.size());
  for (const auto& p : product) out.push_back(compose(leg, p));
  return out;
}

DecoratedBasis decorated_basis(const CompositeCS& cs) { return {product_basis(cs.cons), leg_network(cs)}; }

Basis underlying_basis(const CompositeCS& cs) { return decorated_basis(cs).kets(); }

namespace {

Tensor power(const Tensor& t, int n) {
  Tensor acc = Tensor::identity(0);
  for (int i = 0; i < n; ++i) acc = tensor_product(acc, t);
  return acc;
}

Tensor basis_spider(const Basis& kets, int m, int n) {
  if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("spider needs at least one leg");
  const int width = kets.front().out_qubits();
  Tensor sum(m * width, n * width);
  for (const Ket& v : kets) sum = sum + compose(power(v, n), power(dagger(v), m));
  return sum;
}

}  // namespace

Tensor composite_spider(const DecoratedBasis& b, int m, int n) {
  Tensor core = basis_spider(b.product, m, n);
  return compose(power(b.leg, n), compose(core, power(dagger(b.leg), m)));
}

Tensor composite_spider(const CompositeCS& cs, int m, int n) {
  return basis_spider(underlying_basis(cs), m, n);
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [p, q] : edges) {
    int a = find(p), b = find(q);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

EntClass entanglement_class(const CompositeCS& cs) {
  if (cs.wires.empty()) return EntClass::SC;
  return connected(cs.qubits(), cs.wires) ? EntClass::NS : EntClass::BS;
}

bool is_complementary(const Basis& a, const Basis& b) {
  const int n = a.front().out_qubits();
  const ExactScalar target(1, 0, 0, 0, n);
  for (const auto& v : a)
    for (const auto& w : b)
      if (!(inner(v, w).norm2() == target)) return false;
  return true;
}

bool is_complementary(const CompositeCS& a, const CompositeCS& b) {
  return is_complementary(underlying_basis(a), underlying_basis(b));
}

namespace {

Ket conjugate(const Ket& k) {
  std::vector<ExactScalar> amps;
  for (const auto& e : k.entries()) amps.push_back(e.conj());
  return Ket::ket(amps);
}

// sum_v |v><conj v| after sum_w |conj w><w|.
Tensor antipode(const Basis& a, const Basis& b) {
  const int n = a.front().out_qubits();
  Tensor left(n, n), right(n, n);
  for (const auto& v : a) left = left + compose(v, dagger(conjugate(v)));
  for (const auto& w : b) right = right + compose(conjugate(w), dagger(w));
  return compose(left, right);
}

}  // namespace

Tensor cd_matrix(const Basis& a, const Basis& b) {
  const int n = a.front().out_qubits();
  Tensor comult = basis_spider(b, 1, 2);
  Tensor mult = basis_spider(a, 2, 1);
  return compose(mult, compose(tensor_product(Tensor::identity(n), antipode(a, b)), comult));
}

Tensor cd_matrix(const CompositeCS& a, const CompositeCS& b) {
  return cd_matrix(underlying_basis(a), underlying_basis(b));
}

bool is_rank_one(const Tensor& t) {
  std::size_t r0 = 0, c0 = 0;
  bool found = false;
  for (std::size_t r = 0; r < t.rows() && !found; ++r)
    for (std::size_t c = 0; c < t.cols() && !found; ++c)
      if (!t.at(r, c).is_zero()) {
        r0 = r;
        c0 = c;
        found = true;
      }
  if (!found) return false;
  const ExactScalar& pivot = t.at(r0, c0);
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c)
      if (!(t.at(r, c) * pivot == t.at(r, c0) * t.at(r0, c))) return false;
  return true;
}

Basis compose_cz_on_legs(const CompositeCS& cs, int p, int q) {
  return compose_cz_on_legs(decorated_basis(cs), p, q).kets();
}

DecoratedBasis compose_cz_on_legs(const DecoratedBasis& b, int p, int q) {
  const int n = b.leg.out_qubits();
  return {b.product, compose(embed_two(cz(), n, p, q), b.leg)};
}

Tensor metric_diagram(const DecoratedBasis& a, const DecoratedBasis& b) {
  return compose(composite_spider(b, 2, 1), composite_spider(a, 1, 2));
}

Tensor metric_diagram(const CompositeCS& a, const CompositeCS& b) {
  return metric_diagram(decorated_basis(a), decorated_basis(b));
}

std::vector<CompositeCS> enumerate_composites(int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("enumeration supports 2 or 3 qubits");
  std::vector<std::pair<int, int>> pairs;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) pairs.emplace_back(p, q);
  std::size_t tuples = 1;
  for (int i = 0; i < n; ++i) tuples *= 3;
  std::vector<CompositeCS> out;
  for (std::size_t t = 0; t < tuples; ++t) {
    std::vector<Constituent> cons(static_cast<std::size_t>(n));
    std::size_t x = t;
    for (int j = n - 1; j >= 0; --j, x /= 3) cons[j] = all_constituents[x % 3];
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> w;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1) w.push_back(pairs[e]);
      out.emplace_back(cons, std::move(w));
    }
  }
  return out;
}

int schmidt_rank(const Ket& ket, const std::vector<int>& part) {
  const int n = ket.out_qubits();
  std::vector<int> rest;
  for (int j = 0; j < n; ++j)
    if (std::find(part.begin(), part.end(), j) == part.end()) rest.push_back(j);
  auto bits = [n](std::size_t s, const std::vector<int>& qs) {
    std::size_t v = 0;
    for (int q : qs) v = (v << 1) | ((s >> (n - 1 - q)) & 1);
    return v;
  };
  const std::size_t rows = std::size_t{1} << part.size(), cols = std::size_t{1} << rest.size();
  std::vector<std::vector<ExactScalar>> m(rows, std::vector<ExactScalar>(cols));
  for (std::size_t s = 0; s < ket.rows(); ++s) m[bits(s, part)][bits(s, rest)] = ket.at(s, 0);
  // Division-free elimination; entries stay small at these sizes.
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const ExactScalar f = m[r][c];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[rank][c] * m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

void to_json(nlohmann::json& j, const CompositeCS& cs) {
  std::vector<std::string> cons;
  for (auto c : cs.cons) cons.emplace_back(1, to_char(c));
  std::vector<std::array<int, 2>> wires;
  for (auto [p, q] : cs.wires) wires.push_back({p + 1, q + 1});
  j = nlohmann::json{{"n", cs.qubits()}, {"constituents", cons}, {"wires", wires}};
}

void from_json(const nlohmann::json& j, CompositeCS& cs) {
  std::vector<Constituent> cons;
  for (const auto& c : j.at("constituents")) {
    const auto s = c.get<std::string>();
    if (s.size() != 1) throw std::invalid_argument("constituent must be one letter");
    cons.push_back(constituent_from_char(s[0]));
  }
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(cons.size()))
    throw std::invalid_argument("n does not match constituent count");
  std::vector<std::pair<int, int>> wires;
  if (j.contains("wires"))
    for (const auto& w : j.at("wires")) wires.emplace_back(w.at(0).get<int>() - 1, w.at(1).get<int>() - 1);
  cs = CompositeCS(std::move(cons), std::move(wires));
}

}  // namespace ccs
