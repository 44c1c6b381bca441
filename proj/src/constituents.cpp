#include "ccs/constituents.hpp"

#include <stdexcept>

namespace ccs {

char to_char(Constituent c) {
  switch (c) {
    case Constituent::X: return 'X';
    case Constituent::Y: return 'Y';
    case Constituent::Z: return 'Z';
  }
  return '?';
}

Constituent constituent_from_char(char c) {
  switch (c) {
    case 'X': return Constituent::X;
    case 'Y': return Constituent::Y;
    case 'Z': return Constituent::Z;
    default: throw std::invalid_argument(std::string("unknown constituent: ") + c);
  }
}

std::array<Ket, 2> constituent_basis(Constituent c) {
  const ExactScalar r = ExactScalar::inv_sqrt2();
  switch (c) {
    case Constituent::Z: return {basis_ket(1, 0), basis_ket(1, 1)};
    case Constituent::X: return {Ket::ket({r, r}), Ket::ket({r, -r})};
    case Constituent::Y: {
      const ExactScalar ri = r * ExactScalar::imag();
      return {Ket::ket({r, ri}), Ket::ket({r, -ri})};
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

Tensor power(const Tensor& t, int n) {
  Tensor acc = Tensor::identity(0);
  for (int i = 0; i < n; ++i) acc = tensor_product(acc, t);
  return acc;
}

}  // namespace

Tensor constituent_spider(Constituent c, int m, int n) {
  if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("spider needs at least one leg");
  Tensor sum(m, n);
  for (const Ket& v : constituent_basis(c)) sum = sum + compose(power(v, n), power(dagger(v), m));
  return sum;
}

Tensor cz_cascade_tensor(int n) {
  Tensor t = Tensor::identity(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) t = compose(embed_two(cz(), n, p, q), t);
  return t;
}

Tensor y_spider_via_cz(int m, int n) {
  if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("spider needs at least one leg");
  Tensor merge = compose(constituent_spider(Constituent::X, m, 1), cz_cascade_tensor(m));
  Tensor split = compose(cz_cascade_tensor(n), constituent_spider(Constituent::X, 1, n));
  return compose(split, merge);
}

Tensor local_frame(Constituent c) {
  switch (c) {
    case Constituent::X: return Tensor::identity(1);
    case Constituent::Z: return hadamard();
    case Constituent::Y: return dagger(phase_gate());
  }
  throw std::logic_error("unreachable");
}

}  // namespace ccs
