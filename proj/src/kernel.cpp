#include "ccs/kernel.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ccs {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("ExactScalar overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("ExactScalar overflow");
  return r;
}

std::int64_t shifted(std::int64_t x, int s) { return checked_mul(x, std::int64_t{1} << s); }

// Galois conjugate sqrt2 -> -sqrt2.
ExactScalar galois(const ExactScalar& x) {
  return ExactScalar(x.re_int(), x.im_int(), -x.re_root2(), -x.im_root2(), x.k());
}

}  // namespace

ExactScalar::ExactScalar(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int k)
    : a_(a), b_(b), c_(c), d_(d), k_(k) {
  while (k_ < 0) {
    a_ = shifted(a_, 1);
    b_ = shifted(b_, 1);
    c_ = shifted(c_, 1);
    d_ = shifted(d_, 1);
    ++k_;
  }
  canonicalize();
}

void ExactScalar::canonicalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && ((a_ | b_ | c_ | d_) & 1) == 0) {
    a_ /= 2;
    b_ /= 2;
    c_ /= 2;
    d_ /= 2;
    --k_;
  }
}

ExactScalar ExactScalar::quarter_turn(int q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return one();
    case 1: return imag();
    case 2: return integer(-1);
    default: return -imag();
  }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  int k = std::max(k_, o.k_);
  int s1 = k - k_, s2 = k - o.k_;
  return ExactScalar(checked_add(shifted(a_, s1), shifted(o.a_, s2)),
                     checked_add(shifted(b_, s1), shifted(o.b_, s2)),
                     checked_add(shifted(c_, s1), shifted(o.c_, s2)),
                     checked_add(shifted(d_, s1), shifted(o.d_, s2)), k);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  // (A1 + C1 r)(A2 + C2 r) = A1 A2 + 2 C1 C2 + (A1 C2 + C1 A2) r, with A, C Gaussian integers.
  auto gmul = [](std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
    return std::pair{checked_add(checked_mul(x, u), -checked_mul(y, v)),
                     checked_add(checked_mul(x, v), checked_mul(y, u))};
  };
  auto [p1, p2] = gmul(a_, b_, o.a_, o.b_);
  auto [q1, q2] = gmul(c_, d_, o.c_, o.d_);
  auto [r1, r2] = gmul(a_, b_, o.c_, o.d_);
  auto [s1, s2] = gmul(c_, d_, o.a_, o.b_);
  return ExactScalar(checked_add(p1, shifted(q1, 1)), checked_add(p2, shifted(q2, 1)),
                     checked_add(r1, s1), checked_add(r2, s2), k_ + o.k_);
}

ExactScalar ExactScalar::div_sqrt2() const {
  // (A + C r) / r = (2C + A r) / 2
  return ExactScalar(shifted(c_, 1), shifted(d_, 1), a_, b_, k_ + 1);
}

std::optional<ExactScalar> ExactScalar::inverse() const {
  if (is_zero()) return std::nullopt;
  ExactScalar y = norm2();
  ExactScalar z = y * galois(y);
  // z is rational: a / 2^k with c = d = b = 0
  std::int64_t n = z.re_int();
  std::int64_t m = std::llabs(n);
  if ((m & (m - 1)) != 0) return std::nullopt;
  int j = 0;
  while ((std::int64_t{1} << j) < m) ++j;
  ExactScalar zinv(n > 0 ? 1 : -1, 0, 0, 0, j - z.k());
  return conj() * galois(y) * zinv;
}

std::complex<double> ExactScalar::to_complex() const {
  const double r2 = std::sqrt(2.0);
  const double scale = std::ldexp(1.0, -k_);
  return {(static_cast<double>(a_) + static_cast<double>(c_) * r2) * scale,
          (static_cast<double>(b_) + static_cast<double>(d_) * r2) * scale};
}

std::string ExactScalar::str() const {
  std::ostringstream os;
  os << "(" << a_ << "+" << b_ << "i+(" << c_ << "+" << d_ << "i)r2)/2^" << k_;
  return os.str();
}

Tensor::Tensor(int in_qubits, int out_qubits)
    : in_(in_qubits), out_(out_qubits),
      data_((std::size_t{1} << in_qubits) * (std::size_t{1} << out_qubits)) {
  if (in_qubits < 0 || out_qubits < 0) throw ShapeError("negative qubit count");
}

Tensor Tensor::identity(int qubits) {
  Tensor t(qubits, qubits);
  for (std::size_t i = 0; i < t.rows(); ++i) t.at(i, i) = ExactScalar::one();
  return t;
}

Tensor Tensor::scalar(const ExactScalar& s) {
  Tensor t(0, 0);
  t.at(0, 0) = s;
  return t;
}

Tensor Tensor::from_rows(int in_qubits, int out_qubits,
                         const std::vector<std::vector<ExactScalar>>& rows) {
  Tensor t(in_qubits, out_qubits);
  if (rows.size() != t.rows()) throw ShapeError("row count mismatch");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != t.cols()) throw ShapeError("column count mismatch");
    for (std::size_t c = 0; c < t.cols(); ++c) t.at(r, c) = rows[r][c];
  }
  return t;
}

Tensor Tensor::ket(const std::vector<ExactScalar>& amps) {
  int q = 0;
  while ((std::size_t{1} << q) < amps.size()) ++q;
  if ((std::size_t{1} << q) != amps.size()) throw ShapeError("ket length is not a power of two");
  Tensor t(0, q);
  for (std::size_t i = 0; i < amps.size(); ++i) t.at(i, 0) = amps[i];
  return t;
}

Tensor Tensor::scaled(const ExactScalar& s) const {
  Tensor t = *this;
  for (auto& e : t.data_) e = e * s;
  return t;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (in_ != o.in_ || out_ != o.out_) throw ShapeError("sum of " + shape() + " and " + o.shape());
  Tensor t = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) t.data_[i] += o.data_[i];
  return t;
}

bool Tensor::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

std::string Tensor::shape() const {
  return "(" + std::to_string(in_) + " in, " + std::to_string(out_) + " out)";
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor t(a.in_qubits() + b.in_qubits(), a.out_qubits() + b.out_qubits());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const ExactScalar& x = a.at(ra, ca);
      if (x.is_zero()) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          t.at(ra * b.rows() + rb, ca * b.cols() + cb) = x * b.at(rb, cb);
    }
  return t;
}

Tensor compose(const Tensor& second, const Tensor& first) {
  if (first.out_qubits() != second.in_qubits())
    throw ShapeError("cannot compose " + second.shape() + " after " + first.shape());
  Tensor t(first.in_qubits(), second.out_qubits());
  for (std::size_t r = 0; r < second.rows(); ++r)
    for (std::size_t m = 0; m < second.cols(); ++m) {
      const ExactScalar& x = second.at(r, m);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < first.cols(); ++c) {
        const ExactScalar& y = first.at(m, c);
        if (!y.is_zero()) t.at(r, c) += x * y;
      }
    }
  return t;
}

Tensor dagger(const Tensor& t) {
  Tensor d(t.out_qubits(), t.in_qubits());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) d.at(c, r) = t.at(r, c).conj();
  return d;
}

std::optional<ExactScalar> proportional(const Tensor& a, const Tensor& b) {
  if (a.in_qubits() != b.in_qubits() || a.out_qubits() != b.out_qubits())
    throw ShapeError("proportional on " + a.shape() + " and " + b.shape());
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t pivot = eb.size();
  for (std::size_t i = 0; i < eb.size(); ++i)
    if (!eb[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == eb.size()) {
    if (a.is_zero()) return ExactScalar::one();
    return std::nullopt;
  }
  if (ea[pivot].is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] * eb[pivot] == eb[i] * ea[pivot])) return std::nullopt;
  auto inv = eb[pivot].inverse();
  if (!inv) throw std::domain_error("proportionality constant outside the dyadic ring");
  return ea[pivot] * *inv;
}

ExactScalar inner(const Tensor& bra_src, const Tensor& ket) {
  if (bra_src.cols() != 1 || ket.cols() != 1 || bra_src.rows() != ket.rows())
    throw ShapeError("inner product needs two kets of equal width");
  ExactScalar s;
  for (std::size_t i = 0; i < ket.rows(); ++i) {
    const auto& x = bra_src.at(i, 0);
    const auto& y = ket.at(i, 0);
    if (!x.is_zero() && !y.is_zero()) s += x.conj() * y;
  }
  return s;
}

FloatMatrix to_float(const Tensor& t) {
  FloatMatrix m;
  m.reserve(t.entries().size());
  for (const auto& e : t.entries()) m.push_back(e.to_complex());
  return m;
}

FloatMatrix float_matmul(const FloatMatrix& a, const FloatMatrix& b, std::size_t n, std::size_t k,
                         std::size_t m) {
  FloatMatrix r(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i * m + j] += a[i * k + l] * b[l * m + j];
  return r;
}

FloatMatrix float_kron(const FloatMatrix& a, std::size_t ar, std::size_t ac, const FloatMatrix& b,
                       std::size_t br, std::size_t bc) {
  FloatMatrix r(ar * br * ac * bc);
  const std::size_t cols = ac * bc;
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t p = 0; p < br; ++p)
        for (std::size_t q = 0; q < bc; ++q)
          r[(i * br + p) * cols + j * bc + q] = a[i * ac + j] * b[p * bc + q];
  return r;
}

double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Tensor hadamard() {
  auto h = ExactScalar::inv_sqrt2();
  return Tensor::from_rows(1, 1, {{h, h}, {h, -h}});
}

Tensor pauli_x() {
  auto o = ExactScalar::one(), z = ExactScalar::zero();
  return Tensor::from_rows(1, 1, {{z, o}, {o, z}});
}

Tensor pauli_z() {
  auto o = ExactScalar::one(), z = ExactScalar::zero();
  return Tensor::from_rows(1, 1, {{o, z}, {z, -o}});
}

Tensor phase_gate() {
  auto o = ExactScalar::one(), z = ExactScalar::zero();
  return Tensor::from_rows(1, 1, {{o, z}, {z, ExactScalar::imag()}});
}

Tensor cz() {
  Tensor t = Tensor::identity(2);
  t.at(3, 3) = ExactScalar::integer(-1);
  return t;
}

Tensor cnot() {
  Tensor t(2, 2);
  const std::size_t perm[4] = {0, 1, 3, 2};
  for (std::size_t i = 0; i < 4; ++i) t.at(perm[i], i) = ExactScalar::one();
  return t;
}

Tensor swap_gate() {
  Tensor t(2, 2);
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t i = 0; i < 4; ++i) t.at(perm[i], i) = ExactScalar::one();
  return t;
}

Tensor basis_ket(int qubits, std::size_t index) {
  Tensor t(0, qubits);
  t.at(index, 0) = ExactScalar::one();
  return t;
}

Tensor embed_two(const Tensor& g, int n, int p, int q) {
  if (g.in_qubits() != 2 || g.out_qubits() != 2) throw ShapeError("embed_two needs a 2-qubit gate");
  if (p == q || p < 0 || q < 0 || p >= n || q >= n) throw ShapeError("bad qubit pair");
  Tensor t(n, n);
  const std::size_t dim = std::size_t{1} << n;
  const int sp = n - 1 - p, sq = n - 1 - q;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t in = (((c >> sp) & 1) << 1) | ((c >> sq) & 1);
    std::size_t rest = c & ~((std::size_t{1} << sp) | (std::size_t{1} << sq));
    for (std::size_t out = 0; out < 4; ++out) {
      const auto& v = g.at(out, in);
      if (v.is_zero()) continue;
      std::size_t r = rest | (((out >> 1) & 1) << sp) | ((out & 1) << sq);
      t.at(r, c) = v;
    }
  }
  return t;
}

Tensor embed_one(const Tensor& g, int n, int p) {
  Tensor t = Tensor::identity(0);
  for (int i = 0; i < n; ++i) t = tensor_product(t, i == p ? g : Tensor::identity(1));
  return t;
}

}  // namespace ccs
