#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

/// Element of Z[i, sqrt2][1/2]: (a + b*i + (c + d*i)*sqrt2) / 2^k.
/// Always kept with k minimal, so structural equality is value equality.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int k);
  static ExactScalar integer(std::int64_t v) { return ExactScalar(v, 0, 0, 0, 0); }
  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return integer(1); }
  static ExactScalar imag() { return ExactScalar(0, 1, 0, 0, 0); }
  static ExactScalar sqrt2() { return ExactScalar(0, 0, 1, 0, 0); }
  static ExactScalar inv_sqrt2() { return ExactScalar(0, 0, 1, 0, 1); }
  static ExactScalar half() { return ExactScalar(1, 0, 0, 0, 1); }
  // e^{i*q*pi/2} for integer q
  static ExactScalar quarter_turn(int q);

  std::int64_t re_int() const { return a_; }
  std::int64_t im_int() const { return b_; }
  std::int64_t re_root2() const { return c_; }
  std::int64_t im_root2() const { return d_; }
  int k() const { return k_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_real() const { return b_ == 0 && d_ == 0; }

  ExactScalar conj() const { return ExactScalar(a_, -b_, c_, -d_, k_); }
  ExactScalar norm2() const { return *this * conj(); }
  ExactScalar div_sqrt2() const;
  ExactScalar mul_sqrt2() const { return *this * sqrt2(); }
  std::optional<ExactScalar> inverse() const;

  ExactScalar operator-() const { return ExactScalar(-a_, -b_, -c_, -d_, k_); }
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  bool operator==(const ExactScalar& o) const = default;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  void canonicalize();
  std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
  int k_ = 0;
};

/// Dense map from in_qubits to out_qubits. Row index is the output bitstring,
/// column the input, big-endian with qubit 1 most significant.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int in_qubits, int out_qubits);
  static Tensor identity(int qubits);
  static Tensor scalar(const ExactScalar& s);
  static Tensor from_rows(int in_qubits, int out_qubits,
                          const std::vector<std::vector<ExactScalar>>& rows);
  static Tensor ket(const std::vector<ExactScalar>& amps);

  int in_qubits() const { return in_; }
  int out_qubits() const { return out_; }
  std::size_t rows() const { return std::size_t{1} << out_; }
  std::size_t cols() const { return std::size_t{1} << in_; }
  const std::vector<ExactScalar>& entries() const { return data_; }

  ExactScalar& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

  Tensor scaled(const ExactScalar& s) const;
  Tensor operator+(const Tensor& o) const;
  bool operator==(const Tensor& o) const = default;
  bool is_zero() const;
  std::string shape() const;

 private:
  int in_ = 0, out_ = 0;
  std::vector<ExactScalar> data_{ExactScalar::zero()};
};

using Ket = Tensor;

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor compose(const Tensor& second, const Tensor& first);
Tensor dagger(const Tensor& t);
std::optional<ExactScalar> proportional(const Tensor& a, const Tensor& b);
ExactScalar inner(const Tensor& bra_src, const Tensor& ket);

// Float shadow for cross-checking exact evaluation.
using FloatMatrix = std::vector<std::complex<double>>;
FloatMatrix to_float(const Tensor& t);
FloatMatrix float_matmul(const FloatMatrix& a, const FloatMatrix& b, std::size_t n, std::size_t k,
                         std::size_t m);
FloatMatrix float_kron(const FloatMatrix& a, std::size_t ar, std::size_t ac, const FloatMatrix& b,
                       std::size_t br, std::size_t bc);
double max_abs_diff(const FloatMatrix& a, const FloatMatrix& b);

// Common gates.
Tensor hadamard();
Tensor pauli_x();
Tensor pauli_z();
Tensor phase_gate();  // diag(1, i)
Tensor cz();
Tensor cnot();
Tensor swap_gate();
Tensor basis_ket(int qubits, std::size_t index);
// Embed a 2-qubit gate on qubits p < q (0-based) of an n-qubit register.
Tensor embed_two(const Tensor& g, int n, int p, int q);
Tensor embed_one(const Tensor& g, int n, int p);

}  // namespace ccs
