// Copyright 2026 The dqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for the small Hilbert spaces the games live
 * on: normalized state vectors, unitary operators and Hermitian observables
 * stored by eigen-decomposition. Dimensions are expected to stay at or below
 * 2^6; everything is stored densely and row-major.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dqg/errors.hpp"
#include "dqg/tolerances.hpp"

namespace dqg {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Square dense complex matrix, row-major. No invariant beyond shape.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::size_t dim, std::vector<Complex> row_major)
      : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_) {
      throw DimensionMismatch("Matrix", data_.size(), dim_ * dim_);
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  double frobenius_norm() const {
    double acc = 0.0;
    for (const auto& z : data_) acc += std::norm(z);
    return std::sqrt(acc);
  }

  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const Matrix& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("max_abs_diff", dim_, other.dim_);
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
      worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
  }

  std::vector<Complex> apply(std::span<const Complex> v) const {
    if (v.size() != dim_) throw DimensionMismatch("Matrix::apply", dim_, v.size());
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      Complex acc{};
      for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("Matrix product", a.dim_, b.dim_);
    Matrix out(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Complex lhs = a(r, k);
        if (lhs == Complex{}) continue;
        for (std::size_t c = 0; c < a.dim_; ++c) out(r, c) += lhs * b(k, c);
      }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("Matrix sum", a.dim_, b.dim_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("Matrix difference", a.dim_, b.dim_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(Complex s, Matrix a) {
    for (auto& z : a.data_) z *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Normalized pure state. Invariant: sum |amp_k|^2 == 1 within the norm
/// tolerance given at construction, dim >= 1.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amps, double tol = NORM_TOL)
      : amps_(std::move(amps)) {
    if (amps_.empty()) throw ValidationError("StateVector: dim must be >= 1");
    const double n2 = squared_norm(amps_);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
      throw ValidationError("StateVector not normalized within NORM_TOL: |psi|^2 = " +
                            std::to_string(n2));
    }
  }

  /// Rescales arbitrary non-zero amplitudes to unit norm.
  static StateVector normalized(std::vector<Complex> amps) {
    const double n = std::sqrt(squared_norm(amps));
    if (amps.empty() || !(n > 0.0) || !std::isfinite(n)) {
      throw ValidationError("StateVector: cannot normalize a zero or empty vector");
    }
    for (auto& z : amps) z /= n;
    return StateVector(std::move(amps));
  }

  static StateVector basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionMismatch("StateVector::basis", index, dim);
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
  }

  /// Computational basis state from a bit string, first character is the
  /// most significant qubit: ket("01") == |0>|1>.
  static StateVector ket(std::string_view bits) {
    if (bits.empty() || bits.size() > 20) {
      throw ValidationError("StateVector::ket: need 1..20 bits");
    }
    std::size_t index = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') throw ValidationError("StateVector::ket: bad bit string");
      index = (index << 1U) | static_cast<std::size_t>(c - '0');
    }
    return basis(std::size_t{1} << bits.size(), index);
  }

  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amps() const { return amps_; }
  const Complex& operator[](std::size_t k) const { return amps_[k]; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  static double squared_norm(const std::vector<Complex>& v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return acc;
  }

  std::vector<Complex> amps_;
};

/// Unitary operator. Invariant: U^dagger U == I entrywise within the unitary
/// tolerance given at construction.
class UnitaryOp {
 public:
  explicit UnitaryOp(Matrix m, double tol = UNITARY_TOL) : mat_(std::move(m)) {
    if (mat_.dim() == 0) throw ValidationError("UnitaryOp: dim must be >= 1");
    const double err = (mat_.adjoint() * mat_).max_abs_diff(Matrix::identity(mat_.dim()));
    if (!(err <= tol)) {
      throw ValidationError("UnitaryOp violates UNITARY_TOL: max |U^dag U - I| = " +
                            std::to_string(err));
    }
  }

  static UnitaryOp identity(std::size_t dim) { return UnitaryOp(Matrix::identity(dim)); }

  std::size_t dim() const { return mat_.dim(); }
  const Matrix& matrix() const { return mat_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  UnitaryOp adjoint() const { return UnitaryOp(mat_.adjoint(), Trusted{}); }

  /// Operator product; the right operand acts first.
  friend UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
    return UnitaryOp(a.mat_ * b.mat_, Trusted{});
  }
  friend bool operator==(const UnitaryOp&, const UnitaryOp&) = default;

 private:
  struct Trusted {};
  UnitaryOp(Matrix m, Trusted) : mat_(std::move(m)) {}

  Matrix mat_;
};

/// Observable held as an orthonormal eigenbasis with real eigenvalues.
class HermitianObservable {
 public:
  HermitianObservable(std::vector<StateVector> basis, std::vector<double> eigenvalues,
                      double tol = NORM_TOL)
      : basis_(std::move(basis)), eigenvalues_(std::move(eigenvalues)) {
    if (basis_.empty()) throw ValidationError("HermitianObservable: empty eigenbasis");
    const std::size_t d = basis_.front().dim();
    if (basis_.size() != d) throw DimensionMismatch("HermitianObservable basis size", basis_.size(), d);
    if (eigenvalues_.size() != d) {
      throw DimensionMismatch("HermitianObservable eigenvalue count", eigenvalues_.size(), d);
    }
    for (double v : eigenvalues_)
      if (!std::isfinite(v)) throw ValidationError("HermitianObservable: non-finite eigenvalue");
    for (std::size_t i = 0; i < d; ++i) {
      if (basis_[i].dim() != d) throw DimensionMismatch("HermitianObservable basis vector", basis_[i].dim(), d);
      for (std::size_t j = i + 1; j < d; ++j) {
        Complex ip{};
        for (std::size_t k = 0; k < d; ++k) ip += std::conj(basis_[i][k]) * basis_[j][k];
        if (std::norm(ip) > tol) {
          throw ValidationError("HermitianObservable eigenbasis not orthonormal at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<StateVector>& basis() const { return basis_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  /// Same eigenbasis, different eigenvalues.
  HermitianObservable with_eigenvalues(std::vector<double> values) const {
    return HermitianObservable(basis_, std::move(values));
  }

  /// sum_k lambda_k |e_k><e_k|
  Matrix matrix() const {
    const std::size_t d = dim();
    Matrix m(d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          m(r, c) += eigenvalues_[k] * basis_[k][r] * std::conj(basis_[k][c]);
    return m;
  }

  friend bool operator==(const HermitianObservable&, const HermitianObservable&) = default;

 private:
  std::vector<StateVector> basis_;
  std::vector<double> eigenvalues_;
};

// ---------------------------------------------------------------------------

/// <a|b>, conjugate-linear in a.
inline Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner_product", a.dim(), b.dim());
  Complex acc{};
  for (std::size_t k = 0; k < a.dim(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

/// |<a|b>|^2, clamped to [0, 1].
inline double overlap2(const StateVector& a, const StateVector& b) {
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

inline StateVector apply(const UnitaryOp& u, const StateVector& s, double tol = NORM_TOL) {
  if (u.dim() != s.dim()) throw DimensionMismatch("apply", u.dim(), s.dim());
  std::vector<Complex> out = u.matrix().apply(s.amps());
  double n2 = 0.0;
  for (const auto& z : out) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > tol) {
    throw ValidationError("apply: renormalization drift exceeds NORM_TOL");
  }
  return StateVector::normalized(std::move(out));
}

/// Kronecker product; the first factor is the slow index.
inline Matrix tensor(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix out(da * db);
  for (std::size_t r1 = 0; r1 < da; ++r1)
    for (std::size_t c1 = 0; c1 < da; ++c1) {
      const Complex f = a(r1, c1);
      if (f == Complex{}) continue;
      for (std::size_t r2 = 0; r2 < db; ++r2)
        for (std::size_t c2 = 0; c2 < db; ++c2) out(r1 * db + r2, c1 * db + c2) = f * b(r2, c2);
    }
  return out;
}

inline UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b) {
  return UnitaryOp(tensor(a.matrix(), b.matrix()));
}

inline StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.amps())
    for (const auto& y : b.amps()) out.push_back(x * y);
  return StateVector::normalized(std::move(out));
}

/// Frobenius norm of ab - ba.
inline double commutator_norm(const UnitaryOp& a, const UnitaryOp& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("commutator_norm", a.dim(), b.dim());
  return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).frobenius_norm();
}

/// exp(-i h t), built from h's stored eigen-decomposition.
inline UnitaryOp evolve(const HermitianObservable& h, double t) {
  if (!std::isfinite(t)) throw ValidationError("evolve: time must be finite");
  const std::size_t d = h.dim();
  Matrix m(d);
  for (std::size_t k = 0; k < d; ++k) {
    const Complex phase = std::exp(-kI * (h.eigenvalues()[k] * t));
    const auto& e = h.basis()[k];
    for (std::size_t r = 0; r < d; ++r) {
      const Complex left = phase * e[r];
      for (std::size_t c = 0; c < d; ++c) m(r, c) += left * std::conj(e[c]);
    }
  }
  return UnitaryOp(std::move(m));
}

/// Ray equality: overlap2(a, b) >= 1 - tol.
inline bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("equal_up_to_phase", a.dim(), b.dim());
  return overlap2(a, b) >= 1.0 - tol;
}

// ---------------------------------------------------------------------------

namespace gates {

inline UnitaryOp identity(std::size_t dim = 2) { return UnitaryOp::identity(dim); }

inline UnitaryOp x() { return UnitaryOp(Matrix(2, {0.0, 1.0, 1.0, 0.0})); }
inline UnitaryOp y() { return UnitaryOp(Matrix(2, {0.0, -kI, kI, 0.0})); }
inline UnitaryOp z() { return UnitaryOp(Matrix(2, {1.0, 0.0, 0.0, -1.0})); }
inline UnitaryOp s() { return UnitaryOp(Matrix(2, {1.0, 0.0, 0.0, kI})); }

inline UnitaryOp h() {
  const double r = 1.0 / std::numbers::sqrt2;
  return UnitaryOp(Matrix(2, {r, r, r, -r}));
}

inline UnitaryOp rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return UnitaryOp(Matrix(2, {c, -kI * s, -kI * s, c}));
}

inline UnitaryOp ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return UnitaryOp(Matrix(2, {c, -s, s, c}));
}

inline UnitaryOp rz(double theta) {
  return UnitaryOp(Matrix(2, {std::exp(-kI * (theta / 2)), 0.0, 0.0, std::exp(kI * (theta / 2))}));
}

/// Controlled-Z on two qubits: diag(1, 1, 1, -1).
inline UnitaryOp cz() {
  Matrix m = Matrix::identity(4);
  m(3, 3) = -1.0;
  return UnitaryOp(std::move(m));
}

/// Spin flip on particle `which` (0-based, most significant first) of a
/// register of `qubits` spin-1/2 particles.
inline UnitaryOp flip(std::size_t which, std::size_t qubits) {
  UnitaryOp out = which == 0 ? x() : identity(2);
  for (std::size_t q = 1; q < qubits; ++q) out = tensor(out, q == which ? x() : identity(2));
  return out;
}

}  // namespace gates

}  // namespace dqg
