#pragma once

// Small dense tensors for loop dimensions n <= 7.
//
// Layout is row-major by index position: a Matrix entry (i, j) holds the
// component with upper index i and lower index j; a Tensor3 entry (i, j, k)
// holds T^i_jk.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace moufang {

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t q = 0; q < data_.size(); ++q) data_[q] += o.data_[q];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t q = 0; q < data_.size(); ++q) data_[q] -= o.data_[q];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Matrix product (a b)^i_j = a^i_s b^s_j.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t s = 0; s < n; ++s) acc += a(i, s) * b(s, j);
      out(i, j) = acc;
    }
  return out;
}

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), data_(n * n * n, 0.0) {}

  std::size_t dim() const { return n_; }

  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * n_ + j) * n_ + k];
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  Tensor3& operator+=(const Tensor3& o) {
    for (std::size_t q = 0; q < data_.size(); ++q) data_[q] += o.data_[q];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    for (std::size_t q = 0; q < data_.size(); ++q) data_[q] -= o.data_[q];
    return *this;
  }
  Tensor3& operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }
  friend Tensor3 operator-(Tensor3 a) { return a *= -1.0; }

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// (J T)^i_jk = J^i_s T^s_jk: pushes the upper index through a Jacobian.
inline Tensor3 push_forward(const Matrix& jac, const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < n; ++s) acc += jac(i, s) * t(s, j, k);
        out(i, j, k) = acc;
      }
  return out;
}

/// (C . a)^i_jk = C^s_jk a^i_s: replaces the bracket slot by a matrix column.
inline Tensor3 contract_bracket(const Tensor3& c, const Matrix& a) {
  const std::size_t n = c.dim();
  Tensor3 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < n; ++s) acc += c(s, j, k) * a(i, s);
        out(i, j, k) = acc;
      }
  return out;
}

inline double max_abs(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}
inline double max_abs(const Matrix& m) { return max_abs(m.flat()); }
inline double max_abs(const Tensor3& t) { return max_abs(t.flat()); }

}  // namespace moufang
