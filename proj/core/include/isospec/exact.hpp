#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Under C++20 rewritten comparisons, boost 1.74 resolves `rational<long> == int`
// to its own reversed template and recurses forever. Exact-match overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace isospec {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Complex number with rational real and imaginary parts (an element of Q[i]).
class GaussRational {
 public:
  constexpr GaussRational() = default;
  GaussRational(Rational re, Rational im = Rational(0)) : re_(re), im_(im) {}
  GaussRational(std::int64_t re) : re_(re), im_(0) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  GaussRational conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const GaussRational& z);
std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Dense matrix over an exact field (Rational or GaussRational), row-major.
template <class T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = ExactMatrix<Rational>;
using GaussMatrix = ExactMatrix<GaussRational>;
using RationalVector = std::vector<Rational>;

template <class T>
ExactMatrix<T> operator*(const ExactMatrix<T>& a, const ExactMatrix<T>& b);
template <class T>
ExactMatrix<T> operator+(const ExactMatrix<T>& a, const ExactMatrix<T>& b);
template <class T>
ExactMatrix<T> operator-(const ExactMatrix<T>& a, const ExactMatrix<T>& b);
template <class T>
ExactMatrix<T> scaled(const ExactMatrix<T>& a, const T& s);
template <class T>
ExactMatrix<T> transpose(const ExactMatrix<T>& a);
template <class T>
T trace(const ExactMatrix<T>& a);

RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> null_space(RationalMatrix m);

std::size_t rank(RationalMatrix m);

/// Throws std::domain_error when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

GaussMatrix to_gauss(const RationalMatrix& m);

}  // namespace isospec
