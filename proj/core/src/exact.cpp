#include "isospec/exact.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace isospec {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  const Rational re = re_ * o.re_ - im_ * o.im_;
  const Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm == 0) throw std::domain_error("GaussRational: division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (z.imag() == 0) return to_string(z.real());
  std::string im;
  if (z.imag() == 1) {
    im = "i";
  } else if (z.imag() == -1) {
    im = "-i";
  } else {
    im = to_string(z.imag()) + "i";
  }
  if (z.real() == 0) return im;
  if (im.front() == '-') return to_string(z.real()) + im;
  return to_string(z.real()) + "+" + im;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

template <class T>
ExactMatrix<T> operator*(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class T>
ExactMatrix<T> operator+(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  ExactMatrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
ExactMatrix<T> operator-(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  ExactMatrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class T>
ExactMatrix<T> scaled(const ExactMatrix<T>& a, const T& s) {
  ExactMatrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

template <class T>
ExactMatrix<T> transpose(const ExactMatrix<T>& a) {
  ExactMatrix<T> c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  return c;
}

template <class T>
T trace(const ExactMatrix<T>& a) {
  T t(0);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

template ExactMatrix<Rational> operator*(const ExactMatrix<Rational>&, const ExactMatrix<Rational>&);
template ExactMatrix<Rational> operator+(const ExactMatrix<Rational>&, const ExactMatrix<Rational>&);
template ExactMatrix<Rational> operator-(const ExactMatrix<Rational>&, const ExactMatrix<Rational>&);
template ExactMatrix<Rational> scaled(const ExactMatrix<Rational>&, const Rational&);
template ExactMatrix<Rational> transpose(const ExactMatrix<Rational>&);
template Rational trace(const ExactMatrix<Rational>&);
template ExactMatrix<GaussRational> operator*(const ExactMatrix<GaussRational>&, const ExactMatrix<GaussRational>&);
template ExactMatrix<GaussRational> operator+(const ExactMatrix<GaussRational>&, const ExactMatrix<GaussRational>&);
template ExactMatrix<GaussRational> operator-(const ExactMatrix<GaussRational>&, const ExactMatrix<GaussRational>&);
template ExactMatrix<GaussRational> scaled(const ExactMatrix<GaussRational>&, const GaussRational&);
template ExactMatrix<GaussRational> transpose(const ExactMatrix<GaussRational>&);
template GaussRational trace(const ExactMatrix<GaussRational>&);

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RationalVector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RationalVector> null_space(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

GaussMatrix to_gauss(const RationalMatrix& m) {
  GaussMatrix g(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) = GaussRational(m(i, j));
  return g;
}

}  // namespace isospec
