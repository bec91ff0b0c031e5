#pragma once

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pfd {

/// Dense univariate polynomial with real (or complex) coefficients stored in
/// ascending degree order: c[0] + c[1] x + c[2] x^2 + ...
///
/// The coefficient vector is kept normalized: the leading coefficient is
/// nonzero, except for the zero polynomial which is stored as a single zero.
template <typename Scalar>
class PolynomialT {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  PolynomialT() : c_(Coeffs::Zero(1)) {}

  explicit PolynomialT(Coeffs coeffs) : c_(std::move(coeffs)) {
    if (c_.size() == 0) throw std::invalid_argument("polynomial: empty coefficient vector");
    trim();
  }

  PolynomialT(std::initializer_list<Scalar> coeffs) {
    if (coeffs.size() == 0) throw std::invalid_argument("polynomial: empty coefficient list");
    c_.resize(static_cast<Eigen::Index>(coeffs.size()));
    Eigen::Index i = 0;
    for (const Scalar& v : coeffs) c_[i++] = v;
    trim();
  }

  static PolynomialT constant(Scalar a) { return PolynomialT({a}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Coeffs& coeffs() const { return c_; }

  /// Coefficient of x^i; zero beyond the stored degree.
  Scalar coeff(int i) const {
    if (i < 0) throw std::out_of_range("polynomial: negative coefficient index");
    return i <= degree() ? c_[i] : Scalar(0);
  }

  Scalar leading() const { return c_[c_.size() - 1]; }

  bool is_zero() const { return c_.size() == 1 && c_[0] == Scalar(0); }

 private:
  void trim() {
    Eigen::Index n = c_.size();
    while (n > 1 && c_[n - 1] == Scalar(0)) --n;
    c_.conservativeResize(n);
  }

  Coeffs c_;
};

using Polynomial = PolynomialT<double>;

template <typename Scalar>
PolynomialT<Scalar> operator+(const PolynomialT<Scalar>& a, const PolynomialT<Scalar>& b) {
  typename PolynomialT<Scalar>::Coeffs c =
      PolynomialT<Scalar>::Coeffs::Zero(std::max(a.degree(), b.degree()) + 1);
  c.head(a.degree() + 1) += a.coeffs();
  c.head(b.degree() + 1) += b.coeffs();
  return PolynomialT<Scalar>(std::move(c));
}

template <typename Scalar>
PolynomialT<Scalar> operator-(const PolynomialT<Scalar>& a, const PolynomialT<Scalar>& b) {
  typename PolynomialT<Scalar>::Coeffs c =
      PolynomialT<Scalar>::Coeffs::Zero(std::max(a.degree(), b.degree()) + 1);
  c.head(a.degree() + 1) += a.coeffs();
  c.head(b.degree() + 1) -= b.coeffs();
  return PolynomialT<Scalar>(std::move(c));
}

template <typename Scalar>
PolynomialT<Scalar> operator*(const PolynomialT<Scalar>& a, const PolynomialT<Scalar>& b) {
  if (a.is_zero() || b.is_zero()) return PolynomialT<Scalar>();
  typename PolynomialT<Scalar>::Coeffs c =
      PolynomialT<Scalar>::Coeffs::Zero(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return PolynomialT<Scalar>(std::move(c));
}

template <typename Scalar>
PolynomialT<Scalar> operator*(Scalar s, const PolynomialT<Scalar>& p) {
  typename PolynomialT<Scalar>::Coeffs c = s * p.coeffs();
  return PolynomialT<Scalar>(std::move(c));
}

template <typename Scalar>
PolynomialT<Scalar> pow(const PolynomialT<Scalar>& p, int k) {
  if (k < 0) throw std::invalid_argument("polynomial: negative power");
  PolynomialT<Scalar> r = PolynomialT<Scalar>::constant(Scalar(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Horner evaluation; the argument type may differ from the coefficient type
/// (e.g. a real polynomial evaluated at a complex point).
template <typename Scalar, typename Arg>
auto polyval(const PolynomialT<Scalar>& p, const Arg& x) {
  using R = decltype(Scalar() * Arg() + Arg());
  R acc = R(p.leading());
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * x + R(p.coeffs()[i]);
  return acc;
}

/// Roots of a real polynomial as eigenvalues of its companion matrix.
inline std::vector<std::complex<double>> companion_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("companion_roots: degree must be at least 1");
  const Eigen::VectorXd monic = p.coeffs().head(n) / p.leading();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  comp.block(1, 0, n - 1, n - 1).setIdentity();
  comp.col(n - 1) = -monic;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

}  // namespace pfd
