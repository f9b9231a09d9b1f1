#pragma once

// Dense symmetric eigen-analysis, Gershgorin intervals and closed-form
// Toeplitz spectra.

#include <Eigen/Core>
#include <Eigen/Jacobi>
#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "ricci/errors.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// Exact-rational symmetric matrix. Symmetry is checked on construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(RationalMatrix entries);

  static SymmetricMatrix zero(Eigen::Index dim);

  Eigen::Index dim() const { return entries_.rows(); }
  const RationalMatrix& entries() const { return entries_; }
  const Rational& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  Eigen::MatrixXd to_double() const { return entries_.unaryExpr([](const Rational& r) { return r.get_d(); }); }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.entries_.rows() == b.entries_.rows() && a.entries_ == b.entries_;
  }

 private:
  RationalMatrix entries_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  ///< ascending, with multiplicity
  int iterations = 0;               ///< sweeps performed
  double residual = 0.0;            ///< off-diagonal Frobenius norm at exit

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;
  double absolute_floor = 1e-300;
  int max_sweeps = 100;
};

namespace detail {

inline double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace detail

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm drops below
/// max(relative_tolerance * ||m||_F, absolute_floor). Throws NumericError
/// carrying the residual after `max_sweeps` sweeps without convergence.
template <class Derived>
Spectrum eigenvalues_symmetric(const Eigen::MatrixBase<Derived>& m, const JacobiOptions& opt = {}) {
  Eigen::MatrixXd a = m.template cast<double>();
  if (a.rows() != a.cols()) throw DomainError("eigenvalues_symmetric: matrix is not square");
  const Eigen::Index n = a.rows();
  if (n == 0) throw DomainError("eigenvalues_symmetric: empty matrix");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()))
    throw DomainError("eigenvalues_symmetric: matrix is not symmetric");

  const double threshold = std::max(opt.relative_tolerance * a.norm(), opt.absolute_floor);
  Spectrum out;
  out.residual = detail::off_diagonal_norm(a);
  while (out.residual > threshold) {
    if (out.iterations >= opt.max_sweeps)
      throw NumericError("Jacobi iteration did not converge", out.residual);
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        Eigen::JacobiRotation<double> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = 0.0;
      }
    }
    ++out.iterations;
    out.residual = detail::off_diagonal_norm(a);
  }
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

inline Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, const JacobiOptions& opt = {}) {
  return eigenvalues_symmetric(m.to_double(), opt);
}

template <class Scalar>
struct Interval {
  Scalar lo;
  Scalar hi;

  bool contains(double x, double tol = 0.0) const {
    return to_double(lo) - tol <= x && x <= to_double(hi) + tol;
  }
};

/// Row discs [m_ii - R_i, m_ii + R_i], R_i = sum_{j != i} |m_ij|. Exact when
/// the scalar is.
template <class Derived>
std::vector<Interval<typename Derived::Scalar>> gershgorin_intervals(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Interval<Scalar>> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Scalar radius(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j == i) continue;
      using std::abs;
      radius += Scalar(abs(m(i, j)));
    }
    out.push_back({Scalar(m(i, i) - radius), Scalar(m(i, i) + radius)});
  }
  return out;
}

inline std::vector<Interval<Rational>> gershgorin_intervals(const SymmetricMatrix& m) {
  return gershgorin_intervals(m.entries());
}

/// True if every value lies in the union of the intervals (with slack `tol`).
template <class Scalar>
bool gershgorin_contains(const std::vector<Interval<Scalar>>& discs, std::span<const double> values,
                         double tol = 1e-9) {
  return std::all_of(values.begin(), values.end(), [&](double x) {
    return std::any_of(discs.begin(), discs.end(), [&](const auto& k) { return k.contains(x, tol); });
  });
}

/// The n x n tridiagonal Toeplitz matrix with diagonal b, sub-diagonal a,
/// super-diagonal c, and corners b - alpha, b - beta.
Eigen::MatrixXd tridiagonal_toeplitz_matrix(double alpha, double beta, double a, double b, double c, int n);

/// Closed-form spectrum b + 2 sqrt(alpha beta) cos(i pi / n), i = 1..n, in that
/// order. Requires ac > 0 and alpha = beta = sqrt(ac).
std::vector<double> tridiagonal_toeplitz_eigs(double alpha, double beta, double a, double b, double c, int n);

/// Circulant matrix with first column c: M(i,j) = c[(i - j) mod n].
Eigen::MatrixXd circulant_matrix(std::span<const double> c);

/// lambda_j = sum_k c[(n - k) mod n] zeta^{kj}, zeta = exp(2 pi i / n), j = 0..n-1.
std::vector<std::complex<double>> circulant_eigs(std::span<const double> c);

/// Real parts of a spectrum that must be real; throws NumericError if some
/// imaginary part exceeds `tol`.
std::vector<double> real_parts(std::span<const std::complex<double>> values, double tol = 1e-9);

}  // namespace ricci
