#include "ricci/linalg.hpp"

#include <numbers>

namespace ricci {

SymmetricMatrix::SymmetricMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("symmetric matrix must be square");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < entries_.cols(); ++j)
      if (entries_(i, j) != entries_(j, i))
        throw ConsistencyError("matrix is not symmetric at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
}

SymmetricMatrix SymmetricMatrix::zero(Eigen::Index dim) {
  return SymmetricMatrix(RationalMatrix::Constant(dim, dim, Rational(0)));
}

Eigen::MatrixXd tridiagonal_toeplitz_matrix(double alpha, double beta, double a, double b, double c, int n) {
  if (n <= 0) throw DomainError("tridiagonal Toeplitz: n must be positive");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = b;
    if (i + 1 < n) {
      m(i, i + 1) = c;
      m(i + 1, i) = a;
    }
  }
  m(0, 0) -= alpha;
  m(n - 1, n - 1) -= beta;
  return m;
}

std::vector<double> tridiagonal_toeplitz_eigs(double alpha, double beta, double a, double b, double c, int n) {
  if (n <= 0) throw DomainError("tridiagonal Toeplitz: n must be positive");
  if (!(a * c > 0)) throw DomainError("tridiagonal Toeplitz: requires ac > 0");
  const double root = std::sqrt(a * c);
  const auto close = [root](double x) { return std::abs(x - root) <= 1e-12 * std::max(1.0, root); };
  if (!close(alpha) || !close(beta))
    throw DomainError("tridiagonal Toeplitz: requires alpha = beta = sqrt(ac)");

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    out.push_back(b + 2.0 * std::sqrt(alpha * beta) * std::cos(i * std::numbers::pi / n));
  return out;
}

Eigen::MatrixXd circulant_matrix(std::span<const double> c) {
  const auto n = static_cast<Eigen::Index>(c.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = c[static_cast<std::size_t>(((i - j) % n + n) % n)];
  return m;
}

std::vector<std::complex<double>> circulant_eigs(std::span<const double> c) {
  const std::size_t n = c.size();
  if (n == 0) throw DomainError("circulant: empty first column");
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce k*j mod n first so the angle stays small.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
      sum += c[(n - k) % n] * std::polar(1.0, angle);
    }
    out[j] = sum;
  }
  return out;
}

std::vector<double> real_parts(std::span<const std::complex<double>> values, double tol) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& z : values) {
    if (std::abs(z.imag()) > tol) throw NumericError("spectrum has a non-negligible imaginary part", std::abs(z.imag()));
    out.push_back(z.real());
  }
  return out;
}

}  // namespace ricci
