#include "ricci/curvature.hpp"

#include <algorithm>
#include <limits>

namespace ricci {

CurvatureMatrix curvature_matrix(const LocalNeighborhood& nb) {
  const auto d = static_cast<Eigen::Index>(nb.sphere1.size());
  const auto m = static_cast<Eigen::Index>(nb.sphere2.size());
  const auto dx = static_cast<long>(nb.center_degree);

  RationalMatrix a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Rational diag = make_rational(1) + make_rational(4 - dx - static_cast<long>(nb.sphere1_degrees[i]), 2) +
                    make_rational(5 * nb.t[i], 2);
    for (Eigen::Index k = 0; k < m; ++k)
      if (nb.links(i, k)) diag += make_rational(2 * (nb.n[k] - 1), nb.n[k]);
    a(i, i) = diag;

    for (Eigen::Index j = i + 1; j < d; ++j) {
      Rational off = make_rational(1) - make_rational(2 * nb.adj1(i, j));
      for (Eigen::Index k = 0; k < m; ++k)
        if (nb.links(i, k) && nb.links(j, k)) off -= make_rational(2, nb.n[k]);
      a(i, j) = off;
      a(j, i) = off;
    }
  }
  return {nb.center, nb.sphere1, SymmetricMatrix(std::move(a))};
}

double local_ricci(const Graph& g, Vertex x) {
  return eigenvalues_symmetric(curvature_matrix(local_neighborhood(g, x)).matrix).min();
}

namespace {

/// Schur complement of the trailing block of a symmetric matrix, by exact
/// symmetric Gaussian elimination without pivoting. Every pivot must be
/// positive, which is equivalent to the trailing block being positive definite.
RationalMatrix schur_complement_exact(RationalMatrix q, Eigen::Index keep) {
  const Eigen::Index total = q.rows();
  for (Eigen::Index k = keep; k < total; ++k) {
    const Rational pivot = q(k, k);
    if (pivot <= 0)
      throw ConsistencyError("oracle: distance-2 block of the gamma2 form is not positive definite");
    for (Eigen::Index i = 0; i < total; ++i) {
      if (i == k || q(i, k) == 0) continue;
      const Rational factor = q(i, k) / pivot;
      for (Eigen::Index j = 0; j < total; ++j)
        if (j != k) q(i, j) -= factor * q(k, j);
    }
    // Row/column k are now decoupled from the rest; zero them for clarity.
    for (Eigen::Index i = 0; i < total; ++i)
      if (i != k) q(i, k) = q(k, i) = 0;
  }
  return q.topLeftCorner(keep, keep);
}

}  // namespace

double local_ricci_oracle(const Graph& g, Vertex x) {
  const LocalNeighborhood nb = local_neighborhood(g, x);
  std::vector<Vertex> vars = nb.sphere1;
  vars.insert(vars.end(), nb.sphere2.begin(), nb.sphere2.end());
  const auto total = static_cast<Eigen::Index>(vars.size());
  const auto d = static_cast<Eigen::Index>(nb.sphere1.size());

  VertexFunction<Rational> f = VertexFunction<Rational>::Zero(static_cast<Eigen::Index>(g.size()));
  const auto form_at = [&](Eigen::Index i, Eigen::Index j) {
    f(vars[i]) = 1;
    f(vars[j]) = 1;
    Rational value = gamma2(g, f, x);
    f(vars[i]) = 0;
    f(vars[j]) = 0;
    return value;
  };

  // Polarization: Q(i,j) = 1/2 [q(e_i + e_j) - q(e_i) - q(e_j)].
  RationalMatrix q(total, total);
  for (Eigen::Index i = 0; i < total; ++i) q(i, i) = form_at(i, i);
  for (Eigen::Index i = 0; i < total; ++i) {
    for (Eigen::Index j = i + 1; j < total; ++j) {
      const Rational value = (form_at(i, j) - q(i, i) - q(j, j)) / 2;
      q(i, j) = value;
      q(j, i) = value;
    }
  }

  // gamma(f)(x) = 1/2 sum_{B1} f(v)^2, so the Rayleigh quotient is that of 2 S.
  const RationalMatrix reduced = schur_complement_exact(std::move(q), d);
  const SymmetricMatrix twice(RationalMatrix(reduced * Rational(2)));
  return eigenvalues_symmetric(twice).min();
}

double triangle_upper_bound(const Graph& g) {
  return 2.0 + static_cast<double>(max_joint_triangles(g)) / 2.0;
}

namespace {

std::string describe_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  std::string out;
  for (Vertex v : cycle) out += g.name(v) + "-";
  return out + g.name(cycle.front());
}

double max_weighted_degree_sum(const Graph& g) {
  double worst = -std::numeric_limits<double>::infinity();
  for (auto [a, b] : g.edges()) {
    const double da = static_cast<double>(g.degree(a));
    const double db = static_cast<double>(g.degree(b));
    worst = std::max({worst, (3 * da + db) / 2, (3 * db + da) / 2});
  }
  return worst;
}

}  // namespace

double triangle_free_lower_bound(const Graph& g) {
  if (auto tri = find_triangle(g)) throw DomainError("graph has a triangle: " + describe_cycle(g, *tri));
  return 4.0 - max_weighted_degree_sum(g);
}

CurvatureInterval no_tri_quad_bounds(const Graph& g) {
  if (auto tri = find_triangle(g)) throw DomainError("graph has a triangle: " + describe_cycle(g, *tri));
  if (auto quad = find_quadrilateral(g))
    throw DomainError("graph has a quadrilateral: " + describe_cycle(g, *quad));

  CurvatureInterval out;
  out.lower = 4.0 - max_weighted_degree_sum(g);
  out.upper = 2.0;
  // lambda_min(A(x)) <= A_ii = (6 - d(x) - d(v))/2, which is at most
  // (2 + d(x) - d(v))/2 only when d(x) >= 2.
  const auto consider = [&](Vertex x, Vertex v) {
    if (g.degree(x) < 2) return;
    const double dx = static_cast<double>(g.degree(x));
    const double dv = static_cast<double>(g.degree(v));
    out.upper = std::min(out.upper, (2 + dx - dv) / 2);
  };
  for (auto [a, b] : g.edges()) {
    consider(a, b);
    consider(b, a);
  }
  return out;
}

double regular_no_tri_quad_ricci(int d) {
  if (d < 1) throw DomainError("degree must be positive");
  return 2.0 - d;
}

CurvatureReport global_ricci(const Graph& g) {
  if (g.size() == 0) throw DomainError("curvature of an empty graph");
  CurvatureReport report;
  report.per_vertex.reserve(g.size());
  for (Vertex x = 0; x < g.size(); ++x) report.per_vertex.push_back(local_ricci(g, x));
  report.global = *std::min_element(report.per_vertex.begin(), report.per_vertex.end());

  const auto upper = [&](std::string name, double value) {
    report.bounds.push_back({std::move(name), value, report.global <= value + kBoundTolerance});
  };
  const auto lower = [&](std::string name, double value) {
    report.bounds.push_back({std::move(name), value, report.global >= value - kBoundTolerance});
  };

  upper("triangle_upper", triangle_upper_bound(g));
  if (!find_triangle(g)) {
    lower("triangle_free_lower", triangle_free_lower_bound(g));
    if (!find_quadrilateral(g)) {
      const auto interval = no_tri_quad_bounds(g);
      lower("no_tri_quad_lower", interval.lower);
      upper("no_tri_quad_upper", interval.upper);
    }
  }
  return report;
}

}  // namespace ricci
