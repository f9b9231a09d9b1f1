#pragma once

// Graph Laplacian-type operators on vertex functions, templated on the
// scalar so the same code runs in double and in exact rationals.

#include <Eigen/Core>

#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"

namespace ricci {

/// A real function on the vertices of a graph, indexed like Graph::vertices().
template <class Scalar>
using VertexFunction = VectorX<Scalar>;

namespace detail {

template <class Derived>
void require_total(const Graph& g, const Eigen::MatrixBase<Derived>& f, Vertex x) {
  if (x >= g.size()) throw LookupError("vertex index out of range");
  if (static_cast<std::size_t>(f.size()) != g.size())
    throw DomainError("vertex function is not defined on every vertex");
}

}  // namespace detail

/// sum_{v ~ x} (f(v) - f(x))
template <class Derived>
typename Derived::Scalar delta(const Graph& g, const Eigen::MatrixBase<Derived>& f, Vertex x) {
  using Scalar = typename Derived::Scalar;
  detail::require_total(g, f, x);
  Scalar sum(0);
  for (Vertex v : g.neighbors(x)) sum += f(v) - f(x);
  return sum;
}

/// 1/2 sum_{v ~ x} (f(x) - f(v)) (h(x) - h(v))
template <class DerivedF, class DerivedH>
typename DerivedF::Scalar gamma(const Graph& g, const Eigen::MatrixBase<DerivedF>& f,
                                const Eigen::MatrixBase<DerivedH>& h, Vertex x) {
  using Scalar = typename DerivedF::Scalar;
  detail::require_total(g, f, x);
  detail::require_total(g, h, x);
  Scalar sum(0);
  for (Vertex v : g.neighbors(x)) sum += (f(x) - f(v)) * (h(x) - h(v));
  return sum / Scalar(2);
}

/// 1/2 delta(gamma(f,f))(x) - gamma(f, delta f)(x), evaluated by composing the
/// two operators above. Only x and its neighbours are read by the outer
/// operators, so the inner ones are tabulated there only.
template <class Derived>
typename Derived::Scalar gamma2(const Graph& g, const Eigen::MatrixBase<Derived>& f, Vertex x) {
  using Scalar = typename Derived::Scalar;
  detail::require_total(g, f, x);
  VertexFunction<Scalar> gf = VertexFunction<Scalar>::Zero(static_cast<Eigen::Index>(g.size()));
  VertexFunction<Scalar> df = VertexFunction<Scalar>::Zero(static_cast<Eigen::Index>(g.size()));
  gf(x) = gamma(g, f, f, x);
  df(x) = delta(g, f, x);
  for (Vertex v : g.neighbors(x)) {
    gf(v) = gamma(g, f, f, v);
    df(v) = delta(g, f, v);
  }
  return delta(g, gf, x) / Scalar(2) - gamma(g, f, df, x);
}

/// Closed expansion of gamma2 at x for functions vanishing at x:
///
///   2 gamma2 = 1/2 sum_{u in B2} sum_{v in B1, v ~ u} (f(u) - 2 f(v))^2
///            + (sum_{v in B1} f(v))^2
///            + sum_{edges {v,v'} inside B1} [2 (f(v) - f(v'))^2 + 1/2 (f(v)^2 + f(v')^2)]
///            + sum_{v in B1} (4 - d(x) - d(v)) / 2 * f(v)^2
template <class Derived>
typename Derived::Scalar gamma2_expanded(const Graph& g, const Eigen::MatrixBase<Derived>& f, Vertex x) {
  using Scalar = typename Derived::Scalar;
  detail::require_total(g, f, x);
  if (f(x) != Scalar(0)) throw DomainError("gamma2_expanded requires f(x) = 0");

  const LocalNeighborhood nb = local_neighborhood(g, x);
  const std::size_t d = nb.sphere1.size();
  const Scalar half = Scalar(1) / Scalar(2);

  Scalar paths(0);
  for (std::size_t k = 0; k < nb.sphere2.size(); ++k) {
    const Scalar fu = f(nb.sphere2[k]);
    for (std::size_t i = 0; i < d; ++i) {
      if (!nb.links(i, k)) continue;
      const Scalar r = fu - Scalar(2) * f(nb.sphere1[i]);
      paths += r * r;
    }
  }

  Scalar mean(0);
  for (Vertex v : nb.sphere1) mean += f(v);

  Scalar inner(0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!nb.adj1(i, j)) continue;
      const Scalar a = f(nb.sphere1[i]);
      const Scalar b = f(nb.sphere1[j]);
      inner += Scalar(2) * (a - b) * (a - b) + half * (a * a + b * b);
    }
  }

  Scalar degree_term(0);
  const auto dx = static_cast<long>(nb.center_degree);
  for (std::size_t i = 0; i < d; ++i) {
    const Scalar a = f(nb.sphere1[i]);
    degree_term += Scalar(4 - dx - static_cast<long>(nb.sphere1_degrees[i])) / Scalar(2) * a * a;
  }

  return half * (half * paths + mean * mean + inner + degree_term);
}

}  // namespace ricci
