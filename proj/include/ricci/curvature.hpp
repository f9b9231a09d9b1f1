#pragma once

#include <string>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/linalg.hpp"
#include "ricci/operators.hpp"

namespace ricci {

/// The local curvature matrix A(x): a d(x) x d(x) exact symmetric matrix whose
/// smallest eigenvalue is the local Ricci curvature at x.
///
/// With U_v = B(2,x) ∩ B(1,v), n_u the number of 2-paths from x to u, t_v the
/// number of triangles on {x,v} and T(v,v') the adjacency indicator on B(1,x):
///
///   A_ii = sum_{u in U_vi} 2(n_u - 1)/n_u + 1 + (4 - d(x) - d(vi))/2 + 5/2 t_vi
///   A_ij = sum_{u in U_vi ∩ U_vj} (-2/n_u) + 1 - 2 T(vi,vj)
///
/// Rows follow `order`, the index order of B(1,x).
struct CurvatureMatrix {
  Vertex center = 0;
  std::vector<Vertex> order;
  SymmetricMatrix matrix;
};

CurvatureMatrix curvature_matrix(const LocalNeighborhood& nb);

/// Smallest eigenvalue of A(x).
double local_ricci(const Graph& g, Vertex x);

/// Local curvature computed without A(x): the quadratic form of gamma2 on
/// B(1,x) ∪ B(2,x) is recovered by polarization of definitional gamma2
/// evaluations (exact rationals), the B(2,x) variables are eliminated by a
/// Schur complement, and the minimum eigenvalue of twice the remaining form
/// on B(1,x) is returned. Throws ConsistencyError if the eliminated block is
/// not positive definite.
double local_ricci_oracle(const Graph& g, Vertex x);

struct BoundCheck {
  std::string name;
  double value = 0.0;
  bool satisfied = false;
};

struct CurvatureReport {
  std::vector<double> per_vertex;  ///< indexed like Graph::vertices()
  double global = 0.0;             ///< minimum of per_vertex
  std::vector<BoundCheck> bounds;  ///< only bounds whose hypotheses hold
};

/// Local curvature at every vertex, their minimum, and every applicable bound.
CurvatureReport global_ricci(const Graph& g);

/// Upper bound 2 + T/2, T = max_joint_triangles(g).
double triangle_upper_bound(const Graph& g);

/// 4 - max over ordered adjacent pairs (x,y) of (3 d(x) + d(y)) / 2.
/// Throws DomainError if g has a triangle.
double triangle_free_lower_bound(const Graph& g);

struct CurvatureInterval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double x, double tol = 1e-9) const { return lower - tol <= x && x <= upper + tol; }
};

/// For graphs without 3- and 4-cycles:
///   lower = 4 - max_{(x,v) adjacent} (3 d(x) + d(v)) / 2
///   upper = min(2, min_{(x',v') adjacent, d(x') >= 2} (2 + d(x') - d(v')) / 2)
/// Throws DomainError naming a short cycle otherwise.
CurvatureInterval no_tri_quad_bounds(const Graph& g);

/// 2 - d: curvature of a d-regular graph without triangles or quadrilaterals
/// whose length-2 path subgraphs are all isomorphic.
double regular_no_tri_quad_ricci(int d);

/// Tolerance used when checking bounds against computed curvature.
inline constexpr double kBoundTolerance = 1e-9;

}  // namespace ricci
