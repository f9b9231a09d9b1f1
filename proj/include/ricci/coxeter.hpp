#pragma once

// Coxeter diagrams, the commutation matrix of a Coxeter system, curvature of
// weak-order graphs, and explicit Cayley graphs for groups with a concrete
// permutation model.

#include <Eigen/Core>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ricci/graph.hpp"
#include "ricci/linalg.hpp"

namespace ricci::coxeter {

enum class Family {
  A, B, D, I2, H3, H4, F4, E6, E7, E8,
  AffineA, AffineB, AffineC, AffineD, AffineE6, AffineE7, AffineE8, AffineF4, AffineG2,
};

/// One irreducible type, e.g. {B, 4} or {I2, 7} or {AffineA, 3}.
struct TypeTag {
  Family family = Family::A;
  int parameter = 1;

  bool affine() const;
  /// Number of simple generators.
  int rank() const;
  /// Tag as accepted by parse_type: "B4", "I2:7", "~A3", ...
  std::string str() const;

  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

/// Marker for m_ij = infinity.
inline constexpr int kInfinity = 0;

struct CoxeterDiagram {
  std::vector<TypeTag> components;  ///< one entry per irreducible block
  Eigen::MatrixXi m;                ///< Coxeter matrix, m_ii = 1

  int rank() const { return static_cast<int>(m.rows()); }
  bool irreducible() const { return components.size() == 1; }
  /// Components joined by 'x'.
  std::string label() const;
  /// True iff s_i and s_j do not commute (m_ij >= 3 or infinite).
  bool linked(int i, int j) const { return i != j && (m(i, j) == kInfinity || m(i, j) >= 3); }
};

/// Standard diagram of an irreducible type. Throws DomainError when the
/// parameter is outside the family's range.
CoxeterDiagram diagram(Family family, int parameter);
inline CoxeterDiagram diagram(const TypeTag& tag) { return diagram(tag.family, tag.parameter); }

/// Block-diagonal combination (direct product of the groups).
CoxeterDiagram product_diagram(std::span<const CoxeterDiagram> parts);

/// Parses "A3", "I2:7", "~D4", and products such as "A3xB2".
std::vector<TypeTag> parse_type(std::string_view text);
CoxeterDiagram parse_diagram(std::string_view text);

/// M_W: -1 where generators do not commute, 0 where they commute, and the
/// number of non-commuting partners on the diagonal. This is the graph
/// Laplacian of the unlabelled diagram.
SymmetricMatrix commutation_matrix(const CoxeterDiagram& d);

/// Curvature of the weak-order graph: 2 - lambda_max(M_W).
double weak_order_ricci_spectral(const CoxeterDiagram& d);

struct ClosedForm {
  enum class Kind { Exact, Interval, Reference };
  Kind kind = Kind::Exact;
  double value = 0.0;  ///< Exact and Reference
  double lower = 0.0;  ///< Interval
  double upper = 0.0;  ///< Interval
  double reference_tolerance = 0.0;  ///< half-unit in the last quoted digit
  std::string formula;

  bool consistent_with(double spectral, double tol = 1e-9) const;
};

/// Closed form for an irreducible diagram:
/// - path-shaped (strictly linear) types: -2 cos(pi/|S|) via the tridiagonal
///   Toeplitz spectrum;
/// - ~A_n, n >= 2 (a k-cycle, k = n + 1): 2 cos(2 pi floor(k/2) / k) via the
///   circulant spectrum;
/// - D_n (n >= 4), ~B_n, ~D_n (n >= 5): the interval [-4, -2];
/// - ~D_4: -3;
/// - E and ~E types: quoted decimal reference values.
/// Throws DomainError for products.
ClosedForm weak_order_ricci_closed_form(const CoxeterDiagram& d);

/// min over the parts of weak_order_ricci_spectral.
double product_ricci(std::span<const CoxeterDiagram> parts);

/// Path-shaped diagram in generator order? (m_{i,i+1} >= 3, all others 2.)
bool strictly_linear(const TypeTag& tag);

/// |W| and the number of reflections |T| for finite irreducible types, as
/// doubles (they overflow 64-bit integers quickly). DomainError for affine.
double group_order(const TypeTag& tag);
double reflection_count(const TypeTag& tag);

// --- Concrete permutation models ------------------------------------------

enum class ModelKind { Symmetric, Signed, EvenSigned, Dihedral };

/// A signed permutation of {±1..±n}, stored as the images of 1..n.
using SignedPermutation = std::vector<int>;

/// (a b)(i) = a(b(i)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation identity_permutation(int n);

struct GroupModel {
  ModelKind kind = ModelKind::Symmetric;
  int parameter = 1;  ///< rank for Symmetric/Signed/EvenSigned, m for Dihedral
  std::vector<SignedPermutation> generators;  ///< in diagram node order
  TypeTag type;
};

inline constexpr int kMaxSymmetricRank = 5;
inline constexpr int kMaxSignedRank = 4;
inline constexpr int kMaxEvenSignedRank = 4;
inline constexpr int kMaxDihedral = 50;

/// Concrete model of A_n (S_{n+1}), B_n (signed), D_n (even-signed) or
/// I2(m) (dihedral). Throws ResourceError beyond the size caps.
GroupModel group_model(ModelKind kind, int parameter);

/// Model for a type tag if one exists within the caps.
std::optional<GroupModel> model_for(const TypeTag& tag);

/// Checks s_i^2 = e and that s_i s_j has order exactly m_ij for all pairs.
bool satisfies_relations(const GroupModel& model, const Eigen::MatrixXi& m);

/// Canonical name of a group element: one-line notation "2,1,3" for
/// (signed) permutations, a reduced word over {a,b} ("e" for the identity)
/// for dihedral groups.
std::string encode(const GroupModel& model, const SignedPermutation& w);

/// Cayley graph with the simple generators: vertices are group elements, edges
/// {w, w s}. This is the Hasse diagram of the weak order.
Graph weak_order_graph(const GroupModel& model);

/// Weak-order graph of a direct product: the Cartesian product of the factors'
/// graphs. Vertex names join the factors' names with '|'.
Graph weak_order_graph(std::span<const GroupModel> factors);

/// Undirected Bruhat graph of S_n (n <= 5): edges {w, w t} for all
/// transpositions t.
Graph bruhat_graph_symmetric(int n);

}  // namespace ricci::coxeter
