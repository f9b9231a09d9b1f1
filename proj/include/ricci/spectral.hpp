#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ricci/coxeter.hpp"
#include "ricci/graph.hpp"

namespace ricci {

struct SpectralProfile {
  std::vector<double> laplacian_eigenvalues;  ///< of D - A, ascending
  double spectral_gap = 0.0;                  ///< smallest eigenvalue above kZeroMode
  std::size_t diameter = 0;
};

/// Eigenvalues at or below this are treated as the zero mode.
inline constexpr double kZeroMode = 1e-7;

/// D - A of g, indexed like Graph::vertices().
Eigen::MatrixXd laplacian(const Graph& g);

/// Throws DomainError on disconnected graphs.
SpectralProfile spectral_profile(const Graph& g);

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

struct GapCheck {
  Verdict verdict = Verdict::NotApplicable;
  double curvature = 0.0;
  double gap = 0.0;
};

/// gap >= Ric(G) - 1e-9 when Ric(G) > 0; not applicable otherwise.
GapCheck check_gap_vs_curvature(const Graph& g);

/// Number of edges with exactly one endpoint in `subset`. Unknown names throw
/// LookupError; repeated names count once.
std::size_t boundary_size(const Graph& g, std::span<const std::string> subset);
std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset);

/// 1/2 min(sqrt(gap), gap / sqrt(2|K|)) |A| (1 - |A|/|V|). DomainError when
/// K = 0 or the sizes are inconsistent.
double isoperimetric_rhs(double gap, double curvature, std::size_t size_a, std::size_t size_v);

enum class SubsetMode { Auto, Exhaustive, Sampled };

inline constexpr std::size_t kExhaustiveCap = 14;
inline constexpr std::size_t kSampleCount = 100000;

struct IsoperimetryCheck {
  Verdict verdict = Verdict::NotApplicable;
  bool sampled = false;
  std::size_t subsets_checked = 0;
  double curvature = 0.0;
  double gap = 0.0;
  /// Subset with the smallest boundary - rhs, and that slack.
  std::vector<Vertex> witness;
  double worst_slack = 0.0;
};

/// Checks |∂A| >= isoperimetric_rhs(...) - 1e-9 on every subset (exhaustive,
/// up to kExhaustiveCap vertices) or on kSampleCount uniform random subsets
/// drawn from `seed`. Auto picks exhaustive when the graph is small enough.
/// Exhaustive mode above the cap throws ResourceError; zero curvature gives
/// NotApplicable.
IsoperimetryCheck verify_isoperimetry(const Graph& g, std::uint64_t seed = 0, SubsetMode mode = SubsetMode::Auto);

/// group_order / (diameter * generator_count^diameter), +infinity guarded:
/// returns 0 when the denominator overflows a double.
double cayley_gap_lower_bound(double group_order, double generator_count, double diameter);

/// Isoperimetric constant for the weak-order graph of a finite Coxeter group
/// obtained from |W|, |S|, |T| and the diameter |T| of the weak order.
struct CoxeterIsoperimetry {
  std::string label;
  double order = 0.0;        ///< |W|
  double generators = 0.0;   ///< |S|
  double reflections = 0.0;  ///< |T|
  double curvature = 0.0;    ///< Ric(V(W))
  bool dihedral_branch = false;
  /// Constant c with |∂A| >= c |A| (1 - |A|/|W|).
  double constant = 0.0;
  std::string formula;
};

/// Throws DomainError for affine components.
CoxeterIsoperimetry coxeter_isoperimetry(const coxeter::CoxeterDiagram& d);

}  // namespace ricci
