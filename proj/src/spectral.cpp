#include "ricci/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/linalg.hpp"

namespace ricci {

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    l(i, i) = static_cast<double>(g.degree(v));
    for (Vertex u : g.neighbors(v)) l(i, static_cast<Eigen::Index>(u)) = -1.0;
  }
  return l;
}

SpectralProfile spectral_profile(const Graph& g) {
  if (!is_connected(g)) throw DomainError("spectral profile of a disconnected graph");
  SpectralProfile out;
  out.laplacian_eigenvalues = eigenvalues_symmetric(laplacian(g)).eigenvalues;
  const auto it = std::find_if(out.laplacian_eigenvalues.begin(), out.laplacian_eigenvalues.end(),
                               [](double x) { return x > kZeroMode; });
  out.spectral_gap = it == out.laplacian_eigenvalues.end() ? 0.0 : *it;
  out.diameter = diameter(g);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not_applicable";
  }
  return "unknown";
}

GapCheck check_gap_vs_curvature(const Graph& g) {
  GapCheck out;
  out.curvature = global_ricci(g).global;
  out.gap = spectral_profile(g).spectral_gap;
  if (out.curvature > kBoundTolerance)
    out.verdict = out.gap >= out.curvature - kBoundTolerance ? Verdict::Pass : Verdict::Fail;
  return out;
}

std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset) {
  std::vector<char> in(g.size(), 0);
  for (Vertex v : subset) {
    if (v >= g.size()) throw LookupError("vertex index out of range");
    in[v] = 1;
  }
  std::size_t count = 0;
  for (auto [a, b] : g.edges())
    if (in[a] != in[b]) ++count;
  return count;
}

std::size_t boundary_size(const Graph& g, std::span<const std::string> subset) {
  std::vector<Vertex> ids;
  ids.reserve(subset.size());
  for (const auto& name : subset) ids.push_back(g.index(name));
  return boundary_size(g, std::span<const Vertex>(ids));
}

double isoperimetric_rhs(double gap, double curvature, std::size_t size_a, std::size_t size_v) {
  if (curvature == 0.0) throw DomainError("isoperimetric bound needs nonzero curvature");
  if (size_v == 0 || size_a > size_v) throw DomainError("subset size must lie in [0, |V|]");
  if (!(gap > 0.0)) throw DomainError("isoperimetric bound needs a positive spectral gap");
  const double c = 0.5 * std::min(std::sqrt(gap), gap / std::sqrt(2.0 * std::abs(curvature)));
  const double a = static_cast<double>(size_a);
  return c * a * (1.0 - a / static_cast<double>(size_v));
}

namespace {

/// Subsets as bitmasks over at most 64 vertices.
struct MaskGraph {
  explicit MaskGraph(const Graph& g) : adjacency(g.size(), 0) {
    for (Vertex v = 0; v < g.size(); ++v)
      for (Vertex u : g.neighbors(v)) adjacency[v] |= std::uint64_t{1} << u;
  }
  std::size_t boundary(std::uint64_t set) const {
    std::size_t out = 0;
    for (std::uint64_t rest = set; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      out += static_cast<std::size_t>(std::popcount(adjacency[v] & ~set));
    }
    return out;
  }
  std::vector<std::uint64_t> adjacency;
};

std::vector<Vertex> members(std::uint64_t set) {
  std::vector<Vertex> out;
  for (; set; set &= set - 1) out.push_back(static_cast<Vertex>(std::countr_zero(set)));
  return out;
}

std::vector<Vertex> members(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < in.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

}  // namespace

IsoperimetryCheck verify_isoperimetry(const Graph& g, std::uint64_t seed, SubsetMode mode) {
  const std::size_t n = g.size();
  if (mode == SubsetMode::Exhaustive && n > kExhaustiveCap)
    throw ResourceError("exhaustive subset check is capped at " + std::to_string(kExhaustiveCap) + " vertices");

  IsoperimetryCheck out;
  out.curvature = global_ricci(g).global;
  if (std::abs(out.curvature) <= kBoundTolerance) return out;
  out.gap = spectral_profile(g).spectral_gap;
  out.sampled = mode == SubsetMode::Sampled || (mode == SubsetMode::Auto && n > kExhaustiveCap);
  out.worst_slack = std::numeric_limits<double>::infinity();

  const auto consider = [&](std::size_t boundary, std::size_t size, auto&& witness) {
    ++out.subsets_checked;
    const double slack = static_cast<double>(boundary) - isoperimetric_rhs(out.gap, out.curvature, size, n);
    if (slack < out.worst_slack) {
      out.worst_slack = slack;
      out.witness = witness();
    }
  };

  if (!out.sampled) {
    const MaskGraph mg(g);
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t set = 0; set < end; ++set)
      consider(mg.boundary(set), static_cast<std::size_t>(std::popcount(set)), [&] { return members(set); });
  } else {
    std::mt19937_64 rng(seed);
    std::vector<char> in(n);
    for (std::size_t s = 0; s < kSampleCount; ++s) {
      std::size_t size = 0;
      for (std::size_t v = 0; v < n; v += 64) {
        std::uint64_t bits = rng();
        for (std::size_t k = v; k < std::min(n, v + 64); ++k, bits >>= 1) {
          in[k] = static_cast<char>(bits & 1);
          size += in[k];
        }
      }
      std::size_t boundary = 0;
      for (auto [a, b] : g.edges())
        if (in[a] != in[b]) ++boundary;
      consider(boundary, size, [&] { return members(in); });
    }
  }
  out.verdict = out.worst_slack >= -kBoundTolerance ? Verdict::Pass : Verdict::Fail;
  return out;
}

double cayley_gap_lower_bound(double group_order, double generator_count, double diameter) {
  if (!(group_order > 0) || !(generator_count > 0) || !(diameter > 0))
    throw DomainError("Cayley gap bound needs positive inputs");
  const double denominator = diameter * std::pow(generator_count, diameter);
  if (!std::isfinite(denominator)) return 0.0;
  return group_order / denominator;
}

CoxeterIsoperimetry coxeter_isoperimetry(const coxeter::CoxeterDiagram& d) {
  CoxeterIsoperimetry out;
  out.label = d.label();
  out.order = 1.0;
  for (const auto& tag : d.components) {
    if (tag.affine()) throw DomainError("isoperimetric constant needs a finite group; " + tag.str() + " is affine");
    out.order *= coxeter::group_order(tag);
    out.reflections += coxeter::reflection_count(tag);
    out.dihedral_branch = out.dihedral_branch || tag.family == coxeter::Family::I2;
  }
  out.generators = d.rank();
  out.curvature = coxeter::weak_order_ricci_spectral(d);
  // The weak order has diameter |T|, the length of the longest element.
  const double gap_bound = cayley_gap_lower_bound(out.order, out.generators, out.reflections);
  if (out.dihedral_branch || std::abs(out.curvature) <= kBoundTolerance) {
    out.dihedral_branch = true;
    out.constant = 0.5 * std::sqrt(gap_bound);
    out.formula = "1/2 sqrt(|W| / (|S|^|T| |T|))";
  } else {
    out.constant = 0.5 * gap_bound / std::sqrt(2.0 * std::abs(out.curvature));
    out.formula = "1/2 |W| / (|S|^|T| |T| sqrt(2|Ric|))";
  }
  return out;
}

}  // namespace ricci
