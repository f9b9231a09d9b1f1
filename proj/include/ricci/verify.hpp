#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ricci {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  /// Largest deviation (or smallest slack, negated) seen, and where.
  double worst = 0.0;
  std::string worst_witness;

  bool passed() const { return failures.empty(); }
};

/// gamma2 against its expansion on random functions, shift invariance,
/// and A(x) against the polarization oracle on the small and random graphs.
SuiteResult verify_operators(std::uint64_t seed);

/// Curvature bounds and Gershgorin containment on the standard corpus.
SuiteResult verify_bounds(std::uint64_t seed);

/// Explicit Cayley graphs against 2 - lambda_max(M_W), generator relations,
/// closed forms and vertex transitivity.
SuiteResult verify_coxeter();

/// Gap against curvature, isoperimetric inequality, Cayley gap bound.
SuiteResult verify_isoperimetry_suite(std::uint64_t seed);

/// Scope is one of operators, bounds, coxeter, isoperimetry, all. Throws
/// DomainError for anything else.
std::vector<SuiteResult> run_verify(std::string_view scope, std::uint64_t seed);

}  // namespace ricci
