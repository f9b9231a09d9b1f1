#pragma once

// Structured (JSON) reports for every CLI verb, and a plain-text rendering.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/verify.hpp"

namespace ricci::report {

using Json = nlohmann::ordered_json;

/// Rounded to 12 significant digits; non-finite values become null.
Json number(double x);
/// "p/q" (or "p").
Json fraction(const Rational& r);

Json curvature(const Graph& g, bool with_oracle);
Json bounds(const Graph& g);
Json spectral(const Graph& g, std::uint64_t seed);
Json coxeter(std::string_view tag);
Json verify(const std::vector<SuiteResult>& suites);

/// Human-readable rendering of any report above.
std::string table(const Json& report);

/// Vertex count above which the CLI skips explicit Cayley cross-checks.
inline constexpr double kCayleyVertexCap = 2000;

}  // namespace ricci::report
