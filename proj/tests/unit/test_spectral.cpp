#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ricci/corpus.hpp"
#include "ricci/coxeter.hpp"
#include "ricci/curvature.hpp"
#include "ricci/spectral.hpp"

using namespace ricci;

namespace {

std::size_t boundary_brute_force(const Graph& g, const std::vector<Vertex>& subset) {
  std::size_t count = 0;
  for (Vertex a = 0; a < g.size(); ++a)
    for (Vertex b : g.neighbors(a)) {
      const bool ia = std::find(subset.begin(), subset.end(), a) != subset.end();
      const bool ib = std::find(subset.begin(), subset.end(), b) != subset.end();
      if (ia && !ib) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("Laplacian spectra of small graphs") {
  const auto k2 = spectral_profile(corpus::complete_graph(2));
  CHECK(k2.laplacian_eigenvalues.size() == 2);
  CHECK(k2.laplacian_eigenvalues[0] == doctest::Approx(0));
  CHECK(k2.laplacian_eigenvalues[1] == doctest::Approx(2));
  CHECK(k2.spectral_gap == doctest::Approx(2));
  CHECK(k2.diameter == 1);

  const auto c4 = spectral_profile(corpus::cycle_graph(4));
  const std::vector<double> want{0, 2, 2, 4};
  for (std::size_t i = 0; i < 4; ++i) CHECK(c4.laplacian_eigenvalues[i] == doctest::Approx(want[i]).epsilon(1e-12));
  CHECK(c4.spectral_gap == doctest::Approx(2));

  for (int n = 3; n <= 12; ++n) {
    const auto c = spectral_profile(corpus::cycle_graph(n));
    CHECK(c.spectral_gap == doctest::Approx(2 - 2 * std::cos(2 * std::numbers::pi / n)).epsilon(1e-10));
    CHECK(c.diameter == static_cast<std::size_t>(n / 2));
  }
  CHECK_THROWS_AS(spectral_profile(load_graph("a b\nc d")), DomainError);
}

TEST_CASE("trace identity and zero mode") {
  for (const auto& ng : corpus::standard_corpus(3)) {
    const auto sp = spectral_profile(ng.graph);
    double sum = 0, degrees = 0;
    for (double x : sp.laplacian_eigenvalues) sum += x;
    for (Vertex v = 0; v < ng.graph.size(); ++v) degrees += static_cast<double>(ng.graph.degree(v));
    CHECK(std::abs(sum - degrees) <= 1e-8 * degrees);
    CHECK(std::abs(sp.laplacian_eigenvalues.front()) <= 1e-9);
    CHECK(sp.spectral_gap > 0);
  }
}

TEST_CASE("gap against curvature") {
  const auto s3 = check_gap_vs_curvature(coxeter::bruhat_graph_symmetric(3));
  CHECK(s3.verdict == Verdict::Pass);
  CHECK(s3.curvature == doctest::Approx(2));
  CHECK(s3.gap >= 2 - 1e-9);
  CHECK(check_gap_vs_curvature(corpus::cycle_graph(6)).verdict == Verdict::NotApplicable);
  const auto k2 = check_gap_vs_curvature(corpus::complete_graph(2));
  CHECK(k2.verdict == Verdict::Pass);
  CHECK(k2.gap == doctest::Approx(k2.curvature));
  for (const auto& ng : corpus::standard_corpus(8)) CHECK(check_gap_vs_curvature(ng.graph).verdict != Verdict::Fail);
}

TEST_CASE("edge boundary") {
  const Graph c6 = corpus::cycle_graph(6);
  CHECK(boundary_size(c6, std::vector<std::string>{}) == 0);
  CHECK(boundary_size(c6, c6.vertices()) == 0);
  CHECK(boundary_size(c6, std::vector<std::string>{"0", "1", "2"}) == 2);
  CHECK(boundary_size(corpus::complete_graph(4), std::vector<Vertex>{0, 3}) == 4);
  CHECK_THROWS_AS(boundary_size(c6, std::vector<std::string>{"9"}), LookupError);

  const Graph pet = corpus::petersen_graph();
  for (unsigned mask = 0; mask < 1024; mask += 37) {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < 10; ++v)
      if (mask >> v & 1) subset.push_back(v);
    CHECK(boundary_size(pet, subset) == boundary_brute_force(pet, subset));
  }
}

TEST_CASE("isoperimetric right-hand side") {
  CHECK(isoperimetric_rhs(2, 2, 0, 6) == 0);
  CHECK(isoperimetric_rhs(2, 2, 6, 6) == 0);
  CHECK(isoperimetric_rhs(2, 2, 3, 6) == doctest::Approx(0.75));
  CHECK(isoperimetric_rhs(9, -0.5, 2, 4) == doctest::Approx(0.5 * 3 * 2 * 0.5));
  CHECK_THROWS_AS(isoperimetric_rhs(2, 0, 1, 2), DomainError);
  CHECK_THROWS_AS(isoperimetric_rhs(2, 1, 3, 2), DomainError);
}

TEST_CASE("isoperimetric verification") {
  const auto s3 = verify_isoperimetry(coxeter::bruhat_graph_symmetric(3));
  CHECK(s3.verdict == Verdict::Pass);
  CHECK_FALSE(s3.sampled);
  CHECK(s3.subsets_checked == 64);
  CHECK(verify_isoperimetry(corpus::cycle_graph(6)).verdict == Verdict::NotApplicable);

  const Graph a3 = coxeter::weak_order_graph(coxeter::group_model(coxeter::ModelKind::Symmetric, 3));
  const auto sampled = verify_isoperimetry(a3, 42);
  CHECK(sampled.sampled);
  CHECK(sampled.subsets_checked == kSampleCount);
  CHECK(sampled.verdict == Verdict::Pass);
  const auto again = verify_isoperimetry(a3, 42);
  CHECK(again.witness == sampled.witness);
  CHECK(again.worst_slack == sampled.worst_slack);
  CHECK_THROWS_AS(verify_isoperimetry(a3, 0, SubsetMode::Exhaustive), ResourceError);

  // The witness really has the reported slack.
  const double rhs = isoperimetric_rhs(sampled.gap, sampled.curvature, sampled.witness.size(), a3.size());
  CHECK(static_cast<double>(boundary_size(a3, sampled.witness)) - rhs == doctest::Approx(sampled.worst_slack));
}

TEST_CASE("Cayley gap lower bound") {
  CHECK(cayley_gap_lower_bound(6, 2, 3) == doctest::Approx(0.25));
  CHECK(cayley_gap_lower_bound(2, 1, 1) == doctest::Approx(2));
  CHECK(cayley_gap_lower_bound(24, 3, 6) == doctest::Approx(24.0 / (6 * 729)));
  CHECK(cayley_gap_lower_bound(1e10, 8, 2000) == 0);
  CHECK_THROWS_AS(cayley_gap_lower_bound(0, 2, 3), DomainError);

  for (auto [kind, p] : {std::pair{coxeter::ModelKind::Symmetric, 3}, {coxeter::ModelKind::Signed, 3},
                         {coxeter::ModelKind::Dihedral, 7}, {coxeter::ModelKind::EvenSigned, 4}}) {
    const auto model = coxeter::group_model(kind, p);
    const Graph g = coxeter::weak_order_graph(model);
    const auto sp = spectral_profile(g);
    CHECK(sp.spectral_gap >= cayley_gap_lower_bound(static_cast<double>(g.size()),
                                                    static_cast<double>(model.generators.size()),
                                                    static_cast<double>(sp.diameter)) - 1e-9);
  }
}

TEST_CASE("isoperimetric constant of finite Coxeter groups") {
  const auto a3 = coxeter_isoperimetry(coxeter::parse_diagram("A3"));
  CHECK_FALSE(a3.dihedral_branch);
  CHECK(a3.order == 24);
  CHECK(a3.reflections == 6);
  CHECK(a3.constant == doctest::Approx(0.5 * 24 / (729.0 * 6) / std::sqrt(2.0)));

  const auto i5 = coxeter_isoperimetry(coxeter::parse_diagram("I2:5xA1"));
  CHECK(i5.dihedral_branch);
  CHECK(i5.order == 20);
  CHECK(i5.reflections == 6);
  CHECK(i5.constant == doctest::Approx(0.5 * std::sqrt(20 / (729.0 * 6))));
  CHECK_THROWS_AS(coxeter_isoperimetry(coxeter::parse_diagram("~A3")), DomainError);

  // The constant never beats the exhaustive or sampled minimum on the explicit graph.
  const Graph g = coxeter::weak_order_graph(coxeter::group_model(coxeter::ModelKind::Symmetric, 3));
  const auto check = verify_isoperimetry(g, 5);
  CHECK(check.verdict == Verdict::Pass);
}
