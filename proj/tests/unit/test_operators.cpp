#include <random>

#include "doctest.h"
#include "ricci/corpus.hpp"
#include "ricci/operators.hpp"

using namespace ricci;

namespace {

// Whole-graph operators in matrix form: Delta = A - D, and the carré du champ
// by the product rule Gamma(f,g) = 1/2 (Delta(fg) - f Delta g - g Delta f).
struct MatrixOracle {
  explicit MatrixOracle(const Graph& g) : delta(g.size(), g.size()) {
    const auto n = static_cast<Eigen::Index>(g.size());
    delta.setConstant(Rational(0));
    for (Eigen::Index i = 0; i < n; ++i) {
      delta(i, i) = -static_cast<long>(g.degree(static_cast<Vertex>(i)));
      for (Vertex v : g.neighbors(static_cast<Vertex>(i))) delta(i, static_cast<Eigen::Index>(v)) = 1;
    }
  }
  RationalVector gamma(const RationalVector& f, const RationalVector& h) const {
    const RationalVector fh = f.cwiseProduct(h);
    return (delta * fh - f.cwiseProduct(delta * h) - h.cwiseProduct(delta * f)) / Rational(2);
  }
  RationalVector gamma2(const RationalVector& f) const {
    return delta * gamma(f, f) / Rational(2) - gamma(f, delta * f);
  }
  RationalMatrix delta;
};

RationalVector random_function(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
  RationalVector f(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = make_rational(num(rng), den(rng));
  return f;
}

}  // namespace

TEST_CASE("delta and gamma on a path") {
  const Graph g = corpus::path_graph(3);
  RationalVector f(3);
  f << 0, 1, 3;
  CHECK(delta(g, f, 1) == 1);
  CHECK(gamma(g, f, f, 1) == make_rational(5, 2));
  CHECK(delta(g, f, 0) == 1);
}

TEST_CASE("gamma2 matches the matrix-calculus oracle") {
  std::mt19937_64 rng(17);
  for (const auto& ng : corpus::small_graphs()) {
    if (ng.graph.size() > 8) continue;
    const MatrixOracle oracle(ng.graph);
    const RationalVector f = random_function(ng.graph.size(), rng);
    const RationalVector expected = oracle.gamma2(f);
    for (Vertex x = 0; x < ng.graph.size(); ++x) CHECK(gamma2(ng.graph, f, x) == expected(static_cast<Eigen::Index>(x)));
  }
}

TEST_CASE("gamma2 equals its expansion for functions vanishing at x") {
  std::mt19937_64 rng(23);
  auto graphs = corpus::small_graphs();
  for (auto& g : corpus::random_graphs(30, 4)) graphs.push_back(std::move(g));
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph& g = graphs[static_cast<std::size_t>(trial * 7) % graphs.size()].graph;
    const Vertex x = static_cast<Vertex>(trial) % g.size();
    RationalVector f = random_function(g.size(), rng);
    f(static_cast<Eigen::Index>(x)) = 0;
    REQUIRE(gamma2(g, f, x) == gamma2_expanded(g, f, x));
  }
}

TEST_CASE("shift invariance") {
  std::mt19937_64 rng(29);
  const Graph g = corpus::petersen_graph();
  for (int trial = 0; trial < 100; ++trial) {
    const RationalVector f = random_function(g.size(), rng);
    const RationalVector h = random_function(g.size(), rng);
    const Rational c = make_rational(trial - 50, 7), d = make_rational(3 - trial, 11);
    const RationalVector fc = f.array() + c;
    const RationalVector hd = h.array() + d;
    const Vertex x = static_cast<Vertex>(trial) % g.size();
    CHECK(delta(g, fc, x) == delta(g, f, x));
    CHECK(gamma(g, fc, hd, x) == gamma(g, f, h, x));
    CHECK(gamma2(g, fc, x) == gamma2(g, f, x));
  }
}

TEST_CASE("operators in floating point agree with the exact ones") {
  std::mt19937_64 rng(31);
  const Graph g = corpus::complete_graph(5);
  const RationalVector f = random_function(g.size(), rng);
  const Eigen::VectorXd fd = f.unaryExpr([](const Rational& r) { return r.get_d(); });
  for (Vertex x = 0; x < g.size(); ++x) CHECK(gamma2(g, fd, x) == doctest::Approx(to_double(gamma2(g, f, x))));
}

TEST_CASE("operator domain checks") {
  const Graph g = corpus::cycle_graph(4);
  RationalVector f = RationalVector::Constant(4, Rational(1));
  CHECK_THROWS_AS(gamma2_expanded(g, f, 0), DomainError);
  CHECK_THROWS_AS(delta(g, f, 9), LookupError);
  const RationalVector short_f = RationalVector::Constant(3, Rational(0));
  CHECK_THROWS_AS(gamma2(g, short_f, 0), DomainError);
}
