#include "ricci/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ricci/corpus.hpp"
#include "ricci/coxeter.hpp"
#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/operators.hpp"
#include "ricci/spectral.hpp"

namespace ricci {

namespace {

constexpr std::size_t kMaxReportedFailures = 20;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  /// One check; `deviation` > 0 is reported as the worst case if largest.
  void check(bool ok, double deviation, const std::string& witness) {
    ++result_.checks;
    if (deviation > result_.worst || result_.worst_witness.empty()) {
      result_.worst = deviation;
      result_.worst_witness = witness;
    }
    if (!ok && result_.failures.size() < kMaxReportedFailures) result_.failures.push_back(witness);
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string at(const corpus::NamedGraph& ng, Vertex x) { return ng.name + " @ " + ng.graph.name(x); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

SuiteResult verify_operators(std::uint64_t seed) {
  Recorder rec("operators");
  auto graphs = corpus::small_graphs();
  for (auto& g : corpus::random_graphs(20, seed)) graphs.push_back(std::move(g));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> value(-6, 6);
  std::uniform_int_distribution<long> denominator(1, 3);
  const auto random_function = [&](const Graph& g) {
    VertexFunction<Rational> f(static_cast<Eigen::Index>(g.size()));
    for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = make_rational(value(rng), denominator(rng));
    return f;
  };

  constexpr int kTrials = 1000;
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto& ng = graphs[static_cast<std::size_t>(trial) % graphs.size()];
    const Graph& g = ng.graph;
    const Vertex x = std::uniform_int_distribution<Vertex>(0, g.size() - 1)(rng);
    VertexFunction<Rational> f = random_function(g);
    f(static_cast<Eigen::Index>(x)) = 0;
    const Rational direct = gamma2(g, f, x);
    const Rational expanded = gamma2_expanded(g, f, x);
    rec.check(direct == expanded, std::abs(to_double(direct - expanded)),
              "gamma2 expansion " + at(ng, x) + ": " + to_string(direct) + " vs " + to_string(expanded));

    const Rational c = make_rational(value(rng), 3);
    const Rational d = make_rational(value(rng), 5);
    const VertexFunction<Rational> h = random_function(g);
    const VertexFunction<Rational> fc = f.array() + c;
    const VertexFunction<Rational> hd = h.array() + d;
    rec.check(gamma2(g, fc, x) == direct, 0.0, "gamma2 shift invariance " + at(ng, x));
    rec.check(gamma(g, fc, hd, x) == gamma(g, f, h, x), 0.0, "gamma shift invariance " + at(ng, x));
  }

  for (const auto& ng : graphs) {
    for (Vertex x = 0; x < ng.graph.size(); ++x) {
      const double a = local_ricci(ng.graph, x);
      const double o = local_ricci_oracle(ng.graph, x);
      const double dev = std::abs(a - o);
      rec.check(dev <= 1e-6, dev, "oracle " + at(ng, x) + ": " + fmt(a) + " vs " + fmt(o));
    }
  }
  return rec.take();
}

SuiteResult verify_bounds(std::uint64_t seed) {
  Recorder rec("bounds");
  for (const auto& ng : corpus::standard_corpus(seed)) {
    const CurvatureReport report = global_ricci(ng.graph);
    for (const auto& b : report.bounds)
      rec.check(b.satisfied, b.satisfied ? 0.0 : std::abs(report.global - b.value),
                ng.name + ": " + b.name + " " + fmt(b.value) + " vs curvature " + fmt(report.global));
    for (Vertex x = 0; x < ng.graph.size(); ++x) {
      const auto cm = curvature_matrix(local_neighborhood(ng.graph, x));
      const auto eigs = eigenvalues_symmetric(cm.matrix).eigenvalues;
      rec.check(gershgorin_contains(gershgorin_intervals(cm.matrix), eigs), 0.0, "gershgorin " + at(ng, x));
    }
  }
  return rec.take();
}

SuiteResult verify_coxeter() {
  using namespace coxeter;
  Recorder rec("coxeter");

  const std::pair<ModelKind, int> models[] = {
      {ModelKind::Symmetric, 2}, {ModelKind::Symmetric, 3}, {ModelKind::Symmetric, 4},
      {ModelKind::Signed, 2},    {ModelKind::Signed, 3},    {ModelKind::EvenSigned, 4},
      {ModelKind::Dihedral, 3},  {ModelKind::Dihedral, 4},  {ModelKind::Dihedral, 5},
      {ModelKind::Dihedral, 6},  {ModelKind::Dihedral, 7},  {ModelKind::Dihedral, 8},
  };
  for (auto [kind, p] : models) {
    const GroupModel model = group_model(kind, p);
    const CoxeterDiagram d = diagram(model.type);
    const std::string label = model.type.str();
    rec.check(satisfies_relations(model, d.m), 0.0, "relations " + label);

    const Graph g = weak_order_graph(model);
    const CurvatureReport report = global_ricci(g);
    const double spectral = weak_order_ricci_spectral(d);
    const double dev = std::abs(report.global - spectral);
    rec.check(dev <= 1e-6, dev, "cayley " + label + ": " + fmt(report.global) + " vs spectral " + fmt(spectral));

    const auto [lo, hi] = std::minmax_element(report.per_vertex.begin(), report.per_vertex.end());
    rec.check(*hi - *lo <= 1e-9, *hi - *lo, "vertex transitivity " + label);
  }

  std::vector<std::string> tags;
  for (int n = 1; n <= 8; ++n) tags.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) tags.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) tags.push_back("D" + std::to_string(n));
  for (int m = 3; m <= 8; ++m) tags.push_back("I2:" + std::to_string(m));
  for (const char* t : {"H3", "H4", "F4", "~F4", "~G2", "~D4"}) tags.emplace_back(t);
  for (int n = 1; n <= 11; ++n) tags.push_back("~A" + std::to_string(n));
  for (int n = 2; n <= 7; ++n) tags.push_back("~C" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) tags.push_back("~B" + std::to_string(n));
  for (int n = 5; n <= 8; ++n) tags.push_back("~D" + std::to_string(n));
  for (const auto& tag : tags) {
    const CoxeterDiagram d = parse_diagram(tag);
    const ClosedForm cf = weak_order_ricci_closed_form(d);
    const double spectral = weak_order_ricci_spectral(d);
    const double dev = cf.kind == ClosedForm::Kind::Interval ? 0.0 : std::abs(cf.value - spectral);
    rec.check(cf.consistent_with(spectral), dev, "closed form " + tag + " (" + cf.formula + ") vs " + fmt(spectral));
  }
  return rec.take();
}

SuiteResult verify_isoperimetry_suite(std::uint64_t seed) {
  Recorder rec("isoperimetry");
  for (const auto& ng : corpus::standard_corpus(seed)) {
    const GapCheck gc = check_gap_vs_curvature(ng.graph);
    if (gc.verdict != Verdict::NotApplicable)
      rec.check(gc.verdict == Verdict::Pass, std::max(0.0, gc.curvature - gc.gap),
                ng.name + ": gap " + fmt(gc.gap) + " vs curvature " + fmt(gc.curvature));
    if (ng.graph.size() <= kExhaustiveCap) {
      const IsoperimetryCheck ic = verify_isoperimetry(ng.graph, seed, SubsetMode::Exhaustive);
      if (ic.verdict != Verdict::NotApplicable)
        rec.check(ic.verdict == Verdict::Pass, std::max(0.0, -ic.worst_slack),
                  ng.name + ": isoperimetric slack " + fmt(ic.worst_slack));
    }
  }

  const auto weak_a3 = coxeter::weak_order_graph(coxeter::group_model(coxeter::ModelKind::Symmetric, 3));
  const IsoperimetryCheck sampled = verify_isoperimetry(weak_a3, seed, SubsetMode::Sampled);
  rec.check(sampled.verdict == Verdict::Pass, std::max(0.0, -sampled.worst_slack),
            "weak_A3 (sampled): isoperimetric slack " + fmt(sampled.worst_slack));

  using namespace coxeter;
  const std::pair<ModelKind, int> models[] = {
      {ModelKind::Symmetric, 1}, {ModelKind::Symmetric, 2}, {ModelKind::Symmetric, 3}, {ModelKind::Symmetric, 4},
      {ModelKind::Signed, 2},    {ModelKind::Signed, 3},    {ModelKind::EvenSigned, 4}, {ModelKind::Dihedral, 3},
      {ModelKind::Dihedral, 5},  {ModelKind::Dihedral, 8},
  };
  for (auto [kind, p] : models) {
    const GroupModel model = group_model(kind, p);
    const Graph g = weak_order_graph(model);
    const SpectralProfile sp = spectral_profile(g);
    const double bound = cayley_gap_lower_bound(static_cast<double>(g.size()),
                                                static_cast<double>(model.generators.size()),
                                                static_cast<double>(sp.diameter));
    rec.check(sp.spectral_gap >= bound - 1e-9, std::max(0.0, bound - sp.spectral_gap),
              "cayley gap " + model.type.str() + ": " + fmt(sp.spectral_gap) + " vs bound " + fmt(bound));
  }
  return rec.take();
}

std::vector<SuiteResult> run_verify(std::string_view scope, std::uint64_t seed) {
  const bool all = scope == "all";
  if (!all && scope != "operators" && scope != "bounds" && scope != "coxeter" && scope != "isoperimetry")
    throw DomainError("unknown verify scope '" + std::string(scope) + "'");
  std::vector<SuiteResult> out;
  if (all || scope == "operators") out.push_back(verify_operators(seed));
  if (all || scope == "bounds") out.push_back(verify_bounds(seed));
  if (all || scope == "coxeter") out.push_back(verify_coxeter());
  if (all || scope == "isoperimetry") out.push_back(verify_isoperimetry_suite(seed));
  return out;
}

}  // namespace ricci
