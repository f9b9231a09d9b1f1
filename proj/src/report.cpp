#include "ricci/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ricci/coxeter.hpp"
#include "ricci/curvature.hpp"
#include "ricci/spectral.hpp"

namespace ricci::report {

namespace {

constexpr const char* kNoteTriangleFree =
    "triangle_free_lower is 4 - max over ordered adjacent pairs (x,y) of (3d(x)+d(y))/2; the stronger variant "
    "with 3d(x)-d(y) is not used";
constexpr const char* kNoteNoTriQuadUpper =
    "no_tri_quad_upper only ranges over adjacent pairs (x,v) with d(x) >= 2; for d(x) = 1 the expression "
    "(2+d(x)-d(v))/2 can undercut the exact value (K2: 1 < 2)";
constexpr const char* kNoteD3 =
    "D3 has the same unlabelled diagram as A3 (a path on 3 nodes), so its weak-order curvature is "
    "-2cos(pi/3) = -1; a value near -1.7 sometimes quoted for D3 is not reproduced";
constexpr const char* kNoteExponent =
    "isoperimetric constant uses the denominator |S|^|T| |T|; carrying the Cayley gap bound through with "
    "|S|^(|T|+1) instead gives a constant smaller by a factor |S|";

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(fraction(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json numbers(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(number(v));
  return out;
}

Json bounds_json(const std::vector<BoundCheck>& bounds) {
  Json out = Json::array();
  for (const auto& b : bounds) out.push_back({{"name", b.name}, {"value", number(b.value)}, {"satisfied", b.satisfied}});
  return out;
}

Json bound_notes(const std::vector<BoundCheck>& bounds) {
  Json notes = Json::array();
  for (const auto& b : bounds) {
    if (b.name == "triangle_free_lower") notes.push_back(kNoteTriangleFree);
    if (b.name == "no_tri_quad_upper") notes.push_back(kNoteNoTriQuadUpper);
  }
  return notes;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  // Round-off below 1e-12 (zero modes, exact zeros) prints as 0.
  if (std::abs(x) < 1e-12) return 0.0;
  return std::stod(fmt(x));
}

Json fraction(const Rational& r) { return to_string(r); }

Json curvature(const Graph& g, bool with_oracle) {
  const CurvatureReport rep = global_ricci(g);
  Json out;
  out["command"] = "curvature";
  out["vertex_count"] = g.size();
  out["edge_count"] = g.edge_count();
  Json vertices = Json::array();
  for (Vertex x = 0; x < g.size(); ++x) {
    const CurvatureMatrix cm = curvature_matrix(local_neighborhood(g, x));
    vertices.push_back({{"vertex", g.name(x)},
                        {"degree", g.degree(x)},
                        {"curvature", number(rep.per_vertex[x])},
                        {"matrix", matrix_json(cm.matrix.entries())}});
  }
  out["vertices"] = std::move(vertices);
  out["global"] = number(rep.global);
  out["bounds"] = bounds_json(rep.bounds);
  if (with_oracle) {
    std::vector<double> values;
    double deviation = 0.0;
    for (Vertex x = 0; x < g.size(); ++x) {
      values.push_back(local_ricci_oracle(g, x));
      deviation = std::max(deviation, std::abs(values.back() - rep.per_vertex[x]));
    }
    out["oracle"] = {{"per_vertex", numbers(values)},
                     {"max_deviation", number(deviation)},
                     {"agrees", deviation <= 1e-6}};
  }
  out["notes"] = bound_notes(rep.bounds);
  return out;
}

Json bounds(const Graph& g) {
  const CurvatureReport rep = global_ricci(g);
  Json out;
  out["command"] = "bounds";
  out["global"] = number(rep.global);
  out["max_joint_triangles"] = max_joint_triangles(g);
  out["bounds"] = bounds_json(rep.bounds);
  Json discs = Json::array();
  bool all_contained = true;
  for (Vertex x = 0; x < g.size(); ++x) {
    const CurvatureMatrix cm = curvature_matrix(local_neighborhood(g, x));
    const auto intervals = gershgorin_intervals(cm.matrix);
    const auto eigs = eigenvalues_symmetric(cm.matrix).eigenvalues;
    Rational lo = intervals.front().lo, hi = intervals.front().hi;
    for (const auto& k : intervals) {
      lo = std::min(lo, k.lo);
      hi = std::max(hi, k.hi);
    }
    const bool contained = gershgorin_contains(intervals, eigs);
    all_contained = all_contained && contained;
    discs.push_back({{"vertex", g.name(x)},
                     {"lower", fraction(lo)},
                     {"upper", fraction(hi)},
                     {"min_eigenvalue", number(eigs.front())},
                     {"contained", contained}});
  }
  out["gershgorin"] = std::move(discs);
  out["gershgorin_contained"] = all_contained;
  out["notes"] = bound_notes(rep.bounds);
  return out;
}

Json spectral(const Graph& g, std::uint64_t seed) {
  const SpectralProfile sp = spectral_profile(g);
  const GapCheck gc = check_gap_vs_curvature(g);
  Json out;
  out["command"] = "spectral";
  out["laplacian_eigenvalues"] = numbers(sp.laplacian_eigenvalues);
  out["spectral_gap"] = number(sp.spectral_gap);
  out["diameter"] = sp.diameter;
  out["curvature"] = number(gc.curvature);
  out["gap_vs_curvature"] = to_string(gc.verdict);

  const IsoperimetryCheck ic = verify_isoperimetry(g, seed);
  Json iso;
  iso["verdict"] = to_string(ic.verdict);
  if (ic.verdict != Verdict::NotApplicable) {
    iso["mode"] = ic.sampled ? "sampled" : "exhaustive";
    iso["seed"] = seed;
    iso["subsets_checked"] = ic.subsets_checked;
    iso["worst_slack"] = number(ic.worst_slack);
    Json witness = Json::array();
    for (Vertex v : ic.witness) witness.push_back(g.name(v));
    iso["witness"] = std::move(witness);
  }
  out["isoperimetry"] = std::move(iso);
  out["notes"] = Json::array();
  return out;
}

Json coxeter(std::string_view tag) {
  using namespace ricci::coxeter;
  const std::vector<TypeTag> tags = parse_type(tag);
  std::vector<CoxeterDiagram> parts;
  for (const auto& t : tags) parts.push_back(diagram(t));
  const CoxeterDiagram d = product_diagram(parts);
  const SymmetricMatrix mw = commutation_matrix(d);
  const Spectrum spectrum = eigenvalues_symmetric(mw);
  const double ricci = 2.0 - spectrum.max();
  Json notes = Json::array();

  Json out;
  out["command"] = "coxeter";
  out["type"] = d.label();
  out["rank"] = d.rank();
  Json m = Json::array();
  for (Eigen::Index i = 0; i < d.m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < d.m.cols(); ++j)
      row.push_back(d.m(i, j) == kInfinity ? Json(nullptr) : Json(d.m(i, j)));
    m.push_back(std::move(row));
  }
  out["coxeter_matrix"] = std::move(m);
  out["commutation_matrix"] = matrix_json(mw.entries());
  std::vector<double> descending(spectrum.eigenvalues.rbegin(), spectrum.eigenvalues.rend());
  out["eigenvalues"] = numbers(descending);
  out["lambda_max"] = number(spectrum.max());
  out["ricci_spectral"] = number(ricci);

  Json closed = Json::array();
  for (const auto& part : parts) {
    const TypeTag& t = part.components.front();
    if (t.family == Family::D && t.parameter == 3) notes.push_back(kNoteD3);
    const ClosedForm cf = weak_order_ricci_closed_form(part);
    const double spectral_part = weak_order_ricci_spectral(part);
    Json entry{{"type", t.str()}, {"ricci_spectral", number(spectral_part)}, {"formula", cf.formula}};
    switch (cf.kind) {
      case ClosedForm::Kind::Exact:
        entry["kind"] = "exact";
        entry["value"] = number(cf.value);
        break;
      case ClosedForm::Kind::Interval:
        entry["kind"] = "interval";
        entry["lower"] = number(cf.lower);
        entry["upper"] = number(cf.upper);
        break;
      case ClosedForm::Kind::Reference:
        entry["kind"] = "reference";
        entry["value"] = number(cf.value);
        break;
    }
    const bool consistent = cf.consistent_with(spectral_part);
    entry["consistent"] = consistent;
    if (!consistent && cf.kind == ClosedForm::Kind::Reference)
      notes.push_back("reference constant " + fmt(cf.value) + " for " + t.str() + " differs from the spectral value " +
                      fmt(spectral_part) + " by " + fmt(std::abs(cf.value - spectral_part)) +
                      "; lambda_max of the diagram Laplacian is " + fmt(2.0 - spectral_part));
    closed.push_back(std::move(entry));
  }
  out["closed_forms"] = std::move(closed);
  if (parts.size() > 1) out["product_ricci"] = number(product_ricci(parts));

  // Explicit Cayley graph, when every factor has a concrete model.
  Json cayley;
  std::vector<GroupModel> models;
  double vertices = 1.0;
  for (const auto& t : tags) {
    auto model = model_for(t);
    if (!model) break;
    vertices *= group_order(t);
    models.push_back(std::move(*model));
  }
  if (models.size() != tags.size()) {
    cayley["available"] = false;
    cayley["reason"] = "no permutation model within the size caps";
  } else if (vertices > kCayleyVertexCap) {
    cayley["available"] = false;
    cayley["reason"] = "more than " + fmt(kCayleyVertexCap) + " group elements";
  } else {
    const Graph g = weak_order_graph(models);
    const double explicit_ricci = global_ricci(g).global;
    const double deviation = std::abs(explicit_ricci - ricci);
    cayley["available"] = true;
    cayley["vertices"] = g.size();
    cayley["ricci"] = number(explicit_ricci);
    cayley["deviation"] = number(deviation);
    cayley["agrees"] = deviation <= 1e-6;
  }
  out["cayley"] = std::move(cayley);

  const bool finite = std::none_of(tags.begin(), tags.end(), [](const TypeTag& t) { return t.affine(); });
  if (finite) {
    const CoxeterIsoperimetry iso = coxeter_isoperimetry(d);
    out["isoperimetry"] = {{"group_order", number(iso.order)},
                           {"generators", number(iso.generators)},
                           {"reflections", number(iso.reflections)},
                           {"branch", iso.dihedral_branch ? "dihedral" : "curvature"},
                           {"formula", iso.formula},
                           {"constant", number(iso.constant)}};
    notes.push_back(kNoteExponent);
  } else {
    out["isoperimetry"] = nullptr;
  }
  out["notes"] = std::move(notes);
  return out;
}

Json verify(const std::vector<SuiteResult>& suites) {
  Json out;
  out["command"] = "verify";
  Json list = Json::array();
  bool passed = true;
  for (const auto& s : suites) {
    passed = passed && s.passed();
    list.push_back({{"name", s.name},
                    {"passed", s.passed()},
                    {"checks", s.checks},
                    {"failures", s.failures},
                    {"worst", number(s.worst)},
                    {"worst_witness", s.worst_witness}});
  }
  out["suites"] = std::move(list);
  out["passed"] = passed;
  out["notes"] = Json::array();
  return out;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_number_float()) return fmt(v.get<double>());
  return v.dump();
}

bool is_flat(const Json& v) {
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string flat_list(const Json& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
  return out + "]";
}

void render(std::ostringstream& os, const Json& v, int indent);

void render_item(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_primitive()) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (v.is_array() && is_flat(v)) {
    os << pad << key << ": " << flat_list(v) << '\n';
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_array() && is_flat(e); })) {
    os << pad << key << ":\n";
    for (const auto& row : v) os << pad << "  " << flat_list(row) << '\n';
  } else {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  }
}

void render(std::ostringstream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) render_item(os, key, value, indent);
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_string()) {
        os << pad << "- " << e.get<std::string>() << '\n';
      } else {
        os << pad << "-\n";
        render(os, e, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(v) << '\n';
  }
}

}  // namespace

std::string table(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace ricci::report
