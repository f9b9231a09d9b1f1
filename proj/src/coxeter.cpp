#include "ricci/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <numeric>

#include "ricci/errors.hpp"

namespace ricci::coxeter {

namespace {

struct FamilyInfo {
  Family family;
  const char* letter;  // without '~'
  bool affine;
  bool fixed_rank;  // parameter is part of the name (H3, E6, ...) and not free
};

constexpr FamilyInfo kFamilies[] = {
    {Family::A, "A", false, false},          {Family::B, "B", false, false},
    {Family::D, "D", false, false},          {Family::I2, "I2", false, false},
    {Family::H3, "H3", false, true},         {Family::H4, "H4", false, true},
    {Family::F4, "F4", false, true},         {Family::E6, "E6", false, true},
    {Family::E7, "E7", false, true},         {Family::E8, "E8", false, true},
    {Family::AffineA, "A", true, false},     {Family::AffineB, "B", true, false},
    {Family::AffineC, "C", true, false},     {Family::AffineD, "D", true, false},
    {Family::AffineE6, "E6", true, true},    {Family::AffineE7, "E7", true, true},
    {Family::AffineE8, "E8", true, true},    {Family::AffineF4, "F4", true, true},
    {Family::AffineG2, "G2", true, true},
};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw DomainError("unknown Coxeter family");
}

int fixed_parameter(Family f) {
  switch (f) {
    case Family::H3: return 3;
    case Family::H4: return 4;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::AffineE6: return 6;
    case Family::AffineE7: return 7;
    case Family::AffineE8: return 8;
    case Family::AffineF4: return 4;
    case Family::AffineG2: return 2;
    default: return 0;
  }
}

void validate(Family f, int p) {
  const auto need = [&](bool ok, const char* range) {
    if (!ok) throw DomainError(std::string("parameter out of range for ") + info(f).letter + ": need " + range);
  };
  switch (f) {
    case Family::A: need(p >= 1, "n >= 1"); break;
    case Family::B: need(p >= 2, "n >= 2"); break;
    case Family::D: need(p >= 3, "n >= 3"); break;
    case Family::I2: need(p >= 3, "m >= 3"); break;
    case Family::AffineA: need(p >= 1, "n >= 1"); break;
    case Family::AffineB: need(p >= 3, "n >= 3"); break;
    case Family::AffineC: need(p >= 2, "n >= 2"); break;
    case Family::AffineD: need(p >= 4, "n >= 4"); break;
    default: need(p == fixed_parameter(f), "the fixed rank"); break;
  }
}

/// Coxeter matrix builder: all 2 off the diagonal until bonds are added.
struct Builder {
  explicit Builder(int rank) : m(Eigen::MatrixXi::Constant(rank, rank, 2)) { m.diagonal().setOnes(); }
  void bond(int i, int j, int order = 3) { m(i, j) = m(j, i) = order; }
  void path(int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1);
  }
  Eigen::MatrixXi m;
};

/// Star-shaped tree: node 0 is the centre, then the arms one after another.
Eigen::MatrixXi star_tree(std::initializer_list<int> arms) {
  const int rank = 1 + std::accumulate(arms.begin(), arms.end(), 0);
  Builder b(rank);
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      b.bond(prev, next);
      prev = next++;
    }
  }
  return b.m;
}

}  // namespace

bool TypeTag::affine() const { return info(family).affine; }

int TypeTag::rank() const {
  switch (family) {
    case Family::I2: return 2;
    case Family::AffineA:
    case Family::AffineB:
    case Family::AffineC:
    case Family::AffineD:
    case Family::AffineE6:
    case Family::AffineE7:
    case Family::AffineE8:
    case Family::AffineF4:
    case Family::AffineG2: return parameter + 1;
    default: return parameter;
  }
}

std::string TypeTag::str() const {
  const auto& i = info(family);
  std::string out = i.affine ? "~" : "";
  out += i.letter;
  if (family == Family::I2) return out + ":" + std::to_string(parameter);
  if (!i.fixed_rank) out += std::to_string(parameter);
  return out;
}

std::string CoxeterDiagram::label() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += 'x';
    out += c.str();
  }
  return out;
}

CoxeterDiagram diagram(Family f, int p) {
  validate(f, p);
  const TypeTag tag{f, p};
  const int r = tag.rank();
  Builder b(r);
  switch (f) {
    case Family::A:
      b.path(0, r - 1);
      break;
    case Family::B:
      b.path(0, r - 1);
      b.bond(0, 1, 4);
      break;
    case Family::D:
      // Nodes 0 and 1 both hang off node 2; 2..n-1 is a path. D3 is a path.
      b.bond(0, 2);
      b.bond(1, 2);
      b.path(2, r - 1);
      break;
    case Family::I2:
      b.bond(0, 1, p);
      break;
    case Family::H3:
    case Family::H4:
      b.path(0, r - 1);
      b.bond(0, 1, 5);
      break;
    case Family::F4:
      b.path(0, 3);
      b.bond(1, 2, 4);
      break;
    case Family::E6: return {{tag}, star_tree({1, 2, 2})};
    case Family::E7: return {{tag}, star_tree({1, 2, 3})};
    case Family::E8: return {{tag}, star_tree({1, 2, 4})};
    case Family::AffineA:
      if (p == 1) {
        b.bond(0, 1, kInfinity);
      } else {
        b.path(0, r - 1);
        b.bond(r - 1, 0);
      }
      break;
    case Family::AffineB:
      b.bond(0, 2);
      b.bond(1, 2);
      b.path(2, r - 1);
      b.bond(r - 2, r - 1, 4);
      break;
    case Family::AffineC:
      b.path(0, r - 1);
      b.bond(0, 1, 4);
      b.bond(r - 2, r - 1, 4);
      break;
    case Family::AffineD:
      b.bond(0, 2);
      b.bond(1, 2);
      b.path(2, r - 3);
      b.bond(r - 3, r - 2);
      b.bond(r - 3, r - 1);
      break;
    case Family::AffineE6: return {{tag}, star_tree({2, 2, 2})};
    case Family::AffineE7: return {{tag}, star_tree({1, 3, 3})};
    case Family::AffineE8: return {{tag}, star_tree({1, 2, 5})};
    case Family::AffineF4:
      b.path(0, 4);
      b.bond(2, 3, 4);
      break;
    case Family::AffineG2:
      b.path(0, 2);
      b.bond(1, 2, 6);
      break;
  }
  return {{tag}, b.m};
}

CoxeterDiagram product_diagram(std::span<const CoxeterDiagram> parts) {
  if (parts.empty()) throw DomainError("empty product of Coxeter diagrams");
  int rank = 0;
  for (const auto& p : parts) rank += p.rank();
  CoxeterDiagram out;
  out.m = Eigen::MatrixXi::Constant(rank, rank, 2);
  int offset = 0;
  for (const auto& p : parts) {
    out.m.block(offset, offset, p.rank(), p.rank()) = p.m;
    out.components.insert(out.components.end(), p.components.begin(), p.components.end());
    offset += p.rank();
  }
  return out;
}

std::vector<TypeTag> parse_type(std::string_view text) {
  std::vector<TypeTag> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find('x', start);
    std::string_view part = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (part.empty()) throw DomainError("empty component in Coxeter type '" + std::string(text) + "'");

    const bool affine = part.front() == '~';
    if (affine) part.remove_prefix(1);

    bool matched = false;
    // Longest letter first so "I2:" and "E6" win over shorter prefixes.
    for (const auto& fi : kFamilies) {
      if (fi.affine != affine) continue;
      const std::string_view letter = fi.letter;
      if (fi.fixed_rank) {
        if (part == letter) {
          out.push_back({fi.family, fixed_parameter(fi.family)});
          matched = true;
          break;
        }
        continue;
      }
      std::string_view rest;
      if (fi.family == Family::I2) {
        if (!part.starts_with("I2:")) continue;
        rest = part.substr(3);
      } else {
        if (!part.starts_with(letter)) continue;
        rest = part.substr(letter.size());
      }
      int value = 0;
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) continue;
      validate(fi.family, value);
      out.push_back({fi.family, value});
      matched = true;
      break;
    }
    if (!matched) throw DomainError("unknown Coxeter type '" + std::string(part) + "'");
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

CoxeterDiagram parse_diagram(std::string_view text) {
  std::vector<CoxeterDiagram> parts;
  for (const auto& tag : parse_type(text)) parts.push_back(diagram(tag));
  return product_diagram(parts);
}

SymmetricMatrix commutation_matrix(const CoxeterDiagram& d) {
  const int r = d.rank();
  RationalMatrix m = RationalMatrix::Constant(r, r, Rational(0));
  for (int i = 0; i < r; ++i) {
    long partners = 0;
    for (int j = 0; j < r; ++j) {
      if (d.linked(i, j)) {
        m(i, j) = -1;
        ++partners;
      }
    }
    m(i, i) = partners;
  }
  return SymmetricMatrix(std::move(m));
}

double weak_order_ricci_spectral(const CoxeterDiagram& d) {
  return 2.0 - eigenvalues_symmetric(commutation_matrix(d)).max();
}

bool ClosedForm::consistent_with(double spectral, double tol) const {
  switch (kind) {
    case Kind::Exact: return std::abs(spectral - value) <= tol;
    case Kind::Interval: return lower - tol <= spectral && spectral <= upper + tol;
    case Kind::Reference: return std::abs(spectral - value) <= reference_tolerance;
  }
  return false;
}

bool strictly_linear(const TypeTag& tag) {
  switch (tag.family) {
    case Family::A:
    case Family::B:
    case Family::I2:
    case Family::H3:
    case Family::H4:
    case Family::F4:
    case Family::AffineC:
    case Family::AffineF4:
    case Family::AffineG2: return true;
    case Family::D: return tag.parameter == 3;
    case Family::AffineA: return tag.parameter == 1;
    default: return false;
  }
}

ClosedForm weak_order_ricci_closed_form(const CoxeterDiagram& d) {
  if (!d.irreducible()) throw DomainError("closed form is defined for irreducible types only; use product_ricci");
  const TypeTag& tag = d.components.front();
  ClosedForm out;

  if (strictly_linear(tag)) {
    // M_W is the path Laplacian: tridiagonal Toeplitz with b = 2, a = c = -1
    // and corners reduced by alpha = beta = 1.
    const int s = tag.rank();
    const auto eigs = tridiagonal_toeplitz_eigs(1.0, 1.0, -1.0, 2.0, -1.0, s);
    out.value = 2.0 - *std::max_element(eigs.begin(), eigs.end());
    out.formula = "-2cos(pi/" + std::to_string(s) + ")";
    return out;
  }

  switch (tag.family) {
    case Family::AffineA: {
      // k-cycle Laplacian: circulant with first column (2, -1, 0, ..., 0, -1).
      const int k = tag.rank();
      std::vector<double> c(static_cast<std::size_t>(k), 0.0);
      c[0] = 2.0;
      c[1] = -1.0;
      c[static_cast<std::size_t>(k - 1)] = -1.0;
      const auto eigs = real_parts(circulant_eigs(c));
      out.value = 2.0 - *std::max_element(eigs.begin(), eigs.end());
      out.formula = "2cos(2pi*" + std::to_string(k / 2) + "/" + std::to_string(k) + ")";
      return out;
    }
    case Family::AffineD:
      if (tag.parameter == 4) {
        out.value = -3.0;
        out.formula = "-3";
        return out;
      }
      [[fallthrough]];
    case Family::D:
    case Family::AffineB:
      out.kind = ClosedForm::Kind::Interval;
      out.lower = -4.0;
      out.upper = -2.0;
      out.formula = "[-4,-2]";
      return out;
    default: break;
  }

  out.kind = ClosedForm::Kind::Reference;
  switch (tag.family) {
    case Family::E6: out.value = -2.3082775; out.reference_tolerance = 5e-8; break;
    case Family::E7: out.value = -2.33420053; out.reference_tolerance = 5e-9; break;
    case Family::E8: out.value = -2.34292308; out.reference_tolerance = 5e-9; break;
    case Family::AffineE6: out.value = -2.414; out.reference_tolerance = 5e-4; break;
    case Family::AffineE7: out.value = -2.36; out.reference_tolerance = 5e-3; break;
    case Family::AffineE8: out.value = -2.34; out.reference_tolerance = 1e-2; break;
    default: throw DomainError("no closed form for type " + tag.str());
  }
  out.formula = "reference value";
  return out;
}

double product_ricci(std::span<const CoxeterDiagram> parts) {
  if (parts.empty()) throw DomainError("empty product of Coxeter diagrams");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : parts) best = std::min(best, weak_order_ricci_spectral(p));
  return best;
}

namespace {

double factorial(int n) {
  double out = 1.0;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

}  // namespace

double group_order(const TypeTag& tag) {
  const int n = tag.parameter;
  switch (tag.family) {
    case Family::A: return factorial(n + 1);
    case Family::B: return std::ldexp(factorial(n), n);
    case Family::D: return std::ldexp(factorial(n), n - 1);
    case Family::I2: return 2.0 * n;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
    default: throw DomainError("group of type " + tag.str() + " is infinite");
  }
}

double reflection_count(const TypeTag& tag) {
  const double n = tag.parameter;
  switch (tag.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::D: return n * (n - 1);
    case Family::I2: return n;
    case Family::H3: return 15;
    case Family::H4: return 60;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    default: throw DomainError("group of type " + tag.str() + " is infinite");
  }
}

// --- permutation models ---------------------------------------------------

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  SignedPermutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int j = b[i];
    const int image = a.at(static_cast<std::size_t>(std::abs(j) - 1));
    out[i] = j > 0 ? image : -image;
  }
  return out;
}

SignedPermutation identity_permutation(int n) {
  SignedPermutation out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

namespace {

SignedPermutation swap_positions(int n, int i, int j) {  // 1-based
  auto p = identity_permutation(n);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
  return p;
}

}  // namespace

GroupModel group_model(ModelKind kind, int parameter) {
  GroupModel model;
  model.kind = kind;
  model.parameter = parameter;
  const int n = parameter;
  switch (kind) {
    case ModelKind::Symmetric: {
      if (n < 1) throw DomainError("A_n needs n >= 1");
      if (n > kMaxSymmetricRank) throw ResourceError("A_" + std::to_string(n) + " exceeds the explicit-model cap");
      for (int i = 1; i <= n; ++i) model.generators.push_back(swap_positions(n + 1, i, i + 1));
      model.type = {Family::A, n};
      break;
    }
    case ModelKind::Signed: {
      if (n < 2) throw DomainError("B_n needs n >= 2");
      if (n > kMaxSignedRank) throw ResourceError("B_" + std::to_string(n) + " exceeds the explicit-model cap");
      auto flip = identity_permutation(n);
      flip[0] = -1;
      model.generators.push_back(flip);
      for (int i = 1; i < n; ++i) model.generators.push_back(swap_positions(n, i, i + 1));
      model.type = {Family::B, n};
      break;
    }
    case ModelKind::EvenSigned: {
      if (n < 3) throw DomainError("D_n needs n >= 3");
      if (n > kMaxEvenSignedRank) throw ResourceError("D_" + std::to_string(n) + " exceeds the explicit-model cap");
      auto twisted = identity_permutation(n);
      twisted[0] = -2;
      twisted[1] = -1;
      model.generators.push_back(twisted);
      for (int i = 1; i < n; ++i) model.generators.push_back(swap_positions(n, i, i + 1));
      model.type = {Family::D, n};
      break;
    }
    case ModelKind::Dihedral: {
      if (n < 3) throw DomainError("I2(m) needs m >= 3");
      if (n > kMaxDihedral) throw ResourceError("I2(" + std::to_string(n) + ") exceeds the explicit-model cap");
      // Reflections of the n-gon with vertices 1..n (position k <-> k-1 mod n):
      // a: k -> -k, b: k -> 1 - k. Their product is a rotation of order n.
      SignedPermutation a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] = ((n - k) % n) + 1;
        b[static_cast<std::size_t>(k)] = ((1 - k + n) % n) + 1;
      }
      model.generators = {a, b};
      model.type = {Family::I2, n};
      break;
    }
  }
  return model;
}

std::optional<GroupModel> model_for(const TypeTag& tag) {
  const int n = tag.parameter;
  switch (tag.family) {
    case Family::A:
      if (n <= kMaxSymmetricRank) return group_model(ModelKind::Symmetric, n);
      break;
    case Family::B:
      if (n <= kMaxSignedRank) return group_model(ModelKind::Signed, n);
      break;
    case Family::D:
      if (n <= kMaxEvenSignedRank) return group_model(ModelKind::EvenSigned, n);
      break;
    case Family::I2:
      if (n <= kMaxDihedral) return group_model(ModelKind::Dihedral, n);
      break;
    default: break;
  }
  return std::nullopt;
}

bool satisfies_relations(const GroupModel& model, const Eigen::MatrixXi& m) {
  const auto r = static_cast<int>(model.generators.size());
  if (m.rows() != r) return false;
  const auto e = identity_permutation(static_cast<int>(model.generators.front().size()));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const auto step = compose(model.generators[static_cast<std::size_t>(i)], model.generators[static_cast<std::size_t>(j)]);
      // Order of s_i s_j, capped well above any finite m_ij used here.
      auto power = step;
      int order = 1;
      while (power != e && order <= 1000) {
        power = compose(power, step);
        ++order;
      }
      const int expected = m(i, j);
      if (expected == kInfinity ? power == e : order != expected) return false;
    }
  }
  return true;
}

namespace {

std::string one_line(const SignedPermutation& w) {
  std::string out;
  for (int v : w) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string dihedral_word(const GroupModel& model, const SignedPermutation& w) {
  const int m = model.parameter;
  const auto e = identity_permutation(m);
  if (w == e) return "e";
  // Reduced words alternate; try a..., then b..., by increasing length. The
  // longest element (length m) is reached first by the word starting with a.
  for (int len = 1; len <= m; ++len) {
    for (int start = 0; start < 2; ++start) {
      SignedPermutation p = e;
      std::string word;
      for (int k = 0; k < len; ++k) {
        const int g = (start + k) % 2;
        p = compose(p, model.generators[static_cast<std::size_t>(g)]);
        word += g == 0 ? 'a' : 'b';
      }
      if (p == w) return word;
    }
  }
  throw ConsistencyError("element is not in the dihedral group");
}

}  // namespace

std::string encode(const GroupModel& model, const SignedPermutation& w) {
  return model.kind == ModelKind::Dihedral ? dihedral_word(model, w) : one_line(w);
}

Graph weak_order_graph(const GroupModel& model) {
  const auto e = identity_permutation(static_cast<int>(model.generators.front().size()));
  std::map<SignedPermutation, std::string> names;
  std::deque<SignedPermutation> queue{e};
  names.emplace(e, encode(model, e));
  std::vector<Edge> edges;
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (const auto& s : model.generators) {
      auto ws = compose(w, s);
      auto it = names.find(ws);
      if (it == names.end()) {
        it = names.emplace(ws, encode(model, ws)).first;
        queue.push_back(ws);
      }
      edges.emplace_back(names.at(w), it->second);
    }
  }
  return Graph(edges);
}

Graph weak_order_graph(std::span<const GroupModel> factors) {
  if (factors.empty()) throw DomainError("empty product of group models");
  Graph acc = weak_order_graph(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Graph next = weak_order_graph(factors[k]);
    std::vector<Edge> edges;
    for (const auto& a : acc.vertices())
      for (auto [u, v] : next.edges()) edges.emplace_back(a + "|" + next.name(u), a + "|" + next.name(v));
    for (const auto& b : next.vertices())
      for (auto [u, v] : acc.edges()) edges.emplace_back(acc.name(u) + "|" + b, acc.name(v) + "|" + b);
    acc = Graph(edges);
  }
  return acc;
}

Graph bruhat_graph_symmetric(int n) {
  if (n < 2) throw DomainError("Bruhat graph needs n >= 2");
  if (n > 5) throw ResourceError("Bruhat graph of S_" + std::to_string(n) + " exceeds the cap n <= 5");
  auto w = identity_permutation(n);
  std::vector<Edge> edges;
  do {
    const auto name = one_line(w);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        auto wt = w;
        std::swap(wt[static_cast<std::size_t>(i)], wt[static_cast<std::size_t>(j)]);
        if (name < one_line(wt)) edges.emplace_back(name, one_line(wt));
      }
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return Graph(edges);
}

}  // namespace ricci::coxeter
