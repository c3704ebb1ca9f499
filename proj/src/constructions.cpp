#include "gorbit/constructions.hpp"

#include "gorbit/error.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

namespace {

Matrix small(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out, out.front().size());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Subspace span_of_indices(std::size_t n, std::size_t first, std::size_t last) {
  std::vector<Vector> rows;
  for (std::size_t i = first; i < last; ++i) rows.push_back(unit_vector(n, i));
  return Subspace(n, rows);
}

// Complex n x n matrix with entry (p, q) meaning p + i q, as a real 2n x 2n
// matrix on (Re z_1, Im z_1, ..., Re z_n, Im z_n).
using ComplexEntries = std::vector<std::vector<std::pair<int, int>>>;

Matrix realify(const ComplexEntries& m) {
  const std::size_t n = m.size();
  Matrix out(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto [p, q] = m[j][k];
      out(2 * j, 2 * k) = p;
      out(2 * j, 2 * k + 1) = -q;
      out(2 * j + 1, 2 * k) = q;
      out(2 * j + 1, 2 * k + 1) = p;
    }
  }
  return out;
}

std::vector<Matrix> su_realified(std::size_t n) {
  std::vector<Matrix> out;
  auto zero = [n] { return ComplexEntries(n, std::vector<std::pair<int, int>>(n, {0, 0})); };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ComplexEntries m = zero();
    m[k][k] = {0, 1};
    m[k + 1][k + 1] = {0, -1};
    out.push_back(realify(m));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexEntries m = zero();
      m[j][k] = {1, 0};
      m[k][j] = {-1, 0};
      out.push_back(realify(m));
      ComplexEntries s = zero();
      s[j][k] = {0, 1};
      s[k][j] = {0, 1};
      out.push_back(realify(s));
    }
  }
  return out;
}

LieAlgebra su2_sum(std::size_t copies, bool extra_center) {
  StructureTable t;
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t o = 3 * c;
    t[{o, o + 1}] = {{o + 2, 1}};
    t[{o + 1, o + 2}] = {{o, 1}};
    t[{o, o + 2}] = {{o + 1, -1}};
  }
  std::vector<std::string> names;
  if (copies == 1) {
    names = {"e1", "e2", "e3"};
  } else {
    for (std::size_t c = 0; c < copies; ++c) {
      for (std::size_t k = 1; k <= 3; ++k) names.push_back("f" + std::to_string(c + 1) + "_" + std::to_string(k));
    }
  }
  if (extra_center) names.emplace_back("e4");
  return LieAlgebra(copies == 1 ? (extra_center ? "su2+R" : "su2") : "su2^" + std::to_string(copies), names, t);
}

std::shared_ptr<const LieAlgebra> share(LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); }

Construction with_h_zero(std::string label, LieAlgebra g, Matrix metric) {
  const std::size_t n = g.dim();
  MetricReductiveSpace space(share(std::move(g)), Subspace::zero(n), Subspace::full(n), metric);
  const bool solvable = series_analysis(space.g()).is_solvable;
  Construction out{std::move(label), std::move(space), std::nullopt, metric};
  if (solvable) out.levi = Subspace::zero(n);
  return out;
}

Vector flat(const Matrix& m) { return m.data(); }

}  // namespace

void verify_clifford(const CliffordModule& module) {
  if (module.j.size() != module.z_dim) throw Error(ErrorKind::CliffordRelationViolation, "wrong number of J");
  const Matrix id = Matrix::identity(module.a_dim);
  const Matrix minus_id = Rational(-1) * id;
  for (std::size_t i = 0; i < module.z_dim; ++i) {
    const Matrix& ji = module.j[i];
    if (ji.rows() != module.a_dim || ji.cols() != module.a_dim) {
      throw Error(ErrorKind::CliffordRelationViolation, "J_" + std::to_string(i + 1) + " has wrong size");
    }
    if (!(ji.transpose() + ji).is_zero()) {
      throw Error(ErrorKind::CliffordRelationViolation, "J_" + std::to_string(i + 1) + " is not skew");
    }
    if (!(ji * ji == minus_id)) {
      throw Error(ErrorKind::CliffordRelationViolation, "J_" + std::to_string(i + 1) + "^2 != -1");
    }
    for (std::size_t k = i + 1; k < module.z_dim; ++k) {
      if (!(ji * module.j[k] + module.j[k] * ji).is_zero()) {
        throw Error(ErrorKind::CliffordRelationViolation,
                    "J_" + std::to_string(i + 1) + " and J_" + std::to_string(k + 1) + " do not anticommute");
      }
    }
  }
}

CliffordModule clifford_module_cl5_r8() {
  const Matrix i2 = Matrix::identity(2);
  const Matrix e = small({{0, -1}, {1, 0}});
  const Matrix x = small({{0, 1}, {1, 0}});
  const Matrix z = small({{1, 0}, {0, -1}});
  auto k3 = [](const Matrix& a, const Matrix& b, const Matrix& c) { return kron(kron(a, b), c); };
  CliffordModule out{5, 8, {k3(i2, i2, e), k3(i2, e, x), k3(e, i2, z), k3(e, x, x), k3(e, z, x)}};
  verify_clifford(out);
  return out;
}

LieAlgebra htype_algebra(const CliffordModule& module, std::string name) {
  verify_clifford(module);
  const std::size_t na = module.a_dim, nz = module.z_dim;
  StructureTable t;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = i + 1; j < na; ++j) {
      std::vector<BracketTerm> terms;
      for (std::size_t k = 0; k < nz; ++k) {
        const Rational c = module.j[k](j, i);
        if (!is_zero(c)) terms.push_back({na + k, c});
      }
      if (!terms.empty()) t[{i, j}] = std::move(terms);
    }
  }
  auto names = numbered("a", na);
  for (auto& s : numbered("z", nz)) names.push_back(std::move(s));
  return LieAlgebra(std::move(name), names, t);
}

LieAlgebra semidirect_with_derivations(const LieAlgebra& n, const std::vector<Matrix>& derivations,
                                       const std::vector<std::string>& derivation_names, std::string name) {
  const std::size_t p = n.dim(), k = derivations.size();
  StructureTable t = n.table();
  Matrix columns(p * p, k);
  for (std::size_t a = 0; a < k; ++a) {
    const Vector f = flat(derivations[a]);
    for (std::size_t r = 0; r < p * p; ++r) columns(r, a) = f[r];
  }
  for (std::size_t a = 0; a < k; ++a) {
    // [D_a, e_j] = D_a e_j, stored with the n index first.
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<BracketTerm> terms;
      for (std::size_t r = 0; r < p; ++r) {
        if (!is_zero(derivations[a](r, j))) terms.push_back({r, -derivations[a](r, j)});
      }
      if (!terms.empty()) t[{j, p + a}] = std::move(terms);
    }
    for (std::size_t b = a + 1; b < k; ++b) {
      const LinearSolution sol = solve(columns, flat(commutator(derivations[a], derivations[b])));
      if (!sol.feasible()) throw Error(ErrorKind::InvalidArgument, "derivations do not span a Lie algebra");
      std::vector<BracketTerm> terms;
      for (std::size_t c = 0; c < k; ++c) {
        if (!is_zero((*sol.solution)[c])) terms.push_back({p + c, (*sol.solution)[c]});
      }
      if (!terms.empty()) t[{p + a, p + b}] = std::move(terms);
    }
  }
  std::vector<std::string> names = n.basis_names();
  for (const auto& s : derivation_names) names.push_back(s);
  return LieAlgebra(std::move(name), names, t);
}

MetricReductiveSpace isometry_extension(const LieAlgebra& n, const Matrix& metric) {
  const DerivationBasis d = derivations(n, metric);
  const std::size_t p = n.dim();
  auto g = share(semidirect_with_derivations(n, d.basis, numbered("D", d.basis.size()), n.name() + "xD"));
  const std::size_t total = g->dim();
  return MetricReductiveSpace(g, span_of_indices(total, p, total), span_of_indices(total, 0, p), metric);
}

namespace {

constexpr const char* kKindNames[] = {"u2_sphere",   "euclidean_go", "htype",      "heisenberg13",
                                      "gonil2_extension", "ledger_obata", "filiform4", "complex_weight_solvable",
                                      "heisenberg3", "sphere2"};

}  // namespace

const char* to_string(ConstructionKind k) { return kKindNames[static_cast<int>(k)]; }

std::optional<ConstructionKind> parse_construction_kind(const std::string& name) {
  for (int k = 0; k < 10; ++k) {
    if (name == kKindNames[k]) return static_cast<ConstructionKind>(k);
  }
  return std::nullopt;
}

std::vector<ConstructionKind> all_construction_kinds() {
  std::vector<ConstructionKind> out;
  for (int k = 0; k < 10; ++k) out.push_back(static_cast<ConstructionKind>(k));
  return out;
}

DerivationSplit split_derivations(const TwoStepNilpotent& data) {
  const auto& basis = data.skew_derivations();
  const std::size_t k = basis.size();
  const std::size_t p = data.algebra().dim();
  // Centre: coefficient vectors t with [sum t_a D_a, D_b] = 0 for all b.
  std::vector<Vector> rows;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Vector> cols;
    for (std::size_t a = 0; a < k; ++a) cols.push_back(flat(commutator(basis[a], basis[b])));
    for (std::size_t r = 0; r < p * p; ++r) {
      Vector row(k);
      for (std::size_t a = 0; a < k; ++a) row[a] = cols[a][r];
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  const Matrix centre = rows.empty() ? Matrix::identity(k) : nullspace(Matrix::from_rows(rows, k));
  std::vector<Vector> comms;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) comms.push_back(flat(commutator(basis[a], basis[b])));
  }
  const Subspace d_space(p * p, comms);
  if (centre.rows() != 1 || d_space.dim() + 1 != k) {
    throw Error(ErrorKind::Gonil2HypothesisFailed,
                "D(n) is not the sum of a one-dimensional centre and its derived algebra");
  }
  DerivationSplit out;
  out.c = Matrix(p, p);
  for (std::size_t a = 0; a < k; ++a) {
    if (!is_zero(centre(0, a))) out.c = out.c + centre(0, a) * basis[a];
  }
  EchelonBasis check(p * p);
  for (std::size_t r = 0; r < d_space.dim(); ++r) {
    const Vector f = d_space.basis_vector(r);
    check.insert(f);
    Matrix m(p, p);
    for (std::size_t i = 0; i < p * p; ++i) m(i / p, i % p) = f[i];
    out.d.push_back(std::move(m));
  }
  if (check.contains(flat(out.c))) {
    throw Error(ErrorKind::Gonil2HypothesisFailed, "centre of D(n) lies in [D(n), D(n)]");
  }
  return out;
}

Gonil2Hypotheses check_gonil2_hypotheses(const TwoStepNilpotent& data, const DerivationSplit& split,
                                         const SampleConfig& config) {
  const std::size_t p = data.algebra().dim();
  const std::size_t k = split.d.size();
  EchelonBasis d_span(p * p);
  for (const auto& m : split.d) d_span.insert(flat(m));
  Gonil2Hypotheses out;
  for (const auto& [x, y] : data.sample_pairs(config)) {
    ++out.samples;
    Matrix system(2 * p, k);
    for (std::size_t a = 0; a < k; ++a) {
      const Vector dx = split.d[a] * x, dy = split.d[a] * y;
      for (std::size_t r = 0; r < p; ++r) {
        system(r, a) = dx[r];
        system(p + r, a) = dy[r];
      }
    }
    Vector rhs = zero_vector(p);
    for (auto& v : data.j_map(x, y)) rhs.push_back(v);
    const LinearSolution sol = solve(system, rhs);
    const bool h1 = sol.feasible();
    if (h1) {
      ++out.hypothesis1_holds;
      out.max_d1_solution_dim = std::max(out.max_d1_solution_dim, k - sol.rank_coefficients);
    }
    bool h2 = false;
    for (const auto& s : data.stabilizer(x, y)) {
      if (!d_span.contains(flat(s))) {
        h2 = true;
        break;
      }
    }
    if (h2) ++out.hypothesis2_holds;
    if ((!h1 || !h2) && !out.first_failure) out.first_failure = std::make_pair(x, y);
  }
  return out;
}

Construction construct(const ConstructionParams& params) {
  switch (params.kind) {
    case ConstructionKind::U2Sphere: {
      if (params.alpha <= 0) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
      auto g = share(su2_sum(1, true));
      Matrix form = Matrix::identity(4);
      form(3, 3) = params.alpha;
      const Subspace h(4, {Vector{0, 0, 1, 1}});
      ComplementSpec spec{ComplementStrategy::FormOrthogonal, std::nullopt, std::nullopt, form};
      const Subspace m = orthogonal_complement(form, h, Subspace::full(4));
      MetricReductiveSpace space =
          build_reductive(g, h, MetricSpec::explicit_matrix(restrict_form(form, m)), spec);
      return {"u2_sphere(alpha=" + to_string(params.alpha) + ")", std::move(space), span_of_indices(4, 0, 3),
              std::nullopt};
    }
    case ConstructionKind::EuclideanGo: {
      const std::size_t n = params.n;
      if (n < 2) throw Error(ErrorKind::InvalidArgument, "euclidean_go needs n >= 2");
      const LieAlgebra flat_space("R" + std::to_string(2 * n), numbered("x", 2 * n), {});
      std::vector<Matrix> ders;
      ComplexEntries j(n, std::vector<std::pair<int, int>>(n, {0, 0}));
      for (std::size_t k = 0; k < n; ++k) j[k][k] = {0, 1};
      ders.push_back(realify(j));
      for (auto& m : su_realified(n)) ders.push_back(std::move(m));
      std::vector<std::string> names{"y"};
      for (auto& s : numbered("s", ders.size() - 1)) names.push_back(std::move(s));
      auto g = share(semidirect_with_derivations(flat_space, ders, names, "euclidean_go(" + std::to_string(n) + ")"));
      const std::size_t total = g->dim();
      const Subspace h = span_of_indices(total, 2 * n + 1, total);
      const Subspace m = span_of_indices(total, 0, 2 * n + 1);
      ComplementSpec spec{ComplementStrategy::Explicit, std::nullopt, m, std::nullopt};
      MetricReductiveSpace space =
          build_reductive(g, h, MetricSpec::explicit_matrix(Matrix::identity(2 * n + 1)), spec);
      return {"euclidean_go(n=" + std::to_string(n) + ")", std::move(space), h, std::nullopt};
    }
    case ConstructionKind::HType:
    case ConstructionKind::Heisenberg13: {
      const CliffordModule module = (params.kind == ConstructionKind::HType && params.clifford)
                                        ? *params.clifford
                                        : clifford_module_cl5_r8();
      LieAlgebra n = htype_algebra(module, params.kind == ConstructionKind::Heisenberg13 ? "heisenberg13" : "htype");
      const std::size_t d = n.dim();
      return with_h_zero(to_string(params.kind), std::move(n), Matrix::identity(d));
    }
    case ConstructionKind::Gonil2Extension: {
      if (params.c_scale <= 0) throw Error(ErrorKind::InvalidArgument, "c_scale must be positive");
      const LieAlgebra n = htype_algebra(clifford_module_cl5_r8(), "heisenberg13");
      const std::size_t p = n.dim();
      const TwoStepNilpotent data(n, Matrix::identity(p));
      const DerivationSplit split = split_derivations(data);
      const Gonil2Hypotheses hyp = check_gonil2_hypotheses(data, split, params.samples);
      if (hyp.hypothesis1_holds != hyp.samples) {
        throw Error(ErrorKind::Gonil2HypothesisFailed, "hypothesis 1 fails at a sample");
      }
      if (hyp.hypothesis2_holds != hyp.samples) {
        throw Error(ErrorKind::Gonil2HypothesisFailed, "hypothesis 2 fails at a sample");
      }
      std::vector<Matrix> ders{split.c};
      for (const auto& m : split.d) ders.push_back(m);
      std::vector<std::string> names{"c"};
      for (auto& s : numbered("d", split.d.size())) names.push_back(std::move(s));
      auto g = share(semidirect_with_derivations(n, ders, names, "sol_x_d"));
      const std::size_t total = g->dim();
      Matrix metric = Matrix::identity(p + 1);
      metric(p, p) = params.c_scale;
      const Subspace h = span_of_indices(total, p + 1, total);
      MetricReductiveSpace space(g, h, span_of_indices(total, 0, p + 1), metric);
      return {"gonil2_extension(c_scale=" + to_string(params.c_scale) + ")", std::move(space), h, std::nullopt};
    }
    case ConstructionKind::LedgerObata: {
      const std::size_t copies = params.copies;
      if (copies < 2) throw Error(ErrorKind::InvalidArgument, "ledger_obata needs at least two factors");
      auto g = share(su2_sum(copies, false));
      const std::size_t total = g->dim();
      std::vector<Vector> diag;
      for (std::size_t k = 0; k < 3; ++k) {
        Vector v = zero_vector(total);
        for (std::size_t c = 0; c < copies; ++c) v[3 * c + k] = 1;
        diag.push_back(std::move(v));
      }
      const Subspace h(total, diag);
      ComplementSpec spec;
      if (params.variant == "killing_orthogonal") {
        spec.strategy = ComplementStrategy::KillingOrthogonal;
      } else if (params.variant == "ideal") {
        spec.strategy = ComplementStrategy::Explicit;
        spec.m = span_of_indices(total, 0, 3 * (copies - 1));
      } else {
        throw Error(ErrorKind::InvalidArgument, "unknown ledger_obata variant '" + params.variant + "'");
      }
      MetricReductiveSpace space = build_reductive(g, h, MetricSpec::killing_multiple(1), spec);
      return {"ledger_obata(m=" + std::to_string(copies) + ", " + params.variant + ")", std::move(space),
              Subspace::full(total), std::nullopt};
    }
    case ConstructionKind::Filiform4: {
      StructureTable t;
      t[{0, 1}] = {{2, 1}};
      t[{0, 2}] = {{3, 1}};
      return with_h_zero("filiform4", LieAlgebra::from_table("filiform4", 4, t), Matrix::identity(4));
    }
    case ConstructionKind::ComplexWeightSolvable: {
      const std::size_t planes = params.weights.size();
      StructureTable t;
      for (std::size_t k = 0; k < planes; ++k) {
        const auto& [a, b] = params.weights[k];
        const std::size_t u = 1 + 2 * k, v = 2 + 2 * k;
        t[{0, u}] = {{u, a}, {v, b}};
        t[{0, v}] = {{u, -b}, {v, a}};
      }
      std::vector<std::string> names{"e0"};
      for (auto& s : numbered("e", 2 * planes)) names.push_back(std::move(s));
      LieAlgebra g("complex_weight_solvable", names, t);
      return with_h_zero("complex_weight_solvable", std::move(g), Matrix::identity(1 + 2 * planes));
    }
    case ConstructionKind::Heisenberg3: {
      StructureTable t;
      t[{0, 1}] = {{2, 1}};
      return with_h_zero("heisenberg3", LieAlgebra::from_table("heisenberg3", 3, t), Matrix::identity(3));
    }
    case ConstructionKind::Sphere2: {
      auto g = share(su2_sum(1, false));
      const Subspace h(3, {Vector{0, 0, 1}});
      MetricReductiveSpace space = build_reductive(g, h, MetricSpec::killing_multiple(1), ComplementSpec{});
      return {"sphere2", std::move(space), Subspace::full(3), std::nullopt};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown construction kind");
}

}  // namespace gorbit
