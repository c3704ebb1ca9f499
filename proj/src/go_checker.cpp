#include "gorbit/go_checker.hpp"

#include "gorbit/error.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

std::int64_t SampleStream::next_coordinate() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(bound_) + 1;
  return static_cast<std::int64_t>((state_ >> 33) % width) - bound_;
}

Vector SampleStream::next_vector(std::size_t n) {
  if (n == 0) return {};
  while (true) {
    Vector v(n);
    for (auto& x : v) x = static_cast<long>(next_coordinate());
    if (!is_zero(v)) return v;
  }
}

const char* to_string(GOVerdict::Kind k) {
  switch (k) {
    case GOVerdict::Kind::CertifiedNaturallyReductive: return "CertifiedNaturallyReductive";
    case GOVerdict::Kind::SampledGO: return "SampledGO";
    case GOVerdict::Kind::NotGO: return "NotGO";
  }
  return "unknown";
}

Json GOVerdict::to_json() const {
  Json out = {{"kind", to_string(kind)},
              {"sample_count", sample_count},
              {"directions_checked", directions_checked},
              {"seed", seed},
              {"notes", notes}};
  if (witness) {
    Json vectors = Json::array();
    for (const auto& v : witness->vectors) vectors.push_back(gorbit::to_json(v));
    out["witness"] = {{"vectors", vectors},
                      {"rank_coefficients", witness->rank_coefficients},
                      {"rank_augmented", witness->rank_augmented},
                      {"dual", gorbit::to_json(witness->dual)},
                      {"sample_index", witness->sample_index}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

GraphSolveResult geodesic_graph_solve(const MetricReductiveSpace& space, const Vector& x_c) {
  const std::size_t dm = space.dim_m(), dh = space.dim_h();
  const Vector gx = space.ip() * x_c;
  // Row j: ([Z, E_j]_m, X) = -([X, E_j]_m, X).
  Matrix l(dm, dh);
  Vector c = zero_vector(dm);
  for (std::size_t j = 0; j < dm; ++j) {
    for (std::size_t i = 0; i < dh; ++i) l(j, i) = dot(space.h_action(i).col(j), gx);
    Vector xe = zero_vector(dm);
    for (std::size_t a = 0; a < dm; ++a) {
      if (!is_zero(x_c[a])) axpy(xe, x_c[a], space.basis_bracket_m(a, j));
    }
    c[j] = -dot(xe, gx);
  }
  GraphSolveResult out;
  LinearSolution sol = solve(l, c);
  if (sol.feasible()) {
    out.solution = GeodesicGraphSolution{x_c, std::move(*sol.solution)};
  } else {
    out.witness = InfeasibilityWitness{{space.from_m(x_c)}, sol.rank_coefficients, sol.rank_augmented,
                                       std::move(sol.certificate), 0};
  }
  return out;
}

bool natural_reductivity_check(const MetricReductiveSpace& space) {
  const std::size_t dm = space.dim_m();
  // t(i, j, k) = ([E_i, E_j]_m, E_k)
  std::vector<Vector> t(dm * dm);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dm; ++j) t[i * dm + j] = space.ip() * space.basis_bracket_m(i, j);
  }
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dm; ++j) {
      for (std::size_t k = i; k < dm; ++k) {
        if (!is_zero(t[i * dm + j][k] + t[k * dm + j][i])) return false;
      }
    }
  }
  return true;
}

bool recheck_witness(const MetricReductiveSpace& space, const InfeasibilityWitness& witness) {
  if (witness.vectors.size() != 1) return false;
  const LieAlgebra& g = space.g();
  const Vector& x = witness.vectors.front();
  if (x.size() != g.dim() || !space.m().contains(x)) return false;
  const Vector x_c = space.m().coordinates(x);
  const auto mb = space.m().basis();
  const auto hb = space.h().basis();
  if (witness.dual.size() != mb.size()) return false;
  Rational dual_c = 0;
  Vector dual_l = zero_vector(hb.size());
  for (std::size_t j = 0; j < mb.size(); ++j) {
    const Rational yj = witness.dual[j];
    if (is_zero(yj)) continue;
    dual_c += yj * -space.inner(space.m_part(g.bracket(x, mb[j])), x_c);
    for (std::size_t i = 0; i < hb.size(); ++i) {
      dual_l[i] += yj * space.inner(space.m_part(g.bracket(hb[i], mb[j])), x_c);
    }
  }
  return is_zero(dual_l) && dual_c == 1;
}

GOVerdict go_check(const MetricReductiveSpace& space, const SampleConfig& config) {
  GOVerdict verdict;
  verdict.seed = config.seed;
  verdict.sample_count = config.sample_count;
  if (natural_reductivity_check(space)) {
    verdict.kind = GOVerdict::Kind::CertifiedNaturallyReductive;
    verdict.notes.emplace_back("([X,Y]_m, X) = 0 holds identically; Z = 0 solves every direction");
    return verdict;
  }
  const std::size_t dm = space.dim_m();
  std::size_t index = 0;
  auto check = [&](const Vector& x) {
    GraphSolveResult r = geodesic_graph_solve(space, x);
    ++verdict.directions_checked;
    if (r.witness) {
      r.witness->sample_index = index;
      verdict.kind = GOVerdict::Kind::NotGO;
      verdict.witness = std::move(r.witness);
      return false;
    }
    ++index;
    return true;
  };
  for (std::size_t i = 0; i < dm; ++i) {
    if (!check(unit_vector(dm, i))) return verdict;
  }
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = i + 1; j < dm; ++j) {
      if (!check(add(unit_vector(dm, i), unit_vector(dm, j)))) return verdict;
    }
  }
  SampleStream stream(config.seed, config.coordinate_bound);
  for (std::size_t s = 0; s < config.sample_count; ++s) {
    if (!check(stream.next_vector(dm))) return verdict;
  }
  verdict.kind = GOVerdict::Kind::SampledGO;
  verdict.notes.emplace_back("every sampled direction admits a geodesic graph solution; not a proof");
  return verdict;
}

TwoStepNilpotent::TwoStepNilpotent(const LieAlgebra& n, Matrix metric) : n_(n), metric_(std::move(metric)) {
  const SeriesReport series = series_analysis(n_);
  if (!series.is_nilpotent || *series.nilpotency_class > 2) {
    throw Error(ErrorKind::NotTwoStep, "algebra is not nilpotent of class at most 2");
  }
  if (metric_.rows() != n_.dim() || !metric_.is_symmetric() || !is_positive_definite(metric_)) {
    throw Error(ErrorKind::InvalidArgument, "metric must be symmetric positive definite on n");
  }
  class_ = *series.nilpotency_class;
  const Subspace full = Subspace::full(n_.dim());
  z_ = bracket_space(n_, full, full);
  a_ = orthogonal_complement(metric_, z_, full);
  a_gram_inverse_ = inverse(restrict_form(metric_, a_));
  derivations_ = derivations(n_, metric_).basis;
}

Vector TwoStepNilpotent::j_map(const Vector& x, const Vector& y) const {
  const std::size_t da = a_.dim();
  Vector r(da);
  for (std::size_t k = 0; k < da; ++k) r[k] = bilinear(metric_, n_.bracket(y, a_.basis_vector(k)), x);
  return a_.embed(a_gram_inverse_ * r);
}

LinearSolution TwoStepNilpotent::solve_pair(const Vector& x, const Vector& y) const {
  const std::size_t n = n_.dim(), k = derivations_.size();
  Matrix system(2 * n, k);
  for (std::size_t d = 0; d < k; ++d) {
    const Vector dx = derivations_[d] * x;
    const Vector dy = derivations_[d] * y;
    for (std::size_t r = 0; r < n; ++r) {
      system(r, d) = dx[r];
      system(n + r, d) = dy[r];
    }
  }
  Vector rhs = zero_vector(n);
  for (auto& v : j_map(x, y)) rhs.push_back(v);
  return solve(system, rhs);
}

std::vector<Matrix> TwoStepNilpotent::stabilizer(const Vector& x, const Vector& y) const {
  const std::size_t n = n_.dim(), k = derivations_.size();
  Matrix system(2 * n, k);
  for (std::size_t d = 0; d < k; ++d) {
    const Vector dx = derivations_[d] * x;
    const Vector dy = derivations_[d] * y;
    for (std::size_t r = 0; r < n; ++r) {
      system(r, d) = dx[r];
      system(n + r, d) = dy[r];
    }
  }
  const Matrix ns = nullspace(system);
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < ns.rows(); ++s) {
    Matrix d(n, n);
    for (std::size_t j = 0; j < k; ++j) {
      if (!is_zero(ns(s, j))) d = d + ns(s, j) * derivations_[j];
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::pair<Vector, Vector>> TwoStepNilpotent::sample_pairs(const SampleConfig& config) const {
  std::vector<std::pair<Vector, Vector>> out;
  for (const auto& x : z_.basis()) {
    for (const auto& y : a_.basis()) out.emplace_back(x, y);
  }
  SampleStream stream(config.seed, config.coordinate_bound);
  for (std::size_t s = 0; s < config.sample_count; ++s) {
    Vector x = z_.embed(stream.next_vector(z_.dim()));
    Vector y = a_.embed(stream.next_vector(a_.dim()));
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

GOVerdict nil_go_check(const LieAlgebra& n, const Matrix& metric, const SampleConfig& config) {
  if (!series_analysis(n).is_nilpotent) throw Error(ErrorKind::NotTwoStep, "algebra is not nilpotent");
  return nil_go_check(TwoStepNilpotent(n, metric), config);
}

GOVerdict nil_go_check(const TwoStepNilpotent& data, const SampleConfig& config) {
  GOVerdict verdict;
  verdict.seed = config.seed;
  verdict.sample_count = config.sample_count;
  if (data.nilpotency_class() <= 1) {
    verdict.kind = GOVerdict::Kind::CertifiedNaturallyReductive;
    verdict.notes.emplace_back("abelian: every left-invariant metric is flat and naturally reductive");
    return verdict;
  }
  std::size_t index = 0;
  for (const auto& [x, y] : data.sample_pairs(config)) {
    ++verdict.directions_checked;
    LinearSolution sol = data.solve_pair(x, y);
    if (!sol.feasible()) {
      verdict.kind = GOVerdict::Kind::NotGO;
      verdict.witness = InfeasibilityWitness{{x, y}, sol.rank_coefficients, sol.rank_augmented,
                                             std::move(sol.certificate), index};
      return verdict;
    }
    ++index;
  }
  verdict.kind = GOVerdict::Kind::SampledGO;
  verdict.notes.emplace_back("a skew derivation with D(X) = 0, D(Y) = J_X(Y) exists at every sampled pair");
  return verdict;
}

TotallyGeodesicReport totally_geodesic_check(const MetricReductiveSpace& space, const Subspace& p) {
  const LieAlgebra& g = space.g();
  if (!space.m().contains(p)) throw Error(ErrorKind::InvalidArgument, "p must lie in m");
  TotallyGeodesicReport out;
  const auto pb = p.basis();
  std::vector<Vector> pc;
  for (const auto& v : pb) pc.push_back(space.m_part(v));
  const Subspace p_c(space.dim_m(), pc);

  out.bracket_closed = true;
  std::vector<Vector> h_parts;
  for (std::size_t i = 0; i < pb.size(); ++i) {
    for (std::size_t j = i + 1; j < pb.size(); ++j) {
      const Vector br = g.bracket(pb[i], pb[j]);
      if (!p_c.contains(space.m_part(br))) out.bracket_closed = false;
      h_parts.push_back(space.from_h(space.h_part(br)));
    }
  }
  // Close the h-projection of [p,p] under brackets inside h.
  Subspace hp(g.dim(), h_parts);
  while (true) {
    Subspace next = hp + bracket_space(g, hp, hp);
    if (next == hp) break;
    hp = std::move(next);
  }
  out.h_prime = hp;

  out.u_closed = true;
  for (std::size_t i = 0; i < pc.size() && out.u_closed; ++i) {
    for (std::size_t j = i; j < pc.size(); ++j) {
      if (!p_c.contains(u_map(space, pc[i], pc[j]))) {
        out.u_closed = false;
        break;
      }
    }
  }
  out.is_tg = out.bracket_closed && out.u_closed;
  out.centralizer_h = centralizer(g, p, space.h());
  out.induced_go_condition = (out.h_prime + out.centralizer_h) == space.h();
  return out;
}

PrincipalIsotropy principal_isotropy_dim(const MetricReductiveSpace& space, const Subspace& p,
                                         const SampleConfig& config) {
  const LieAlgebra& g = space.g();
  const auto hb = space.h().basis();
  PrincipalIsotropy out;
  out.dim = hb.size();
  out.attained_at = zero_vector(g.dim());
  if (p.is_zero()) return out;
  SampleStream stream(config.seed, config.coordinate_bound);
  bool first = true;
  for (std::size_t s = 0; s < config.sample_count; ++s) {
    const Vector x = p.embed(stream.next_vector(p.dim()));
    Matrix cols(g.dim(), hb.size());
    for (std::size_t a = 0; a < hb.size(); ++a) {
      const Vector br = g.bracket(hb[a], x);
      for (std::size_t r = 0; r < g.dim(); ++r) cols(r, a) = br[r];
    }
    const std::size_t d = hb.size() - rank(cols);
    if (first || d < out.dim) {
      out.dim = d;
      out.attained_at = x;
      first = false;
    }
  }
  return out;
}

namespace {

Vector sample_in(SampleStream& stream, const Subspace& s) { return s.embed(stream.next_vector(s.dim())); }

}  // namespace

AuditReport eigenspace_bracket_audit(const MetricReductiveSpace& space, const KillingOperatorSpectrum& spectrum,
                                     const GOVerdict& verdict, const SampleConfig& config,
                                     const AuditOptions& options) {
  if (spectrum.mode != KillingOperatorSpectrum::Mode::Exact) {
    throw Error(ErrorKind::SpectrumNumeric, "eigenspace audit needs an exact spectrum");
  }
  const LieAlgebra& g = space.g();
  AuditReport report;
  report.audit_name = "eigenspace_brackets";
  report.target = g.name();
  report.precondition = to_string(verdict.kind);
  report.precondition_met = verdict.is_go();

  AuditClause c1 = make_clause("pair_inclusion", "brackets of distinct Killing eigenspaces stay in their sum");
  AuditClause c2 = make_clause("centralizer_decomposition", "[X,Y] = [Z2,X] + [Z1,Y] with Z1 in C_h(X), Z2 in C_h(Y)");
  AuditClause c3 = make_clause("trivial_isotropy_invariance", "trivial principal isotropy forces [A_b, p] in p");
  AuditClause c4 = make_clause("orthogonal_pair_bracket", "([h,X],Y) = 0 in one eigenspace gives [X,Y] in A_0 + A_a");
  if (!report.precondition_met && options.enforce_precondition) {
    for (auto* c : {&c1, &c2, &c3, &c4}) {
      c->status = ClauseStatus::Skipped;
      c->detail = "precondition not met: space is not GO";
      report.clauses.push_back(*c);
    }
    return report;
  }

  std::vector<std::size_t> nonzero;
  Subspace a0 = Subspace::zero(g.dim());
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    if (spectrum.eigenvalues[k] == 0) {
      a0 = spectrum.eigenspaces[k];
    } else {
      nonzero.push_back(k);
    }
  }
  const auto& ev = spectrum.eigenvalues;
  const auto& es = spectrum.eigenspaces;
  SampleStream stream(config.seed, config.coordinate_bound);

  for (std::size_t ia = 0; ia < nonzero.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < nonzero.size(); ++ib) {
      const std::size_t a = nonzero[ia], b = nonzero[ib];
      const Subspace sum = es[a] + es[b];
      for (const auto& x : es[a].basis()) {
        for (const auto& y : es[b].basis()) {
          const Vector br = g.bracket(x, y);
          if (!sum.contains(br)) {
            fail_clause(c1, "bracket leaves A_" + to_string(ev[a]) + " + A_" + to_string(ev[b]),
                 {{"alpha", to_json(ev[a])}, {"beta", to_json(ev[b])}, {"x", to_json(x)}, {"y", to_json(y)},
                  {"bracket", to_json(br)}});
          }
        }
      }
    }
  }

  std::size_t c2_checked = 0;
  for (std::size_t ia = 0; ia < nonzero.size(); ++ia) {
    for (std::size_t ib = 0; ib < nonzero.size(); ++ib) {
      if (ia == ib) continue;
      const std::size_t a = nonzero[ia], b = nonzero[ib];
      for (std::size_t s = 0; s < config.sample_count; ++s) {
        const Vector x = sample_in(stream, es[a]);
        const Vector y = sample_in(stream, es[b]);
        const Subspace cx = centralizer(g, Subspace(g.dim(), {x}), space.h());
        const Subspace cy = centralizer(g, Subspace(g.dim(), {y}), space.h());
        // unknowns: coefficients of Z1 on cx, then Z2 on cy
        Matrix system(g.dim(), cx.dim() + cy.dim());
        for (std::size_t k = 0; k < cx.dim(); ++k) {
          const Vector col = g.bracket(cx.basis_vector(k), y);
          for (std::size_t r = 0; r < g.dim(); ++r) system(r, k) = col[r];
        }
        for (std::size_t k = 0; k < cy.dim(); ++k) {
          const Vector col = g.bracket(cy.basis_vector(k), x);
          for (std::size_t r = 0; r < g.dim(); ++r) system(r, cx.dim() + k) = col[r];
        }
        const Vector br = g.bracket(x, y);
        ++c2_checked;
        if (!solve(system, br).feasible()) {
          fail_clause(c2, "no centralizer decomposition of [X,Y]",
               {{"alpha", to_json(ev[a])}, {"beta", to_json(ev[b])}, {"x", to_json(x)}, {"y", to_json(y)}});
        }
      }
    }
  }
  if (c2.status == ClauseStatus::Pass) c2.detail = std::to_string(c2_checked) + " sampled pairs";

  std::size_t c3_modules = 0;
  for (const std::size_t a : nonzero) {
    for (const auto& mod : refine_module(space, es[a])) {
      if (principal_isotropy_dim(space, mod.space, config).dim != 0) continue;
      ++c3_modules;
      for (const std::size_t b : nonzero) {
        if (b == a) continue;
        for (const auto& y : es[b].basis()) {
          for (const auto& x : mod.space.basis()) {
            const Vector br = g.bracket(y, x);
            if (!mod.space.contains(br)) {
              fail_clause(c3, "[A_" + to_string(ev[b]) + ", p] leaves p",
                   {{"module", to_json(mod.space)}, {"beta", to_json(ev[b])}, {"y", to_json(y)},
                    {"x", to_json(x)}, {"bracket", to_json(br)}});
            }
          }
        }
      }
    }
  }
  if (c3.status == ClauseStatus::Pass) {
    c3.detail = std::to_string(c3_modules) + " modules with trivial sampled principal isotropy";
  }

  for (const std::size_t a : nonzero) {
    const Subspace target = a0 + es[a];
    for (std::size_t s = 0; s < config.sample_count; ++s) {
      const Vector x = sample_in(stream, es[a]);
      std::vector<Vector> hx;
      for (const auto& z : space.h().basis()) hx.push_back(g.bracket(z, x));
      const Subspace ys = m_orthocomplement(space, Subspace(g.dim(), hx), es[a]);
      if (ys.is_zero()) continue;
      const Vector y = sample_in(stream, ys);
      const Vector br = g.bracket(x, y);
      if (!target.contains(br)) {
        fail_clause(c4, "[X,Y] leaves A_0 + A_" + to_string(ev[a]),
             {{"alpha", to_json(ev[a])}, {"x", to_json(x)}, {"y", to_json(y)}, {"bracket", to_json(br)}});
      }
    }
  }
  report.clauses = {c1, c2, c3, c4};
  return report;
}

}  // namespace gorbit
