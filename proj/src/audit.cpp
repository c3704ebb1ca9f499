#include "gorbit/audit.hpp"

#include <memory>

#include "gorbit/error.hpp"
#include "gorbit/polynomial.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

namespace {

AuditReport header(std::string name, std::string target, const GOVerdict& verdict) {
  AuditReport report;
  report.audit_name = std::move(name);
  report.target = std::move(target);
  report.precondition = to_string(verdict.kind);
  report.precondition_met = verdict.is_go();
  return report;
}

bool skip_if_needed(AuditReport& report, std::vector<AuditClause> clauses, const AuditOptions& options,
                    const std::string& reason) {
  if (report.precondition_met || !options.enforce_precondition) return false;
  for (auto& c : clauses) {
    c.status = ClauseStatus::Skipped;
    c.detail = "precondition not met: " + reason;
    report.clauses.push_back(std::move(c));
  }
  return true;
}

Vector sample_in(SampleStream& stream, const Subspace& s) { return s.embed(stream.next_vector(s.dim())); }

/// Null vectors of q restricted to s, as a subspace of the ambient space.
Subspace form_kernel(const Matrix& q, const Subspace& s) {
  const Subspace coords = kernel(restrict_form(q, s));
  std::vector<Vector> out;
  for (const auto& c : coords.basis()) out.push_back(s.embed(c));
  return Subspace(s.ambient(), out);
}

bool form_vanishes(const Matrix& q, const Subspace& a, const Subspace& b) {
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      if (!is_zero(bilinear(q, x, y))) return false;
    }
  }
  return true;
}

/// Killing form of the subalgebra s itself, in s's echelon coordinates.
Matrix subalgebra_killing(const LieAlgebra& g, const Subspace& s) {
  std::vector<Matrix> ads;
  for (const auto& x : s.basis()) ads.push_back(restricted_action(g, x, s));
  Matrix k(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i; j < s.dim(); ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  }
  return k;
}

/// Gram matrix of a form given in s-coordinates on a subspace t of s.
Matrix form_on(const Matrix& q_s, const Subspace& s, const Subspace& t) {
  Matrix w(t.dim(), s.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) w.set_row(i, s.coordinates(t.basis_vector(i)));
  return w * q_s * w.transpose();
}

void audit_class(AuditClause& c, const LieAlgebra& g, const Subspace& s, const char* what) {
  const SeriesReport rep = series_analysis(g, s);
  if (!rep.is_nilpotent) {
    fail_clause(c, std::string(what) + " is not nilpotent", {{"subspace", to_json(s)}});
    return;
  }
  const std::size_t cls = *rep.nilpotency_class;
  c.detail = std::string(what) + " has nilpotency class " + std::to_string(cls);
  if (cls > 2) {
    fail_clause(c, c.detail,
                {{"class", cls}, {"subspace", to_json(s)}, {"third_term", to_json(rep.lower_central_series.at(2))}});
  }
}

std::string dims(const Subspace& a, const Subspace& b) {
  return std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
}

}  // namespace

AuditReport strucrad1_audit(const MetricReductiveSpace& space, const GOVerdict& verdict,
                            const AuditOptions& options) {
  const LieAlgebra& g = space.g();
  AuditReport report = header("strucrad1", g.name(), verdict);
  AuditClause c1 = make_clause("radical_complement_semidefinite",
                               "B <= 0 on a complement of [g,r] in r, null exactly on central vectors");
  AuditClause c2 = make_clause("nilradical_complement_definite", "B < 0 on a complement of n in r");
  AuditClause c3 = make_clause("nilradical_is_killing_kernel", "n = ker B = [g,r] + l with l central");
  if (skip_if_needed(report, {c1, c2, c3}, options, "space is not GO")) return report;

  const std::size_t n = g.dim();
  const Matrix& b = space.killing();
  const Matrix e = space.extended_form();
  const Subspace r = radical(g);
  const Subspace nil = nilradical(g);
  const Subspace gr = bracket_space(g, Subspace::full(n), r);
  const Subspace z = center(g);

  const Subspace p = orthogonal_complement(e, gr, r);
  const Matrix bp = restrict_form(b, p);
  if (!is_negative_semidefinite(bp)) {
    fail_clause(c1, "B takes positive values on the complement",
                {{"complement", to_json(p)}, {"gram", to_json(bp)}});
  } else {
    const Subspace null = form_kernel(b, p);
    const Subspace central = intersection(p, z);
    if (null != central) {
      fail_clause(c1, "null vectors of B differ from central vectors: " + dims(null, central),
                  {{"null", to_json(null)}, {"central", to_json(central)}});
    } else {
      c1.detail = "complement dim " + std::to_string(p.dim()) + ", central part dim " + std::to_string(null.dim());
    }
  }

  const Subspace q = orthogonal_complement(e, nil, r);
  const Matrix bq = restrict_form(b, q);
  if (!is_negative_definite(bq)) {
    fail_clause(c2, "B is not negative definite on the complement", {{"complement", to_json(q)}, {"gram", to_json(bq)}});
  } else {
    c2.detail = "complement dim " + std::to_string(q.dim());
  }

  const Subspace kb = kernel(b);
  const Subspace l = orthogonal_complement(e, gr, nil);
  if (kb != nil) {
    fail_clause(c3, "ker B differs from the nilradical: " + dims(kb, nil),
                {{"killing_kernel", to_json(kb)}, {"nilradical", to_json(nil)}});
  } else if (!nil.contains(gr) || (gr + l) != nil) {
    fail_clause(c3, "[g,r] + l does not give the nilradical", {{"g_r", to_json(gr)}, {"l", to_json(l)}});
  } else if (!z.contains(l)) {
    fail_clause(c3, "l is not central", {{"l", to_json(l)}, {"center", to_json(z)}});
  } else {
    c3.detail = "dim n = " + std::to_string(nil.dim()) + ", dim [g,r] = " + std::to_string(gr.dim()) +
                ", dim l = " + std::to_string(l.dim());
  }
  report.clauses = {c1, c2, c3};
  return report;
}

AuditReport strucnilr_audit(const MetricReductiveSpace& space, const GOVerdict& verdict,
                            const AuditOptions& options) {
  const LieAlgebra& g = space.g();
  AuditReport report = header("strucnilr", g.name(), verdict);
  AuditClause c1 = make_clause("nilradical_two_step", "n(g) is abelian or two-step nilpotent");
  AuditClause c2 = make_clause("derived_radical_two_step", "[g,r] is abelian or two-step nilpotent");
  if (skip_if_needed(report, {c1, c2}, options, "space is not GO")) return report;
  audit_class(c1, g, nilradical(g), "nilradical");
  audit_class(c2, g, bracket_space(g, Subspace::full(g.dim()), radical(g)), "[g,r]");
  report.clauses = {c1, c2};
  return report;
}

AuditReport strucnilr_audit(const LieAlgebra& n, const GOVerdict& verdict, const AuditOptions& options) {
  AuditReport report = header("strucnilr", n.name(), verdict);
  AuditClause c1 = make_clause("nilradical_two_step", "n(g) is abelian or two-step nilpotent");
  AuditClause c2 = make_clause("derived_radical_two_step", "[g,r] is abelian or two-step nilpotent");
  if (skip_if_needed(report, {c1, c2}, options, "metric algebra is not GO")) return report;
  audit_class(c1, n, nilradical(n), "nilradical");
  audit_class(c2, n, bracket_space(n, Subspace::full(n.dim()), radical(n)), "[g,r]");
  report.clauses = {c1, c2};
  return report;
}

AuditReport skew_centralizer_audit(const MetricReductiveSpace& space, const GOVerdict& verdict,
                                   const SampleConfig& config, const AuditOptions& options) {
  const LieAlgebra& g = space.g();
  AuditReport report = header("skew_centralizer", g.name(), verdict);
  AuditClause c1 = make_clause("centralizer_acts_skew", "ad(Y)|m is skew for Y in C_g(h)");
  AuditClause c2 = make_clause("centralizer_geodesic", "([X,Z]_m, X) = 0 for X in C_g(h) & m, Z in g");
  AuditClause c3 = make_clause("compactly_embedded_k", "B <= 0 on C_g(h) + [h,h] with kernel in the centre");
  AuditClause c4 = make_clause("centralizer_meets_nilradical_in_center", "C_g(h) & n(g) = z(g)");
  if (skip_if_needed(report, {c1, c2, c3, c4}, options, "space is not GO")) return report;

  const std::size_t n = g.dim();
  const std::size_t dm = space.dim_m();
  const Subspace c = centralizer(g, space.h());
  const Subspace z = center(g);

  for (const auto& y : c.basis()) {
    Matrix a(dm, dm);
    for (std::size_t i = 0; i < dm; ++i) {
      const Vector col = space.m_part(g.bracket(y, space.m().basis_vector(i)));
      for (std::size_t r = 0; r < dm; ++r) a(r, i) = col[r];
    }
    const Matrix ga = space.ip() * a;
    const Matrix sym = ga + ga.transpose();
    if (!sym.is_zero()) {
      fail_clause(c1, "ad(Y)|m is not skew", {{"y", to_json(y)}, {"ip_times_ad", to_json(ga)}});
      break;
    }
  }
  c1.detail = c1.status == ClauseStatus::Pass ? "dim C_g(h) = " + std::to_string(c.dim()) : c1.detail;

  const Subspace cm = intersection(c, space.m());
  std::vector<Vector> xs = cm.basis();
  if (!cm.is_zero()) {
    SampleStream stream(config.seed, config.coordinate_bound);
    for (std::size_t s = 0; s < config.sample_count; ++s) xs.push_back(sample_in(stream, cm));
  }
  for (const auto& x : xs) {
    const Vector xc = space.m().coordinates(x);
    for (std::size_t k = 0; k < n && c2.status == ClauseStatus::Pass; ++k) {
      const Vector br = g.bracket(x, unit_vector(n, k));
      if (!is_zero(space.inner(space.m_part(br), xc))) {
        fail_clause(c2, "([X,Z]_m, X) != 0", {{"x", to_json(x)}, {"z_index", k}});
      }
    }
  }
  if (c2.status == ClauseStatus::Pass) c2.detail = std::to_string(xs.size()) + " vectors of C_g(h) & m";

  const Subspace k = c + bracket_space(g, space.h(), space.h());
  const Matrix bk = restrict_form(space.killing(), k);
  if (!is_negative_semidefinite(bk)) {
    fail_clause(c3, "B takes positive values on k", {{"k", to_json(k)}, {"gram", to_json(bk)}});
  } else {
    const Subspace null = form_kernel(space.killing(), k);
    if (!z.contains(null)) {
      fail_clause(c3, "null vectors of B on k are not central", {{"null", to_json(null)}});
    } else {
      c3.detail = "dim k = " + std::to_string(k.dim()) + ", kernel dim " + std::to_string(null.dim());
    }
  }

  const Subspace cn = intersection(c, nilradical(g));
  if (cn != z) {
    fail_clause(c4, "C_g(h) & n(g) differs from the centre: " + dims(cn, z),
                {{"intersection", to_json(cn)}, {"center", to_json(z)}});
  } else {
    c4.detail = "dim " + std::to_string(z.dim());
  }
  report.clauses = {c1, c2, c3, c4};
  return report;
}

QuotientConstruction quotient_go_construction(const MetricReductiveSpace& space, const GOVerdict& verdict,
                                              const SampleConfig& config, const AuditOptions& options) {
  const LieAlgebra& g = space.g();
  QuotientConstruction out;
  out.report = header("quotient_go", g.name(), verdict);
  AuditReport& report = out.report;
  AuditClause c0 = make_clause("submersion_split", "m = (C_g(h) & m) + [h,m], ip-orthogonal");
  AuditClause c1 = make_clause("quotient_is_go", "g/l with isotropy k~ and m~ = [h,m] is GO");
  AuditClause c2 = make_clause("nilradical_is_derived_radical", "n~ = [g~, r~]");
  AuditClause c3 = make_clause("radical_split", "r~ = n~ + (r~ & k~), direct");
  AuditClause c4 = make_clause("nilradical_levi_isotropy_span", "r~ in n~ + k~, so n~ + s~ + k~ = g~");
  AuditClause c5 = make_clause("no_trivial_submodule", "every invariant submodule of m~ has dim >= 2");
  if (skip_if_needed(report, {c0, c1, c2, c3, c4, c5}, options, "space is not GO")) return out;

  const Subspace c = centralizer(g, space.h());
  out.k = c + bracket_space(g, space.h(), space.h());
  out.l = largest_ideal_in(g, out.k);
  const Subspace hm = bracket_space(g, space.h(), space.m());
  const Subspace cm = intersection(c, space.m());

  if (cm.dim() + hm.dim() != space.dim_m() || !intersection(cm, hm).is_zero()) {
    fail_clause(c0, "not a direct sum: " + dims(cm, hm), {{"c_m", to_json(cm)}, {"h_m", to_json(hm)}});
  } else if (m_orthocomplement(space, hm, space.m()) != cm) {
    fail_clause(c0, "kernel of the projection onto [h,m] is not C_g(h) & m", {{"c_m", to_json(cm)}});
  } else {
    c0.detail = "dims " + std::to_string(cm.dim()) + " + " + std::to_string(hm.dim());
  }

  if (hm.is_zero() || out.l.is_full()) {
    out.degenerate = true;
    for (auto* cl : {&c1, &c2, &c3, &c4, &c5}) {
      cl->status = ClauseStatus::Skipped;
      cl->detail = "degenerate: quotient is a point";
    }
    report.clauses = {c0, c1, c2, c3, c4, c5};
    return out;
  }

  out.quotient = quotient_algebra(g, out.l);
  const Quotient& qt = *out.quotient;
  auto gt = std::make_shared<const LieAlgebra>(qt.algebra);
  const Subspace kt = image(qt.projection, out.k);
  const Subspace mt = image(qt.projection, hm);

  Matrix t(hm.dim(), hm.dim()), gram(hm.dim(), hm.dim());
  for (std::size_t i = 0; i < hm.dim(); ++i) {
    t.set_row(i, mt.coordinates(qt.projection * hm.basis_vector(i)));
    for (std::size_t j = 0; j < hm.dim(); ++j) {
      gram(i, j) = space.inner(space.m().coordinates(hm.basis_vector(i)), space.m().coordinates(hm.basis_vector(j)));
    }
  }
  const Matrix ti = inverse(t);
  out.space.emplace(gt, kt, mt, ti * gram * ti.transpose());
  const MetricReductiveSpace& st = *out.space;
  out.verdict = go_check(st, config);
  if (!out.verdict->is_go()) {
    fail_clause(c1, "quotient is not GO", out.verdict->to_json());
  } else {
    c1.detail = std::string(to_string(out.verdict->kind)) + ", dim g~ = " + std::to_string(gt->dim()) +
                ", dim m~ = " + std::to_string(mt.dim());
  }

  const std::size_t nt = gt->dim();
  const Subspace rt = radical(*gt);
  const Subspace ntil = nilradical(*gt);
  const Subspace grt = bracket_space(*gt, Subspace::full(nt), rt);
  if (ntil != grt) {
    fail_clause(c2, "n~ differs from [g~, r~]: " + dims(ntil, grt),
                {{"nilradical", to_json(ntil)}, {"g_r", to_json(grt)}});
  } else {
    c2.detail = "dim " + std::to_string(ntil.dim());
  }
  const Subspace rk = intersection(rt, kt);
  if (!intersection(ntil, rk).is_zero() || ntil + rk != rt) {
    fail_clause(c3, "r~ is not n~ + (r~ & k~)", {{"radical", to_json(rt)}, {"r_k", to_json(rk)}});
  } else {
    c3.detail = "dims " + std::to_string(ntil.dim()) + " + " + std::to_string(rk.dim());
  }
  if (!(ntil + kt).contains(rt)) {
    fail_clause(c4, "r~ is not inside n~ + k~", {{"radical", to_json(rt)}});
  }
  const Subspace fixed = centralizer(*gt, kt, mt);
  if (!fixed.is_zero()) {
    fail_clause(c5, "m~ has vectors fixed by k~", {{"fixed", to_json(fixed)}});
  } else {
    Json module_dims = Json::array();
    for (const auto& mod : submodule_decomposition(st)) module_dims.push_back(mod.space.dim());
    c5.detail = "module dims " + module_dims.dump();
  }
  report.clauses = {c0, c1, c2, c3, c4, c5};
  return out;
}

AuditReport normalized_orbit_audit(const MetricReductiveSpace& space, const Subspace& k_sub, const GOVerdict& verdict,
                                   const AuditOptions& options) {
  const LieAlgebra& g = space.g();
  if (!is_subalgebra(g, k_sub)) throw Error(ErrorKind::NotASubalgebra, "orbit algebra is not a subalgebra");
  if (!k_sub.contains(bracket_space(g, space.h(), k_sub))) {
    throw Error(ErrorKind::NotNormalized, "[h, k] is not contained in k");
  }
  AuditReport report = header("normalized_orbit", g.name(), verdict);
  AuditClause c1 = make_clause("adapted_complement", "m' = p + q is an invariant complement to h");
  AuditClause c2 = make_clause("bracket_closed", "[p,p] in p + h");
  AuditClause c3 = make_clause("u_closed", "U(p,p) in p");
  AuditClause c4 = make_clause("totally_geodesic", "the orbit of k through o is totally geodesic");
  if (skip_if_needed(report, {c1, c2, c3, c4}, options, "space is not GO")) return report;

  const std::size_t n = g.dim();
  const Subspace kh = intersection(k_sub, space.h());
  const Subspace p = invariant_complement(g, space.h(), kh, k_sub);
  const Subspace q = invariant_complement(g, space.h(), space.h() + k_sub, Subspace::full(n));
  const Subspace mp = p + q;
  Matrix ipp(mp.dim(), mp.dim());
  std::vector<Vector> parts;
  for (const auto& v : mp.basis()) parts.push_back(space.m_part(v));
  for (std::size_t i = 0; i < mp.dim(); ++i) {
    for (std::size_t j = 0; j < mp.dim(); ++j) ipp(i, j) = space.inner(parts[i], parts[j]);
  }
  std::optional<MetricReductiveSpace> adapted;
  try {
    adapted.emplace(space.algebra_ptr(), space.h(), mp, ipp);
  } catch (const Error& err) {
    fail_clause(c1, err.what(), {{"p", to_json(p)}, {"q", to_json(q)}});
  }
  if (!adapted) {
    for (auto* cl : {&c2, &c3, &c4}) {
      cl->status = ClauseStatus::Skipped;
      cl->detail = "no adapted complement";
    }
    report.clauses = {c1, c2, c3, c4};
    return report;
  }
  c1.detail = "dim p = " + std::to_string(p.dim()) + ", dim q = " + std::to_string(q.dim());
  const TotallyGeodesicReport tg = totally_geodesic_check(*adapted, p);
  if (!tg.bracket_closed) fail_clause(c2, "[p,p] leaves p + h", {{"p", to_json(p)}});
  if (!tg.u_closed) fail_clause(c3, "U(p,p) leaves p", {{"p", to_json(p)}});
  if (!tg.is_tg) {
    fail_clause(c4, "orbit is not totally geodesic", {{"p", to_json(p)}});
  } else {
    c4.detail = "orbit dim " + std::to_string(p.dim());
  }
  report.clauses = {c1, c2, c3, c4};
  return report;
}

AuditReport irred1_audit(const MetricReductiveSpace& space, const Subspace& p) {
  const LieAlgebra& g = space.g();
  const Subspace& h = space.h();
  const Matrix& b = space.killing();
  AuditReport report;
  report.audit_name = "irred1";
  report.target = g.name();
  report.precondition = "p invariant in m with [p,p] in p + h";
  AuditClause c1 = make_clause("centralizer_ideal", "C_h(p) is an ideal of h");
  AuditClause c2 = make_clause("bracket_projection_ideal", "[p,p]_h is an ideal of h");
  AuditClause c3 = make_clause("sufficient_conditions", "which sufficient conditions for orthogonality hold");
  AuditClause c4 = make_clause("killing_orthogonality", "B(C_h(p), [p,p]_h) = 0");
  AuditClause c5 = make_clause("isotropy_splitting", "h = [p,p]_h + C_h(p) when B(h,m) = 0 and B|p nondegenerate");

  const Subspace pp = bracket_space(g, p, p);
  const bool invariant = space.m().contains(p) && p.contains(bracket_space(g, h, p));
  const bool closed = (p + h).contains(pp);
  report.precondition_met = invariant && closed;
  if (!invariant) {
    for (auto* cl : {&c1, &c2, &c3, &c4, &c5}) {
      cl->status = ClauseStatus::Skipped;
      cl->detail = "precondition not met: p is not an invariant subspace of m";
      report.clauses.push_back(*cl);
    }
    return report;
  }

  const Subspace chp = centralizer(g, p, h);
  if (!chp.contains(bracket_space(g, h, chp))) fail_clause(c1, "[h, C_h(p)] leaves C_h(p)", {{"c", to_json(chp)}});
  else c1.detail = "dim " + std::to_string(chp.dim());

  std::vector<Vector> hparts;
  for (const auto& v : pp.basis()) hparts.push_back(space.from_h(space.h_part(v)));
  const Subspace pph(g.dim(), hparts);
  if (!closed) {
    for (auto* cl : {&c2, &c4, &c5}) {
      cl->status = ClauseStatus::Skipped;
      cl->detail = "precondition not met: [p,p] is not in p + h";
    }
  } else if (!pph.contains(bracket_space(g, h, pph))) {
    fail_clause(c2, "[h, [p,p]_h] leaves [p,p]_h", {{"pp", to_json(pph)}});
  } else {
    c2.detail = "dim " + std::to_string(pph.dim());
  }

  const bool cond1 = form_vanishes(b, p, h);
  const bool cond2 = chp.is_zero() || determinant(subalgebra_killing(g, chp)) != 0;
  const auto modules = refine_module(space, p);
  const bool cond3 = modules.size() == 1 && modules.front().irreducible_certified;
  const bool cond4 = centralizer(g, h, p).is_zero();
  c3.witness = {{"killing_orthogonal_to_h", cond1},
                {"centralizer_semisimple", cond2},
                {"irreducible", cond3},
                {"no_trivial_line", cond4}};
  c3.detail = c3.witness.dump();

  const bool any_condition = cond1 || cond2 || cond3 || cond4;
  if (closed && any_condition && !form_vanishes(b, chp, pph)) {
    fail_clause(c4, "B(C_h(p), [p,p]_h) != 0", {{"c", to_json(chp)}, {"pp", to_json(pph)}});
  } else if (closed && !any_condition) {
    c4.status = ClauseStatus::Skipped;
    c4.detail = "no sufficient condition holds";
  }

  const bool bhm = form_vanishes(b, h, space.m());
  const bool nondegenerate = p.is_zero() || determinant(restrict_form(b, p)) != 0;
  const bool splits = pph + chp == h && intersection(pph, chp).is_zero();
  if (closed && bhm && nondegenerate && !splits) {
    fail_clause(c5, "h is not [p,p]_h + C_h(p)", {{"c", to_json(chp)}, {"pp", to_json(pph)}});
  } else if (closed && !(bhm && nondegenerate)) {
    c5.status = ClauseStatus::Skipped;
    c5.detail = bhm ? "B is degenerate on p" : "B(h,m) != 0";
  }
  report.clauses = {c1, c2, c3, c4, c5};
  return report;
}

AuditReport goodlevi_audit(const LieAlgebra& g, const Subspace& k, const Subspace& s) {
  AuditReport report;
  report.audit_name = "goodlevi";
  report.target = g.name();
  report.precondition = "s is a Levi factor";
  AuditClause c1 = make_clause("k_normalizes_s", "[k, s] in s");
  AuditClause c2 = make_clause("radical_part_commutes", "[k & r, s] = 0");
  AuditClause c3 = make_clause("k_splits", "k = (k & r) + (k & s)");
  AuditClause c4 = make_clause("derived_k_in_s", "[k, k] in s");
  AuditClause c5 = make_clause("k_compactly_embedded", "B <= 0 on k and ad(X), X in k, has imaginary spectrum");
  AuditClause c6 = make_clause("maximal_compact_in_s", "k & s is maximal compact in s");

  const LeviCheck levi = verify_levi(g, s);
  report.precondition_met = levi.ok;
  if (!levi.ok) {
    for (auto* cl : {&c1, &c2, &c3, &c4, &c5, &c6}) {
      cl->status = ClauseStatus::Skipped;
      cl->detail = "precondition not met";
      report.clauses.push_back(*cl);
    }
    return report;
  }

  const Subspace r = radical(g);
  const Subspace kr = intersection(k, r);
  const Subspace ks = intersection(k, s);

  const Subspace ksb = bracket_space(g, k, s);
  if (!s.contains(ksb)) fail_clause(c1, "[k, s] leaves s", {{"bracket", to_json(ksb)}});
  const Subspace krs = bracket_space(g, kr, s);
  if (!krs.is_zero()) fail_clause(c2, "[k & r, s] != 0", {{"bracket", to_json(krs)}});
  if (kr + ks != k) {
    fail_clause(c3, "k is larger than (k & r) + (k & s)", {{"k_r", to_json(kr)}, {"k_s", to_json(ks)}});
  } else {
    c3.detail = "dims " + std::to_string(kr.dim()) + " + " + std::to_string(ks.dim());
  }
  const Subspace kk = bracket_space(g, k, k);
  if (!s.contains(kk)) fail_clause(c4, "[k, k] leaves s", {{"bracket", to_json(kk)}});

  c5.status = ClauseStatus::PassNecessary;
  const Matrix bk = restrict_form(killing_form(g), k);
  if (!is_negative_semidefinite(bk)) {
    fail_clause(c5, "B takes positive values on k", {{"gram", to_json(bk)}});
  }
  for (const auto& x : k.basis()) {
    if (c5.status == ClauseStatus::Fail) break;
    const Polynomial chi = characteristic_polynomial(g.ad(x));
    const int deg = chi.degree();
    for (int j = 0; j <= deg; ++j) {
      const Rational cj = chi.coefficient(static_cast<std::size_t>(j));
      if (((deg - j) % 2 != 0 && !is_zero(cj)) || cj < 0) {
        Json coeffs = Json::array();
        for (const auto& co : chi.coefficients()) coeffs.push_back(to_json(co));
        fail_clause(c5, "characteristic polynomial of ad(X) has a root off the imaginary axis",
                    {{"x", to_json(x)}, {"characteristic", coeffs}});
        break;
      }
    }
  }
  if (c5.status != ClauseStatus::Fail) c5.detail = "necessary conditions only";

  c6.status = ClauseStatus::PassNecessary;
  const Matrix bs = subalgebra_killing(g, s);
  const Matrix bks = form_on(bs, s, ks);
  const std::size_t compact_dim = inertia(bs).negative;
  if (!is_negative_definite(bks)) {
    fail_clause(c6, "Killing form of s is not negative definite on k & s", {{"gram", to_json(bks)}});
  } else if (ks.dim() != compact_dim) {
    fail_clause(c6, "dim (k & s) = " + std::to_string(ks.dim()) + " but maximal compact dim is " +
                        std::to_string(compact_dim),
                {{"k_s", to_json(ks)}});
  } else {
    c6.detail = "necessary conditions only; dim " + std::to_string(ks.dim());
  }
  report.clauses = {c1, c2, c3, c4, c5, c6};
  return report;
}

}  // namespace gorbit
