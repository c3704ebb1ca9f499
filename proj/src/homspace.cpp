#include "gorbit/homspace.hpp"

#include "gorbit/error.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

namespace {

constexpr const char* kStrategyNames[] = {"killing_orthogonal", "levi_split", "nilradical_adapted",
                                "rem1_variant",       "explicit",   "form_orthogonal"};

}  // namespace

const char* to_string(ComplementStrategy s) { return kStrategyNames[static_cast<int>(s)]; }

std::optional<ComplementStrategy> parse_strategy(const std::string& name) {
  for (int k = 0; k < 6; ++k) {
    if (name == kStrategyNames[k]) return static_cast<ComplementStrategy>(k);
  }
  return std::nullopt;
}

MetricReductiveSpace::MetricReductiveSpace(std::shared_ptr<const LieAlgebra> g, Subspace h, Subspace m, Matrix ip)
    : g_(std::move(g)), h_(std::move(h)), m_(std::move(m)), ip_(std::move(ip)) {
  const LieAlgebra& alg = *g_;
  const std::size_t n = alg.dim();
  if (h_.ambient() != n || m_.ambient() != n) {
    throw Error(ErrorKind::DimensionMismatch, "h and m must be subspaces of g");
  }
  if (!is_subalgebra(alg, h_)) throw Error(ErrorKind::NotASubalgebra, "isotropy h is not a subalgebra");
  killing_ = killing_form(alg);
  if (!is_negative_definite(restrict_form(killing_, h_))) {
    throw Error(ErrorKind::IsotropyNotCompactType, "Killing form is not negative definite on h");
  }
  if (h_.dim() + m_.dim() != n || !intersection(h_, m_).is_zero()) {
    throw Error(ErrorKind::DimensionMismatch, "m is not a linear complement to h");
  }
  if (!m_.contains(bracket_space(alg, h_, m_))) {
    throw Error(ErrorKind::ComplementNotInvariant, "[h, m] is not contained in m");
  }
  const std::size_t dm = m_.dim();
  if (ip_.rows() != dm || ip_.cols() != dm) {
    throw Error(ErrorKind::DimensionMismatch, "metric matrix size does not match dim m");
  }
  if (!ip_.is_symmetric()) throw Error(ErrorKind::InvalidArgument, "metric matrix is not symmetric");
  if (!is_positive_definite(ip_)) throw Error(ErrorKind::InvalidArgument, "metric is not positive definite");
  ip_inverse_ = inverse(ip_);

  split_ = DirectSum({h_, m_});
  mm_m_.resize(dm * dm);
  mm_h_.resize(dm * dm);
  const auto mb = m_.basis();
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dm; ++j) {
      const Vector v = alg.bracket(mb[i], mb[j]);
      mm_m_[i * dm + j] = m_part(v);
      mm_h_[i * dm + j] = h_part(v);
    }
  }
  for (std::size_t a = 0; a < h_.dim(); ++a) {
    const Matrix ad = alg.ad(h_.basis_vector(a));
    Matrix act(dm, dm);
    for (std::size_t c = 0; c < dm; ++c) {
      const Vector coords = m_.coordinates(ad * mb[c]);
      for (std::size_t r = 0; r < dm; ++r) act(r, c) = coords[r];
    }
    // (ad(Z)x, y) + (x, ad(Z)y) = 0 on basis pairs.
    const Matrix defect = act.transpose() * ip_ + ip_ * act;
    for (std::size_t x = 0; x < dm; ++x) {
      for (std::size_t y = 0; y < dm; ++y) {
        if (!gorbit::is_zero(defect(x, y))) {
          throw Error(ErrorKind::MetricNotInvariant,
                      "metric is not ad(h)-invariant at (Z, x, y) = (h" + std::to_string(a) + ", m" +
                          std::to_string(x) + ", m" + std::to_string(y) + "), defect " + to_string(defect(x, y)));
        }
      }
    }
    h_action_.push_back(std::move(act));
  }
}

Vector MetricReductiveSpace::bracket_m(const Vector& x_c, const Vector& y_c) const {
  const std::size_t dm = dim_m();
  Vector out = zero_vector(dm);
  for (std::size_t i = 0; i < dm; ++i) {
    if (gorbit::is_zero(x_c[i])) continue;
    for (std::size_t j = 0; j < dm; ++j) {
      if (gorbit::is_zero(y_c[j])) continue;
      axpy(out, x_c[i] * y_c[j], mm_m_[i * dm + j]);
    }
  }
  return out;
}

Matrix MetricReductiveSpace::extended_form() const {
  const std::size_t n = g().dim();
  Matrix ph(h_.dim(), n), pm(m_.dim(), n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector e = unit_vector(n, c);
    const Vector hc = h_part(e), mc = m_part(e);
    for (std::size_t r = 0; r < h_.dim(); ++r) ph(r, c) = hc[r];
    for (std::size_t r = 0; r < m_.dim(); ++r) pm(r, c) = mc[r];
  }
  const Matrix bh = Rational(-1) * restrict_form(killing_, h_);
  return ph.transpose() * bh * ph + pm.transpose() * ip_ * pm;
}

MetricReductiveSpace build_reductive(const LieAlgebra& g, const Subspace& h, const MetricSpec& metric,
                                     const ComplementSpec& complement) {
  return build_reductive(std::make_shared<const LieAlgebra>(g), h, metric, complement);
}

namespace {

struct LeviData {
  Subspace r;
  Subspace ker_psi;
  Subspace psi_image;
};

LeviData levi_data(const LieAlgebra& g, const Subspace& h, const std::optional<Subspace>& s) {
  if (!s) throw Error(ErrorKind::InvalidArgument, "strategy requires a Levi factor");
  const LeviCheck check = verify_levi(g, *s);
  if (!check.ok) {
    std::string msg = "Levi factor rejected:";
    for (const auto& d : check.diagnostics) msg += " " + d + ";";
    throw Error(ErrorKind::LeviNotInvariant, msg);
  }
  if (!s->contains(bracket_space(g, h, *s))) throw Error(ErrorKind::LeviNotInvariant, "[h, s] is not contained in s");
  LeviData out;
  out.r = radical(g);
  out.ker_psi = intersection(h, out.r);
  const DirectSum rs({out.r, *s});
  std::vector<Vector> images;
  for (const auto& v : h.basis()) images.push_back(rs.component(v, 1));
  out.psi_image = Subspace(g.dim(), images);
  return out;
}

}  // namespace

MetricReductiveSpace build_reductive(std::shared_ptr<const LieAlgebra> gp, const Subspace& h,
                                     const MetricSpec& metric, const ComplementSpec& complement) {
  const LieAlgebra& g = *gp;
  const std::size_t n = g.dim();
  if (h.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "isotropy vectors have wrong length");
  if (!is_subalgebra(g, h)) throw Error(ErrorKind::NotASubalgebra, "isotropy h is not a subalgebra");
  const Matrix b = killing_form(g);
  if (!is_negative_definite(restrict_form(b, h))) {
    throw Error(ErrorKind::IsotropyNotCompactType, "Killing form is not negative definite on h");
  }
  const Subspace full = Subspace::full(n);
  Subspace m;
  switch (complement.strategy) {
    case ComplementStrategy::KillingOrthogonal: {
      m = orthogonal_complement(b, h, full);
      if (!m.contains(nilradical(g))) {
        throw Error(ErrorKind::InternalInconsistency, "nilradical not inside the Killing-orthogonal complement");
      }
      break;
    }
    case ComplementStrategy::LeviSplit: {
      const LeviData d = levi_data(g, h, complement.levi);
      m = invariant_complement(g, h, d.ker_psi, d.r) + invariant_complement(g, h, d.psi_image, *complement.levi);
      break;
    }
    case ComplementStrategy::NilradicalAdapted: {
      const LeviData d = levi_data(g, h, complement.levi);
      const Subspace nil = nilradical(g);
      const Subspace u = invariant_complement(g, h, nil + d.ker_psi, d.r);
      if (!bracket_space(g, h, u).is_zero()) {
        throw Error(ErrorKind::InternalInconsistency, "[h, u] is not zero for the nilradical-adapted complement");
      }
      m = nil + u + invariant_complement(g, h, d.psi_image, *complement.levi);
      break;
    }
    case ComplementStrategy::Rem1Variant: {
      const LeviData d = levi_data(g, h, complement.levi);
      const Subspace m1p = orthogonal_complement(b, *complement.levi + h, full);
      if (!m1p.contains(nilradical(g)) || !d.r.contains(m1p)) {
        throw Error(ErrorKind::InternalInconsistency, "n(g) <= m1' <= r(g) fails");
      }
      const Subspace m1pp = invariant_complement(g, h, m1p + d.ker_psi, d.r);
      m = m1p + m1pp + invariant_complement(g, h, d.psi_image, *complement.levi);
      break;
    }
    case ComplementStrategy::Explicit: {
      if (!complement.m) throw Error(ErrorKind::InvalidArgument, "explicit strategy requires m");
      m = *complement.m;
      break;
    }
    case ComplementStrategy::FormOrthogonal: {
      if (!complement.ambient_form) throw Error(ErrorKind::InvalidArgument, "form_orthogonal requires a form");
      m = orthogonal_complement(*complement.ambient_form, h, full);
      break;
    }
  }
  if (m.ambient() != n) throw Error(ErrorKind::DimensionMismatch, "complement vectors have wrong length");
  if (h.dim() + m.dim() != n || !intersection(h, m).is_zero()) {
    throw Error(ErrorKind::DimensionMismatch, "m is not a linear complement to h");
  }
  Matrix ip;
  if (metric.kind == MetricSpec::Kind::Explicit) {
    ip = metric.matrix;
  } else {
    if (metric.factor <= 0) throw Error(ErrorKind::InvalidArgument, "Killing multiple factor must be positive");
    ip = Rational(-metric.factor) * restrict_form(b, m);
  }
  return MetricReductiveSpace(std::move(gp), h, std::move(m), std::move(ip));
}

Vector u_map(const MetricReductiveSpace& space, const Vector& x_c, const Vector& y_c) {
  const std::size_t dm = space.dim_m();
  Vector r = zero_vector(dm);
  for (std::size_t k = 0; k < dm; ++k) {
    const Vector ek = unit_vector(dm, k);
    r[k] = space.inner(space.bracket_m(ek, x_c), y_c) + space.inner(x_c, space.bracket_m(ek, y_c));
  }
  return scale(space.ip_inverse() * r, Rational(1, 2));
}

Vector nabla_at_origin(const MetricReductiveSpace& space, const Vector& x_c, const Vector& y_c) {
  return add(scale(space.bracket_m(x_c, y_c), Rational(-1, 2)), u_map(space, x_c, y_c));
}

IsotropySplit isotropy_levi_split(const MetricReductiveSpace& space, const Subspace& s) {
  const LieAlgebra& g = space.g();
  const Subspace& h = space.h();
  const LeviCheck check = verify_levi(g, s);
  if (!check.ok) throw Error(ErrorKind::LeviNotInvariant, "s is not a Levi factor");
  if (!s.contains(bracket_space(g, h, s))) throw Error(ErrorKind::LeviNotInvariant, "[h, s] is not contained in s");
  const Subspace r = radical(g);
  const DirectSum rs({r, s});
  IsotropySplit out;
  std::vector<Vector> phi, psi;
  for (const auto& v : h.basis()) {
    phi.push_back(rs.component(v, 0));
    psi.push_back(rs.component(v, 1));
  }
  out.phi_image = Subspace(g.dim(), phi);
  out.psi_image = Subspace(g.dim(), psi);
  out.ker_psi = intersection(h, r);
  out.h_cap_s = intersection(h, s);
  // -B is an invariant inner product on h, so its orthocomplement is an
  // invariant complement.
  out.h2 = orthogonal_complement(space.killing(), out.ker_psi + out.h_cap_s, h);

  auto require = [&](bool ok, const char* what) {
    if (!ok) out.failed_checks.emplace_back(what);
  };
  const Subspace sum = out.h2 + out.ker_psi + out.h_cap_s;
  require(sum == h && out.h2.dim() + out.ker_psi.dim() + out.h_cap_s.dim() == h.dim(),
          "h = h2 + (h & r) + (h & s) is not direct");
  std::vector<Vector> phi2, psi2;
  for (const auto& v : out.h2.basis()) {
    phi2.push_back(rs.component(v, 0));
    psi2.push_back(rs.component(v, 1));
  }
  const Subspace phi_h2(g.dim(), phi2), psi_h2(g.dim(), psi2);
  require(phi_h2 + out.ker_psi == out.phi_image && phi_h2.dim() + out.ker_psi.dim() == out.phi_image.dim(),
          "phi(h) = phi(h2) + (h & r) fails");
  require(psi_h2 + out.h_cap_s == out.psi_image && psi_h2.dim() + out.h_cap_s.dim() == out.psi_image.dim(),
          "psi(h) = psi(h2) + (h & s) fails");
  require(bracket_space(g, out.h2, h).is_zero(), "h2 is not central in h");
  require(phi_h2.dim() == out.h2.dim() && psi_h2.dim() == out.h2.dim(), "h2, phi(h2), psi(h2) differ in dimension");
  return out;
}

NormalizerStructures normalizer_structures(const MetricReductiveSpace& space) {
  const LieAlgebra& g = space.g();
  const Subspace& h = space.h();
  const Subspace& m = space.m();
  NormalizerStructures out;
  const Subspace cgh = centralizer(g, h);
  out.centralizer_m = intersection(cgh, m);
  out.h_m = bracket_space(g, h, m);
  out.k = cgh + bracket_space(g, h, h);
  out.normalizer = normalizer(g, h);
  out.normalizer_matches = out.normalizer == out.k;
  out.split_is_direct = out.centralizer_m.dim() + out.h_m.dim() == m.dim() &&
                        (out.centralizer_m + out.h_m) == m;
  out.split_ip_orthogonal = true;
  out.split_killing_orthogonal = true;
  for (const auto& x : out.centralizer_m.basis()) {
    for (const auto& y : out.h_m.basis()) {
      if (!is_zero(space.inner(space.m_part(x), space.m_part(y)))) out.split_ip_orthogonal = false;
      if (!is_zero(bilinear(space.killing(), x, y))) out.split_killing_orthogonal = false;
    }
  }
  const Subspace r = radical(g);
  const Subspace rg = bracket_space(g, r, Subspace::full(g.dim()));
  out.q = orthogonal_complement(space.extended_form(), rg, intersection(r, m));
  return out;
}

}  // namespace gorbit
