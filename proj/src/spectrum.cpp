#include <Eigen/Dense>
#include <algorithm>

#include "gorbit/error.hpp"
#include "gorbit/homspace.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

namespace {

Subspace to_m_coords(const MetricReductiveSpace& space, const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(space.m_part(v));
  return Subspace(space.dim_m(), rows);
}

Subspace from_m_coords(const MetricReductiveSpace& space, const Subspace& s) {
  std::vector<Vector> rows;
  for (const auto& v : s.basis()) rows.push_back(space.from_m(v));
  return Subspace(space.g().dim(), rows);
}

Matrix action_on(const Matrix& act, const Subspace& mod) {
  Matrix out(mod.dim(), mod.dim());
  for (std::size_t c = 0; c < mod.dim(); ++c) {
    const Vector coords = mod.coordinates(act * mod.basis_vector(c));
    for (std::size_t r = 0; r < mod.dim(); ++r) out(r, c) = coords[r];
  }
  return out;
}

struct Piece {
  Subspace coords;  // in m-coordinates
  bool certified = false;
  std::size_t commutant_dim = 0;
};

class Refiner {
 public:
  explicit Refiner(const MetricReductiveSpace& space) : space_(space) {}

  void refine(const Subspace& mod, std::vector<Piece>& out) const {
    const std::size_t d = mod.dim();
    if (d == 0) return;
    if (d == 1) {
      out.push_back({mod, true, 1});
      return;
    }
    bool trivial = true;
    for (std::size_t a = 0; a < space_.dim_h() && trivial; ++a) {
      for (const auto& v : mod.basis()) {
        if (!is_zero(space_.h_action(a) * v)) {
          trivial = false;
          break;
        }
      }
    }
    if (trivial) {
      // Every line is invariant: split along an ip-orthogonal basis.
      std::vector<Vector> ortho;
      for (const auto& v : mod.basis()) {
        Vector w = v;
        for (const auto& u : ortho) axpy(w, -space_.inner(v, u) / space_.inner(u, u), u);
        ortho.push_back(w);
        out.push_back({Subspace(space_.dim_m(), {w}), true, 1});
      }
      return;
    }
    for (const auto& v : mod.basis()) {
      const Subspace c = cyclic(v);
      if (c.dim() < d) {
        split(mod, c, out);
        return;
      }
    }
    const std::vector<Matrix> comm = symmetric_commutant(mod);
    if (comm.size() == 1) {
      out.push_back({mod, true, 1});
      return;
    }
    for (const auto& t : comm) {
      for (const auto& root : rational_roots(characteristic_polynomial(t))) {
        const Matrix shifted = t - root.value * Matrix::identity(d);
        const Matrix ns = nullspace(shifted);
        if (ns.rows() == 0 || ns.rows() == d) continue;
        std::vector<Vector> rows;
        for (std::size_t k = 0; k < ns.rows(); ++k) rows.push_back(mod.embed(ns.row(k)));
        split(mod, Subspace(space_.dim_m(), rows), out);
        return;
      }
    }
    out.push_back({mod, false, comm.size()});
  }

 private:
  void split(const Subspace& mod, const Subspace& part, std::vector<Piece>& out) const {
    refine(part, out);
    refine(orthocomplement(part, mod), out);
  }

  Subspace orthocomplement(const Subspace& p, const Subspace& within) const {
    return orthogonal_complement(space_.ip(), p, within);
  }

  Subspace cyclic(const Vector& v) const {
    EchelonBasis acc(space_.dim_m());
    std::vector<Vector> rows{v};
    acc.insert(v);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t a = 0; a < space_.dim_h(); ++a) {
        Vector w = space_.h_action(a) * rows[k];
        if (acc.insert(w)) rows.push_back(std::move(w));
      }
    }
    return Subspace(space_.dim_m(), rows);
  }

  // {T : T commutes with ad(h)|mod and ip T is symmetric}, basis in the
  // coordinates of mod.
  std::vector<Matrix> symmetric_commutant(const Subspace& mod) const {
    const std::size_t d = mod.dim();
    const Matrix gram = restrict_form(space_.ip(), mod);
    std::vector<Matrix> acts;
    for (std::size_t a = 0; a < space_.dim_h(); ++a) acts.push_back(action_on(space_.h_action(a), mod));
    std::vector<Vector> rows;
    auto idx = [d](std::size_t r, std::size_t c) { return r * d + c; };
    for (const auto& a : acts) {
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          // (T A - A T)(r, c)
          Vector row = zero_vector(d * d);
          for (std::size_t k = 0; k < d; ++k) {
            row[idx(r, k)] += a(k, c);
            row[idx(k, c)] -= a(r, k);
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
    }
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = r + 1; c < d; ++c) {
        // (G T)(r, c) - (G T)(c, r)
        Vector row = zero_vector(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[idx(k, c)] += gram(r, k);
          row[idx(k, r)] -= gram(c, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
    const Matrix ns = nullspace(Matrix::from_rows(rows, d * d));
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < ns.rows(); ++k) {
      Matrix t(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) t(r, c) = ns(k, idx(r, c));
      }
      out.push_back(std::move(t));
    }
    return out;
  }

  const MetricReductiveSpace& space_;
};

bool pivot_less(const Subspace& a, const Subspace& b) { return a.pivots() < b.pivots(); }

}  // namespace

KillingOperatorSpectrum killing_operator_decomposition(const MetricReductiveSpace& space) {
  KillingOperatorSpectrum out;
  const std::size_t dm = space.dim_m();
  const Matrix bm = restrict_form(space.killing(), space.m());
  out.a = space.ip_inverse() * bm;
  out.characteristic = characteristic_polynomial(out.a);
  std::size_t total = 0;
  for (const auto& root : rational_roots(out.characteristic)) {
    const Matrix ns = nullspace(out.a - root.value * Matrix::identity(dm));
    total += ns.rows();
    out.eigenvalues.push_back(root.value);
    out.eigenspaces.push_back(from_m_coords(space, Subspace(dm, ns.row_vectors())));
  }
  if (total != dm) {
    out.mode = KillingOperatorSpectrum::Mode::Numeric;
    out.eigenvalues.clear();
    out.eigenspaces.clear();
    out.warnings.emplace_back("NumericFallbackWarning: characteristic polynomial does not split over Q");
    Eigen::MatrixXd b(dm, dm), gm(dm, dm);
    for (std::size_t r = 0; r < dm; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = to_double(bm(r, c));
        gm(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = to_double(space.ip()(r, c));
      }
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, gm, Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
      double value = solver.eigenvalues()(k);
      if (std::abs(value) < 1e-9) value = 0.0;
      out.numeric_eigenvalues.push_back(value);
    }
    return out;
  }
  for (std::size_t k = 0; k < out.eigenvalues.size(); ++k) {
    if (out.eigenvalues[k] == 0) out.zero_eigenspace_is_ideal = is_ideal(space.g(), out.eigenspaces[k]);
  }
  return out;
}

Subspace m_orthocomplement(const MetricReductiveSpace& space, const Subspace& p, const Subspace& within) {
  return from_m_coords(space, orthogonal_complement(space.ip(), to_m_coords(space, p), to_m_coords(space, within)));
}

std::vector<Submodule> refine_module(const MetricReductiveSpace& space, const Subspace& module) {
  std::vector<Piece> pieces;
  Refiner(space).refine(to_m_coords(space, module), pieces);
  std::vector<Submodule> out;
  for (auto& p : pieces) {
    out.push_back({from_m_coords(space, p.coords), std::nullopt, p.certified, p.commutant_dim});
  }
  std::sort(out.begin(), out.end(),
            [](const Submodule& a, const Submodule& b) { return pivot_less(a.space, b.space); });
  return out;
}

std::vector<Submodule> submodule_decomposition(const MetricReductiveSpace& space) {
  const KillingOperatorSpectrum spectrum = killing_operator_decomposition(space);
  if (spectrum.mode == KillingOperatorSpectrum::Mode::Numeric) return refine_module(space, space.m());
  std::vector<Submodule> out;
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    for (auto& mod : refine_module(space, spectrum.eigenspaces[k])) {
      mod.eigenvalue = spectrum.eigenvalues[k];
      out.push_back(std::move(mod));
    }
  }
  return out;
}

}  // namespace gorbit
