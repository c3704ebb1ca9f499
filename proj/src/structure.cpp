#include "gorbit/structure.hpp"

#include "gorbit/error.hpp"

namespace gorbit {

namespace {

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  Rational sum = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!is_zero(a(r, c)) && !is_zero(b(c, r))) sum += a(r, c) * b(c, r);
    }
  }
  return sum;
}

Vector flatten(const Matrix& m) { return m.data(); }

// Stacks blocks[i] * basis(within)^T so that kernels give coefficient
// vectors relative to `within`.
Subspace solve_in(const std::vector<Matrix>& blocks, const Subspace& within) {
  const std::size_t n = within.ambient();
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix stacked(rows, within.dim());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < within.dim(); ++k) {
      const Vector col = b * within.basis_vector(k);
      for (std::size_t r = 0; r < b.rows(); ++r) stacked(offset + r, k) = col[r];
    }
    offset += b.rows();
  }
  (void)n;
  const Matrix ns = nullspace(stacked);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < ns.rows(); ++k) out.push_back(within.embed(ns.row(k)));
  return Subspace(within.ambient(), out);
}

}  // namespace

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      b(i, j) = trace_of_product(g.ad_basis(i), g.ad_basis(j));
      b(j, i) = b(i, j);
    }
  }
  return b;
}

Matrix restrict_form(const Matrix& q, const Subspace& s) {
  const Matrix& w = s.basis_matrix();
  return w * q * w.transpose();
}

Subspace bracket_space(const LieAlgebra& g, const Subspace& a_sub, const Subspace& b_sub) {
  std::vector<Vector> rows;
  EchelonBasis acc(g.dim());
  for (std::size_t i = 0; i < a_sub.dim(); ++i) {
    const Matrix ad_a = g.ad(a_sub.basis_vector(i));
    for (std::size_t j = 0; j < b_sub.dim(); ++j) {
      Vector v = ad_a * b_sub.basis_vector(j);
      if (acc.insert(v)) rows.push_back(std::move(v));
    }
  }
  return Subspace(g.dim(), rows);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_space(g, s, s)); }

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_space(g, Subspace::full(g.dim()), s));
}

Matrix annihilator(const Subspace& s) { return nullspace(s.basis_matrix()); }

SeriesReport series_analysis(const LieAlgebra& g) { return series_analysis(g, Subspace::full(g.dim())); }

SeriesReport series_analysis(const LieAlgebra& g, const Subspace& s) {
  SeriesReport out;
  out.derived_series.push_back(s);
  while (true) {
    const Subspace& last = out.derived_series.back();
    Subspace next = bracket_space(g, last, last);
    if (next == last) break;
    out.derived_series.push_back(std::move(next));
  }
  out.is_solvable = out.derived_series.back().is_zero();

  out.lower_central_series.push_back(s);
  while (true) {
    const Subspace& last = out.lower_central_series.back();
    Subspace next = bracket_space(g, s, last);
    if (next == last) break;
    out.lower_central_series.push_back(std::move(next));
  }
  out.is_nilpotent = out.lower_central_series.back().is_zero();
  if (out.is_nilpotent) {
    std::size_t nonzero = 0;
    for (const auto& t : out.lower_central_series) nonzero += t.is_zero() ? 0 : 1;
    out.nilpotency_class = nonzero;
  }
  return out;
}

Subspace radical(const LieAlgebra& g) {
  const Matrix b = killing_form(g);
  const Subspace full = Subspace::full(g.dim());
  const Subspace derived = bracket_space(g, full, full);
  Subspace r = orthogonal_complement(b, derived, full);
  if (!series_analysis(g, r).is_solvable || !is_ideal(g, r)) {
    throw Error(ErrorKind::InternalInconsistency, "computed radical is not a solvable ideal");
  }
  return r;
}

Subspace nilradical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace full = Subspace::full(n);
  const Subspace r = radical(g);
  const Subspace gr = bracket_space(g, full, r);

  // q: basis vectors of r completing [g, r].
  EchelonBasis acc(n);
  for (const auto& v : gr.basis()) acc.insert(v);
  std::vector<Vector> q;
  for (const auto& v : r.basis()) {
    if (acc.insert(v)) q.push_back(v);
  }

  // An element x of r lies in n(g) iff ad x is nilpotent. Elements of
  // ad([g, r]) are nilpotent, so only the q-part matters; inside the
  // triangularisable associative algebra generated by ad(q) and 1, an
  // element is nilpotent iff it is in the radical of the trace form.
  std::vector<Vector> nil_rows = gr.basis();
  if (!q.empty()) {
    std::vector<Matrix> gens;
    for (const auto& v : q) gens.push_back(g.ad(v));
    std::vector<Matrix> algebra;
    EchelonBasis span(n * n);
    const Matrix id = Matrix::identity(n);
    span.insert(flatten(id));
    algebra.push_back(id);
    for (std::size_t k = 0; k < algebra.size(); ++k) {
      for (const auto& a : gens) {
        Matrix prod = a * algebra[k];
        if (span.insert(flatten(prod))) algebra.push_back(std::move(prod));
      }
    }
    Matrix conditions(algebra.size(), q.size());
    for (std::size_t b = 0; b < algebra.size(); ++b) {
      for (std::size_t i = 0; i < q.size(); ++i) conditions(b, i) = trace_of_product(gens[i], algebra[b]);
    }
    const Matrix ns = nullspace(conditions);
    for (std::size_t k = 0; k < ns.rows(); ++k) {
      Vector v = zero_vector(n);
      for (std::size_t i = 0; i < q.size(); ++i) axpy(v, ns(k, i), q[i]);
      nil_rows.push_back(std::move(v));
    }
  }
  Subspace nil(n, nil_rows);

  const Subspace ker_b = kernel(killing_form(g));
  if (!nil.contains(gr) || !intersection(ker_b, r).contains(nil)) {
    throw Error(ErrorKind::InternalInconsistency, "nilradical violates [g,r] <= n <= ker B & r");
  }
  if (!is_ideal(g, nil) || !series_analysis(g, nil).is_nilpotent) {
    throw Error(ErrorKind::InternalInconsistency, "computed nilradical is not a nilpotent ideal");
  }
  return nil;
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s, const Subspace& within) {
  std::vector<Matrix> blocks;
  for (const auto& v : s.basis()) blocks.push_back(g.ad(v));
  return solve_in(blocks, within);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  return centralizer(g, s, Subspace::full(g.dim()));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

Subspace normalizer(const LieAlgebra& g, const Subspace& s) {
  if (!is_subalgebra(g, s)) throw Error(ErrorKind::NotASubalgebra, "normalizer requires a subalgebra");
  const Matrix ann = annihilator(s);
  std::vector<Matrix> blocks;
  for (const auto& v : s.basis()) blocks.push_back(ann * g.ad(v));
  return solve_in(blocks, Subspace::full(g.dim()));
}

CommutantReport commutant_queries(const LieAlgebra& g, const Subspace& s) {
  CommutantReport out;
  out.center = center(g);
  out.centralizer = centralizer(g, s);
  if (is_subalgebra(g, s)) out.normalizer = normalizer(g, s);
  out.derived_with = bracket_space(g, Subspace::full(g.dim()), s);
  return out;
}

Subspace largest_ideal_in(const LieAlgebra& g, const Subspace& k) {
  Subspace l = k;
  while (true) {
    const Matrix ann = annihilator(l);
    std::vector<Matrix> blocks;
    for (std::size_t j = 0; j < g.dim(); ++j) blocks.push_back(ann * g.ad_basis(j));
    Subspace next = solve_in(blocks, l);
    if (next == l) return l;
    l = std::move(next);
  }
}

Quotient quotient_algebra(const LieAlgebra& g, const Subspace& l) {
  if (!is_ideal(g, l)) throw Error(ErrorKind::NotAnIdeal, "quotient requires an ideal");
  const std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : l.pivots()) is_pivot[p] = true;
  Quotient out;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) out.representatives.push_back(c);
  }
  const std::size_t qd = out.representatives.size();
  if (qd == 0) throw Error(ErrorKind::InvalidArgument, "quotient by the whole algebra is zero");
  // Coordinates of v modulo l: remove the l-part read off the pivot
  // entries, then keep the non-pivot entries.
  auto reduce = [&](const Vector& v) {
    const Vector rest = sub(v, l.embed(l.coordinates(v)));
    Vector c(qd);
    for (std::size_t a = 0; a < qd; ++a) c[a] = rest[out.representatives[a]];
    return c;
  };
  out.projection = Matrix(qd, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector col = reduce(unit_vector(n, c));
    for (std::size_t a = 0; a < qd; ++a) out.projection(a, c) = col[a];
  }
  StructureTable table;
  std::vector<std::string> names;
  for (std::size_t a = 0; a < qd; ++a) {
    names.push_back(g.basis_names()[out.representatives[a]]);
    for (std::size_t b = a + 1; b < qd; ++b) {
      const Vector v = reduce(g.basis_bracket(out.representatives[a], out.representatives[b]));
      std::vector<BracketTerm> terms;
      for (std::size_t k = 0; k < qd; ++k) {
        if (!is_zero(v[k])) terms.push_back({k, v[k]});
      }
      if (!terms.empty()) table[{a, b}] = std::move(terms);
    }
  }
  out.algebra = LieAlgebra(g.name() + "/l", names, table, std::max(kDefaultDimensionCap, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = out.projection * g.basis_bracket(i, j);
      const Vector rhs = out.algebra.bracket(out.projection.col(i), out.projection.col(j));
      if (lhs != rhs) throw Error(ErrorKind::InternalInconsistency, "quotient projection is not a homomorphism");
    }
  }
  return out;
}

DerivationBasis derivations(const LieAlgebra& g, const std::optional<Matrix>& metric) {
  const std::size_t n = g.dim();
  DerivationBasis out;
  out.skew = metric.has_value();

  // Each unknown contributes a fixed n x n matrix to D; D is linear in them.
  std::vector<Matrix> unit_d;
  if (metric) {
    if (!is_positive_definite(*metric)) {
      throw Error(ErrorKind::InvalidArgument, "derivation metric is not positive definite");
    }
    // D = G^{-1} S with S antisymmetric is exactly the G-skew condition.
    const Matrix ginv = inverse(*metric);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        Matrix s(n, n);
        s(a, b) = 1;
        s(b, a) = -1;
        unit_d.push_back(ginv * s);
      }
    }
  } else {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Matrix d(n, n);
        d(a, b) = 1;
        unit_d.push_back(std::move(d));
      }
    }
  }

  // Residual D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] for each unit.
  const std::size_t unknowns = unit_d.size();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix block(n, unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) {
        const Matrix& d = unit_d[u];
        Vector r = d * g.basis_bracket(i, j);
        r = sub(r, g.bracket(d.col(i), unit_vector(n, j)));
        r = sub(r, g.bracket(unit_vector(n, i), d.col(j)));
        for (std::size_t k = 0; k < n; ++k) block(k, u) = r[k];
      }
      for (std::size_t k = 0; k < n; ++k) {
        Vector row = block.row(k);
        if (!gorbit::is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  const Matrix system = Matrix::from_rows(rows, unknowns);
  const Matrix ns = rows.empty() ? Matrix::identity(unknowns) : nullspace(system);
  for (std::size_t k = 0; k < ns.rows(); ++k) {
    Matrix d(n, n);
    for (std::size_t u = 0; u < unknowns; ++u) {
      if (!is_zero(ns(k, u))) d = d + ns(k, u) * unit_d[u];
    }
    out.basis.push_back(std::move(d));
  }

  EchelonBasis span(n * n);
  for (const auto& d : out.basis) span.insert(d.data());
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    for (std::size_t b = a + 1; b < out.basis.size(); ++b) {
      if (!span.contains(commutator(out.basis[a], out.basis[b]).data())) {
        throw Error(ErrorKind::InternalInconsistency, "derivation space not closed under commutator");
      }
    }
  }
  return out;
}

LeviCheck verify_levi(const LieAlgebra& g, const Subspace& s) {
  LeviCheck out;
  out.ok = true;
  if (!is_subalgebra(g, s)) {
    out.ok = false;
    out.diagnostics.emplace_back("s is not a subalgebra");
  }
  const Subspace r = radical(g);
  if (r.dim() + s.dim() != g.dim() || !intersection(r, s).is_zero()) {
    out.ok = false;
    out.diagnostics.emplace_back("g is not the direct sum of r(g) and s");
  }
  if (determinant(restrict_form(killing_form(g), s)) == 0) {
    out.ok = false;
    out.diagnostics.emplace_back("Killing form is degenerate on s");
  }
  return out;
}

}  // namespace gorbit

namespace gorbit {

Matrix restricted_action(const LieAlgebra& g, const Vector& z, const Subspace& v) {
  const Matrix ad = g.ad(z);
  Matrix out(v.dim(), v.dim());
  for (std::size_t c = 0; c < v.dim(); ++c) {
    const Vector image = ad * v.basis_vector(c);
    if (!v.contains(image)) throw Error(ErrorKind::ComplementNotInvariant, "subspace is not invariant");
    const Vector coords = v.coordinates(image);
    for (std::size_t r = 0; r < v.dim(); ++r) out(r, c) = coords[r];
  }
  return out;
}

Subspace invariant_complement(const LieAlgebra& g, const Subspace& h, const Subspace& w, const Subspace& v) {
  if (!v.contains(w)) throw Error(ErrorKind::InvalidArgument, "complement target is not a subspace of v");
  const std::size_t dw = w.dim(), dv = v.dim();
  if (dw == 0) return v;
  if (dw == dv) return Subspace::zero(v.ambient());
  const std::size_t unknowns = dw * dv;
  std::vector<Vector> rows;
  Vector rhs;
  // P w_i = e_i
  for (std::size_t i = 0; i < dw; ++i) {
    const Vector c = v.coordinates(w.basis_vector(i));
    for (std::size_t a = 0; a < dw; ++a) {
      Vector row = zero_vector(unknowns);
      for (std::size_t b = 0; b < dv; ++b) row[a * dv + b] = c[b];
      rows.push_back(std::move(row));
      rhs.emplace_back(a == i ? 1 : 0);
    }
  }
  // P ad(z)|v = ad(z)|w P
  for (const auto& z : h.basis()) {
    const Matrix zv = restricted_action(g, z, v);
    const Matrix zw = restricted_action(g, z, w);
    for (std::size_t a = 0; a < dw; ++a) {
      for (std::size_t c = 0; c < dv; ++c) {
        Vector row = zero_vector(unknowns);
        for (std::size_t b = 0; b < dv; ++b) row[a * dv + b] += zv(b, c);
        for (std::size_t d = 0; d < dw; ++d) row[d * dv + c] -= zw(a, d);
        if (!gorbit::is_zero(row)) {
          rows.push_back(std::move(row));
          rhs.emplace_back(0);
        }
      }
    }
  }
  const LinearSolution sol = solve(Matrix::from_rows(rows, unknowns), rhs);
  if (!sol.feasible()) throw Error(ErrorKind::ComplementNotInvariant, "no invariant complement exists");
  Matrix p(dw, dv);
  for (std::size_t a = 0; a < dw; ++a) {
    for (std::size_t b = 0; b < dv; ++b) p(a, b) = (*sol.solution)[a * dv + b];
  }
  const Matrix ns = nullspace(p);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < ns.rows(); ++k) out.push_back(v.embed(ns.row(k)));
  return Subspace(v.ambient(), out);
}

}  // namespace gorbit
