#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "gorbit/lie_algebra.hpp"

namespace gorbit::testing {

/// (i, j, k, c): [e_i, e_j] gets c e_k, 0-based.
using Entry = std::tuple<std::size_t, std::size_t, std::size_t, long>;

inline LieAlgebra algebra(std::string name, std::size_t dim, std::initializer_list<Entry> entries) {
  StructureTable t;
  for (const auto& [i, j, k, c] : entries) t[{i, j}].push_back({k, Rational(c)});
  return LieAlgebra::from_table(std::move(name), dim, t);
}

struct CorpusEntry {
  LieAlgebra g;
  std::size_t radical_dim;
  std::size_t nilradical_dim;
};

/// Real Lie algebras of dimension <= 4 with hand-known radical and
/// nilradical dimensions.
inline std::vector<CorpusEntry> small_corpus() {
  return {
      {algebra("abelian1", 1, {}), 1, 1},
      {algebra("abelian3", 3, {}), 3, 3},
      {algebra("aff1", 2, {{0, 1, 1, 1}}), 2, 1},
      {algebra("heisenberg3", 3, {{0, 1, 2, 1}}), 3, 3},
      {algebra("so3", 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}), 0, 0},
      {algebra("sl2", 3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}), 0, 0},
      {algebra("euclidean2", 3, {{0, 2, 1, -1}, {1, 2, 0, 1}}), 3, 2},
      {algebra("r3_jordan", 3, {{0, 2, 0, -1}, {1, 2, 0, -1}, {1, 2, 1, -1}}), 3, 2},
      {algebra("r3_diag", 3, {{0, 2, 0, -1}, {1, 2, 1, -2}}), 3, 2},
      {algebra("gl2", 4, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}), 1, 1},
      {algebra("su2_plus_r", 4, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 1, -1}}), 1, 1},
      {algebra("heisenberg3_plus_r", 4, {{0, 1, 2, 1}}), 4, 4},
      {algebra("filiform4", 4, {{0, 1, 2, 1}, {0, 2, 3, 1}}), 4, 4},
      {algebra("aff1_squared", 4, {{0, 1, 1, 1}, {2, 3, 3, 1}}), 4, 2},
      {algebra("oscillator", 4, {{0, 1, 2, 1}, {0, 3, 1, -1}, {1, 3, 0, 1}}), 4, 3},
      {algebra("dilation4", 4, {{0, 3, 0, -1}, {1, 3, 1, -1}, {2, 3, 2, -1}}), 4, 3},
      {algebra("heisenberg_dilation", 4, {{0, 1, 2, 1}, {0, 3, 0, -1}, {1, 3, 1, -1}, {2, 3, 2, -2}}), 4, 3},
  };
}

}  // namespace gorbit::testing
