#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra: boundary matrices are rebuilt from the simplex
// lists and reduced with a plain dense Smith form over mpz_class.

#include "charrig/complex.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpz_class>>;

/// d_j: C_j -> C_{j-1} with the alternating-sign face convention.
inline Dense boundary(const charrig::Complex& x, int j) {
  if (j <= 0 || j > x.dimension()) return {};
  const auto& rows = x.simplices(j - 1);
  const auto& cols = x.simplices(j);
  std::map<charrig::Simplex, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
  Dense d(rows.size(), std::vector<mpz_class>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
      charrig::Simplex face = cols[c];
      face.erase(face.begin() + static_cast<long>(drop));
      d[index.at(face)][c] += drop % 2 == 0 ? 1 : -1;
    }
  return d;
}

/// Invariant factors (nonzero diagonal of the Smith form) by repeated
/// pivoting on the smallest entry.
inline std::vector<mpz_class> invariant_factors(Dense a) {
  std::vector<mpz_class> out;
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) pi = i, pj = j;
      if (pi == m) {
        std::sort(out.begin(), out.end());
        return out;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) continue;
      // Divisibility: fold any entry the pivot does not divide into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
          }
      if (divides) break;
    }
    out.push_back(abs(a[t][t]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Group {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // ascending, entries > 1
};

/// H_j(X; Z) for every j in [0, dim + 1].
inline std::vector<Group> homology(const charrig::Complex& x) {
  const int top = x.dimension();
  std::vector<std::vector<mpz_class>> factors(top + 3);
  for (int j = 1; j <= top; ++j) factors[j] = invariant_factors(boundary(x, j));
  std::vector<Group> h(top + 2);
  for (int j = 0; j <= top + 1; ++j) {
    const std::size_t cj = j <= top ? x.count(j) : 0;
    const std::size_t rank_out = factors[j].size(), rank_in = j + 1 <= top ? factors[j + 1].size() : 0;
    h[j].rank = cj - rank_out - rank_in;
    if (j + 1 <= top)
      for (const auto& f : factors[j + 1])
        if (f > 1) h[j].torsion.push_back(f);
  }
  return h;
}

/// H^j(X; Z) = Z^{b_j} + tors H_{j-1}, for j in [0, dim + 1].
inline std::vector<Group> integral_cohomology(const charrig::Complex& x) {
  auto h = homology(x);
  std::vector<Group> c(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    c[j].rank = h[j].rank;
    if (j > 0) c[j].torsion = h[j - 1].torsion;
  }
  return c;
}

}  // namespace oracle
