#pragma once
// Independent oracles and random generators shared by the unit tests and the
// acceptance driver. Nothing here calls the library's echelon or determinant
// code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hilburch/hbm.hpp"
#include "hilburch/localstd.hpp"
#include "hilburch/parse.hpp"
#include "hilburch/staircase.hpp"

namespace oracle {

using hilburch::BiPoly;
using hilburch::Field;
using hilburch::Monomial;
using hilburch::Scalar;

// Monomials of degree < D, greatest first under the local degree order.
inline std::vector<Monomial> local_columns(int D) {
  std::vector<Monomial> cols;
  for (int d = 0; d < D; ++d)
    for (int a = d; a >= 0; --a) cols.push_back({a, d - a});
  return cols;
}

// Leading monomials (local degree order) of J + m^D in degree < D, by dense
// Gaussian elimination over the monomial multiples of the generators.
inline std::set<std::pair<int, int>> leading_monomials(const std::vector<BiPoly>& gens,
                                                       int D) {
  auto cols = local_columns(D);
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index[{cols[c].a, cols[c].b}] = c;
  std::vector<std::vector<Scalar>> rows;
  const Field field = gens.front().field();
  for (const auto& g : gens)
    for (int e = 0; e < D; ++e)
      for (int a = 0; a <= e; ++a) {
        std::vector<Scalar> row(cols.size(), Scalar::zero(field));
        bool any = false;
        for (const auto& [m, c] : g.terms()) {
          int da = m.a + a, db = m.b + e - a;
          if (da + db >= D) continue;
          row[index.at({da, db})] = c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
  std::set<std::pair<int, int>> leads;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      Scalar f = rows[k][c] / rows[r][c];
      for (std::size_t cc = c; cc < cols.size(); ++cc) rows[k][cc] -= f * rows[r][cc];
    }
    leads.insert({cols[c].a, cols[c].b});
    ++r;
  }
  return leads;
}

// True when the monomials of degree < D that lie in e are exactly the leading
// monomials found by elimination.
inline bool agrees_below(const hilburch::Staircase& e,
                         const std::set<std::pair<int, int>>& leads, int D) {
  for (int d = 0; d < D; ++d)
    for (int a = 0; a <= d; ++a) {
      bool in_e = e.contains({a, d - a});
      if (in_e != (leads.count({a, d - a}) > 0)) return false;
    }
  return true;
}

// Hilbert function of k[x,y]/E by counting standard monomials degree by degree.
inline std::vector<int> hilbert_function(const hilburch::Staircase& e) {
  std::vector<int> hf;
  for (int d = 0;; ++d) {
    int count = 0;
    for (int a = 0; a <= d; ++a) count += !e.contains({a, d - a});
    if (count == 0) break;
    hf.push_back(count);
  }
  return hf;
}

// Leibniz expansion.
inline BiPoly determinant(const std::vector<std::vector<BiPoly>>& m, const Field& field) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BiPoly det(field);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    BiPoly term = BiPoly::constant(field, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Integer partitions of n.
inline std::size_t partitions(int n) {
  std::vector<std::size_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) p[i] += p[i - k];
  return p[n];
}

// sum over i > j of max(0, d_j - v_{i,j}), read straight off the m-sequence.
inline int cell_dimension(const std::vector<int>& m) {
  const int t = static_cast<int>(m.size()) - 1;
  int dim = 0;
  for (int j = 1; j <= t; ++j)
    for (int i = j + 1; i <= t + 1; ++i) {
      int u = m[j] - m[i - 1] + i - j;
      dim += std::max(0, (m[j] - m[j - 1]) - std::max(u, 0));
    }
  return dim;
}

}  // namespace oracle

namespace gen {

using hilburch::BiPoly;
using hilburch::Field;
using hilburch::Scalar;
using hilburch::Staircase;

inline Scalar scalar(std::mt19937_64& rng, const Field& f, int bound = 3) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long> d(-bound, bound);
    return Scalar(f, d(rng));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, f.characteristic() - 1);
  return Scalar::from_residue(f, d(rng));
}

inline BiPoly poly(std::mt19937_64& rng, const Field& f, int max_deg, int terms,
                   int min_deg = 0) {
  BiPoly p(f);
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  for (int k = 0; k < terms; ++k) {
    int d = deg(rng);
    std::uniform_int_distribution<int> a(0, d);
    int x = a(rng);
    p.add_term({x, d - x}, scalar(rng, f));
  }
  return p;
}

// A random staircase with t <= max_t and m_t <= max_m.
inline Staircase staircase(std::mt19937_64& rng, int max_t, int max_m) {
  std::uniform_int_distribution<int> tt(1, max_t);
  const int t = tt(rng);
  std::vector<int> m{0, 1};
  std::uniform_int_distribution<int> step(0, 2);
  m[1] += step(rng) / 2;
  for (int i = 2; i <= t; ++i) m.push_back(std::min(max_m, m.back() + step(rng)));
  return Staircase(m);
}

// A random element of N(E): entry (i,j) has order at least u_{i,j} (+1 when
// i <= j) and degree at most s.
inline hilburch::Deformation deformation(std::mt19937_64& rng, const Staircase& e,
                                         const Field& f, double density = 0.35) {
  hilburch::Deformation n(e, f);
  const int s = e.socle_degree();
  std::bernoulli_distribution keep(density);
  for (int i = 1; i <= e.t() + 1; ++i)
    for (int j = 1; j <= e.t(); ++j) {
      int lo = std::max(0, i <= j ? e.u(i, j) + 1 : e.u(i, j));
      for (int k = lo; k <= s; ++k)
        if (keep(rng)) n.at(i, j).add_term(k, scalar(rng, f));
    }
  return n;
}

}  // namespace gen
