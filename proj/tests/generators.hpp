#pragma once

// Seeded random complexes and chain maps for the property tests.
//
// Complexes are sums of spheres, disks and torsion pieces Z --k--> Z,
// scrambled by elementary base changes that keep every differential entry
// inside [-max_entry, max_entry]. Chain maps are random integer combinations
// of a basis of all chain maps between two complexes.

#include "fibseq/chain.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace gen {

using fibseq::ChainComplex;
using fibseq::ChainMap;
using fibseq::IntMatrix;
using fibseq::Integer;
using fibseq::Variant;

/// FIBSEQ_SEED overrides the compiled-in default.
inline std::uint64_t seed(std::uint64_t fallback = 20240611) {
  if (const char* s = std::getenv("FIBSEQ_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

struct Options {
  int min_degree = -3;
  int max_degree = 3;
  std::size_t max_rank = 4;  // per degree
  int max_entry = 3;
  int max_pieces = 5;
  int scramble_steps = 12;
  Variant variant = Variant::Unbounded;
};

inline Options nonnegative(Options o = {}) {
  o.min_degree = 0;
  o.max_degree = std::max(o.max_degree, 2);
  o.variant = Variant::NonNegative;
  return o;
}

class Generator {
 public:
  explicit Generator(std::uint64_t s) : rng_(s) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  IntMatrix matrix(std::size_t rows, std::size_t cols, int bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
    return m;
  }

  ChainComplex complex(const Options& o = {}) {
    std::map<int, std::size_t> ranks;
    struct Piece {
      int kind;  // 0 sphere, 1 disk, 2 torsion
      int degree;
      int k;
    };
    std::vector<Piece> pieces;
    const int count = coin(0.05) ? 0 : uniform(1, o.max_pieces);
    for (int i = 0; i < count; ++i) {
      const int kind = uniform(0, 2);
      const int lo = kind == 0 ? o.min_degree : o.min_degree + 1;
      if (lo > o.max_degree) continue;
      const int n = uniform(lo, o.max_degree);
      const bool two = kind != 0;
      if (ranks[n] + 1 > o.max_rank || (two && ranks[n - 1] + 1 > o.max_rank)) continue;
      ++ranks[n];
      if (two) ++ranks[n - 1];
      int k = 1;
      if (kind == 2) k = (coin() ? 1 : -1) * std::min(o.max_entry, uniform(2, 3));
      if (kind == 1) k = coin() ? 1 : -1;
      pieces.push_back({kind, n, k});
    }
    // Lay the pieces out, one basis vector (or two) each.
    std::map<int, std::size_t> used;
    std::map<int, IntMatrix> diffs;
    for (const auto& [n, r] : ranks) {
      (void)r;
      diffs[n] = IntMatrix(ranks.count(n - 1) ? ranks[n - 1] : 0, ranks[n]);
    }
    for (const auto& p : pieces) {
      const std::size_t top = used[p.degree]++;
      if (p.kind == 0) continue;
      const std::size_t bottom = used[p.degree - 1]++;
      diffs[p.degree](bottom, top) = p.k;
    }
    std::map<int, IntMatrix> d;
    for (auto& [n, m] : diffs)
      if (!m.empty()) d[n] = m;
    for (int step = 0; step < o.scramble_steps; ++step) scramble(ranks, d, o.max_entry);
    return ChainComplex(ranks, d, o.variant);
  }

  /// A uniformly chosen combination of a basis of chain maps A -> B, with
  /// small integer coefficients.
  ChainMap map(const ChainComplex& a, const ChainComplex& b) {
    const auto [lo, hi] = fibseq::degree_span(a, b);
    std::map<int, std::size_t> offset;
    std::size_t unknowns = 0;
    for (int n = lo; n <= hi; ++n) {
      offset[n] = unknowns;
      unknowns += a.rank(n) * b.rank(n);
    }
    // d_B f_n - f_{n-1} d_A = 0 for every n.
    std::vector<std::vector<Integer>> rows;
    for (int n = lo; n <= hi + 1; ++n) {
      const IntMatrix db = b.d(n), da = a.d(n);
      const std::size_t out = b.rank(n - 1), in = a.rank(n);
      for (std::size_t i = 0; i < out; ++i)
        for (std::size_t j = 0; j < in; ++j) {
          std::vector<Integer> row(unknowns);
          if (n <= hi)
            for (std::size_t k = 0; k < b.rank(n); ++k) row[offset[n] + k * in + j] += db(i, k);
          if (n - 1 >= lo)
            for (std::size_t k = 0; k < a.rank(n - 1); ++k) row[offset[n - 1] + i * a.rank(n - 1) + k] -= da(k, j);
          rows.push_back(std::move(row));
        }
    }
    IntMatrix system(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < unknowns; ++j) system(i, j) = rows[i][j];
    const IntMatrix basis = fibseq::kernel_basis(system);
    std::vector<int> coeffs(basis.cols());
    bool any = false;
    for (auto& c : coeffs) any |= (c = uniform(-2, 2)) != 0;
    if (!any && !coeffs.empty()) coeffs[uniform(0, int(coeffs.size()) - 1)] = coin() ? 1 : -1;
    fibseq::IntVector x(unknowns);
    for (std::size_t c = 0; c < basis.cols(); ++c)
      for (std::size_t r = 0; r < unknowns && coeffs[c] != 0; ++r) x[r] += coeffs[c] * basis(r, c);
    std::map<int, IntMatrix> comps;
    for (int n = lo; n <= hi; ++n) {
      IntMatrix f(b.rank(n), a.rank(n));
      for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) f(i, j) = x[offset[n] + i * f.cols() + j];
      comps[n] = f;
    }
    return ChainMap(a, b, comps);
  }

  /// Random maps, with identities, zero maps and multiples mixed in.
  ChainMap any_map(const Options& o = {}) {
    const int kind = uniform(0, 9);
    const ChainComplex a = complex(o);
    if (kind == 0) return fibseq::identity_map(a);
    if (kind == 1) return fibseq::zero_map(a, complex(o));
    if (kind == 2) {
      std::map<int, IntMatrix> comps;
      const int k = uniform(2, 3);
      for (const auto& [n, r] : a.ranks()) comps[n] = IntMatrix::identity(r).scaled(k);
      return ChainMap(a, a, comps);
    }
    if (kind == 3) return map(a, a);
    return map(a, complex(o));
  }

 private:
  // e_j <- e_j + c e_i in degree n: column op on d_n, row op on d_{n+1}.
  void scramble(const std::map<int, std::size_t>& ranks, std::map<int, IntMatrix>& d, int bound) {
    if (ranks.empty()) return;
    auto it = ranks.begin();
    std::advance(it, uniform(0, int(ranks.size()) - 1));
    const int n = it->first;
    const std::size_t r = it->second;
    if (r < 2) return;
    const std::size_t i = uniform(0, int(r) - 1);
    std::size_t j = uniform(0, int(r) - 2);
    if (j >= i) ++j;
    const int c = coin() ? 1 : -1;
    IntMatrix dn = d.count(n) ? d[n] : IntMatrix();
    IntMatrix up = d.count(n + 1) ? d[n + 1] : IntMatrix();
    if (!dn.empty())
      for (std::size_t row = 0; row < dn.rows(); ++row) dn(row, j) += c * dn(row, i);
    if (!up.empty())
      for (std::size_t col = 0; col < up.cols(); ++col) up(i, col) -= c * up(j, col);
    if (dn.max_abs() > bound || up.max_abs() > bound) return;
    if (!dn.empty()) d[n] = dn;
    if (!up.empty()) d[n + 1] = up;
  }

  std::mt19937_64 rng_;
};

}  // namespace gen
