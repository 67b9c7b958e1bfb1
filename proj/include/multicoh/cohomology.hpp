#ifndef MULTICOH_COHOMOLOGY_HPP
#define MULTICOH_COHOMOLOGY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "multicoh/bigint.hpp"
#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"

namespace multicoh {

/// Dense vector of cohomology dimensions h^0..h^d.
struct CohTable {
  std::vector<BigInt> h;

  explicit CohTable(int total_dim) : h(static_cast<size_t>(total_dim) + 1, BigInt(0)) {}

  int top_degree() const { return static_cast<int>(h.size()) - 1; }
  const BigInt& at(int q) const { return h.at(static_cast<size_t>(q)); }

  BigInt alternating_sum() const {
    BigInt chi = 0;
    for (size_t q = 0; q < h.size(); ++q) {
      if (q % 2 == 0)
        chi += h[q];
      else
        chi -= h[q];
    }
    return chi;
  }

  friend bool operator==(const CohTable&, const CohTable&) = default;
};

/// h^q(P^n, O(a)): C(n+a, n) in degree 0 for a >= 0, C(-a-1, n) in degree n
/// for a <= -n-1, zero everywhere else.
inline BigInt h_line(int n, long long a, int q) {
  if (n < 1) throw std::domain_error("h_line: n must be >= 1");
  if (q < 0 || q > n) throw std::domain_error("h_line: q out of [0, n]");
  if (q == 0 && a >= 0) return binomial(n + a, n);
  if (q == n && a <= -n - 1) return binomial(-a - 1, n);
  return 0;
}

/// h^q(P^n, Omega^p(t)) by the Bott formula. Nonzero only in one of the
/// three regimes t > p (q = 0), t = 0 (q = p), t < p - n (q = n).
inline BigInt h_bott(int n, int p, long long t, int q) {
  if (n < 1) throw std::domain_error("h_bott: n must be >= 1");
  if (p < 0 || p > n) throw std::domain_error("h_bott: p out of [0, n]");
  if (q < 0 || q > n) throw std::domain_error("h_bott: q out of [0, n]");
  if (q == 0 && t > p) return binomial(t + n - p, t) * binomial(t - 1, p);
  if (q == p && t == 0) return 1;
  if (q == n && t < p - n) return binomial(-t + p, -t) * binomial(-t - 1, n - p);
  return 0;
}

/// h^q of a single factor sheaf on P^n.
inline BigInt factor_dim(int n, const FactorSheaf& f, int q) {
  return f.is_line() ? h_line(n, f.twist, q) : h_bott(n, f.power, f.twist, q);
}

/// The nonzero part of a factor's cohomology as a sparse (q, dim) list.
/// Line bundles and twisted differentials are concentrated in at most one
/// degree, so the list has length 0 or 1.
inline std::vector<std::pair<int, BigInt>> factor_sparse(int n, const FactorSheaf& f) {
  std::vector<std::pair<int, BigInt>> out;
  if (f.is_line()) {
    if (f.twist >= 0)
      out.emplace_back(0, h_line(n, f.twist, 0));
    else if (f.twist <= -n - 1)
      out.emplace_back(n, h_line(n, f.twist, n));
  } else {
    if (f.twist > f.power)
      out.emplace_back(0, h_bott(n, f.power, f.twist, 0));
    else if (f.twist == 0)
      out.emplace_back(f.power, BigInt(1));
    else if (f.twist < f.power - n)
      out.emplace_back(n, h_bott(n, f.power, f.twist, n));
  }
  return out;
}

/// Kunneth: entry m is the sum over q_1+...+q_s = m of the product of
/// single-factor dimensions.
inline CohTable atom_cohomology(const Space& space, const Atom& atom) {
  if (atom.arity() != space.factors())
    throw std::invalid_argument("atom_cohomology: arity mismatch");
  const int d = space.total_dim();
  // acc[m] = convolution of the factor supports processed so far.
  std::vector<BigInt> acc(static_cast<size_t>(d) + 1, BigInt(0));
  acc[0] = 1;
  for (int j = 0; j < atom.arity(); ++j) {
    const auto sparse = factor_sparse(space.dim(j), atom.factor(j));
    std::vector<BigInt> next(static_cast<size_t>(d) + 1, BigInt(0));
    for (const auto& [q, dim] : sparse)
      for (int m = 0; m + q <= d; ++m)
        if (acc[static_cast<size_t>(m)] != 0)
          next[static_cast<size_t>(m + q)] += acc[static_cast<size_t>(m)] * dim;
    acc = std::move(next);
  }
  CohTable table(d);
  table.h = std::move(acc);
  return table;
}

/// Multiplicity-weighted entrywise sum of the atom tables.
inline CohTable bundle_cohomology(const Bundle& b) {
  CohTable table(b.space().total_dim());
  for (const auto& s : b.summands()) {
    const CohTable t = atom_cohomology(b.space(), s.atom);
    for (size_t q = 0; q < table.h.size(); ++q) table.h[q] += s.multiplicity * t.h[q];
  }
  return table;
}

inline BigInt euler_char(const Bundle& b) { return bundle_cohomology(b).alternating_sum(); }

/// chi of a single all-line atom via the polynomial product
/// prod_j chi(P^{n_j}, O(a_j)); used as an independent route to euler_char.
inline BigInt chi_line_atom_product(const Space& space, const Atom& atom) {
  if (!atom.all_line())
    throw std::invalid_argument("chi_line_atom_product: atom has a differential factor");
  BigInt chi = 1;
  for (int j = 0; j < atom.arity(); ++j) chi *= chi_line_poly(space.dim(j), atom.factor(j).twist);
  return chi;
}

}  // namespace multicoh

#endif  // MULTICOH_COHOMOLOGY_HPP
