#ifndef MULTICOH_SUPPORT_HPP
#define MULTICOH_SUPPORT_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "multicoh/bigint.hpp"
#include "multicoh/cohomology.hpp"
#include "multicoh/interval.hpp"
#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"

namespace multicoh {

/// Exact set {t : h^q(f twisted by t + offset) != 0} on P^n. Always a ray
/// up, a ray down, a single point, or empty.
inline TwistInterval factor_support(int n, const FactorSheaf& f, int q, long long offset) {
  if (q < 0 || q > n) throw std::domain_error("factor_support: q out of [0, n]");
  if (f.is_line()) {
    const long long a = f.twist;
    if (q == 0) return TwistInterval::at_least(-a - offset);
    if (q == n) return TwistInterval::at_most(-a - offset - n - 1);
    return TwistInterval::empty();
  }
  const long long c = f.twist;
  const int p = f.power;
  if (q == 0) return TwistInterval::at_least(p - c - offset + 1);  // t > p - c - offset
  if (q == p) return TwistInterval::point(-c - offset);
  if (q == n) return TwistInterval::at_most(p - n - c - offset - 1);  // t < p - n - c - offset
  return TwistInterval::empty();
}

/// Kunneth term support: a term at degree tuple q is nonzero exactly when
/// every factor is, so intersect the per-slot supports.
inline TwistInterval tuple_support(const Space& space, const Atom& atom,
                                   const std::vector<int>& q, const Multidegree& k) {
  if (atom.arity() != space.factors() || static_cast<int>(q.size()) != space.factors())
    throw std::invalid_argument("tuple_support: arity mismatch");
  check_arity(space, k, "tuple_support");
  TwistInterval acc = TwistInterval::all();
  for (int j = 0; j < space.factors(); ++j) {
    acc = acc.intersect(factor_support(space.dim(j), atom.factor(j),
                                       q[static_cast<size_t>(j)], k[static_cast<size_t>(j)]));
    if (acc.is_empty()) return TwistInterval::empty();
  }
  return acc;
}

/// Certificate that H^i(E(t,...,t) tensor O(k)) != 0: identifies the atom,
/// the Kunneth degree tuple and the exact dimension of that term.
struct Witness {
  int atom_index = 0;
  int i = 0;
  Multidegree k;
  long long t = 0;
  std::vector<int> q;
  BigInt dim;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Enumerates tuples (q_1,...,q_s) with 0 <= q_j <= n_j and sum q_j = total,
/// in lexicographically ascending order.
inline void for_each_degree_tuple(const Space& space, int total,
                                  const std::function<void(const std::vector<int>&)>& fn) {
  const int s = space.factors();
  std::vector<int> q(static_cast<size_t>(s), 0);
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == s) {
      if (remaining == 0) fn(q);
      return;
    }
    int tail = 0;
    for (int l = slot + 1; l < s; ++l) tail += space.dim(l);
    const int lo = std::max(0, remaining - tail);
    const int hi = std::min(space.dim(slot), remaining);
    for (int v = lo; v <= hi; ++v) {
      q[static_cast<size_t>(slot)] = v;
      rec(slot + 1, remaining - v);
    }
  };
  rec(0, total);
}

/// Fixed-t constraint for the balanced-twist quantifier; empty = any t.
using TwistConstraint = std::optional<long long>;

/// Decides whether H^i(E(t,...,t) tensor O(k)) != 0 for some t admitted by
/// the constraint. Sound for existence because Kunneth contributions are
/// nonnegative: no cancellation can hide a nonzero term.
///
/// The returned witness sits at the smallest feasible t, ties broken by
/// lexicographically smallest q, then lowest atom index. When a feasible
/// support is unbounded below (only possible at i = d), the upper endpoint
/// stands in for the nonexistent minimum.
inline std::optional<Witness> nonvanishing_witness(const Bundle& bundle, int i,
                                                   const Multidegree& k,
                                                   const TwistConstraint& t_constraint = {}) {
  const Space& space = bundle.space();
  check_arity(space, k, "nonvanishing_witness");
  const int d = space.total_dim();
  if (i < 1 || i > d) throw std::domain_error("nonvanishing_witness: i out of [1, d]");

  TwistInterval constraint = t_constraint ? TwistInterval::point(*t_constraint)
                                          : TwistInterval::all();

  struct Candidate {
    long long t;
    std::vector<int> q;
    int atom_index;
  };
  std::optional<Candidate> best;

  const auto& summands = bundle.summands();
  for (int idx = 0; idx < static_cast<int>(summands.size()); ++idx) {
    const Atom& atom = summands[static_cast<size_t>(idx)].atom;
    for_each_degree_tuple(space, i, [&](const std::vector<int>& q) {
      const TwistInterval feasible =
          tuple_support(space, atom, q, k).intersect(constraint);
      if (feasible.is_empty()) return;
      const long long t =
          feasible.lo().is_finite() ? feasible.lo().value() : feasible.hi().value();
      if (!best || t < best->t || (t == best->t && q < best->q) ||
          (t == best->t && q == best->q && idx < best->atom_index))
        best = Candidate{t, q, idx};
    });
  }

  if (!best) return std::nullopt;

  Witness w;
  w.atom_index = best->atom_index;
  w.i = i;
  w.k = k;
  w.t = best->t;
  w.q = best->q;
  w.dim = 1;
  const Atom& atom = summands[static_cast<size_t>(best->atom_index)].atom;
  for (int j = 0; j < space.factors(); ++j) {
    FactorSheaf f = atom.factor(j);
    f.twist += best->t + k[static_cast<size_t>(j)];
    w.dim *= factor_dim(space.dim(j), f, best->q[static_cast<size_t>(j)]);
  }
  return w;
}

}  // namespace multicoh

#endif  // MULTICOH_SUPPORT_HPP
