#ifndef MULTICOH_CRITERIA_HPP
#define MULTICOH_CRITERIA_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multicoh/bigint.hpp"
#include "multicoh/print.hpp"
#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"
#include "multicoh/support.hpp"

namespace multicoh {

/// Thrown when a criterion's hypotheses are not met (e.g. the Reg = 0 gate).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumerates k with sum k_j = -i and -n_j <= k_j <= 0, lexicographically
/// ascending.
inline void for_each_twist_drop(const Space& space, int i,
                                const std::function<void(const Multidegree&)>& fn) {
  const int s = space.factors();
  Multidegree k(static_cast<size_t>(s), 0);
  std::function<void(int, long long)> rec = [&](int slot, long long rem) {
    if (slot == s) {
      if (rem == 0) fn(k);
      return;
    }
    long long tail = 0;
    for (int l = slot + 1; l < s; ++l) tail += space.dim(l);
    const long long lo = std::max<long long>(-space.dim(slot), rem);
    const long long hi = std::min<long long>(0, rem + tail);
    for (long long v = lo; v <= hi; ++v) {
      k[static_cast<size_t>(slot)] = v;
      rec(slot + 1, rem - v);
    }
  };
  rec(0, -static_cast<long long>(i));
}

/// k in the open box -n_j < k_j <= 0 with sum k_j >= -i, ascending.
inline std::vector<Multidegree> interior_twist_drops(const Space& space, int i) {
  const int s = space.factors();
  std::vector<Multidegree> out;
  Multidegree k(static_cast<size_t>(s), 0);
  std::function<void(int, long long)> rec = [&](int slot, long long sum) {
    if (slot == s) {
      if (sum >= -static_cast<long long>(i)) out.push_back(k);
      return;
    }
    for (long long v = -space.dim(slot) + 1; v <= 0; ++v) {
      k[static_cast<size_t>(slot)] = v;
      rec(slot + 1, sum + v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// All regularity failures of the already-twisted bundle, i.e. instances
/// (i, k) with sum k_j = -i, -n_j <= k_j <= 0 and H^i(shifted tensor O(k))
/// nonzero, in (i, lex k) order. first_only stops at the first failure.
inline std::vector<Witness> regularity_obstructions_shifted(const Bundle& shifted,
                                                            bool first_only) {
  std::vector<Witness> out;
  const int d = shifted.space().total_dim();
  for (int i = 1; i <= d; ++i) {
    for_each_twist_drop(shifted.space(), i, [&](const Multidegree& k) {
      if (first_only && !out.empty()) return;
      if (auto w = nonvanishing_witness(shifted, i, k, 0)) out.push_back(std::move(*w));
    });
    if (first_only && !out.empty()) break;
  }
  return out;
}

/// First obstruction to (p_1,...,p_s)-regularity, or nullopt if regular.
inline std::optional<Witness> regularity_obstruction(const Bundle& b, const Multidegree& p) {
  auto all = regularity_obstructions_shifted(twist_bundle(b, p), true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Boolean regularity via single-entry table checks. The instance set is
/// indexed by k alone (i = -sum k), and the box is walked most-negative
/// first because failures of very negative twists sit in top degree.
inline bool is_regular_at(const Bundle& b, const Multidegree& p) {
  const Space& space = b.space();
  check_arity(space, p, "is_regular_at");
  const Bundle shifted = twist_bundle(b, p);
  const int s = space.factors();
  Multidegree k(static_cast<size_t>(s), 0);
  bool regular = true;
  std::function<void(int, long long)> rec = [&](int slot, long long sum) {
    if (!regular) return;
    if (slot == s) {
      if (sum == 0) return;  // k = 0 is not an instance
      const int i = static_cast<int>(-sum);
      if (bundle_cohomology(twist_bundle(shifted, k)).at(i) != 0) regular = false;
      return;
    }
    for (long long v = -space.dim(slot); v <= 0 && regular; ++v) {
      k[static_cast<size_t>(slot)] = v;
      rec(slot + 1, sum + v);
    }
  };
  rec(0, 0);
  return regular;
}

struct RegularityResult {
  std::optional<long long> reg;  // nullopt = none in the search window
  long long window_lo = 0;
  long long window_hi = 0;
  std::vector<Witness> failures_at_reg_minus_1;
};

/// Least p with (p,...,p)-regularity, searched over a window wide enough to
/// contain every factor nonvanishing threshold of the bundle.
inline RegularityResult balanced_regularity(const Bundle& b) {
  if (b.empty()) throw std::invalid_argument("balanced_regularity: empty bundle");
  const long long B = max_twist_magnitude(b) + b.space().max_factor_dim();
  const int d = b.space().total_dim();
  RegularityResult res;
  res.window_lo = -B - 1;
  res.window_hi = B + d + 2;
  for (long long p = res.window_lo; p <= res.window_hi; ++p) {
    if (is_regular_at(b, balanced(b.space(), p))) {
      res.reg = p;
      res.failures_at_reg_minus_1 =
          regularity_obstructions_shifted(twist_bundle(b, balanced(b.space(), p - 1)), false);
      break;
    }
  }
  return res;
}

/// aCM test: no intermediate cohomology at any balanced twist, decided by
/// interval quantifier elimination over 0 < i < d.
inline std::optional<Witness> acm_obstruction(const Bundle& b) {
  const int d = b.space().total_dim();
  const Multidegree zero = balanced(b.space(), 0);
  for (int i = 1; i <= d - 1; ++i)
    if (auto w = nonvanishing_witness(b, i, zero)) return w;
  return std::nullopt;
}

inline bool is_acm(const Bundle& b) { return !acm_obstruction(b); }

/// Closed-form pairwise test for line bundles: a_i - a_j >= -n_i and
/// a_j - a_i >= -n_j for every pair of slots.
inline bool acm_closed_form_line(const Space& space, const Multidegree& a) {
  check_arity(space, a, "acm_closed_form_line");
  const int s = space.factors();
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)] < -space.dim(i)) return false;
  return true;
}

enum class Criterion { Thm31, Thm32, Thm33 };

inline const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Thm31: return "thm31";
    case Criterion::Thm32: return "thm32";
    default: return "thm33";
  }
}

/// Outcome of a cohomological condition check: holds iff no witnesses.
struct ConditionResult {
  bool holds = true;
  bool vacuous = false;  // no admissible instance existed
  std::vector<Witness> witnesses;
};

/// Splitting-criterion verdict. `consistent` records whether the
/// cohomological condition and the syntactic split shape agreed; it is
/// always recomputed from the two booleans, never assumed.
struct CriterionReport {
  Criterion criterion = Criterion::Thm31;
  bool condition_holds = false;
  std::vector<Witness> condition_witnesses;
  bool vacuous = false;
  bool shape_holds = false;
  std::optional<std::string> shape_certificate;
  bool consistent = false;
};

/// Balanced-twist splitting condition: H^i(E(t,...,t) tensor O(k)) = 0 for
/// all 1 <= i <= d-1, all k with sum k_j = -i and -n_j <= k_j <= 0, and all
/// integers t. `excluded` skips specific k (used by the thm32 variant).
inline ConditionResult balanced_condition(
    const Bundle& b, const std::function<bool(const Multidegree&)>& excluded) {
  if (b.empty()) throw std::invalid_argument("criterion condition: empty bundle");
  ConditionResult res;
  const int d = b.space().total_dim();
  bool any_instance = false;
  for (int i = 1; i <= d - 1; ++i) {
    for_each_twist_drop(b.space(), i, [&](const Multidegree& k) {
      if (excluded && excluded(k)) return;
      any_instance = true;
      if (auto w = nonvanishing_witness(b, i, k)) res.witnesses.push_back(std::move(*w));
    });
  }
  res.vacuous = !any_instance;
  res.holds = res.witnesses.empty();
  return res;
}

inline ConditionResult thm31_condition(const Bundle& b) { return balanced_condition(b, nullptr); }

inline ConditionResult thm32_condition(const Bundle& b) {
  const Space& space = b.space();
  return balanced_condition(b, [&space](const Multidegree& k) {
    // skip k = -n_j e_j
    int nonzero = -1;
    for (int j = 0; j < space.factors(); ++j) {
      if (k[static_cast<size_t>(j)] == 0) continue;
      if (nonzero >= 0) return false;
      nonzero = j;
    }
    return nonzero >= 0 && k[static_cast<size_t>(nonzero)] == -space.dim(nonzero);
  });
}

/// Fixed-twist condition of the third criterion. Requires Reg(E) = 0.
/// Part (a): H^i(E(-1,...,-1) tensor O(k)) = 0 for 1 <= i <= min(r,d)-1 and
/// every k in the open box -n_j < k_j <= 0 with sum k_j >= -i.
/// Part (b): for every slot j and 1 <= a < n_j, the boundary instance at
/// degree a + sum_{l != j} n_l with k = (-n_1,...,-a-1,...,-n_s) vanishes.
inline ConditionResult thm33_condition(const Bundle& b) {
  if (b.empty()) throw std::invalid_argument("thm33_condition: empty bundle");
  const auto reg = balanced_regularity(b);
  if (!reg.reg || *reg.reg != 0)
    throw PreconditionError("thm33 requires Reg(E) = 0, got Reg = " +
                            (reg.reg ? std::to_string(*reg.reg) : std::string("none-in-window")));

  const Space& space = b.space();
  const int d = space.total_dim();
  const Bundle shifted = twist_bundle(b, balanced(space, -1));

  ConditionResult res;
  bool any_instance = false;

  const BigInt r = rank(b);
  const int imax = (r < d ? static_cast<int>(r) : d) - 1;
  for (int i = 1; i <= imax; ++i) {
    for (const Multidegree& k : interior_twist_drops(space, i)) {
      any_instance = true;
      if (auto w = nonvanishing_witness(shifted, i, k, 0)) res.witnesses.push_back(std::move(*w));
    }
  }

  for (int j = 0; j < space.factors(); ++j) {
    for (int a = 1; a <= space.dim(j) - 1; ++a) {
      any_instance = true;
      Multidegree k;
      k.reserve(static_cast<size_t>(space.factors()));
      for (int l = 0; l < space.factors(); ++l)
        k.push_back(l == j ? -static_cast<long long>(a) - 1 : -static_cast<long long>(space.dim(l)));
      const int degree = a + (d - space.dim(j));
      if (auto w = nonvanishing_witness(shifted, degree, k, 0))
        res.witnesses.push_back(std::move(*w));
    }
  }

  res.vacuous = !any_instance;
  res.holds = res.witnesses.empty();
  return res;
}

namespace detail {

/// thm32 classification of an all-line atom: candidate base twists t such
/// that the atom is O(t,...,t) or O(t,...,t) with exactly one slot raised
/// by 1. Non-line or other shapes yield no candidates.
inline std::vector<std::pair<long long, std::string>> thm32_atom_candidates(const Atom& atom) {
  std::vector<std::pair<long long, std::string>> out;
  if (!atom.all_line()) return out;
  const int s = atom.arity();
  long long mn = atom.factor(0).twist, mx = atom.factor(0).twist;
  for (int j = 1; j < s; ++j) {
    mn = std::min(mn, atom.factor(j).twist);
    mx = std::max(mx, atom.factor(j).twist);
  }
  if (mn == mx) {
    out.emplace_back(mn, "O");
    if (s == 1) out.emplace_back(mn - 1, "O(e_1)");  // single-slot raise is ambiguous
    return out;
  }
  if (mx != mn + 1) return out;
  int raised = -1;
  for (int j = 0; j < s; ++j) {
    if (atom.factor(j).twist == mx) {
      if (raised >= 0) return out;  // more than one raised slot
      raised = j;
    }
  }
  out.emplace_back(mn, "O(e_" + std::to_string(raised + 1) + ")");
  return out;
}

}  // namespace detail

/// Syntactic shape test for each criterion's split form.
inline std::pair<bool, std::optional<std::string>> shape_match(const Bundle& b, Criterion c) {
  switch (c) {
    case Criterion::Thm31: {
      // every atom is O(t_i,...,t_i)
      std::map<long long, BigInt> twists;
      for (const auto& s : b.summands()) {
        if (!s.atom.all_line()) return {false, std::nullopt};
        const long long t = s.atom.factor(0).twist;
        for (int j = 1; j < s.atom.arity(); ++j)
          if (s.atom.factor(j).twist != t) return {false, std::nullopt};
        twists[t] += s.multiplicity;
      }
      std::string cert = "balanced twists {";
      bool first = true;
      for (const auto& [t, m] : twists) {
        if (!first) cert += ", ";
        first = false;
        cert += std::to_string(t);
        if (m != 1) cert += " x" + m.str();
      }
      cert += "}";
      return {true, cert};
    }
    case Criterion::Thm32: {
      // one t with every atom O(t,...,t) or O(t,...,t) + e_j
      if (b.summands().empty()) return {true, std::string("empty sum")};
      std::map<long long, std::vector<std::string>> by_t;
      bool first_atom = true;
      for (const auto& s : b.summands()) {
        const auto cands = detail::thm32_atom_candidates(s.atom);
        if (cands.empty()) return {false, std::nullopt};
        std::map<long long, std::vector<std::string>> merged;
        for (const auto& [t, kind] : cands) {
          if (first_atom)
            merged[t].push_back(kind);
          else if (auto it = by_t.find(t); it != by_t.end()) {
            merged[t] = it->second;
            merged[t].push_back(kind);
          }
        }
        by_t = std::move(merged);
        first_atom = false;
        if (by_t.empty()) return {false, std::nullopt};
      }
      const auto& [t, kinds] = *by_t.begin();
      std::string cert = "t = " + std::to_string(t) + "; summands:";
      for (const auto& kind : kinds) cert += " " + kind;
      return {true, cert};
    }
    default: {
      // some summand is O, O(e_j), or Omega^a(a+1) in one slot with O elsewhere
      for (const auto& s : b.summands()) {
        const Atom& atom = s.atom;
        int units = 0;
        int special = -1;  // slot carrying e_j or the differential
        bool ok = true;
        bool has_diff = false;
        for (int j = 0; j < atom.arity() && ok; ++j) {
          const FactorSheaf& f = atom.factor(j);
          if (f.is_line()) {
            if (f.twist == 1) {
              ++units;
              special = j;
            } else if (f.twist != 0) {
              ok = false;
            }
          } else {
            // normalized Diff already has 1 <= p <= n-1
            if (has_diff || f.twist != f.power + 1) {
              ok = false;
            } else {
              has_diff = true;
              special = j;
            }
          }
        }
        if (!ok) continue;
        if (has_diff && units == 0)
          return {true, "summand " + atom_to_string(atom) + " (twisted differential in slot " +
                            std::to_string(special + 1) + ")"};
        if (!has_diff && units == 0) return {true, std::string("summand O")};
        if (!has_diff && units == 1)
          return {true, "summand O(e_" + std::to_string(special + 1) + ")"};
      }
      return {false, std::nullopt};
    }
  }
}

inline ConditionResult criterion_condition(const Bundle& b, Criterion c) {
  switch (c) {
    case Criterion::Thm31: return thm31_condition(b);
    case Criterion::Thm32: return thm32_condition(b);
    default: return thm33_condition(b);
  }
}

/// Runs the condition checker and the shape matcher and reports whether
/// they agree. Disagreement is surfaced, never suppressed.
inline CriterionReport verify_criterion(const Bundle& b, Criterion c) {
  CriterionReport rep;
  rep.criterion = c;
  ConditionResult cond = criterion_condition(b, c);
  rep.condition_holds = cond.holds;
  rep.condition_witnesses = std::move(cond.witnesses);
  rep.vacuous = cond.vacuous;
  auto [shape, cert] = shape_match(b, c);
  rep.shape_holds = shape;
  rep.shape_certificate = std::move(cert);
  rep.consistent = (rep.condition_holds == rep.shape_holds);
  return rep;
}

}  // namespace multicoh

#endif  // MULTICOH_CRITERIA_HPP
