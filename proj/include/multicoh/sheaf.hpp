#ifndef MULTICOH_SHEAF_HPP
#define MULTICOH_SHEAF_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multicoh/bigint.hpp"
#include "multicoh/space.hpp"

namespace multicoh {

/// A sheaf on a single projective-space factor P^n: either a twisted line
/// bundle O(a) or a twisted differential Om(p, t) = Omega^p(t). Values are
/// always interpreted relative to the dimension n of the slot they occupy.
///
/// Normal form (enforced by Atom): a Diff always has 0 < p < n. Omega^0(t)
/// is O(t) and Omega^n(t) on P^n is O(t-n-1), so both collapse into Line.
struct FactorSheaf {
  enum class Kind { Line, Diff };

  Kind kind;
  long long twist;  // a for Line, t for Diff
  int power;        // p for Diff, unused for Line

  static FactorSheaf line(long long a) { return {Kind::Line, a, 0}; }
  static FactorSheaf diff(int p, long long t) { return {Kind::Diff, t, p}; }

  bool is_line() const { return kind == Kind::Line; }

  /// Normalize relative to the slot dimension n.
  FactorSheaf normalized(int n) const {
    if (kind == Kind::Line) return *this;
    if (power < 0 || power > n)
      throw std::domain_error("FactorSheaf: exterior power out of [0, n]");
    if (power == 0) return line(twist);
    if (power == n) return line(twist - n - 1);
    return *this;
  }

  friend auto operator<=>(const FactorSheaf&, const FactorSheaf&) = default;
};

/// A box product of one FactorSheaf per slot of a Space, kept in normal form.
class Atom {
 public:
  Atom(const Space& space, std::vector<FactorSheaf> factors)
      : factors_(std::move(factors)) {
    if (static_cast<int>(factors_.size()) != space.factors())
      throw std::invalid_argument("Atom: arity does not match space");
    for (size_t j = 0; j < factors_.size(); ++j)
      factors_[j] = factors_[j].normalized(space.dim(static_cast<int>(j)));
  }

  /// All-line atom O(a_1,...,a_s).
  static Atom line(const Space& space, const Multidegree& a) {
    check_arity(space, a, "Atom::line");
    std::vector<FactorSheaf> fs;
    fs.reserve(a.size());
    for (long long ai : a) fs.push_back(FactorSheaf::line(ai));
    return Atom(space, std::move(fs));
  }

  int arity() const { return static_cast<int>(factors_.size()); }
  const FactorSheaf& factor(int slot) const { return factors_.at(static_cast<size_t>(slot)); }
  const std::vector<FactorSheaf>& factors() const { return factors_; }

  bool all_line() const {
    for (const auto& f : factors_)
      if (!f.is_line()) return false;
    return true;
  }

  Atom twisted(const Space& space, const Multidegree& k) const {
    check_arity(space, k, "Atom::twisted");
    std::vector<FactorSheaf> fs = factors_;
    for (size_t j = 0; j < fs.size(); ++j) fs[j].twist += k[j];
    return Atom(space, std::move(fs));
  }

  /// Dual: O(a) -> O(-a); Omega^p(t) on P^n -> Omega^{n-p}(n+1-t).
  Atom dual(const Space& space) const {
    std::vector<FactorSheaf> fs;
    fs.reserve(factors_.size());
    for (size_t j = 0; j < factors_.size(); ++j) {
      const FactorSheaf& f = factors_[j];
      const int n = space.dim(static_cast<int>(j));
      if (f.is_line())
        fs.push_back(FactorSheaf::line(-f.twist));
      else
        fs.push_back(FactorSheaf::diff(n - f.power, n + 1 - f.twist));
    }
    return Atom(space, std::move(fs));
  }

  BigInt rank(const Space& space) const {
    BigInt r = 1;
    for (size_t j = 0; j < factors_.size(); ++j) {
      const FactorSheaf& f = factors_[j];
      if (!f.is_line()) r *= binomial(space.dim(static_cast<int>(j)), f.power);
    }
    return r;
  }

  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::vector<FactorSheaf> factors_;
};

/// A formal direct sum of atoms with multiplicities over a fixed space.
class Bundle {
 public:
  struct Summand {
    Atom atom;
    BigInt multiplicity;

    friend bool operator==(const Summand&, const Summand&) = default;
  };

  explicit Bundle(Space space) : space_(std::move(space)) {}

  Bundle(Space space, std::vector<Summand> summands)
      : space_(std::move(space)), summands_(std::move(summands)) {
    for (const auto& s : summands_) {
      if (s.atom.arity() != space_.factors())
        throw std::invalid_argument("Bundle: atom arity does not match space");
      if (s.multiplicity < 1)
        throw std::invalid_argument("Bundle: multiplicities must be >= 1");
    }
  }

  static Bundle of_atom(const Space& space, Atom atom, BigInt mult = 1) {
    std::vector<Summand> s;
    s.push_back({std::move(atom), std::move(mult)});
    return Bundle(space, std::move(s));
  }

  static Bundle line(const Space& space, const Multidegree& a) {
    return of_atom(space, Atom::line(space, a));
  }

  const Space& space() const { return space_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }

  void add(Atom atom, BigInt mult = 1) {
    if (atom.arity() != space_.factors())
      throw std::invalid_argument("Bundle::add: atom arity does not match space");
    if (mult < 1) throw std::invalid_argument("Bundle::add: multiplicity must be >= 1");
    summands_.push_back({std::move(atom), std::move(mult)});
  }

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  Space space_;
  std::vector<Summand> summands_;
};

inline Bundle twist_bundle(const Bundle& b, const Multidegree& k) {
  check_arity(b.space(), k, "twist_bundle");
  Bundle out(b.space());
  for (const auto& s : b.summands()) out.add(s.atom.twisted(b.space(), k), s.multiplicity);
  return out;
}

inline Bundle dual_bundle(const Bundle& b) {
  Bundle out(b.space());
  for (const auto& s : b.summands()) out.add(s.atom.dual(b.space()), s.multiplicity);
  return out;
}

inline BigInt rank(const Bundle& b) {
  BigInt r = 0;
  for (const auto& s : b.summands()) r += s.multiplicity * s.atom.rank(b.space());
  return r;
}

/// Largest |twist| appearing in the bundle (0 for an empty bundle).
inline long long max_twist_magnitude(const Bundle& b) {
  long long m = 0;
  for (const auto& s : b.summands())
    for (const auto& f : s.atom.factors()) m = std::max(m, std::llabs(f.twist));
  return m;
}

}  // namespace multicoh

#endif  // MULTICOH_SHEAF_HPP
