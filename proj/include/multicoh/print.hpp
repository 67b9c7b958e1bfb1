#ifndef MULTICOH_PRINT_HPP
#define MULTICOH_PRINT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"

namespace multicoh {

/// Canonical atom encoding: O(a_1,...,a_s) when every factor is a line
/// bundle, box(...) otherwise. This string is the sort key for canonical
/// bundle form, so it must be stable.
inline std::string atom_to_string(const Atom& atom) {
  std::string out;
  if (atom.all_line()) {
    out += "O(";
    for (int j = 0; j < atom.arity(); ++j) {
      if (j) out += ",";
      out += std::to_string(atom.factor(j).twist);
    }
    out += ")";
    return out;
  }
  out += "box(";
  for (int j = 0; j < atom.arity(); ++j) {
    if (j) out += ",";
    const FactorSheaf& f = atom.factor(j);
    if (f.is_line())
      out += "O(" + std::to_string(f.twist) + ")";
    else
      out += "Om(" + std::to_string(f.power) + "," + std::to_string(f.twist) + ")";
  }
  out += ")";
  return out;
}

/// Sorts summands by atom encoding and merges equal atoms into one
/// multiplicity. Parsing canonical output reproduces the same value.
inline Bundle canonical_bundle(const Bundle& b) {
  std::vector<Bundle::Summand> sums = b.summands();
  std::stable_sort(sums.begin(), sums.end(), [](const auto& x, const auto& y) {
    return atom_to_string(x.atom) < atom_to_string(y.atom);
  });
  std::vector<Bundle::Summand> merged;
  for (auto& s : sums) {
    if (!merged.empty() && merged.back().atom == s.atom)
      merged.back().multiplicity += s.multiplicity;
    else
      merged.push_back(std::move(s));
  }
  return Bundle(b.space(), std::move(merged));
}

inline std::string bundle_to_string(const Bundle& b) {
  if (b.summands().empty()) return "0";
  std::string out;
  for (size_t i = 0; i < b.summands().size(); ++i) {
    const auto& s = b.summands()[i];
    if (i) out += " + ";
    if (s.multiplicity != 1) out += s.multiplicity.str() + "*";
    out += atom_to_string(s.atom);
  }
  return out;
}

inline std::string multidegree_to_string(const Multidegree& k) {
  std::string out = "(";
  for (size_t j = 0; j < k.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(k[j]);
  }
  out += ")";
  return out;
}

}  // namespace multicoh

#endif  // MULTICOH_PRINT_HPP
