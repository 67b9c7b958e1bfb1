#ifndef MULTICOH_SPACE_HPP
#define MULTICOH_SPACE_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace multicoh {

/// Ambient multiprojective space P^{n_1} x ... x P^{n_s}.
class Space {
 public:
  explicit Space(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("Space: needs at least one factor");
    for (int n : dims_)
      if (n < 1) throw std::invalid_argument("Space: every factor dimension must be >= 1");
    total_ = std::accumulate(dims_.begin(), dims_.end(), 0);
  }

  int factors() const { return static_cast<int>(dims_.size()); }
  int dim(int slot) const { return dims_.at(static_cast<size_t>(slot)); }
  const std::vector<int>& dims() const { return dims_; }

  /// Total dimension d = sum n_j.
  int total_dim() const { return total_; }

  int max_factor_dim() const {
    int m = 0;
    for (int n : dims_) m = std::max(m, n);
    return m;
  }

  friend bool operator==(const Space& a, const Space& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<int> dims_;
  int total_ = 0;
};

/// Integer twist vector (k_1,...,k_s), one entry per factor.
using Multidegree = std::vector<long long>;

inline void check_arity(const Space& space, const Multidegree& k, const char* what) {
  if (static_cast<int>(k.size()) != space.factors())
    throw std::invalid_argument(std::string(what) + ": arity does not match space");
}

inline Multidegree balanced(const Space& space, long long t) {
  return Multidegree(static_cast<size_t>(space.factors()), t);
}

/// Canonical multidegree (-n_1-1,...,-n_s-1) of the dualizing sheaf.
inline Multidegree canonical_multidegree(const Space& space) {
  Multidegree w;
  w.reserve(static_cast<size_t>(space.factors()));
  for (int n : space.dims()) w.push_back(-static_cast<long long>(n) - 1);
  return w;
}

}  // namespace multicoh

#endif  // MULTICOH_SPACE_HPP
