#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "designlab/lattices.hpp"

namespace designlab::lattices::detail {

/// Fincke-Pohst enumeration of lattice coordinate vectors with norm <= bound.
/// Norms are handled as integers scaled by the lcm of the Gram denominators.
class Enumerator {
 public:
  using Visitor = std::function<void(const IntVec&, long scaled_norm)>;

  explicit Enumerator(const Lattice& l);
  long scale() const { return scale_; }
  long scaled_norm(const IntVec& v) const;
  /// Inclusive range of the outermost coordinate for the given bound.
  std::pair<long, long> top_range(long scaled_bound) const;
  /// Visits every v with scaled norm <= scaled_bound whose last coordinate lies in [top_lo, top_hi].
  void run(long scaled_bound, long top_lo, long top_hi, const Visitor& visit) const;

 private:
  double search_bound(long scaled_bound) const;

  int n_;
  long scale_ = 1;
  std::vector<std::vector<long>> gi_;
  std::vector<std::vector<double>> q_;
};

}  // namespace designlab::lattices::detail
