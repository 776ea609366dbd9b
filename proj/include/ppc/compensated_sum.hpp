#pragma once

namespace ppc {

/// Neumaier's variant of Kahan summation. The running error of a sum of k
/// terms stays within a few ulps of the result instead of growing with k.
template <typename Real>
struct CompensatedSum {
  Real sum = Real{0};
  Real compensation = Real{0};

  void operator+=(Real value) {
    const Real t = sum + value;
    if ((sum < 0 ? -sum : sum) >= (value < 0 ? -value : value))
      compensation += (sum - t) + value;
    else
      compensation += (value - t) + sum;
    sum = t;
  }

  Real value() const { return sum + compensation; }
};

}  // namespace ppc
