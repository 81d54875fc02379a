#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "besselrad/interval.hpp"

namespace besselrad {

enum class Sign { Negative = -1, Zero = 0, Positive = 1, Unknown = 2 };

using SignOracle = std::function<Sign(const Rational&)>;

/// Sign-certified bisection for the unique root in `bracket`.
///
/// The endpoint signs must differ. At every step the midpoint is queried; an
/// Unknown verdict is retried at perturbed points (mid - w/4, mid + w/4,
/// mid - w/8), each of which keeps the shrink factor at or below 3/4.
/// Returns an enclosure of width <= width_goal whose endpoints were all
/// certified by the oracle (or a degenerate interval if the oracle reports
/// an exact zero).
///
/// Throws Error(BracketInvalid) for equal or undecidable endpoint signs and
/// Error(NoConvergence) when `max_steps` (default 4 * ceil(log2(w0/goal)))
/// is exhausted or all retries of one step are Unknown.
CertifiedInterval bisect_smallest_root(const SignOracle& oracle, const CertifiedInterval& bracket,
                                       const Rational& width_goal,
                                       std::optional<std::size_t> max_steps = std::nullopt);

}  // namespace besselrad
