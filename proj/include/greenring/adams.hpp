#pragma once

#include "greenring/element.hpp"
#include "greenring/series.hpp"

namespace greenring {

/// psi^r on a(C_{2^n}) from the closed recursion: the identity for odd r,
/// psi^{2^i} for r = 2^i * (odd). Indices of e must not exceed 2^n.
GreenElement adams(const GroupContext& ctx, unsigned r, const GreenElement& e);

/// The series psi_t(e) = d/dt log lambda_t(e), coefficients 0..trunc.
/// Coefficient k equals (-1)^k psi^{k+1}(e).
GreenSeries psi_series(const GroupContext& ctx, const GreenElement& e, unsigned trunc);

/// psi^r(e) read off psi_series: (-1)^{r-1} times coefficient r-1.
GreenElement adams_via_series(const GroupContext& ctx, unsigned r, const GreenElement& e);

}  // namespace greenring
