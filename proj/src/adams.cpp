#include "greenring/adams.hpp"

#include <stdexcept>
#include <string>

#include "greenring/powers.hpp"
#include "memo.hpp"

namespace greenring {

namespace {

void require_within(const GroupContext& ctx, const GreenElement& e, const char* op) {
  if (e.max_index() > ctx.order())
    throw std::invalid_argument(std::string(op) + ": index " + std::to_string(e.max_index()) +
                                " exceeds the group order " + std::to_string(ctx.order()));
}

// psi^{2^i}(V_j), i >= 1. With j = 2^m + s, 1 <= s <= 2^m:
//   psi^2(V_j)       = 2 V_{2^{m+1}} - 2 V_{2^{m+1}-s} + psi^2(V_{2^m-s})
//   psi^{2^i}(V_j)   = 2 psi^{2^{i-1}}(V_s) + psi^{2^i}(V_{2^m-s}),  i >= 2
const GreenElement& power_of_two_adams(unsigned i, Index j) {
  static detail::MemoTable<GreenElement> memo;
  static const GreenElement zero;
  if (j == 0) return zero;
  const std::uint64_t key = detail::pair_key(i, j);
  if (const auto* hit = memo.find(key)) return *hit;

  GreenElement result;
  if (j == 1) {
    result = from_indec(1);
  } else {
    const unsigned m = ceil_log2(j) - 1;  // 2^m < j <= 2^{m+1}
    const Index low = Index{1} << m;
    const Index s = j - low;
    if (i == 1) {
      result.add_term(2 * low, 2);
      result.add_term(2 * low - s, -2);
      result += power_of_two_adams(1, low - s);
    } else {
      result = power_of_two_adams(i - 1, s) * BigInt(2);
      result += power_of_two_adams(i, low - s);
    }
  }
  return memo.insert(key, std::move(result));
}

}  // namespace

GreenElement adams(const GroupContext& ctx, unsigned r, const GreenElement& e) {
  if (r == 0) throw std::invalid_argument("adams: r must be positive");
  require_within(ctx, e, "adams");
  unsigned twos = 0;
  while (r % 2 == 0) {
    r /= 2;
    ++twos;
  }
  if (twos == 0) return e;
  GreenElement result;
  for (const auto& [j, mult] : e.terms()) result += power_of_two_adams(twos, j) * mult;
  return result;
}

GreenSeries psi_series(const GroupContext& ctx, const GreenElement& e, unsigned trunc) {
  const GreenSeries lambda = exterior_series(e, trunc + 1, ctx);
  return mul(derivative(lambda), inverse(lambda.truncated(trunc)));
}

GreenElement adams_via_series(const GroupContext& ctx, unsigned r, const GreenElement& e) {
  if (r == 0) throw std::invalid_argument("adams_via_series: r must be positive");
  const GreenSeries psi = psi_series(ctx, e, r - 1);
  return r % 2 == 1 ? psi[r - 1] : -psi[r - 1];
}

}  // namespace greenring
