#include "greenring/series.hpp"

#include <stdexcept>
#include <string>

#include "greenring/core.hpp"
#include "greenring/powers.hpp"

namespace greenring {

GreenSeries::GreenSeries(unsigned trunc) : coeffs_(std::size_t{trunc} + 1) {}

GreenSeries::GreenSeries(std::vector<GreenElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("GreenSeries: need at least the constant coefficient");
}

GreenSeries GreenSeries::unit(unsigned trunc) {
  GreenSeries s(trunc);
  s[0] = from_indec(1);
  return s;
}

GreenSeries GreenSeries::truncated(unsigned new_trunc) const {
  GreenSeries out(new_trunc);
  for (unsigned r = 0; r <= new_trunc && r <= trunc(); ++r) out[r] = coeffs_[r];
  return out;
}

namespace {

void require_same_trunc(const GreenSeries& a, const GreenSeries& b, const char* op) {
  if (a.trunc() != b.trunc())
    throw std::invalid_argument(std::string(op) + ": truncation mismatch (" +
                                std::to_string(a.trunc()) + " vs " + std::to_string(b.trunc()) + ")");
}

}  // namespace

GreenSeries& GreenSeries::operator+=(const GreenSeries& other) {
  require_same_trunc(*this, other, "series addition");
  for (unsigned r = 0; r <= trunc(); ++r) coeffs_[r] += other.coeffs_[r];
  return *this;
}

GreenSeries& GreenSeries::operator-=(const GreenSeries& other) {
  require_same_trunc(*this, other, "series subtraction");
  for (unsigned r = 0; r <= trunc(); ++r) coeffs_[r] -= other.coeffs_[r];
  return *this;
}

GreenSeries GreenSeries::operator-() const {
  GreenSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GreenSeries mul(const GreenSeries& a, const GreenSeries& b) {
  require_same_trunc(a, b, "mul");
  const unsigned trunc = a.trunc();
  GreenSeries out(trunc);
  for (unsigned i = 0; i <= trunc; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= trunc; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += tensor(a[i], b[j]);
    }
  }
  return out;
}

GreenSeries power(const GreenSeries& a, const BigInt& k) {
  if (k < 0) throw std::invalid_argument("series power: negative exponent");
  GreenSeries result = GreenSeries::unit(a.trunc());
  GreenSeries base = a;
  BigInt e = k;
  while (e != 0) {
    if ((e & 1) != 0) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

GreenSeries inverse(const GreenSeries& a) {
  const GreenElement& c0 = a[0];
  const GreenElement one = from_indec(1);
  if (c0 != one && c0 != -one)
    throw std::invalid_argument("inverse: constant coefficient must be V1 or -V1, got " + to_string(c0));
  // c0 is its own inverse, because V_1 is the ring unit.
  GreenSeries b(a.trunc());
  b[0] = c0;
  for (unsigned r = 1; r <= a.trunc(); ++r) {
    GreenElement sum;
    for (unsigned i = 1; i <= r; ++i)
      if (!a[i].is_zero() && !b[r - i].is_zero()) sum += tensor(a[i], b[r - i]);
    b[r] = c0 == one ? -sum : sum;
  }
  return b;
}

GreenSeries derivative(const GreenSeries& a) {
  if (a.trunc() == 0) return GreenSeries(0);
  GreenSeries out(a.trunc() - 1);
  for (unsigned r = 0; r + 1 <= a.trunc(); ++r) out[r] = a[r + 1] * BigInt(r + 1);
  return out;
}

GreenSeries substitute_t_squared(const GreenSeries& a, unsigned trunc) {
  GreenSeries out(trunc);
  for (unsigned r = 0; 2 * r <= trunc && r <= a.trunc(); ++r) out[2 * r] = a[r];
  return out;
}

bool check_kouwenhoven(unsigned q, unsigned trunc) {
  if (q < 2 || (q & (q - 1)) != 0)
    throw std::invalid_argument("check_kouwenhoven: q must be a power of two >= 2");
  if (trunc < 3)
    throw std::invalid_argument("check_kouwenhoven: truncation must be at least 3 to witness the t^2 term");
  const GroupContext ctx(ceil_log2(2 * q));
  const GreenSeries upper = exterior_series(from_indec(q + 1), trunc, ctx);
  const GreenSeries lower = exterior_series(from_indec(q - 1), trunc, ctx);
  const GreenSeries lhs = mul(upper, inverse(lower));

  GreenSeries expected(trunc);
  expected[0] = from_indec(1);
  expected[1] = from_indec(q + 1) - from_indec(q - 1);
  expected[2] = from_indec(1);
  return lhs == expected;
}

}  // namespace greenring
