#pragma once

#include <vector>

#include "greenring/element.hpp"

namespace greenring {

/// Truncated power series sum_{r <= trunc} c_r t^r over the Green ring.
class GreenSeries {
 public:
  /// Zero series with coefficients 0..trunc.
  explicit GreenSeries(unsigned trunc = 0);
  /// Takes coefficients c_0..c_k; trunc becomes k. At least one coefficient.
  explicit GreenSeries(std::vector<GreenElement> coeffs);

  /// 1 = V_1 t^0.
  static GreenSeries unit(unsigned trunc);

  unsigned trunc() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const GreenElement& operator[](unsigned r) const { return coeffs_.at(r); }
  GreenElement& operator[](unsigned r) { return coeffs_.at(r); }
  const std::vector<GreenElement>& coeffs() const noexcept { return coeffs_; }

  /// Explicit re-truncation (drops or zero-pads high coefficients).
  GreenSeries truncated(unsigned new_trunc) const;

  GreenSeries& operator+=(const GreenSeries& other);
  GreenSeries& operator-=(const GreenSeries& other);
  GreenSeries operator-() const;

  friend GreenSeries operator+(GreenSeries a, const GreenSeries& b) { return a += b; }
  friend GreenSeries operator-(GreenSeries a, const GreenSeries& b) { return a -= b; }
  friend bool operator==(const GreenSeries&, const GreenSeries&) = default;

 private:
  std::vector<GreenElement> coeffs_;
};

/// Cauchy product; both operands must share trunc.
GreenSeries mul(const GreenSeries& a, const GreenSeries& b);

/// a^k by repeated squaring (k >= 0).
GreenSeries power(const GreenSeries& a, const BigInt& k);

/// Multiplicative inverse; the constant coefficient must be V_1 or -V_1.
GreenSeries inverse(const GreenSeries& a);

/// Formal derivative; the truncation drops by one (trunc 0 gives the zero
/// series at trunc 0).
GreenSeries derivative(const GreenSeries& a);

/// a(t^2) truncated to `trunc`.
GreenSeries substitute_t_squared(const GreenSeries& a, unsigned trunc);

/// Checks lambda_t(V_{q+1} - V_{q-1}) = 1 + (V_{q+1} - V_{q-1}) t + t^2
/// exactly up to `trunc`. q must be a power of two >= 2 and trunc >= 3.
bool check_kouwenhoven(unsigned q, unsigned trunc);

}  // namespace greenring
