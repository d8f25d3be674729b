#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace greenring {

/// Signed arbitrary-precision integer used for every multiplicity.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                            boost::multiprecision::et_off>;

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace greenring
