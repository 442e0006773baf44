#pragma once

#include <cstdint>
#include <span>

#include "orthoconn/rational.hpp"

namespace orthoconn {

/// Rising factorial a(a+1)...(a+n-1); 1 when n == 0.
///
/// Evaluated as the literal product, so negative-integer arguments give 0
/// once the product passes its zero factor.
Rational pochhammer(const Rational& a, std::uint32_t n);

/// Product of pochhammer(a_i, k) over the list; 1 for an empty list.
Rational pochhammer_list(std::span<const Rational> params, std::uint32_t k);

Rational factorial(std::uint32_t n);

/// n!/(k!(n-k)!); throws InvalidInput when k > n.
Rational binomial(std::uint32_t n, std::uint32_t k);

}  // namespace orthoconn
