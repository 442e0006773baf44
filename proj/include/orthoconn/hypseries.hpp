#pragma once

#include <cstdint>
#include <vector>

#include "orthoconn/rational.hpp"

namespace orthoconn {

using ParamList = std::vector<Rational>;

/// pFq descriptor: numerator parameters, denominator parameters and argument.
struct HypSeries {
    ParamList numerators;
    ParamList denominators;
    Rational argument;

    /// True when some numerator parameter is a nonpositive integer.
    [[nodiscard]] bool is_terminating() const;

    friend bool operator==(const HypSeries&, const HypSeries&) = default;
};

/// K = min{-a : a a nonpositive-integer numerator}; throws NonTerminating otherwise.
std::uint32_t truncation_index(const HypSeries& s);

/// Coefficients t_0..t_K of the terminating series as a polynomial in its
/// argument: t_k = [a]_k / ([b]_k k!).
///
/// Summation stops at the first numerator zero K. A denominator parameter
/// -j with j < K is a pole inside the range and raises DenominatorPole;
/// poles at or past K are never reached.
std::vector<Rational> term_coefficients(const ParamList& numerators, const ParamList& denominators);

/// Exact value of a terminating series under the truncation policy above.
Rational evaluate_terminating(const HypSeries& s);

/// Even/odd decomposition of a pFq into two 2pF(2q+1) series in
/// 4^(p-q-1) x^2:  F(x) = even(x) + odd_prefactor * x * odd(x).
struct EvenOddSplit {
    HypSeries even;
    Rational odd_prefactor;  ///< prod(a_i) / prod(b_i)
    HypSeries odd;
    Rational original_argument;

    /// even + odd_prefactor * x * odd, skipping the odd series when its
    /// weight vanishes (it need not terminate then, e.g. all a_i = 0).
    [[nodiscard]] Rational evaluate() const;
};

/// Throws ZeroDenominatorParameter if some b_i == 0.
EvenOddSplit split_even_odd(const HypSeries& s);

}  // namespace orthoconn
