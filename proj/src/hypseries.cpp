#include "orthoconn/hypseries.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "orthoconn/errors.hpp"

namespace orthoconn {

namespace {

std::optional<std::uint32_t> first_numerator_zero(const ParamList& numerators) {
    std::optional<std::uint32_t> k;
    for (const auto& a : numerators) {
        if (!a.is_nonpositive_integer()) continue;
        const auto idx = static_cast<std::uint32_t>(-a.to_int64());
        k = k ? std::min(*k, idx) : idx;
    }
    return k;
}

std::string describe(const ParamList& params) {
    std::string out = "[";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += params[i].str();
    }
    return out + "]";
}

void check_denominator_poles(const ParamList& denominators, std::uint32_t k_max) {
    for (const auto& b : denominators) {
        if (b.is_nonpositive_integer() && static_cast<std::uint64_t>(-b.to_int64()) < k_max)
            throw DenominatorPole("denominator parameter " + b.str() + " vanishes inside the summation range 0.." +
                                  std::to_string(k_max));
    }
}

}  // namespace

bool HypSeries::is_terminating() const { return first_numerator_zero(numerators).has_value(); }

std::uint32_t truncation_index(const HypSeries& s) {
    const auto k = first_numerator_zero(s.numerators);
    if (!k) throw NonTerminating("series with numerators " + describe(s.numerators) + " does not terminate");
    return *k;
}

std::vector<Rational> term_coefficients(const ParamList& numerators, const ParamList& denominators) {
    const auto k = first_numerator_zero(numerators);
    if (!k) throw NonTerminating("series with numerators " + describe(numerators) + " does not terminate");
    const std::uint32_t last = *k;
    check_denominator_poles(denominators, last);

    std::vector<Rational> terms;
    terms.reserve(last + 1);
    Rational term(1);
    terms.push_back(term);
    // term_{k+1} = term_k * prod(a+k) / (prod(b+k) (k+1)); the loop never forms the ratio past K
    for (std::uint32_t i = 0; i < last; ++i) {
        const Rational shift(static_cast<long>(i));
        for (const auto& a : numerators) term *= a + shift;
        for (const auto& b : denominators) term /= b + shift;
        term /= Rational(static_cast<long>(i) + 1);
        terms.push_back(term);
    }
    return terms;
}

Rational evaluate_terminating(const HypSeries& s) {
    const auto terms = term_coefficients(s.numerators, s.denominators);
    // Horner in the argument
    Rational sum;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum = sum * s.argument + *it;
    return sum;
}

Rational EvenOddSplit::evaluate() const {
    Rational value = evaluate_terminating(even);
    const Rational weight = odd_prefactor * original_argument;
    if (!weight.is_zero()) value += weight * evaluate_terminating(odd);
    return value;
}

EvenOddSplit split_even_odd(const HypSeries& s) {
    const Rational half(1, 2);
    Rational num_product(1);
    Rational den_product(1);
    for (const auto& a : s.numerators) num_product *= a;
    for (const auto& b : s.denominators) {
        if (b.is_zero()) throw ZeroDenominatorParameter("denominator parameter 0 in even/odd split");
        den_product *= b;
    }

    EvenOddSplit out;
    const auto p = static_cast<int>(s.numerators.size());
    const auto q = static_cast<int>(s.denominators.size());
    const Rational scaled = Rational(4).pow(p - q - 1) * s.argument * s.argument;

    out.even.argument = scaled;
    out.odd.argument = scaled;
    for (const auto& a : s.numerators) out.even.numerators.push_back(a * half);
    for (const auto& a : s.numerators) out.even.numerators.push_back((a + 1) * half);
    out.even.denominators.push_back(half);
    for (const auto& b : s.denominators) out.even.denominators.push_back(b * half);
    for (const auto& b : s.denominators) out.even.denominators.push_back((b + 1) * half);

    for (const auto& a : s.numerators) out.odd.numerators.push_back((a + 1) * half);
    for (const auto& a : s.numerators) out.odd.numerators.push_back((a + 2) * half);
    out.odd.denominators.push_back(Rational(3, 2));
    for (const auto& b : s.denominators) out.odd.denominators.push_back((b + 1) * half);
    for (const auto& b : s.denominators) out.odd.denominators.push_back((b + 2) * half);

    out.odd_prefactor = num_product / den_product;
    out.original_argument = s.argument;
    return out;
}

}  // namespace orthoconn
