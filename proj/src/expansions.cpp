#include "orthoconn/expansions.hpp"

#include <string>

#include "orthoconn/errors.hpp"
#include "orthoconn/exact_arith.hpp"

namespace orthoconn {

namespace {

Rational integer(std::uint32_t n) { return Rational(static_cast<long>(n)); }

Rational nonzero_divisor(const Rational& value, const char* what, std::uint32_t index) {
    if (value.is_zero()) throw PoleInParams(std::string(what) + " vanishes at index " + std::to_string(index));
    return value;
}

ParamList shifted(const ParamList& params, std::uint32_t k) {
    ParamList out;
    out.reserve(params.size());
    for (const auto& p : params) out.push_back(p + integer(k));
    return out;
}

ParamList concat(std::initializer_list<const ParamList*> lists) {
    ParamList out;
    for (const auto* l : lists) out.insert(out.end(), l->begin(), l->end());
    return out;
}

Rational checked_pochhammer_list(const ParamList& params, std::uint32_t k, const char* what) {
    const Rational v = pochhammer_list(params, k);
    if (v.is_zero()) throw DenominatorPole(std::string(what) + " vanishes at k = " + std::to_string(k));
    return v;
}

}  // namespace

CoeffSeq::CoeffSeq(std::initializer_list<std::pair<const std::uint32_t, Rational>> init) {
    for (const auto& [i, v] : init) set(i, v);
}

void CoeffSeq::set(std::uint32_t index, const Rational& value) {
    if (value.is_zero())
        terms_.erase(index);
    else
        terms_[index] = value;
}

Rational CoeffSeq::operator[](std::uint32_t index) const {
    const auto it = terms_.find(index);
    return it == terms_.end() ? Rational() : it->second;
}

std::optional<std::uint32_t> CoeffSeq::max_index() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational bilinear_lhs(const CoeffSeq& a, const CoeffSeq& b, const Rational& z, const Rational& w,
                      bool with_factorial) {
    const Rational zw = z * w;
    Rational sum;
    for (const auto& [m, am] : a.terms()) {
        const Rational bm = b[m];
        if (bm.is_zero()) continue;
        Rational term = am * bm * zw.pow(static_cast<int>(m));
        if (with_factorial) term /= factorial(m);
        sum += term;
    }
    return sum;
}

std::vector<Rational> shifted_outer_weights(const CoeffSeq& b, const Rational& c, const Rational& z) {
    const auto top = b.max_index();
    if (!top) return {};
    std::vector<Rational> weights(*top + 1);
    for (std::uint32_t n = 0; n <= *top; ++n) {
        Rational inner;
        const Rational nc = integer(n) + c;
        for (std::uint32_t j = 0; n + j <= *top; ++j) {
            const Rational bnj = b[n + j];
            if (bnj.is_zero()) continue;
            inner += pochhammer(nc, j) / factorial(j) * bnj * z.pow(static_cast<int>(j));
        }
        weights[n] = pochhammer(c, n) * (-z).pow(static_cast<int>(n)) / factorial(n) * inner;
    }
    return weights;
}

Poly shifted_inner_poly(const CoeffSeq& a, const Rational& c, std::uint32_t n) {
    std::vector<Rational> coeffs(n + 1);
    const Rational minus_n = -integer(n);
    for (std::uint32_t k = 0; k <= n; ++k) {
        const Rational ak = a[k];
        if (ak.is_zero()) continue;
        coeffs[k] = pochhammer(minus_n, k) / nonzero_divisor(pochhammer(c, k), "(c)_k", k) * ak;
    }
    return Poly(std::move(coeffs));
}

Rational bilinear_rhs_shifted(const CoeffSeq& a, const CoeffSeq& b, const Rational& c, const Rational& z,
                              const Rational& w) {
    if (const auto top_a = a.max_index()) {
        for (std::uint32_t k = 0; k <= *top_a; ++k) nonzero_divisor(pochhammer(c, k), "(c)_k", k);
    }
    const auto weights = shifted_outer_weights(b, c, z);
    Rational sum;
    for (std::uint32_t n = 0; n < weights.size(); ++n) {
        if (weights[n].is_zero()) continue;
        sum += weights[n] * shifted_inner_poly(a, c, n)(w);
    }
    return sum;
}

std::vector<Rational> jacobi_outer_weights(const CoeffSeq& b, const ExpansionParams& ep, const Rational& z) {
    const auto top = b.max_index();
    if (!top) return {};
    std::vector<Rational> weights(*top + 1);
    for (std::uint32_t n = 0; n <= *top; ++n) {
        const Rational head = nonzero_divisor(pochhammer(ep.gamma + integer(n), n), "(gamma+n)_n", n);
        const Rational shift = ep.gamma + integer(2 * n + 1);
        Rational inner;
        for (std::uint32_t r = 0; n + r <= *top; ++r) {
            const Rational div = nonzero_divisor(pochhammer(shift, r), "(gamma+2n+1)_r", r);
            const Rational bnr = b[n + r];
            if (bnr.is_zero()) continue;
            inner += pochhammer(ep.mu, n + r) * pochhammer(ep.theta, n + r) / (factorial(r) * div) * bnr *
                     z.pow(static_cast<int>(r));
        }
        weights[n] = (-z).pow(static_cast<int>(n)) / (factorial(n) * head) * inner;
    }
    return weights;
}

Poly jacobi_inner_poly(const CoeffSeq& a, const ExpansionParams& ep, std::uint32_t n) {
    std::vector<Rational> coeffs(n + 1);
    const Rational minus_n = -integer(n);
    const Rational ng = integer(n) + ep.gamma;
    for (std::uint32_t s = 0; s <= n; ++s) {
        const Rational div = nonzero_divisor(pochhammer(ep.mu, s), "(mu)_s", s) *
                             nonzero_divisor(pochhammer(ep.theta, s), "(theta)_s", s) * factorial(s);
        const Rational as = a[s];
        if (as.is_zero()) continue;
        coeffs[s] = pochhammer(minus_n, s) * pochhammer(ng, s) / div * as;
    }
    return Poly(std::move(coeffs));
}

Rational bilinear_rhs_jacobi(const CoeffSeq& a, const CoeffSeq& b, const ExpansionParams& ep, const Rational& z,
                              const Rational& w) {
    const auto weights = jacobi_outer_weights(b, ep, z);
    Rational sum;
    for (std::uint32_t n = 0; n < weights.size(); ++n) {
        const Poly inner = jacobi_inner_poly(a, ep, n);
        if (weights[n].is_zero()) continue;
        sum += weights[n] * inner(w);
    }
    return sum;
}

IdentityCheck terminating_product_expansion(const ProductInstance& inst) {
    const Rational minus_n = -integer(inst.n);
    IdentityCheck out;
    HypSeries lhs;
    lhs.numerators = concat({&inst.a, &inst.c});
    lhs.numerators.insert(lhs.numerators.begin(), minus_n);
    lhs.denominators = concat({&inst.b, &inst.d});
    lhs.argument = inst.z * inst.w;
    out.lhs = evaluate_terminating(lhs);

    for (std::uint32_t k = 0; k <= inst.n; ++k) {
        const Rational weight = binomial(inst.n, k) * pochhammer_list(inst.a, k) * pochhammer_list(inst.alpha, k) *
                                inst.z.pow(static_cast<int>(k)) /
                                (checked_pochhammer_list(inst.b, k, "[b]_k") *
                                 checked_pochhammer_list(inst.beta, k, "[beta]_k"));
        if (weight.is_zero()) continue;

        HypSeries first;
        const auto ka = shifted(inst.a, k);
        const auto kalpha = shifted(inst.alpha, k);
        first.numerators = concat({&ka, &kalpha});
        first.numerators.insert(first.numerators.begin(), integer(k) + minus_n);
        const auto kb = shifted(inst.b, k);
        const auto kbeta = shifted(inst.beta, k);
        first.denominators = concat({&kb, &kbeta});
        first.argument = inst.z;

        HypSeries second;
        second.numerators = concat({&inst.c, &inst.beta});
        second.numerators.insert(second.numerators.begin(), -integer(k));
        second.denominators = concat({&inst.d, &inst.alpha});
        second.argument = inst.w;

        out.rhs += weight * evaluate_terminating(first) * evaluate_terminating(second);
    }
    return out;
}

IdentityCheck outer_truncated_expansion(const OuterInstance& inst) {
    IdentityCheck out;
    HypSeries lhs;
    lhs.numerators = concat({&inst.a, &inst.c_list});
    lhs.denominators = concat({&inst.b, &inst.d});
    lhs.argument = inst.z * inst.w;
    // the a list alone must terminate the outer sum
    const std::uint32_t top = truncation_index(HypSeries{inst.a, {}, Rational()});
    out.lhs = evaluate_terminating(lhs);

    for (std::uint32_t n = 0; n <= top; ++n) {
        const Rational weight = pochhammer_list(inst.a, n) * pochhammer(inst.c, n) *
                                (-inst.z).pow(static_cast<int>(n)) /
                                (checked_pochhammer_list(inst.b, n, "[b]_n") * factorial(n));
        if (weight.is_zero()) continue;

        HypSeries first;
        first.numerators = shifted(inst.a, n);
        first.numerators.insert(first.numerators.begin(), integer(n) + inst.c);
        first.denominators = shifted(inst.b, n);
        first.argument = inst.z;

        HypSeries second;
        second.numerators = inst.c_list;
        second.numerators.insert(second.numerators.begin(), -integer(n));
        second.denominators = inst.d;
        second.denominators.insert(second.denominators.begin(), inst.c);
        second.argument = inst.w;

        out.rhs += weight * evaluate_terminating(first) * evaluate_terminating(second);
    }
    return out;
}

CoeffSeq hermite_bm_sequence(std::uint32_t p, BmForm form) {
    CoeffSeq b;
    const Rational two_p_fact = factorial(2 * p);
    for (std::uint32_t half = 0; half <= p; ++half) {
        const std::uint32_t m = 2 * p - 2 * half;
        Rational value = (half % 2 == 0 ? Rational(1) : Rational(-1)) * Rational(2).pow(static_cast<int>(m)) *
                         two_p_fact / factorial(half);
        if (form == BmForm::DividedByFactorial) value /= factorial(m);
        b.set(m, value);
    }
    return b;
}

std::vector<Rational> hermite_in_laguerre_via_expansion(std::uint32_t p) {
    // with a_k = 1/k! and c = 1 the inner polynomial is exactly L_n(x)
    return shifted_outer_weights(hermite_bm_sequence(p), Rational(1), Rational(1));
}

std::vector<Rational> hermite_in_shifted_jacobi_via_expansion(std::uint32_t p, const JacobiParams& jp) {
    const ExpansionParams ep{jp.lambda(), Rational(1), jp.beta() + Rational(1), Rational(1)};
    auto weights = jacobi_outer_weights(hermite_bm_sequence(p, BmForm::DividedByFactorial), ep, Rational(1));
    // inner sum is 2F1(-n, n+lambda; beta+1; x) = (-1)^n n! / (beta+1)_n * R_n(x)
    for (std::uint32_t n = 0; n < weights.size(); ++n) {
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        weights[n] *= sign * factorial(n) / pochhammer(ep.theta, n);
    }
    return weights;
}

}  // namespace orthoconn
