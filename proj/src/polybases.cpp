#include "orthoconn/polybases.hpp"

#include "orthoconn/exact_arith.hpp"
#include "orthoconn/hypseries.hpp"

namespace orthoconn {

namespace {

/// prefactor * sum_k t_k (scale x)^k for a terminating series in scale*x.
Poly series_poly(const ParamList& numerators, const ParamList& denominators, const Rational& scale,
                 const Rational& prefactor) {
    auto terms = term_coefficients(numerators, denominators);
    Rational power(1);
    for (auto& t : terms) {
        t *= prefactor * power;
        power *= scale;
    }
    return Poly(std::move(terms));
}

Rational sign_power(std::uint32_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Poly laguerre(std::uint32_t n) {
    std::vector<Rational> c(n + 1);
    const Rational minus_n(-static_cast<long>(n));
    for (std::uint32_t k = 0; k <= n; ++k) {
        const Rational kf = factorial(k);
        c[k] = pochhammer(minus_n, k) / (kf * kf);
    }
    return Poly(std::move(c));
}

Poly hermite(std::uint32_t n) {
    std::vector<Rational> c(n + 1);
    const Rational nf = factorial(n);
    for (std::uint32_t k = 0; 2 * k <= n; ++k) {
        const std::uint32_t power = n - 2 * k;
        c[power] = nf * sign_power(k) * Rational(2).pow(static_cast<int>(power)) / (factorial(k) * factorial(power));
    }
    return Poly(std::move(c));
}

Poly hermite_via_1f1(std::uint32_t n) {
    const std::uint32_t m = n / 2;
    const Rational minus_m(-static_cast<long>(m));
    if (n % 2 == 0) {
        const Rational half(1, 2);
        const Rational pre = sign_power(m) * Rational(2).pow(static_cast<int>(2 * m)) * pochhammer(half, m);
        return series_poly({minus_m}, {half}, Rational(1), pre).compose_square();
    }
    const Rational three_halves(3, 2);
    const Rational pre = sign_power(m) * Rational(2).pow(static_cast<int>(2 * m + 1)) * pochhammer(three_halves, m);
    return series_poly({minus_m}, {three_halves}, Rational(1), pre).compose_square() * Poly({Rational(0), Rational(1)});
}

Poly shifted_jacobi(std::uint32_t n, const JacobiParams& jp) {
    const Rational nn(static_cast<long>(n));
    const Rational b1 = jp.beta() + Rational(1);
    const Rational pre = sign_power(n) * pochhammer(b1, n) / factorial(n);
    return series_poly({-nn, nn + jp.lambda()}, {b1}, Rational(1), pre);
}

Poly jacobi_at_one_minus_x(std::uint32_t m, const JacobiParams& jp) {
    const Rational mm(static_cast<long>(m));
    const Rational a1 = jp.alpha() + Rational(1);
    const Rational pre = pochhammer(a1, m) / factorial(m);
    return series_poly({-mm, mm + jp.lambda()}, {a1}, Rational(1, 2), pre);
}

}  // namespace orthoconn
