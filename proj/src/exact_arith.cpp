#include "orthoconn/exact_arith.hpp"

#include <string>

#include "orthoconn/errors.hpp"

namespace orthoconn {

Rational pochhammer(const Rational& a, std::uint32_t n) {
    Rational result(1);
    Rational factor = a;
    for (std::uint32_t i = 0; i < n; ++i) {
        result *= factor;
        if (result.is_zero()) return result;
        factor += Rational(1);
    }
    return result;
}

Rational pochhammer_list(std::span<const Rational> params, std::uint32_t k) {
    Rational result(1);
    for (const auto& a : params) {
        result *= pochhammer(a, k);
        if (result.is_zero()) break;
    }
    return result;
}

Rational factorial(std::uint32_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n)
        throw InvalidInput("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k > n");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

}  // namespace orthoconn
