#pragma once

#include <cstdint>

#include "orthoconn/poly.hpp"
#include "orthoconn/rational.hpp"

namespace orthoconn {

/// Jacobi parameters (alpha, beta); lambda = alpha + beta + 1.
class JacobiParams {
public:
    JacobiParams(Rational alpha, Rational beta)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), lambda_(alpha_ + beta_ + Rational(1)) {}

    [[nodiscard]] const Rational& alpha() const { return alpha_; }
    [[nodiscard]] const Rational& beta() const { return beta_; }
    [[nodiscard]] const Rational& lambda() const { return lambda_; }

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

private:
    Rational alpha_;
    Rational beta_;
    Rational lambda_;
};

/// L_n(x) = 1F1(-n; 1; x) = sum_k (-n)_k x^k / (k!)^2.  Parameter-free family.
Poly laguerre(std::uint32_t n);

/// Physicists' Hermite from the explicit sum
/// H_n = n! sum_k (-1)^k (2x)^(n-2k) / (k! (n-2k)!).
Poly hermite(std::uint32_t n);

/// Hermite built from the 1F1 representations in x^2:
/// H_2m = (-1)^m 4^m (1/2)_m 1F1(-m; 1/2; x^2),
/// H_2m+1 = (-1)^m 2^(2m+1) (3/2)_m x 1F1(-m; 3/2; x^2).
Poly hermite_via_1f1(std::uint32_t n);

/// R_n(x) = ((-1)^n (beta+1)_n / n!) 2F1(-n, n+lambda; beta+1; x).
/// DenominatorPole when beta is in {-1, ..., -n}.
Poly shifted_jacobi(std::uint32_t n, const JacobiParams& jp);

/// Standard Jacobi P_m^(alpha,beta) at 1 - x:
/// ((alpha+1)_m / m!) 2F1(-m, m+lambda; alpha+1; x/2).
/// DenominatorPole when alpha is in {-1, ..., -m}.
Poly jacobi_at_one_minus_x(std::uint32_t m, const JacobiParams& jp);

}  // namespace orthoconn
