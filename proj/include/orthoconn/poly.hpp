#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "orthoconn/rational.hpp"

namespace orthoconn {

/// Dense polynomial over Q in the monomial basis; coeffs()[i] multiplies x^i.
///
/// Always trimmed: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing (degree() == kZeroDegree).
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly monomial(const Rational& c, std::size_t power);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    [[nodiscard]] Rational coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    [[nodiscard]] Rational leading() const;

    [[nodiscard]] Rational operator()(const Rational& x) const;

    /// p(offset + scale*x)
    [[nodiscard]] Poly compose_affine(const Rational& offset, const Rational& scale) const;
    /// p(x^2)
    [[nodiscard]] Poly compose_square() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
    friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace orthoconn
