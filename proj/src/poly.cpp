#include "orthoconn/poly.hpp"

#include <algorithm>

namespace orthoconn {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose_affine(const Rational& offset, const Rational& scale) const {
    // Horner with polynomial accumulator
    const Poly inner({offset, scale});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::compose_square() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> v(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(v));
}

}  // namespace orthoconn
