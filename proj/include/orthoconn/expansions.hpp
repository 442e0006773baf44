#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orthoconn/hypseries.hpp"
#include "orthoconn/poly.hpp"
#include "orthoconn/polybases.hpp"
#include "orthoconn/rational.hpp"

namespace orthoconn {

/// Finite-support sequence index -> value; absent indices read as zero.
class CoeffSeq {
public:
    CoeffSeq() = default;
    CoeffSeq(std::initializer_list<std::pair<const std::uint32_t, Rational>> init);

    static CoeffSeq delta(std::uint32_t index) { return CoeffSeq{{index, Rational(1)}}; }

    void set(std::uint32_t index, const Rational& value);
    [[nodiscard]] Rational operator[](std::uint32_t index) const;
    [[nodiscard]] std::optional<std::uint32_t> max_index() const;
    [[nodiscard]] const std::map<std::uint32_t, Rational>& terms() const { return terms_; }

    friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;

private:
    std::map<std::uint32_t, Rational> terms_;  // zeros never stored
};

/// gamma, mu, theta belong to the Jacobi-form expansion, c to the shifted form.
struct ExpansionParams {
    Rational gamma{1};
    Rational mu{1};
    Rational theta{1};
    Rational c{1};
};

/// sum_m a_m b_m (zw)^m, divided by m! when with_factorial.
Rational bilinear_lhs(const CoeffSeq& a, const CoeffSeq& b, const Rational& z, const Rational& w,
                      bool with_factorial);

/// Outer weights W_n = (c)_n (-z)^n / n! * sum_j (n+c)_j / j! b_(n+j) z^j, n = 0..max(b).
std::vector<Rational> shifted_outer_weights(const CoeffSeq& b, const Rational& c, const Rational& z);

/// Inner polynomial sum_(k<=n) (-n)_k / (c)_k a_k x^k.
Poly shifted_inner_poly(const CoeffSeq& a, const Rational& c, std::uint32_t n);

/// Right side of the c-parametrised bilinear expansion:
/// sum_n W_n * sum_k (-n)_k / (c)_k a_k w^k.  PoleInParams if (c)_k = 0 for k <= max(a).
Rational bilinear_rhs_shifted(const CoeffSeq& a, const CoeffSeq& b, const Rational& c, const Rational& z,
                              const Rational& w);

/// V_n = (-z)^n / (n! (gamma+n)_n) * sum_r (mu)_(n+r) (theta)_(n+r) / (r! (gamma+2n+1)_r) b_(n+r) z^r.
std::vector<Rational> jacobi_outer_weights(const CoeffSeq& b, const ExpansionParams& ep, const Rational& z);

/// sum_(s<=n) (-n)_s (n+gamma)_s / (s! (mu)_s (theta)_s) a_s x^s
Poly jacobi_inner_poly(const CoeffSeq& a, const ExpansionParams& ep, std::uint32_t n);

/// Right side of the (gamma, mu, theta) bilinear expansion; truncates by the support of b.
Rational bilinear_rhs_jacobi(const CoeffSeq& a, const CoeffSeq& b, const ExpansionParams& ep, const Rational& z,
                              const Rational& w);

struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    [[nodiscard]] bool equal() const { return lhs == rhs; }
};

/// Terminating Fields-Wimp expansion of F(-n, [a], [c]; [b], [d]; zw) through
/// the auxiliary lists [alpha], [beta].
struct ProductInstance {
    std::uint32_t n = 0;
    ParamList a, b, c, d, alpha, beta;
    Rational z;
    Rational w;
};

IdentityCheck terminating_product_expansion(const ProductInstance& inst);

/// Fields-Wimp expansion of F([a], [c_list]; [b], [d]; zw) about the scalar c.
/// The a list must hold a nonpositive integer so the outer sum is finite.
struct OuterInstance {
    ParamList a, b, c_list, d;
    Rational c;
    Rational z;
    Rational w;
};

IdentityCheck outer_truncated_expansion(const OuterInstance& inst);

enum class BmForm {
    Plain,             ///< (-1)^((2p-m)/2) 2^m (2p)! / ((2p-m)/2)!
    DividedByFactorial ///< same, additionally divided by m!
};

/// Hermite coefficient sequence b_m supported on m = 2p, 2p-2, ..., 0.
CoeffSeq hermite_bm_sequence(std::uint32_t p, BmForm form = BmForm::Plain);

/// Laguerre coefficients of H_2p obtained by pushing hermite_bm_sequence(p)
/// through the c-expansion with a_m = 1/m!, c = 1, z = 1, w = x.
std::vector<Rational> hermite_in_laguerre_via_expansion(std::uint32_t p);

/// Shifted-Jacobi coefficients of H_2p via the (gamma, mu, theta) expansion with
/// a_s = s!, gamma = lambda, mu = 1, theta = beta + 1, z = 1, w = x.
std::vector<Rational> hermite_in_shifted_jacobi_via_expansion(std::uint32_t p, const JacobiParams& jp);

}  // namespace orthoconn
