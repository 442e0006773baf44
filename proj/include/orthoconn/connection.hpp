#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthoconn/hypseries.hpp"
#include "orthoconn/poly.hpp"
#include "orthoconn/polybases.hpp"

namespace orthoconn {

namespace basis {
struct Monomial {
    friend bool operator==(const Monomial&, const Monomial&) = default;
};
struct Hermite {
    friend bool operator==(const Hermite&, const Hermite&) = default;
};
struct Laguerre {
    friend bool operator==(const Laguerre&, const Laguerre&) = default;
};
struct ShiftedJacobi {
    JacobiParams params;
    friend bool operator==(const ShiftedJacobi&, const ShiftedJacobi&) = default;
};
struct JacobiAtOneMinusX {
    JacobiParams params;
    friend bool operator==(const JacobiAtOneMinusX&, const JacobiAtOneMinusX&) = default;
};
}  // namespace basis

/// A graded polynomial family: member k has exact degree k.
using BasisId = std::variant<basis::Monomial, basis::Hermite, basis::Laguerre, basis::ShiftedJacobi,
                             basis::JacobiAtOneMinusX>;

/// Short stable name: "monomial", "hermite", "laguerre", "shifted-jacobi", "jacobi-1mx".
std::string basis_name(const BasisId& b);
std::optional<JacobiParams> basis_params(const BasisId& b);

/// Degree-k member of the family.
Poly basis_member(const BasisId& b, std::uint32_t k);

enum class Provenance { Thm31, Thm32, Thm33Interpreted, Thm33Corrected, Thm34, Oracle };

std::string to_string(Provenance p);

struct ConnectionResult {
    BasisId source;
    BasisId target;
    std::uint32_t degree = 0;
    std::vector<Rational> coefficients;  ///< index k multiplies target member k
    Provenance provenance = Provenance::Oracle;
};

/// sum_k coefficients[k] * target_k
Poly reconstruct(const BasisId& target, std::span<const Rational> coefficients);

/// Brute-force basis conversion by triangular back-substitution in the
/// monomial basis. The result's source is reported as Monomial.
ConnectionResult connection_oracle(const Poly& p, const BasisId& target);

/// Laguerre L_n in Hermite: (-n)_k / (2^k k!^2) 2F2((k-n)/2, (k+1-n)/2; (k+1)/2, (k+2)/2; 1/4).
Rational coeff_laguerre_in_hermite(std::uint32_t n, std::uint32_t k);

/// Hermite H_N in Laguerre:
/// N! 2^N 2F2(-(N-m)/2, -(N-m-1)/2; -N/2, -(N-1)/2; -1/4) (-N)_m / m!.
Rational coeff_hermite_in_laguerre(std::uint32_t big_n, std::uint32_t m);

/// Shifted Jacobi R_n in Hermite, coefficient of H_j.
Rational coeff_shifted_jacobi_in_hermite(std::uint32_t n, const JacobiParams& jp, std::uint32_t j);

/// Hermite H_n in P_m(1-x), closed form with the 4F2 argument 1/4 as
/// published. Disagrees with the oracle for n >= 2; see the discrepancy
/// report produced by verify_theorem(TheoremId::Thm33).
Rational coeff_hermite_in_shifted_jacobi(std::uint32_t n, const JacobiParams& jp, std::uint32_t m);

/// Same closed form with the 4F2 argument -1/4, which reproduces the oracle.
Rational coeff_hermite_in_shifted_jacobi_corrected(std::uint32_t n, const JacobiParams& jp, std::uint32_t m);

/// [(phi+0)/r, (phi+1)/r, ..., (phi+r-1)/r]
ParamList delta_params(std::uint32_t r, const Rational& phi);

/// Full closed-form coefficient list for one of the supported pairs:
/// Laguerre->Hermite, Hermite->Laguerre, ShiftedJacobi->Hermite,
/// Hermite->JacobiAtOneMinusX. Anything else is UnsupportedPair.
ConnectionResult closed_form_connection(const BasisId& source, const BasisId& target, std::uint32_t n);

enum class TheoremId { Thm31, Thm32, Thm33, Thm33Corrected, Thm34 };

std::string to_string(TheoremId t);
/// Accepts "3.1", "3.2", "3.3", "3.3c", "3.4".
TheoremId parse_theorem_id(const std::string& text);

enum class VerifyMethod { Closed, Oracle, Both };

struct VerificationEntry {
    std::uint32_t degree = 0;
    std::optional<JacobiParams> params;
    bool match = false;
    std::optional<std::uint32_t> first_mismatch;  ///< first k where closed form != oracle
    Poly residual;                                ///< reconstruction minus source
    std::vector<Rational> closed;
    std::vector<Rational> oracle;
    std::optional<std::string> error;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::Thm31;
    VerifyMethod method = VerifyMethod::Both;
    std::vector<JacobiParams> params;
    std::vector<VerificationEntry> entries;

    /// Pass iff every entry matched with zero residual.
    [[nodiscard]] bool passed() const;
    [[nodiscard]] const VerificationEntry* first_failure() const;
};

/// The Jacobi sweep set {(0,0), (1/2,1/2), (1,2), (-1/2,1/3)}.
std::vector<JacobiParams> default_jacobi_params();

/// Sweeps n = 0..n_max (times every parameter set for the Jacobi theorems)
/// and records exact reconstruction residuals. Per-entry construction errors
/// are captured, not rethrown.
VerificationReport verify_theorem(TheoremId theorem, std::uint32_t n_max, std::vector<JacobiParams> params = {},
                                  VerifyMethod method = VerifyMethod::Both);

}  // namespace orthoconn
