#include "orthoconn/connection.hpp"

#include <string>

#include "orthoconn/errors.hpp"
#include "orthoconn/exact_arith.hpp"

namespace orthoconn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational sign_power(std::uint32_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Rational integer(std::uint32_t n) { return Rational(static_cast<long>(n)); }

void require_index(std::uint32_t n, std::uint32_t k, const char* what) {
    if (k > n)
        throw InvalidInput(std::string(what) + ": index " + std::to_string(k) + " exceeds degree " + std::to_string(n));
}

/// beta+1 must not be in {0, -1, ..., -(n-1)}.
void require_no_pole(const Rational& shifted, std::uint32_t n, const char* name) {
    if (pochhammer(shifted, n).is_zero())
        throw DenominatorPole(std::string(name) + " = " + shifted.str() + " hits a pole for degree " +
                              std::to_string(n));
}

Poly source_poly(TheoremId t, std::uint32_t n, const std::optional<JacobiParams>& jp) {
    switch (t) {
        case TheoremId::Thm31: return laguerre(n);
        case TheoremId::Thm32:
        case TheoremId::Thm33:
        case TheoremId::Thm33Corrected: return hermite(n);
        case TheoremId::Thm34: return shifted_jacobi(n, *jp);
    }
    throw InvalidInput("unknown theorem");
}

BasisId target_basis(TheoremId t, const std::optional<JacobiParams>& jp) {
    switch (t) {
        case TheoremId::Thm31:
        case TheoremId::Thm34: return basis::Hermite{};
        case TheoremId::Thm32: return basis::Laguerre{};
        case TheoremId::Thm33:
        case TheoremId::Thm33Corrected: return basis::JacobiAtOneMinusX{*jp};
    }
    throw InvalidInput("unknown theorem");
}

BasisId source_basis(TheoremId t, const std::optional<JacobiParams>& jp) {
    switch (t) {
        case TheoremId::Thm31: return basis::Laguerre{};
        case TheoremId::Thm32:
        case TheoremId::Thm33:
        case TheoremId::Thm33Corrected: return basis::Hermite{};
        case TheoremId::Thm34: return basis::ShiftedJacobi{*jp};
    }
    throw InvalidInput("unknown theorem");
}

bool uses_jacobi_params(TheoremId t) { return t == TheoremId::Thm33 || t == TheoremId::Thm33Corrected || t == TheoremId::Thm34; }

Rational hermite_in_jacobi(std::uint32_t n, const JacobiParams& jp, std::uint32_t m, const Rational& argument) {
    require_index(n, m, "coeff_hermite_in_shifted_jacobi");
    const Rational alpha1 = jp.alpha() + Rational(1);
    const Rational& lambda = jp.lambda();
    const Rational mm = integer(m);
    const Rational nn = integer(n);
    const Rational denominator = pochhammer(alpha1, m) * pochhammer(lambda + mm, n + 1);
    if (denominator.is_zero())
        throw DenominatorPole("(alpha+1)_m (lambda+m)_(n+1) vanishes for n=" + std::to_string(n) +
                              ", m=" + std::to_string(m));
    const Rational prefactor = pochhammer(-nn, m) * Rational(4).pow(static_cast<int>(n)) *
                               (Rational(2) * mm + lambda) * pochhammer(alpha1, n) / denominator;
    HypSeries series;
    series.numerators = delta_params(2, mm - nn);
    const auto second = delta_params(2, -lambda - nn - mm);
    series.numerators.insert(series.numerators.end(), second.begin(), second.end());
    series.denominators = delta_params(2, -jp.alpha() - nn);
    series.argument = argument;
    return prefactor * evaluate_terminating(series);
}

ConnectionResult closed_form(TheoremId t, std::uint32_t n, const std::optional<JacobiParams>& jp) {
    ConnectionResult r;
    r.source = source_basis(t, jp);
    r.target = target_basis(t, jp);
    r.degree = n;
    r.coefficients.reserve(n + 1);
    for (std::uint32_t k = 0; k <= n; ++k) {
        switch (t) {
            case TheoremId::Thm31: r.coefficients.push_back(coeff_laguerre_in_hermite(n, k)); break;
            case TheoremId::Thm32: r.coefficients.push_back(coeff_hermite_in_laguerre(n, k)); break;
            case TheoremId::Thm33: r.coefficients.push_back(coeff_hermite_in_shifted_jacobi(n, *jp, k)); break;
            case TheoremId::Thm33Corrected:
                r.coefficients.push_back(coeff_hermite_in_shifted_jacobi_corrected(n, *jp, k));
                break;
            case TheoremId::Thm34: r.coefficients.push_back(coeff_shifted_jacobi_in_hermite(n, *jp, k)); break;
        }
    }
    switch (t) {
        case TheoremId::Thm31: r.provenance = Provenance::Thm31; break;
        case TheoremId::Thm32: r.provenance = Provenance::Thm32; break;
        case TheoremId::Thm33: r.provenance = Provenance::Thm33Interpreted; break;
        case TheoremId::Thm33Corrected: r.provenance = Provenance::Thm33Corrected; break;
        case TheoremId::Thm34: r.provenance = Provenance::Thm34; break;
    }
    return r;
}

}  // namespace

std::string basis_name(const BasisId& b) {
    return std::visit(overloaded{[](const basis::Monomial&) { return std::string("monomial"); },
                                 [](const basis::Hermite&) { return std::string("hermite"); },
                                 [](const basis::Laguerre&) { return std::string("laguerre"); },
                                 [](const basis::ShiftedJacobi&) { return std::string("shifted-jacobi"); },
                                 [](const basis::JacobiAtOneMinusX&) { return std::string("jacobi-1mx"); }},
                      b);
}

std::optional<JacobiParams> basis_params(const BasisId& b) {
    if (const auto* s = std::get_if<basis::ShiftedJacobi>(&b)) return s->params;
    if (const auto* j = std::get_if<basis::JacobiAtOneMinusX>(&b)) return j->params;
    return std::nullopt;
}

Poly basis_member(const BasisId& b, std::uint32_t k) {
    return std::visit(overloaded{[k](const basis::Monomial&) { return Poly::monomial(Rational(1), k); },
                                 [k](const basis::Hermite&) { return hermite(k); },
                                 [k](const basis::Laguerre&) { return laguerre(k); },
                                 [k](const basis::ShiftedJacobi& s) { return shifted_jacobi(k, s.params); },
                                 [k](const basis::JacobiAtOneMinusX& j) { return jacobi_at_one_minus_x(k, j.params); }},
                      b);
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Thm31: return "Thm3.1";
        case Provenance::Thm32: return "Thm3.2";
        case Provenance::Thm33Interpreted: return "Thm3.3-interpreted";
        case Provenance::Thm33Corrected: return "Thm3.3-corrected";
        case Provenance::Thm34: return "Thm3.4";
        case Provenance::Oracle: return "Oracle";
    }
    return "unknown";
}

Poly reconstruct(const BasisId& target, std::span<const Rational> coefficients) {
    Poly sum;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (coefficients[k].is_zero()) continue;
        sum += coefficients[k] * basis_member(target, static_cast<std::uint32_t>(k));
    }
    return sum;
}

ConnectionResult connection_oracle(const Poly& p, const BasisId& target) {
    ConnectionResult r;
    r.source = basis::Monomial{};
    r.target = target;
    r.provenance = Provenance::Oracle;
    if (p.is_zero()) {
        r.coefficients = {Rational()};
        return r;
    }
    const auto degree = static_cast<std::uint32_t>(p.degree());
    r.degree = degree;
    r.coefficients.assign(degree + 1, Rational());
    Poly remainder = p;
    for (std::uint32_t k = degree + 1; k-- > 0;) {
        const Rational top = remainder.coeff(k);
        if (top.is_zero()) continue;
        const Poly member = basis_member(target, k);
        if (member.degree() != static_cast<int>(k))
            throw DenominatorPole(basis_name(target) + " member " + std::to_string(k) + " is degenerate");
        const Rational c = top / member.leading();
        r.coefficients[k] = c;
        remainder -= c * member;
    }
    if (!remainder.is_zero()) throw Error("connection_oracle: nonzero residual after back-substitution");
    return r;
}

Rational coeff_laguerre_in_hermite(std::uint32_t n, std::uint32_t k) {
    require_index(n, k, "coeff_laguerre_in_hermite");
    const Rational nn = integer(n);
    const Rational kk = integer(k);
    const Rational half(1, 2);
    const Rational kf = factorial(k);
    const Rational prefactor = pochhammer(-nn, k) / (Rational(2).pow(static_cast<int>(k)) * kf * kf);
    const HypSeries series{{(kk - nn) * half, (kk + Rational(1) - nn) * half},
                           {(kk + Rational(1)) * half, (kk + Rational(2)) * half},
                           Rational(1, 4)};
    return prefactor * evaluate_terminating(series);
}

Rational coeff_hermite_in_laguerre(std::uint32_t big_n, std::uint32_t m) {
    require_index(big_n, m, "coeff_hermite_in_laguerre");
    const Rational nn = integer(big_n);
    const Rational mm = integer(m);
    const Rational half(1, 2);
    const HypSeries series{{-(nn - mm) * half, -(nn - mm - Rational(1)) * half},
                           {-nn * half, -(nn - Rational(1)) * half},
                           Rational(-1, 4)};
    return factorial(big_n) * Rational(2).pow(static_cast<int>(big_n)) * evaluate_terminating(series) *
           pochhammer(-nn, m) / factorial(m);
}

Rational coeff_shifted_jacobi_in_hermite(std::uint32_t n, const JacobiParams& jp, std::uint32_t j) {
    require_index(n, j, "coeff_shifted_jacobi_in_hermite");
    const Rational beta1 = jp.beta() + Rational(1);
    require_no_pole(beta1, n, "beta+1");
    const Rational nn = integer(n);
    const Rational jj = integer(j);
    const Rational half(1, 2);
    const Rational& lambda = jp.lambda();
    const Rational prefactor = sign_power(n + j) * pochhammer(beta1, n) * pochhammer(nn + lambda, j) /
                               (factorial(n - j) * Rational(2).pow(static_cast<int>(j)) * factorial(j) *
                                pochhammer(beta1, j));
    const HypSeries series{{(jj - nn) * half, (jj + Rational(1) - nn) * half, (jj + nn + lambda) * half,
                            (jj + nn + lambda + Rational(1)) * half},
                           {(jj + beta1) * half, (jj + beta1 + Rational(1)) * half},
                           Rational(1)};
    return prefactor * evaluate_terminating(series);
}

Rational coeff_hermite_in_shifted_jacobi(std::uint32_t n, const JacobiParams& jp, std::uint32_t m) {
    return hermite_in_jacobi(n, jp, m, Rational(1, 4));
}

Rational coeff_hermite_in_shifted_jacobi_corrected(std::uint32_t n, const JacobiParams& jp, std::uint32_t m) {
    return hermite_in_jacobi(n, jp, m, Rational(-1, 4));
}

ParamList delta_params(std::uint32_t r, const Rational& phi) {
    if (r == 0) throw InvalidInput("delta_params: r must be positive");
    ParamList out;
    out.reserve(r);
    const Rational rr = integer(r);
    for (std::uint32_t j = 0; j < r; ++j) out.push_back((phi + integer(j)) / rr);
    return out;
}

ConnectionResult closed_form_connection(const BasisId& source, const BasisId& target, std::uint32_t n) {
    if (std::holds_alternative<basis::Laguerre>(source) && std::holds_alternative<basis::Hermite>(target))
        return closed_form(TheoremId::Thm31, n, std::nullopt);
    if (std::holds_alternative<basis::Hermite>(source) && std::holds_alternative<basis::Laguerre>(target))
        return closed_form(TheoremId::Thm32, n, std::nullopt);
    if (const auto* s = std::get_if<basis::ShiftedJacobi>(&source); s && std::holds_alternative<basis::Hermite>(target))
        return closed_form(TheoremId::Thm34, n, s->params);
    if (const auto* j = std::get_if<basis::JacobiAtOneMinusX>(&target);
        j && std::holds_alternative<basis::Hermite>(source))
        return closed_form(TheoremId::Thm33, n, j->params);
    throw UnsupportedPair("no closed form for " + basis_name(source) + " -> " + basis_name(target));
}

std::string to_string(TheoremId t) {
    switch (t) {
        case TheoremId::Thm31: return "3.1";
        case TheoremId::Thm32: return "3.2";
        case TheoremId::Thm33: return "3.3";
        case TheoremId::Thm33Corrected: return "3.3c";
        case TheoremId::Thm34: return "3.4";
    }
    return "unknown";
}

TheoremId parse_theorem_id(const std::string& text) {
    if (text == "3.1") return TheoremId::Thm31;
    if (text == "3.2") return TheoremId::Thm32;
    if (text == "3.3") return TheoremId::Thm33;
    if (text == "3.3c") return TheoremId::Thm33Corrected;
    if (text == "3.4") return TheoremId::Thm34;
    throw InvalidInput("unknown theorem id '" + text + "'");
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const VerificationEntry* VerificationReport::first_failure() const {
    for (const auto& e : entries) {
        if (!e.match || !e.residual.is_zero() || e.error) return &e;
    }
    return nullptr;
}

std::vector<JacobiParams> default_jacobi_params() {
    return {JacobiParams(Rational(0), Rational(0)), JacobiParams(Rational(1, 2), Rational(1, 2)),
            JacobiParams(Rational(1), Rational(2)), JacobiParams(Rational(-1, 2), Rational(1, 3))};
}

VerificationReport verify_theorem(TheoremId theorem, std::uint32_t n_max, std::vector<JacobiParams> params,
                                  VerifyMethod method) {
    VerificationReport report;
    report.theorem = theorem;
    report.method = method;
    std::vector<std::optional<JacobiParams>> sets;
    if (uses_jacobi_params(theorem)) {
        if (params.empty()) params = default_jacobi_params();
        report.params = params;
        for (const auto& p : params) sets.emplace_back(p);
    } else {
        sets.emplace_back(std::nullopt);
    }

    for (const auto& jp : sets) {
        for (std::uint32_t n = 0; n <= n_max; ++n) {
            VerificationEntry entry;
            entry.degree = n;
            entry.params = jp;
            try {
                const Poly source = source_poly(theorem, n, jp);
                const BasisId target = target_basis(theorem, jp);
                if (method != VerifyMethod::Closed) {
                    entry.oracle = connection_oracle(source, target).coefficients;
                    entry.oracle.resize(n + 1);
                }
                if (method != VerifyMethod::Oracle) entry.closed = closed_form(theorem, n, jp).coefficients;
                const auto& checked = method == VerifyMethod::Oracle ? entry.oracle : entry.closed;
                entry.residual = reconstruct(target, checked) - source;
                entry.match = entry.residual.is_zero();
                if (method == VerifyMethod::Both) {
                    for (std::uint32_t k = 0; k <= n; ++k) {
                        if (entry.closed[k] != entry.oracle[k]) {
                            entry.first_mismatch = k;
                            entry.match = false;
                            break;
                        }
                    }
                }
            } catch (const Error& e) {
                entry.match = false;
                entry.error = e.what();
            }
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace orthoconn
