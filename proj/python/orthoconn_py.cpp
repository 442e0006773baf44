#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orthoconn/cli.hpp"
#include "orthoconn/connection.hpp"
#include "orthoconn/errors.hpp"
#include "orthoconn/exact_arith.hpp"
#include "orthoconn/expansions.hpp"
#include "orthoconn/identity_sweeps.hpp"
#include "orthoconn/polybases.hpp"
#include "orthoconn/serialize.hpp"

namespace py = pybind11;
using namespace orthoconn;

namespace {

// Scalars cross the boundary as fractions.Fraction; anything whose str() is
// "p/q" or "n" is accepted on the way in (int, str, Fraction).
Rational to_rational(const py::handle& obj) { return Rational::parse(py::str(obj).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

py::list to_fractions(std::span<const Rational> values) {
    py::list out;
    for (const auto& v : values) out.append(to_fraction(v));
    return out;
}

ParamList to_params(const py::iterable& items) {
    ParamList out;
    for (const auto& item : items) out.push_back(to_rational(item));
    return out;
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

JacobiParams jacobi(const py::object& alpha, const py::object& beta) {
    return JacobiParams(to_rational(alpha), to_rational(beta));
}

BasisId make_basis(const std::string& name, const py::object& alpha, const py::object& beta) {
    if (name == "monomial") return basis::Monomial{};
    if (name == "hermite") return basis::Hermite{};
    if (name == "laguerre") return basis::Laguerre{};
    if (name == "shifted-jacobi") return basis::ShiftedJacobi{jacobi(alpha, beta)};
    if (name == "jacobi-1mx") return basis::JacobiAtOneMinusX{jacobi(alpha, beta)};
    throw InvalidInput("unknown family '" + name + "'");
}

py::dict result_dict(const ConnectionResult& r) {
    py::dict d;
    d["source"] = basis_name(r.source);
    d["target"] = basis_name(r.target);
    d["degree"] = r.degree;
    d["coefficients"] = to_fractions(r.coefficients);
    d["provenance"] = to_string(r.provenance);
    return d;
}

}  // namespace

PYBIND11_MODULE(_orthoconn, m) {
    m.doc() = "Exact connection coefficients between classical orthogonal polynomial families";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<NonTerminating>(m, "NonTerminating", base.ptr());
    py::register_exception<DenominatorPole>(m, "DenominatorPole", base.ptr());
    py::register_exception<ZeroDenominatorParameter>(m, "ZeroDenominatorParameter", base.ptr());
    py::register_exception<PoleInParams>(m, "PoleInParams", base.ptr());
    py::register_exception<UnsupportedPair>(m, "UnsupportedPair", base.ptr());

    m.def("pochhammer", [](const py::object& a, std::uint32_t n) { return to_fraction(pochhammer(to_rational(a), n)); },
          py::arg("a"), py::arg("n"));
    m.def("factorial", [](std::uint32_t n) { return to_fraction(factorial(n)); }, py::arg("n"));
    m.def("binomial", [](std::uint32_t n, std::uint32_t k) { return to_fraction(binomial(n, k)); }, py::arg("n"),
          py::arg("k"));

    m.def(
        "evaluate_terminating",
        [](const py::iterable& num, const py::iterable& den, const py::object& arg) {
            return to_fraction(evaluate_terminating({to_params(num), to_params(den), to_rational(arg)}));
        },
        py::arg("numerators"), py::arg("denominators"), py::arg("argument"),
        "Exact value of a terminating pFq.");

    m.def("hermite", [](std::uint32_t n) { return to_fractions(hermite(n).coeffs()); }, py::arg("n"));
    m.def("hermite_via_1f1", [](std::uint32_t n) { return to_fractions(hermite_via_1f1(n).coeffs()); }, py::arg("n"));
    m.def("laguerre", [](std::uint32_t n) { return to_fractions(laguerre(n).coeffs()); }, py::arg("n"));
    m.def(
        "shifted_jacobi",
        [](std::uint32_t n, const py::object& alpha, const py::object& beta) {
            return to_fractions(shifted_jacobi(n, jacobi(alpha, beta)).coeffs());
        },
        py::arg("n"), py::arg("alpha") = 0, py::arg("beta") = 0);
    m.def(
        "jacobi_at_one_minus_x",
        [](std::uint32_t n, const py::object& alpha, const py::object& beta) {
            return to_fractions(jacobi_at_one_minus_x(n, jacobi(alpha, beta)).coeffs());
        },
        py::arg("m"), py::arg("alpha") = 0, py::arg("beta") = 0);

    m.def(
        "connection_oracle",
        [](const py::iterable& coeffs, const std::string& target, const py::object& alpha, const py::object& beta) {
            return result_dict(connection_oracle(Poly(to_params(coeffs)), make_basis(target, alpha, beta)));
        },
        py::arg("coefficients"), py::arg("target"), py::arg("alpha") = 0, py::arg("beta") = 0,
        "Expand a monomial-basis polynomial in the target family by back-substitution.");
    m.def(
        "closed_form_connection",
        [](const std::string& source, const std::string& target, std::uint32_t n, const py::object& alpha,
           const py::object& beta) {
            return result_dict(closed_form_connection(make_basis(source, alpha, beta), make_basis(target, alpha, beta), n));
        },
        py::arg("source"), py::arg("target"), py::arg("n"), py::arg("alpha") = 0, py::arg("beta") = 0);

    m.def(
        "verify_theorem",
        [](const std::string& theorem, std::uint32_t n_max, const std::vector<std::pair<py::object, py::object>>& params,
           const std::string& method) {
            std::vector<JacobiParams> jps;
            for (const auto& [a, b] : params) jps.push_back(jacobi(a, b));
            const VerifyMethod vm = method == "closed"   ? VerifyMethod::Closed
                                    : method == "oracle" ? VerifyMethod::Oracle
                                                         : VerifyMethod::Both;
            return from_json(to_json(verify_theorem(parse_theorem_id(theorem), n_max, jps, vm)));
        },
        py::arg("theorem"), py::arg("n_max"), py::arg("params") = std::vector<std::pair<py::object, py::object>>{},
        py::arg("method") = "both");

    m.def(
        "sweep_identities",
        [](const std::string& kind, std::uint64_t seed, std::uint32_t cases) {
            if (kind == "bilinear") return from_json(to_json(sweep_bilinear(seed, cases)));
            if (kind == "fields-wimp") return from_json(to_json(sweep_fields_wimp(seed, cases)));
            if (kind == "even-odd") return from_json(to_json(sweep_even_odd(seed, cases)));
            throw InvalidInput("unknown identity family '" + kind + "'");
        },
        py::arg("kind"), py::arg("seed") = 0, py::arg("cases") = 200);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
