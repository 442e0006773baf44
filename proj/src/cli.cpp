#include "orthoconn/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "orthoconn/connection.hpp"
#include "orthoconn/errors.hpp"
#include "orthoconn/identity_sweeps.hpp"
#include "orthoconn/polybases.hpp"
#include "orthoconn/serialize.hpp"

namespace orthoconn::cli {

namespace {

struct Options {
    std::string family;
    std::string source;
    std::string target;
    std::uint32_t n = 0;
    std::uint32_t n_max = 5;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::string connect_method;
    std::string verify_method;
    std::string table_method;
    std::string format = "json";
    std::string theorem;
    std::uint64_t seed = 0;
    std::uint32_t cases = 200;
};

JacobiParams jacobi_params(const Options& o) {
    return JacobiParams(Rational::parse(o.alpha.value_or("0")), Rational::parse(o.beta.value_or("0")));
}

BasisId parse_basis(const std::string& name, const Options& o) {
    if (name == "monomial") return basis::Monomial{};
    if (name == "hermite") return basis::Hermite{};
    if (name == "laguerre") return basis::Laguerre{};
    if (name == "shifted-jacobi") return basis::ShiftedJacobi{jacobi_params(o)};
    if (name == "jacobi-1mx") return basis::JacobiAtOneMinusX{jacobi_params(o)};
    throw InvalidInput("unknown family '" + name + "'");
}

VerifyMethod parse_method(const std::string& m) {
    if (m == "closed") return VerifyMethod::Closed;
    if (m == "oracle") return VerifyMethod::Oracle;
    return VerifyMethod::Both;
}

const std::vector<std::string> kFamilies{"monomial", "hermite", "laguerre", "shifted-jacobi", "jacobi-1mx"};

void add_jacobi_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--alpha", o.alpha, "Jacobi alpha as p/q (default 0)");
    cmd->add_option("--beta", o.beta, "Jacobi beta as p/q (default 0)");
}

void add_format_flag(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

int run_poly(const Options& o, std::ostream& out) {
    Poly p;
    if (o.family == "hermite-1f1")
        p = hermite_via_1f1(o.n);
    else
        p = basis_member(parse_basis(o.family, o), o.n);
    if (o.format == "csv")
        out << poly_csv(p);
    else
        out << to_json(p).dump() << '\n';
    return kExitOk;
}

ConnectionResult oracle_for(const BasisId& source, const BasisId& target, std::uint32_t n) {
    ConnectionResult r = connection_oracle(basis_member(source, n), target);
    r.source = source;
    r.degree = n;
    r.coefficients.resize(n + 1);
    return r;
}

int run_connect(const Options& o, std::ostream& out) {
    const BasisId source = parse_basis(o.source, o);
    const BasisId target = parse_basis(o.target, o);
    const VerifyMethod method = parse_method(o.connect_method);
    std::optional<ConnectionResult> closed;
    std::optional<ConnectionResult> oracle;
    if (method != VerifyMethod::Oracle) closed = closed_form_connection(source, target, o.n);
    if (method != VerifyMethod::Closed) oracle = oracle_for(source, target, o.n);
    const bool agree = !(closed && oracle) || closed->coefficients == oracle->coefficients;

    if (o.format == "csv") {
        out << kConnectionCsvHeader << '\n';
        if (closed) out << connection_csv_rows(*closed);
        if (oracle) out << connection_csv_rows(*oracle);
    } else if (closed && oracle) {
        out << nlohmann::json{{"closed", to_json(*closed)}, {"oracle", to_json(*oracle)}, {"agree", agree}}.dump()
            << '\n';
    } else {
        out << to_json(closed ? *closed : *oracle).dump() << '\n';
    }
    return agree ? kExitOk : kExitMismatch;
}

int run_table(const Options& o, std::ostream& out) {
    const BasisId source = parse_basis(o.source, o);
    const BasisId target = parse_basis(o.target, o);
    const VerifyMethod method = parse_method(o.table_method);
    std::vector<ConnectionResult> rows;
    bool agree = true;
    for (std::uint32_t n = 0; n <= o.n_max; ++n) {
        std::optional<ConnectionResult> closed;
        if (method != VerifyMethod::Oracle) rows.push_back(*(closed = closed_form_connection(source, target, n)));
        if (method != VerifyMethod::Closed) {
            rows.push_back(oracle_for(source, target, n));
            if (closed && closed->coefficients != rows.back().coefficients) agree = false;
        }
    }
    if (o.format == "csv") {
        out << kConnectionCsvHeader << '\n';
        for (const auto& r : rows) out << connection_csv_rows(r);
    } else {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.coefficients.size(); ++k)
                table.push_back({{"n", r.degree},
                                 {"k", k},
                                 {"coefficient", r.coefficients[k].str()},
                                 {"provenance", to_string(r.provenance)}});
        }
        out << table.dump() << '\n';
    }
    return agree ? kExitOk : kExitMismatch;
}

int run_verify(const Options& o, std::ostream& out) {
    if (o.theorem == "2.1" || o.theorem == "2.2" || o.theorem == "2.3") {
        const IdentitySweep sweep = o.theorem == "2.1"   ? sweep_bilinear(o.seed, o.cases)
                                    : o.theorem == "2.2" ? sweep_fields_wimp(o.seed, o.cases)
                                                         : sweep_even_odd(o.seed, o.cases);
        if (o.format == "csv") {
            out << "case,identity,lhs,rhs,equal\n";
            for (std::size_t i = 0; i < sweep.cases.size(); ++i) {
                const auto& c = sweep.cases[i];
                out << i << ',' << c.identity << ',' << c.check.lhs << ',' << c.check.rhs << ','
                    << (c.check.equal() ? "true" : "false") << '\n';
            }
        } else {
            out << to_json(sweep).dump() << '\n';
        }
        return sweep.passed() ? kExitOk : kExitMismatch;
    }

    const TheoremId theorem = parse_theorem_id(o.theorem);
    std::vector<JacobiParams> params;
    if (o.alpha || o.beta) params.push_back(jacobi_params(o));
    const VerificationReport report = verify_theorem(theorem, o.n_max, params, parse_method(o.verify_method));
    if (o.format == "csv") {
        out << "n,alpha,beta,match,first_mismatch,error\n";
        for (const auto& e : report.entries) {
            out << e.degree << ',' << (e.params ? e.params->alpha().str() : "") << ','
                << (e.params ? e.params->beta().str() : "") << ','
                << (e.match && e.residual.is_zero() && !e.error ? "true" : "false") << ','
                << (e.first_mismatch ? std::to_string(*e.first_mismatch) : "") << ',' << e.error.value_or("")
                << '\n';
        }
    } else {
        out << to_json(report).dump() << '\n';
    }
    return report.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact connection coefficients between Hermite, Laguerre and Jacobi polynomials", "orthoconn"};
    app.require_subcommand(1);
    Options o;

    auto* poly = app.add_subcommand("poly", "Monomial coefficients of one family member");
    poly->add_option("--family", o.family, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"monomial", "hermite", "hermite-1f1", "laguerre", "shifted-jacobi", "jacobi-1mx"}));
    poly->add_option("--n", o.n, "Degree")->required();
    add_jacobi_flags(poly, o);
    add_format_flag(poly, o);

    auto* connect = app.add_subcommand("connect", "Connection coefficients of one source member in a target basis");
    connect->add_option("--source", o.source, "Source family")->required()->check(CLI::IsMember(kFamilies));
    connect->add_option("--target", o.target, "Target family")->required()->check(CLI::IsMember(kFamilies));
    connect->add_option("--n", o.n, "Degree")->required();
    connect->add_option("--method", o.connect_method, "closed | oracle | both")
        ->default_val("closed")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    add_jacobi_flags(connect, o);
    add_format_flag(connect, o);

    auto* verify = app.add_subcommand("verify", "Check a connection formula (3.x ids) or an expansion identity sweep (2.x ids)");
    verify->add_option("--theorem", o.theorem, "3.1 | 3.2 | 3.3 | 3.3c | 3.4 | 2.1 | 2.2 | 2.3")
        ->required()
        ->check(CLI::IsMember({"3.1", "3.2", "3.3", "3.3c", "3.4", "2.1", "2.2", "2.3"}));
    verify->add_option("--n-max", o.n_max, "Largest degree swept")->default_val(5);
    verify->add_option("--method", o.verify_method, "closed | oracle | both")
        ->default_val("both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    verify->add_option("--seed", o.seed, "Seed for the randomized identity sweeps")->default_val(0);
    verify->add_option("--cases", o.cases, "Random instances per identity")->default_val(200);
    add_jacobi_flags(verify, o);
    add_format_flag(verify, o);

    auto* table = app.add_subcommand("table", "Lower-triangular connection matrix up to --n-max");
    table->add_option("--source", o.source, "Source family")->required()->check(CLI::IsMember(kFamilies));
    table->add_option("--target", o.target, "Target family")->required()->check(CLI::IsMember(kFamilies));
    table->add_option("--n-max", o.n_max, "Largest degree")->required();
    table->add_option("--method", o.table_method, "closed | oracle | both")
        ->default_val("closed")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    add_jacobi_flags(table, o);
    add_format_flag(table, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "orthoconn: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        // reject malformed Jacobi parameters even when the chosen families ignore them
        if (o.alpha) Rational::parse(*o.alpha);
        if (o.beta) Rational::parse(*o.beta);
        if (poly->parsed()) return run_poly(o, out);
        if (connect->parsed()) return run_connect(o, out);
        if (verify->parsed()) return run_verify(o, out);
        return run_table(o, out);
    } catch (const Error& e) {
        err << "orthoconn: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace orthoconn::cli
