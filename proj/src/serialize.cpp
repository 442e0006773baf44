#include "orthoconn/serialize.hpp"

#include <sstream>

#include "orthoconn/errors.hpp"

namespace orthoconn {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(std::span<const Rational> values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

json to_json(const Poly& p) { return to_json(p.coeffs()); }

json to_json(const HypSeries& s) {
    return json{{"num", to_json(std::span<const Rational>(s.numerators))},
                {"den", to_json(std::span<const Rational>(s.denominators))},
                {"arg", s.argument.str()}};
}

json to_json(const CoeffSeq& s) {
    json out = json::object();
    for (const auto& [i, v] : s.terms()) out[std::to_string(i)] = v.str();
    return out;
}

json to_json(const JacobiParams& jp) { return json{{"alpha", jp.alpha().str()}, {"beta", jp.beta().str()}}; }

json to_json(const ConnectionResult& r) {
    json out{{"source", basis_name(r.source)},
             {"target", basis_name(r.target)},
             {"degree", r.degree},
             {"coefficients", to_json(std::span<const Rational>(r.coefficients))},
             {"provenance", to_string(r.provenance)}};
    if (auto p = basis_params(r.source)) out["source_params"] = to_json(*p);
    if (auto p = basis_params(r.target)) out["target_params"] = to_json(*p);
    return out;
}

json to_json(const VerificationReport& r) {
    json params = json::array();
    for (const auto& p : r.params) params.push_back(to_json(p));
    json entries = json::array();
    for (const auto& e : r.entries) {
        json item{{"n", e.degree}, {"match", e.match && e.residual.is_zero() && !e.error}};
        if (e.params) {
            item["alpha"] = e.params->alpha().str();
            item["beta"] = e.params->beta().str();
        }
        item["first_mismatch"] = e.first_mismatch ? json(*e.first_mismatch) : json(nullptr);
        item["residual"] = to_json(e.residual);
        if (!e.closed.empty()) item["closed"] = to_json(std::span<const Rational>(e.closed));
        if (!e.oracle.empty()) item["oracle"] = to_json(std::span<const Rational>(e.oracle));
        if (e.error) item["error"] = *e.error;
        entries.push_back(std::move(item));
    }
    const char* method = r.method == VerifyMethod::Closed ? "closed" : (r.method == VerifyMethod::Oracle ? "oracle" : "both");
    return json{{"theorem", to_string(r.theorem)},
                {"method", method},
                {"params", params},
                {"entries", entries},
                {"verdict", r.passed() ? "pass" : "fail"}};
}

json to_json(const IdentityCheck& c) {
    return json{{"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"equal", c.equal()}};
}

json to_json(const IdentitySweep& s) {
    json cases = json::array();
    for (const auto& c : s.cases) {
        json item = to_json(c.check);
        item["identity"] = c.identity;
        item["instance"] = c.instance;
        cases.push_back(std::move(item));
    }
    return json{{"theorem", s.lemma},
                {"params", json{{"seed", s.seed}}},
                {"entries", cases},
                {"verdict", s.passed() ? "pass" : "fail"}};
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidInput("expected a rational string, got " + j.dump());
}

namespace {

std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

}  // namespace

Poly poly_from_json(const json& j) { return Poly(rationals_from_json(j)); }

HypSeries hypseries_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j.contains("arg"))
        throw InvalidInput("hypergeometric series needs \"num\", \"den\" and \"arg\"");
    return HypSeries{rationals_from_json(j.at("num")), rationals_from_json(j.at("den")), rational_from_json(j.at("arg"))};
}

CoeffSeq coeffseq_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("coefficient sequence must be a JSON object");
    CoeffSeq out;
    for (const auto& [key, value] : j.items()) {
        const Rational index = Rational::parse(key);
        if (!index.is_integer() || index.sign() < 0) throw InvalidInput("bad sequence index '" + key + "'");
        out.set(static_cast<std::uint32_t>(index.to_int64()), rational_from_json(value));
    }
    return out;
}

std::string poly_csv(const Poly& p) {
    std::ostringstream os;
    os << "degree,coefficient\n";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << i << ',' << p.coeffs()[i].str() << '\n';
    return os.str();
}

std::string connection_csv_rows(const ConnectionResult& r) {
    std::ostringstream os;
    for (std::size_t k = 0; k < r.coefficients.size(); ++k)
        os << r.degree << ',' << k << ',' << r.coefficients[k].str() << ',' << to_string(r.provenance) << '\n';
    return os.str();
}

}  // namespace orthoconn
