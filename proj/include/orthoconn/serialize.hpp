#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orthoconn/connection.hpp"
#include "orthoconn/expansions.hpp"
#include "orthoconn/hypseries.hpp"
#include "orthoconn/identity_sweeps.hpp"
#include "orthoconn/poly.hpp"
#include "orthoconn/rational.hpp"

namespace orthoconn {

// JSON views of the domain types. Rationals are always "p/q" strings.

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(std::span<const Rational> values);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const HypSeries& s);
nlohmann::json to_json(const CoeffSeq& s);
nlohmann::json to_json(const JacobiParams& jp);
nlohmann::json to_json(const ConnectionResult& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const IdentitySweep& s);

Rational rational_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
HypSeries hypseries_from_json(const nlohmann::json& j);
CoeffSeq coeffseq_from_json(const nlohmann::json& j);

/// "degree,coefficient" header then one row per degree.
std::string poly_csv(const Poly& p);

inline constexpr const char* kConnectionCsvHeader = "n,k,coefficient,provenance";

/// One "n,k,coefficient,provenance" row per coefficient (no header).
std::string connection_csv_rows(const ConnectionResult& r);

}  // namespace orthoconn
