#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthoconn/expansions.hpp"

namespace orthoconn {

/// One instance of an identity: both sides evaluated by independent routes.
struct SweepCase {
    std::string identity;  ///< "jacobi-form", "shifted-form", "product", "outer"
    std::string instance;  ///< human-readable description of the inputs
    IdentityCheck check;
};

struct IdentitySweep {
    std::string lemma;
    std::uint64_t seed = 0;
    std::vector<SweepCase> cases;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t count(const std::string& identity) const;
};

// Seeded randomized sweeps over finite or terminating instances. Each sweep
// starts with the fixed degenerate/worked instances, then `cases` random ones
// per identity. Same seed, same output.

/// Bilinear expansions (Jacobi and shifted forms) on finite-support sequence pairs.
IdentitySweep sweep_bilinear(std::uint64_t seed, std::uint32_t cases);
/// Terminating product expansions (`cases` instances) and outer-truncated expansions (`cases / 2`, at least 100).
IdentitySweep sweep_fields_wimp(std::uint64_t seed, std::uint32_t cases);
/// Even/odd split of terminating series.
IdentitySweep sweep_even_odd(std::uint64_t seed, std::uint32_t cases);

}  // namespace orthoconn
