#pragma once

#include <json.hpp>
#include <string>

#include "origamikz/certificates.hpp"

namespace origamikz {

using nlohmann::json;

json origami_to_json(const Origami& o);
Origami origami_from_json(const json& j);

json intmat_to_json(const IntMat& m);
json ratmat_to_json(const RatMat& m);
RatMat ratmat_from_json(const json& j);

struct AnalyzeOptions {
    std::vector<std::string> analyses;  // subset of {stratum, reduced, monodromy,
                                        // hlk, veech, shadow}; empty = all
    long orbit_budget = 1000000;
    long coset_budget = 10000000;
};

// Runs the requested analyses; "veech" and "shadow" may mark budget errors in
// the report instead of throwing.
json analyze(const Origami& o, const AnalyzeOptions& opts);

// Shadow-group index in SL(2,Z) for a genus-2 origami.
long genus2_shadow_index(const Origami& o, long orbit_budget = 1000000,
                         long coset_budget = 10000000);

json certificate_to_json(const Certificate& cert);

// Independent re-verification: rebuilds the transvections from the stored
// origami, directions and twist counts, compares the stored annihilator,
// restrictions and element, and re-runs the word. Returns a report with
// "valid": true/false.
json check_certificate(const json& cert);

// --- published-table harness ---

// H(2) shadow indices for L-shaped origamis, n in [n_lo, n_hi]
std::string table_h2_indices(int n_lo, int n_hi, long orbit_budget = 1000000);
// H(1,1) shadow indices for O(k,l), 2 <= k <= kmax, 2 <= l <= lmax
std::string table_h11_indices(int kmax, int lmax, long orbit_budget = 1000000);
// char-poly coefficients of the pinching candidates for OPrime and P
std::string table_family_charpolys(int n_lo, int n_hi);

}  // namespace origamikz
