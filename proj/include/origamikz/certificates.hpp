#pragma once

#include <optional>
#include <string>

#include "origamikz/cert.hpp"
#include "origamikz/families.hpp"

namespace origamikz {

// A concrete certificate request: three two-cylinder directions with twist
// counts (empty = minimal), an optional word to verify (otherwise a bounded
// search runs), and which density checks to attempt.
struct CertificateRequest {
    Origami origami;
    std::array<std::pair<long, long>, 3> dirs;
    std::array<std::vector<Int>, 3> counts;
    std::optional<DWord> word;
    bool run_pinching = true;
    bool run_dfh = true;
    // extra conjugators for the DFH test: directions with twist counts, and
    // an optional power of the horizontal twist
    std::vector<std::pair<std::pair<long, long>, std::vector<Int>>> dfh_extra;
    long dfh_h_power = 0;
    std::string label;
};

struct Certificate {
    std::string label;
    Origami origami;
    std::array<std::pair<long, long>, 3> dirs;
    std::array<Transvection, 3> transvections;
    SVRestriction restriction;
    std::optional<DWord> word;
    bool word_from_search = false;
    SVVerdict sv;
    bool sv_ok = false;
    std::optional<DensityPinching> pinching;
    std::optional<DensityDFH> dfh;
    std::string failure;  // nonempty when the pipeline could not finish
};

// Runs the metacode: transvections for the three directions, annihilator and
// restrictions, density checks, word verification or search.
Certificate build_certificate(const CertificateRequest& req);

// The per-family requests with the twist strengths and words pinned from the
// worked examples. Parameters:
//   OPrime: {n}         (K = 3n, N = 5n)
//   P:      {n}         (N = 2n)
//   Stairs: {N, m}      (word requires N = 3m+4)
//   F3n8 .. F6n22: {k}  (smallest admissible subfamily parameter)
CertificateRequest family_certificate_request(const std::string& family,
                                              const std::vector<long>& params);

}  // namespace origamikz
