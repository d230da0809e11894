#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace origamikz {

using Int = mpz_class;
using Rat = mpq_class;

// Error kinds named by the failing precondition. The CLI maps these to
// exit codes: input errors -> 2, budget errors -> 3.
enum class errc {
    malformed_cycle,
    symbol_out_of_range,
    repeated_symbol,
    not_transitive,
    degree_mismatch,
    not_square,
    not_invertible,
    not_unimodular,
    not_primitive,
    not_two_cylinders,
    not_anti_automorphism,
    not_in_veech_group,
    not_symplectic,
    degenerate_configuration,
    bad_params,
    parse_error,
    budget_exceeded,
    cap_exceeded,
    memory_budget_exceeded,
    internal,
};

class Error : public std::runtime_error {
  public:
    Error(errc kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    errc kind() const { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

inline void check(bool cond, errc kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

}  // namespace origamikz
