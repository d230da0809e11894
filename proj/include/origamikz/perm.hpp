#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origamikz/common.hpp"

namespace origamikz {

// Permutation of {1..n}. Symbols are 1-based everywhere in the interface;
// storage is 0-based.
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n);                       // identity
    explicit Perm(std::vector<int> images0);    // 0-based images, validated

    static Perm from_one_line(const std::vector<int>& images1);  // 1-based images

    int degree() const { return static_cast<int>(img_.size()); }
    int apply0(int i) const { return img_[i]; }
    int apply1(int i) const { return img_[i - 1] + 1; }

    std::vector<int> one_line() const;  // 1-based images

    Perm inverse() const;
    bool is_identity() const;
    bool even() const;  // parity

    // (a*b)(i) = a(b(i))
    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm& a, const Perm& b) = default;
    auto operator<=>(const Perm&) const = default;

    std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based, each
                                                   // starting at its smallest symbol

  private:
    std::vector<int> img_;
};

// Cycle notation. "(1,2)(3,4)" and "(1 2)(3 4)" are both accepted; symbols
// absent from the text are fixed. Disjointness is required.
Perm parse_cycles(const std::string& text, int n);
std::string format_cycles(const Perm& p);  // canonical: commas, fixed points omitted,
                                           // "()" for the identity

bool is_transitive(const std::vector<Perm>& gens, int n);

enum class MonodromyClass { Alternating, Symmetric, Other };

// Exact order of <gens> by a deterministic Schreier-Sims stabilizer chain.
Int group_order(const std::vector<Perm>& gens, int n);

Int factorial(int n);

// Requires transitivity; decided by exact order comparison with |S_N|, |A_N|.
MonodromyClass monodromy_class(const std::vector<Perm>& gens, int n);

const char* to_string(MonodromyClass c);

}  // namespace origamikz
