#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "origamikz/perm.hpp"

namespace origamikz {

// A square-tiled surface: square i is glued to h(i) on the right and v(i)
// above. <h,v> must act transitively (connected surface).
class Origami {
  public:
    Origami() : Origami(Perm(1), Perm(1)) {}  // the unit torus
    Origami(Perm h, Perm v);

    int degree() const { return h_.degree(); }
    const Perm& h() const { return h_; }
    const Perm& v() const { return v_; }

    // Corner cycle at the bottom-left vertex of each square: c = v h v^-1 h^-1,
    // i.e. walking counterclockwise around the vertex visits the squares whose
    // bottom-left corner it is, in c-orbit order.
    Perm corner_perm() const;

    // vertex_class()[i] = id of the vertex at the bottom-left corner of square i
    std::vector<int> vertex_classes(int* count = nullptr) const;

    friend bool operator==(const Origami& a, const Origami& b) = default;
    auto operator<=>(const Origami&) const = default;

  private:
    Perm h_, v_;
};

struct Stratum {
    std::vector<int> zero_orders;  // descending; empty for the torus
    int genus;
    friend bool operator==(const Stratum& a, const Stratum& b) = default;
};

struct HLKInvariant {
    int l0;
    std::array<int, 3> triple;  // unordered in meaning; stored descending
    friend bool operator==(const HLKInvariant& a, const HLKInvariant& b) = default;
    std::string str() const;
};

Origami conjugate(const Origami& o, const Perm& phi);  // (phi h phi^-1, phi v phi^-1)

// Lexicographically minimal simultaneous relabeling over all BFS labelings
// rooted at each square. Two origamis are simultaneously conjugate iff their
// canonical forms are equal.
Origami canonical_form(const Origami& o);
// Also returns phi with canonical = conjugate(o, phi).
std::pair<Origami, Perm> canonical_form_with_relabel(const Origami& o);

Stratum stratum(const Origami& o);

// True iff the absolute-period lattice equals Z^2.
bool is_reduced(const Origami& o);

// A relabeling phi with phi h phi^-1 = h^-1 and phi v phi^-1 = v^-1, if any
// (the combinatorial shadow of an affine map with derivative -Id).
std::optional<Perm> anti_automorphism(const Origami& o);

// Nontrivial translation automorphisms: phi != id with phi h = h phi, phi v = v phi.
bool has_translation(const Origami& o);

HLKInvariant hlk_invariant(const Origami& o, const Perm& phi);

// Text format:
//   h = (1,2,3)(4,5)
//   v = (1,4)
//   n = 5        (optional; inferred from the largest symbol otherwise)
Origami parse_origami_text(const std::string& text);
std::string format_origami_text(const Origami& o);

}  // namespace origamikz
