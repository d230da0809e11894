#pragma once

#include <array>
#include <optional>

#include "origamikz/cylinders.hpp"

namespace origamikz {

// ---- Galois-pinching test for quartic symplectic matrices ----

struct PinchingReport {
    Int a, b;              // char poly x^4 + a x^3 + b x^2 + a x + 1
    Int t, d;              // t = -a-4, d = b+2a+2
    Int delta1, delta2, delta12;
    bool sq1, sq2, sq12;   // which discriminants are perfect squares
    bool verdict;
};

PinchingReport galois_pinching_quartic(const Int& a, const Int& b);

// Prasad-Rapinchuk / MMY style density: A Galois-pinching, B unipotent != I
// whose deviation image is not Lagrangian.
struct DensityPinching {
    bool verdict;
    PinchingReport pinching;
    int deviation_rank;
    bool lagrangian_obstruction;  // true when rank == half dim and the image is Lagrangian
};
DensityPinching density_pinching(const RatMat& a, const RatMat& b, const IntMat& omega);

// Detinko-Flannery-Hulpke: the normal closure of a transvection is absolutely
// irreducible iff the algebra spanned by {t} u {g^-1 t g} has full dimension.
struct DensityDFH {
    bool verdict;
    int dimension;
};
DensityDFH density_dfh(const std::vector<RatMat>& gens, const RatMat& t, long cap = -1);

// ---- Singh-Venkataramana certificates ----

// Word over the three transvections: (generator index 0..2, exponent != 0).
using DWord = std::vector<std::pair<int, long>>;
DWord parse_dword(const std::string& text);  // "D3^3 D2 D3^-3 D1^-25"
std::string dword_str(const DWord& w);

struct SVRestriction {
    IntVec e_x;                        // annihilator in (X1,X2,X3) coordinates,
                                       // primitive, first nonzero entry positive
    int bi, bj;                        // the basis is {X_bi, X_bj, e}, 0-based
    std::array<RatMat, 3> restriction; // D_1, D_2, D_3 restricted to W
    IntMat gram;                       // Omega(X_i, X_j)
};

// From pairwise intersections Omega(X_i, X_j) and transvection coefficients
// c_i (D_i = I + c_i Omega(X_i, .) X_i).
SVRestriction sv_restrict(const IntMat& gram, const std::array<Rat, 3>& cs);

// Convenience: from three transvections living in one homology model; also
// checks that the X's are independent.
SVRestriction sv_restrict(const HomologyModel& model, const std::array<Transvection, 3>& ts);

struct SVVerdict {
    bool ok;
    RatMat element;  // the word's value in the basis {X_bi, X_bj, e}
};
// ok iff the word evaluates to [[1,0,0],[0,1,0],[y,x,1]] with (x,y) != (0,0).
SVVerdict sv_verify_word(const SVRestriction& r, const DWord& word);

// Bounded search: templated conjugate-power words u D_a^p u^-1 D_b^q plus a
// plain BFS over short words. Returns the first verifying word found in a
// deterministic enumeration.
std::optional<DWord> sv_search_word(const SVRestriction& r, int max_template_letters = 12,
                                    long max_exponent = 10000);

// ---- lattice stabilizers and mod-n images ----

struct LatticeStabilizer {
    long index;  // orbit size of the lattice under <gens>
    std::vector<RatMat> stabilizer_gens;  // integral whenever the generators are unimodular
};
// Orbit of the column lattice of `lattice` under the integer matrices gens
// (invertible over Z); Schreier generators of the stabilizer.
LatticeStabilizer lattice_stabilizer(const std::vector<IntMat>& gens, const IntMat& lattice,
                                     long budget = 1000000);

// |Sp(2m, Z/n)|
Int sp_order_mod(int m, const Int& n);

// Index of the image of <gens> in Sp(2m, Z/n) with respect to the standard
// form [[0, I],[-I, 0]].
Int modn_image_index(const std::vector<IntMat>& gens, long n,
                     long mem_budget_bytes = 4000000000L);

}  // namespace origamikz
