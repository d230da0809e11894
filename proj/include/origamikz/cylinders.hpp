#pragma once

#include "origamikz/homology.hpp"

namespace origamikz {

struct Cylinder {
    int circumference;  // flat length in units of the primitive direction vector
    int height;
    IntVec core_chain;  // cycle in C1 of the model's origami, oriented along the direction
    IntVec core_h1;     // its class
    int strength() const { return circumference; }  // holonomy(core) = circumference * (p,q)
};

struct CylinderDecomposition {
    long p, q;  // primitive direction
    std::vector<Cylinder> cyls;  // sorted by (circumference, discovery)
};

// Cylinder decomposition in the direction (p, q) (reduced to primitive form,
// orientation preserved). Transported to the horizontal picture by an SL(2,Z)
// word, decomposed there, and pulled back.
CylinderDecomposition decompose(const HomologyModel& model, long p, long q);

// Twist counts m_i = lambda * height_i / circumference_i for the least
// positive shear lambda making every count integral.
std::vector<Int> minimal_twist_counts(const CylinderDecomposition& d);

// Affine multi-twist with the given twist counts (default: minimal). The
// counts must come from a common shear: m_i * w_i / h_i equal for all i.
// Acts on homology by v -> v + sum_i m_i Omega(core_i, v) core_i.
HomologyAction multitwist_action(const HomologyModel& model, const CylinderDecomposition& d,
                                 std::vector<Int> counts = {});

struct Transvection {
    IntVec x_h1;    // X = f2 core_1 - f1 core_2 in H1 coordinates
    RatVec x_zero;  // the same in zero-basis coordinates
    Rat c;          // D(v) = v + c Omega(X, v) X
    RatMat shadow;  // matrix on the zero basis
};

// The multi-twist of a two-cylinder direction restricted to H1^(0).
Transvection transvection_h0(const HomologyModel& model, const CylinderDecomposition& d,
                             std::vector<Int> counts = {});

// Zero basis made of waist-curve differences for two transverse directions
// (the bases the published matrices use): reference cylinder = least
// circumference; columns are
// (w_ref * core_i - w_i * core_ref) / gcd for the remaining cylinders of each
// direction, in sorted order. Requires the waists of the two directions to
// span H1 over Q.
IntMat waist_zero_basis(const HomologyModel& model, const CylinderDecomposition& d1,
                        const CylinderDecomposition& d2);

}  // namespace origamikz
