#pragma once

#include <vector>

#include "origamikz/linalg.hpp"
#include "origamikz/origami.hpp"
#include "origamikz/veech.hpp"

namespace origamikz {

// Integral homology model of an origami. Chains live on the 2n edge cells
// (entries 0..n-1 the bottom edges x_i, n..2n-1 the left edges y_i). H1 is
// the cycle lattice modulo square boundaries; the intersection form is
// computed on a fundamental-cycle basis from the ribbon structure of the
// 1-skeleton (chord diagram at the vertex obtained by contracting a spanning
// tree).
class HomologyModel {
  public:
    explicit HomologyModel(const Origami& o);

    const Origami& origami() const { return o_; }
    int genus() const { return g_; }
    int rank() const { return 2 * g_; }       // rank of H1
    int zero_rank() const { return 2 * g_ - 2; }

    // intersection matrix on the chosen H1 basis
    const IntMat& omega() const { return omega_h1_; }
    // holonomy of the H1 basis vectors, a 2 x 2g matrix
    const IntMat& holonomy() const { return hol_h1_; }
    // tautological classes sigma = sum x_i, xi = sum y_i in H1 coordinates
    const IntVec& sigma() const { return sigma_h1_; }
    const IntVec& xi() const { return xi_h1_; }
    // columns span ker(holonomy) over Z (saturated); a different basis of
    // H1^(0) (x) Q may be installed with set_zero_basis
    const IntMat& zero_basis() const { return zero_basis_; }
    // Omega restricted to the zero basis
    IntMat omega_zero() const;

    // chain (length 2n, must be a cycle) -> H1 coordinates
    IntVec class_of_chain(const IntVec& chain) const;
    bool is_cycle(const IntVec& chain) const;
    std::array<Int, 2> chain_holonomy(const IntVec& chain) const;

    Int pair(const IntVec& a, const IntVec& b) const;  // omega on H1 coordinates

    // express an H1 vector as zero-basis coordinates + tautological part;
    // fails if v is not in the span (never happens over Q)
    RatVec zero_coordinates(const IntVec& h1vec) const;  // length 2g-2; requires
                                                         // hol(v) = 0

    void set_zero_basis(IntMat cols);  // 2g x (2g-2), columns independent, hol = 0

    // chains (length 2n) realizing the H1 basis vectors
    const std::vector<IntVec>& basis_chains() const { return basis_chain_; }

  private:
    Origami o_;
    int n_, g_;
    IntMat proj_;                     // 2g x m, cycle (fund coords) -> H1 coords
    std::vector<int> fund_of_edge_;   // edge id -> fundamental index or -1 (tree)
    std::vector<IntVec> fund_chain_;  // fundamental cycle as a chain, per fund index
    std::vector<IntVec> basis_chain_;
    IntMat omega_fund_;  // m x m chord-diagram pairing
    IntMat omega_h1_;
    IntMat hol_h1_;
    IntVec sigma_h1_, xi_h1_;
    IntMat zero_basis_;

    IntVec fund_coords(const IntVec& chain) const;
};

// Action of an affine homeomorphism on H1: the full matrix in the model's H1
// basis, its tautological 2x2 part, and the shadow on the zero basis.
struct HomologyAction {
    IntMat full;     // 2g x 2g
    Mat2 taut;       // equals the evaluation of the defining word
    RatMat shadow;   // (2g-2) x (2g-2) in the model's zero basis
};

// word * o must equal conjugate(o, relabel) exactly; this is the homology
// action of the corresponding affine map.
HomologyAction affine_action(const HomologyModel& model, const SL2Word& word,
                             const Perm& relabel);

// Convenience: find the witness for a matrix in the Veech group and push it
// through affine_action. Fails with NotInVeechGroup if no witness exists.
HomologyAction affine_action_of_matrix(const HomologyModel& model, const Mat2& m);

// Shadow images of all Schreier generators of the Veech group.
std::vector<RatMat> shadow_group(const HomologyModel& model, const VeechGroup& vg);

// Splitting of H1^(0) into +1/-1 eigenspaces of an anti-automorphism, with
// the restrictions of a set of shadow matrices to each part.
struct PrymSplit {
    RatMat plus_basis, minus_basis;  // columns, in zero-basis coordinates
    std::vector<RatMat> plus_actions, minus_actions;
};
PrymSplit prym_split(const HomologyModel& model, const Perm& anti,
                     const std::vector<RatMat>& shadow_mats);

// Chain map of the anti-automorphism iota: x_i -> -x_{v(phi(i))},
// y_i -> -y_{h(phi(i))}.
IntVec anti_automorphism_chain(const Origami& o, const Perm& phi, const IntVec& chain);

}  // namespace origamikz
