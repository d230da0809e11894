#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "origamikz/linalg.hpp"
#include "origamikz/origami.hpp"

namespace origamikz {

// 2x2 integer matrices, det 1 where SL2 is required.
using Mat2 = IntMat;

Mat2 mat2(long a, long b, long c, long d);
Mat2 mat2_id();

// Generator letters. T = [[1,1],[0,1]], S = [[0,1],[-1,0]] (a quarter turn),
// Tp = [[1,0],[1,1]]. Words evaluate left-to-right.
enum class Letter { T, Ti, S, Si, Tp, Tpi };

using SL2Word = std::vector<Letter>;

Mat2 letter_matrix(Letter l);
Letter letter_inverse(Letter l);
Mat2 eval_word(const SL2Word& w);
SL2Word word_inverse(const SL2Word& w);
std::string word_str(const SL2Word& w);
SL2Word parse_word(const std::string& text);  // e.g. "T^3 S T^-1" or "TTTSt"

// Nielsen action of one generator: T: (h,v) -> (h, v h^-1); Tp: (h,v) ->
// (h v^-1, v); S: (h,v) -> (v, h^-1); inverses accordingly.
Origami nielsen_apply(Letter l, const Origami& o);
Origami nielsen_apply_word(const SL2Word& w, const Origami& o);  // w.front() acts last

// Chain transport under one move: chain lives on the edge basis of o
// (entries 0..n-1 = bottom edges, n..2n-1 = left edges) and is pushed to the
// edge basis of nielsen_apply(l, o).
IntVec transport_chain(Letter l, const Origami& o, const IntVec& chain);

// Euclidean decomposition: a word evaluating exactly to m (det 1 required).
SL2Word sl2_word_from_matrix(const Mat2& m);

struct SchreierGen {
    SL2Word word;   // stabilizer element as a word in S, T
    Mat2 matrix;    // its evaluation
    Perm relabel;   // witnessing relabeling: word*o = conjugate(o, relabel)
};

struct VeechGroup {
    long index;                         // orbit size = index in SL(2,Z)
    std::vector<Origami> vertices;      // canonical forms, BFS order; [0] = base
    std::vector<std::array<long, 2>> edge_t;  // edge_t[i] = {T-image, Ti-image}
    std::vector<std::array<long, 2>> edge_s;
    std::vector<SchreierGen> gens;
    bool contains_minus_id;
};

// BFS over canonical forms under S and T; Schreier generators for the
// stabilizer of the base origami.
VeechGroup veech_group(const Origami& o, long orbit_budget = 1000000);

// If the word stabilizes o's conjugacy class, the relabeling psi with
// word * o = conjugate(o, psi); nullopt otherwise.
std::optional<Perm> veech_witness(const Origami& o, const SL2Word& w);

// Index of <gens> in SL(2,Z) by Todd-Coxeter coset enumeration over the
// presentation <S, U | S^4 = 1, S^2 = U^3>, U = S T. BudgetExceeded if the
// enumeration does not close within the coset budget.
struct CosetTable {
    long index;
    // rows: coset x generator-column {S, S^-1, U, U^-1}
    std::vector<std::array<long, 4>> table;
};
CosetTable subgroup_index_sl2z(const std::vector<Mat2>& gens, long budget = 10000000);

// Same, in PSL(2,Z) = <S, U | S^2 = U^3 = 1>.
CosetTable subgroup_index_psl2z(const std::vector<Mat2>& gens, long budget = 10000000);

// JSON and DOT serializations of the coset graph of a Veech group.
std::string coset_graph_json(const VeechGroup& vg);
std::string coset_graph_dot(const VeechGroup& vg);

}  // namespace origamikz
