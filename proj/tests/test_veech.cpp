#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "origamikz/families.hpp"
#include "origamikz/veech.hpp"

using namespace origamikz;

TEST_CASE("letters and words") {
    CHECK(eval_word({Letter::S, Letter::S, Letter::S, Letter::S}).is_identity());
    CHECK(eval_word({Letter::T, Letter::Ti}).is_identity());
    CHECK(eval_word({Letter::T, Letter::T, Letter::T}) == mat2(1, 3, 0, 1));
    // U = S T has order 6
    SL2Word u6;
    for (int i = 0; i < 6; ++i) {
        u6.push_back(Letter::S);
        u6.push_back(Letter::T);
    }
    CHECK(eval_word(u6).is_identity());
    CHECK(eval_word(word_inverse({Letter::T, Letter::S})) ==
          to_int(inverse(to_rat(eval_word({Letter::T, Letter::S})))));
    CHECK(eval_word(parse_word("T^3 S T^-2")) ==
          mat2(1, 3, 0, 1) * letter_matrix(Letter::S) * mat2(1, -2, 0, 1));
    CHECK(word_str(parse_word("TTS")) == "T^2 S");
}

TEST_CASE("nielsen moves") {
    Origami torus(Perm(1), Perm(1));
    CHECK(nielsen_apply(Letter::T, torus) == torus);
    Origami o = family_genus4_h6();
    // S^4 = id exactly, T T^-1 = id exactly
    CHECK(nielsen_apply_word({Letter::S, Letter::S, Letter::S, Letter::S}, o) == o);
    CHECK(nielsen_apply_word({Letter::T, Letter::Ti}, o) == o);
    CHECK(nielsen_apply_word({Letter::Tp, Letter::Tpi}, o) == o);
    // [[1,3],[0,1]] is in the Veech group of the genus-4 example
    Origami t3 = nielsen_apply_word({Letter::T, Letter::T, Letter::T}, o);
    CHECK(canonical_form(t3) == canonical_form(o));
    CHECK(!(canonical_form(nielsen_apply(Letter::T, o)) == canonical_form(o)));
}

TEST_CASE("sl2 word from matrix") {
    CHECK(eval_word(sl2_word_from_matrix(mat2(1, 1, 0, 1))) == mat2(1, 1, 0, 1));
    CHECK(word_str(sl2_word_from_matrix(mat2(1, 3, 0, 1))) == "T^3");
    for (Mat2 m : {mat2(5, -2, 3, -1), mat2(-4, 3, -7, 5), mat2(6, -5, 5, -4),
                   mat2(1, 0, -1, 1), mat2(0, 1, -1, 0), mat2(-1, 0, 0, -1)}) {
        CHECK(eval_word(sl2_word_from_matrix(m)) == m);
    }
    CHECK_THROWS_AS(sl2_word_from_matrix(mat2(1, 0, 0, 2)), Error);
}

TEST_CASE("veech group: torus") {
    Origami torus(Perm(1), Perm(1));
    VeechGroup vg = veech_group(torus);
    CHECK(vg.index == 1);
    CHECK(vg.contains_minus_id);
}

TEST_CASE("veech group: genus-4 example has index 8") {
    Origami o = family_genus4_h6();
    VeechGroup vg = veech_group(o);
    CHECK(vg.index == 8);
    CHECK(!vg.contains_minus_id);
    // every Schreier generator stabilizes the base through its relabeling
    for (size_t k = 0; k < std::min<size_t>(vg.gens.size(), 4); ++k) {
        const auto& g = vg.gens[k];
        CHECK(nielsen_apply_word(g.word, vg.vertices[0]) ==
              conjugate(vg.vertices[0], g.relabel));
        CHECK(eval_word(g.word) == g.matrix);
    }
    // the generated subgroup equals <[[1,3],[0,1]], [[1,0],[-1,1]]>
    std::vector<Mat2> mats;
    for (const auto& g : vg.gens) mats.push_back(g.matrix);
    CHECK(subgroup_index_sl2z(mats).index == 8);
    CHECK(subgroup_index_sl2z({mat2(1, 3, 0, 1), mat2(1, 0, -1, 1)}).index == 8);
    CHECK(veech_witness(o, sl2_word_from_matrix(mat2(1, 3, 0, 1))).has_value());
    CHECK(veech_witness(o, sl2_word_from_matrix(mat2(1, 0, -1, 1))).has_value());
    CHECK(!veech_witness(o, {Letter::T}).has_value());
    // PSL index: -Id missing, so the PSL image has index 4
    CHECK(subgroup_index_psl2z(mats).index == 4);
}

TEST_CASE("veech group: E5 has index 10") {
    VeechGroup vg = veech_group(family_e5());
    CHECK(vg.index == 10);
    std::vector<Mat2> mats;
    for (const auto& g : vg.gens) mats.push_back(g.matrix);
    // published generating set: T^2, [[5,-2],[3,-1]], [[-4,3],[-7,5]] plus -Id
    CHECK(subgroup_index_sl2z(mats).index == 10);
    CHECK(subgroup_index_sl2z({mat2(1, 2, 0, 1), mat2(5, -2, 3, -1), mat2(-4, 3, -7, 5)}).index ==
          10);
}

TEST_CASE("todd-coxeter basics") {
    CHECK(subgroup_index_sl2z({mat2(0, 1, -1, 0), mat2(1, 1, 0, 1)}).index == 1);
    // principal congruence subgroup Gamma(2): index 6
    CHECK(subgroup_index_sl2z({mat2(1, 2, 0, 1), mat2(1, 0, 2, 1), mat2(-1, 0, 0, -1)}).index ==
          6);
    // <T> has infinite index
    CHECK_THROWS_AS(subgroup_index_sl2z({mat2(1, 1, 0, 1)}, 20000), Error);
    // PSL: whole group
    CHECK(subgroup_index_psl2z({mat2(0, 1, -1, 0), mat2(1, 1, 0, 1)}).index == 1);
}

TEST_CASE("orbit invariants along the veech orbit") {
    Origami o = family_okl(3, 2);
    VeechGroup vg = veech_group(o);
    Stratum st = stratum(o);
    bool red = is_reduced(o);
    for (const Origami& v : vg.vertices) {
        CHECK(stratum(v) == st);
        CHECK(is_reduced(v) == red);
    }
}

TEST_CASE("orbit budget") {
    CHECK_THROWS_AS(veech_group(family_okl(3, 2), 2), Error);
}

TEST_CASE("coset graph export") {
    VeechGroup vg = veech_group(family_e5());
    std::string js = coset_graph_json(vg);
    CHECK(js.find("\"index\":10") != std::string::npos);
    std::string dot = coset_graph_dot(vg);
    CHECK(dot.find("digraph") != std::string::npos);
}
