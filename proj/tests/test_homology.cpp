#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "origamikz/families.hpp"
#include "origamikz/homology.hpp"

using namespace origamikz;

namespace {

IntVec h_cycle_chain(const Origami& o, int start1) {
    IntVec ch(2 * o.degree());
    int i = start1 - 1;
    do {
        ch[i] = 1;
        i = o.h().apply0(i);
    } while (i != start1 - 1);
    return ch;
}

IntVec v_cycle_chain(const Origami& o, int start1) {
    IntVec ch(2 * o.degree());
    int i = start1 - 1;
    do {
        ch[o.degree() + i] = 1;
        i = o.v().apply0(i);
    } while (i != start1 - 1);
    return ch;
}

IntVec add(const IntVec& a, const IntVec& b, const Int& bc) {
    IntVec out = a;
    for (size_t i = 0; i < a.size(); ++i) out[i] += bc * b[i];
    return out;
}

IntMat cols_to_mat(const std::vector<IntVec>& cols) {
    IntMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[0].size(); ++r)
            m(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
    return m;
}

}  // namespace

TEST_CASE("torus homology") {
    Origami torus(Perm(1), Perm(1));
    HomologyModel hm(torus);
    CHECK(hm.genus() == 1);
    CHECK(hm.rank() == 2);
    CHECK(hm.zero_rank() == 0);
    CHECK(hm.pair(hm.sigma(), hm.xi()) == 1);
}

TEST_CASE("sigma pairs with xi to the degree") {
    for (Origami o : {family_e5(), family_genus4_h6(), family_o_prime(3, 5), family_p(6),
                      family_okl(3, 2), family_stairs(4, 0), family_lshape(3, 2)}) {
        HomologyModel hm(o);
        CHECK(hm.pair(hm.sigma(), hm.xi()) == o.degree());
        CHECK(abs(det(hm.omega())) == 1);
        auto hol_sigma = hm.holonomy().apply(hm.sigma());
        CHECK(hol_sigma[0] == o.degree());
        CHECK(hol_sigma[1] == 0);
    }
}

TEST_CASE("O_{3,5}: intersection matrix on the waist basis") {
    Origami o = family_o_prime(3, 5);
    HomologyModel hm(o);
    CHECK(hm.genus() == 3);
    // waist classes: sigma_c = x_1, sigma_m over (2,3), sigma_l over (4..8);
    // zeta_c = one of the unit columns {6},{7},{8}, zeta_m over (5,3), zeta_l over (4,2,1)
    IntVec sc = h_cycle_chain(o, 1), sm = h_cycle_chain(o, 2), sl = h_cycle_chain(o, 4);
    IntVec zc = v_cycle_chain(o, 6), zm = v_cycle_chain(o, 5), zl = v_cycle_chain(o, 4);
    // the three unit columns lie in one cylinder, so they are homologous
    CHECK(hm.class_of_chain(v_cycle_chain(o, 6)) == hm.class_of_chain(v_cycle_chain(o, 7)));
    CHECK(hm.class_of_chain(v_cycle_chain(o, 7)) == hm.class_of_chain(v_cycle_chain(o, 8)));

    IntVec Sl = hm.class_of_chain(add(sl, sc, -5));
    IntVec Sm = hm.class_of_chain(add(sm, sc, -2));
    IntVec Zl = hm.class_of_chain(add(zl, zc, -3));
    IntVec Zm = hm.class_of_chain(add(zm, zc, -2));
    // the published fundamental matrix G, with the orientation flipped: its
    // source pairs (vertical, horizontal) positively, while this code (and the
    // published stairs tables) pair (horizontal, vertical) positively
    IntMat g(4, 4,
             {Int(0), Int(0), Int(-7), Int(-1),  //
              Int(0), Int(0), Int(-1), Int(1),   //
              Int(7), Int(1), Int(0), Int(0),    //
              Int(1), Int(-1), Int(0), Int(0)});
    std::vector<IntVec> basis = {Sl, Sm, Zl, Zm};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(hm.pair(basis[i], basis[j]) == g(i, j));

    hm.set_zero_basis(cols_to_mat(basis));
    CHECK(hm.omega_zero() == g);
}

TEST_CASE("Stairs: published intersection matrix") {
    for (auto [N, m] : std::vector<std::pair<int, int>>{{4, 0}, {5, 1}}) {
        int M = 4 + 2 * m;
        Origami o = family_stairs(N, m);
        HomologyModel hm(o);
        CHECK(hm.genus() == 4);
        IntVec s1 = h_cycle_chain(o, N + 6), s2 = h_cycle_chain(o, N + 4),
               s3 = h_cycle_chain(o, N + 1), sN = h_cycle_chain(o, 1);
        IntVec z1 = v_cycle_chain(o, 4), z2 = v_cycle_chain(o, 3), z3 = v_cycle_chain(o, 2),
               zM = v_cycle_chain(o, 1);
        std::vector<IntVec> basis = {
            hm.class_of_chain(add(s2, s1, -2)), hm.class_of_chain(add(s3, s1, -3)),
            hm.class_of_chain(add(sN, s1, -N)), hm.class_of_chain(add(z2, z1, -2)),
            hm.class_of_chain(add(z3, z1, -3)), hm.class_of_chain(add(zM, z1, -M))};
        long q = N + M - 1;
        std::vector<std::vector<long>> expect = {
            {0, 0, 0, 0, 1, -1},  {0, 0, 0, 1, 1, -2},   {0, 0, 0, -1, -2, -q},
            {0, -1, 1, 0, 0, 0},  {-1, -1, 2, 0, 0, 0},  {1, 2, q, 0, 0, 0}};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                CHECK(hm.pair(basis[i], basis[j]) == expect[i][j]);
    }
}

TEST_CASE("affine action on the torus") {
    Origami torus(Perm(1), Perm(1));
    HomologyModel hm(torus);
    HomologyAction a = affine_action(hm, {Letter::T}, Perm(1));
    CHECK(a.taut == letter_matrix(Letter::T));
    CHECK(a.full.rows() == 2);
    HomologyAction b = affine_action_of_matrix(hm, mat2(2, 1, 1, 1));
    CHECK(b.taut == mat2(2, 1, 1, 1));
}

TEST_CASE("genus4 H(6): full and shadow actions equal the published matrices") {
    Origami o = family_genus4_h6();
    HomologyModel hm(o);
    CHECK(hm.rank() == 8);

    auto cell_x = [&](int i) {
        IntVec ch(14);
        ch[i - 1] = 1;
        return ch;
    };
    auto cell_y = [&](int i) {
        IntVec ch(14);
        ch[7 + i - 1] = 1;
        return ch;
    };
    // published basis B = {e1,e3,e4,e5,e7,e8,e9,e13}: lower edges of 1,3,4,5,7 and
    // left edges of 1,2,6
    std::vector<IntVec> bcols;
    for (int i : {1, 3, 4, 5, 7}) bcols.push_back(hm.class_of_chain(cell_x(i)));
    for (int i : {1, 2, 6}) bcols.push_back(hm.class_of_chain(cell_y(i)));
    RatMat p = to_rat(cols_to_mat(bcols));

    // A1 = [[1,3],[0,1]] = T^3, A2 = [[1,0],[-1,1]] = Tp^-1
    HomologyAction a1 = affine_action_of_matrix(hm, mat2(1, 3, 0, 1));
    HomologyAction a2 = affine_action_of_matrix(hm, mat2(1, 0, -1, 1));

    RatMat b1 = inverse(p) * to_rat(a1.full) * p;
    RatMat b2 = inverse(p) * to_rat(a2.full) * p;
    IntMat b1_expect(8, 8, {Int(1), Int(0), Int(0), Int(0), Int(0), Int(3), Int(1), Int(1),
                           Int(0), Int(1), Int(0), Int(0), Int(0), Int(0), Int(1), Int(0),
                           Int(0), Int(0), Int(1), Int(0), Int(0), Int(0), Int(1), Int(1),
                           Int(0), Int(0), Int(0), Int(1), Int(0), Int(0), Int(0), Int(0),
                           Int(0), Int(0), Int(0), Int(0), Int(1), Int(0), Int(0), Int(1),
                           Int(0), Int(0), Int(0), Int(0), Int(0), Int(1), Int(0), Int(0),
                           Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(1), Int(0),
                           Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(1)});
    IntMat b2_expect(8, 8, {Int(1),  Int(1),  Int(1),  Int(1),  Int(1),  Int(-1), Int(-1), Int(0),
                           Int(0),  Int(0),  Int(0),  Int(0),  Int(0),  Int(1),  Int(0),  Int(0),
                           Int(0),  Int(1),  Int(1),  Int(1),  Int(0),  Int(0),  Int(-1), Int(0),
                           Int(0),  Int(0),  Int(-1), Int(-1), Int(0),  Int(0),  Int(1),  Int(0),
                           Int(0),  Int(-1), Int(0),  Int(0),  Int(0),  Int(0),  Int(1),  Int(0),
                           Int(0),  Int(0),  Int(0),  Int(0),  Int(-1), Int(0),  Int(0),  Int(1),
                           Int(-1), Int(0),  Int(0),  Int(-1), Int(0),  Int(1),  Int(0),  Int(0),
                           Int(0),  Int(-1), Int(-1), Int(0),  Int(0),  Int(0),  Int(1),  Int(0)});
    CHECK(b1 == to_rat(b1_expect));
    CHECK(b2 == to_rat(b2_expect));

    // shadow on the published basis C: v_i = e_i - e_7 (i in 1,3,4,5), e_8 - e_13, e_9 - e_13
    std::vector<IntVec> ccols;
    for (int i : {1, 3, 4, 5}) ccols.push_back(hm.class_of_chain(add(cell_x(i), cell_x(7), -1)));
    for (int i : {1, 2}) ccols.push_back(hm.class_of_chain(add(cell_y(i), cell_y(6), -1)));
    hm.set_zero_basis(cols_to_mat(ccols));

    HomologyAction a1c = affine_action_of_matrix(hm, mat2(1, 3, 0, 1));
    HomologyAction a2c = affine_action_of_matrix(hm, mat2(1, 0, -1, 1));
    IntMat c1_expect(6, 6, {Int(1), Int(0), Int(0), Int(0), Int(2),  Int(0),  //
                           Int(0), Int(1), Int(0), Int(0), Int(0),  Int(1),  //
                           Int(0), Int(0), Int(1), Int(0), Int(-1), Int(0),  //
                           Int(0), Int(0), Int(0), Int(1), Int(0),  Int(0),  //
                           Int(0), Int(0), Int(0), Int(0), Int(1),  Int(0),  //
                           Int(0), Int(0), Int(0), Int(0), Int(0),  Int(1)});
    IntMat c2_expect(6, 6, {Int(0),  Int(0), Int(0),  Int(0),  Int(-1), Int(-1),  //
                           Int(0),  Int(0), Int(0),  Int(0),  Int(1),  Int(0),   //
                           Int(0),  Int(1), Int(1),  Int(1),  Int(0),  Int(-1),  //
                           Int(0),  Int(0), Int(-1), Int(-1), Int(0),  Int(1),   //
                           Int(1),  Int(1), Int(1),  Int(1),  Int(-1), Int(-1),  //
                           Int(-1), Int(0), Int(0),  Int(-1), Int(1),  Int(0)});
    CHECK(a1c.shadow == to_rat(c1_expect));
    CHECK(a2c.shadow == to_rat(c2_expect));
}

TEST_CASE("E5: block actions and the trivial element") {
    Origami o = family_e5();
    HomologyModel hm(o);
    CHECK(hm.genus() == 3);
    IntVec s1 = h_cycle_chain(o, 1), s0 = h_cycle_chain(o, 3), s2 = h_cycle_chain(o, 4);
    IntVec z1 = v_cycle_chain(o, 1), z0 = v_cycle_chain(o, 2), z2 = v_cycle_chain(o, 5);
    IntVec S1 = hm.class_of_chain(add(s1, s0, -2)), S2 = hm.class_of_chain(add(s2, s0, -2));
    IntVec Z1 = hm.class_of_chain(add(add(z1, z1, 2), z0, -1));  // 3*z1 - z0
    IntVec Z2 = hm.class_of_chain(add(add(z2, z2, 2), z0, -1));
    auto sub = [](const IntVec& a, const IntVec& b) { return add(a, b, -1); };
    auto plus = [](const IntVec& a, const IntVec& b) { return add(a, b, 1); };
    hm.set_zero_basis(cols_to_mat({sub(S1, S2), sub(Z1, Z2), plus(S1, S2), plus(Z1, Z2)}));

    HomologyAction at2 = affine_action(hm, {Letter::T, Letter::T},
                                       *veech_witness(o, {Letter::T, Letter::T}));
    IntMat a_expect(4, 4, {Int(1), Int(3), Int(0), Int(0),  //
                          Int(0), Int(1), Int(0), Int(0),  //
                          Int(0), Int(0), Int(1), Int(1),  //
                          Int(0), Int(0), Int(0), Int(1)});
    CHECK(at2.shadow == to_rat(a_expect));

    HomologyAction ab = affine_action_of_matrix(hm, mat2(1, 0, 3, 1));
    IntMat b_expect(4, 4, {Int(1), Int(0), Int(0), Int(0),  //
                          Int(1), Int(1), Int(0), Int(0),  //
                          Int(0), Int(0), Int(1), Int(0),  //
                          Int(0), Int(0), Int(1), Int(1)});
    CHECK(ab.shadow == to_rat(b_expect));

    HomologyAction triv = affine_action_of_matrix(hm, mat2(6, -5, 5, -4));
    CHECK(triv.shadow.is_identity());
}

TEST_CASE("prym split of E5") {
    Origami o = family_e5();
    HomologyModel hm(o);
    // work in the eigenbasis {Sigma+, Z+, Sigma-, Z-} so that the involution
    // is diagonal and the restrictions come out integral
    IntVec s1 = h_cycle_chain(o, 1), s0 = h_cycle_chain(o, 3), s2 = h_cycle_chain(o, 4);
    IntVec z1 = v_cycle_chain(o, 1), z0 = v_cycle_chain(o, 2), z2 = v_cycle_chain(o, 5);
    IntVec S1 = hm.class_of_chain(add(s1, s0, -2)), S2 = hm.class_of_chain(add(s2, s0, -2));
    IntVec Z1 = hm.class_of_chain(add(add(z1, z1, 2), z0, -1));
    IntVec Z2 = hm.class_of_chain(add(add(z2, z2, 2), z0, -1));
    hm.set_zero_basis(cols_to_mat({add(S1, S2, -1), add(Z1, Z2, -1), add(S1, S2, 1),
                                   add(Z1, Z2, 1)}));
    auto phi = anti_automorphism(o);
    REQUIRE(phi.has_value());
    HomologyAction at2 = affine_action(hm, {Letter::T, Letter::T},
                                       *veech_witness(o, {Letter::T, Letter::T}));
    HomologyAction ab = affine_action_of_matrix(hm, mat2(1, 0, 3, 1));
    PrymSplit ps = prym_split(hm, *phi, {at2.shadow, ab.shadow});
    CHECK(ps.plus_basis.cols() == 2);
    CHECK(ps.minus_basis.cols() == 2);
    // the minus restrictions are T and [[1,0],[1,1]]; together they generate
    // all of SL(2,Z)
    std::vector<Mat2> minus;
    for (const RatMat& m : ps.minus_actions) minus.push_back(to_int(m));
    CHECK(subgroup_index_sl2z(minus).index == 1);
    // the plus restrictions are [[1,3],[0,1]] and [[1,0],[1,1]]; the group
    // they generate has index 8, i.e. it is a conjugated copy of Gamma_1(3)
    std::vector<Mat2> plus;
    for (const RatMat& m : ps.plus_actions) plus.push_back(to_int(m));
    CHECK(subgroup_index_sl2z(plus).index == 8);
    CHECK(subgroup_index_sl2z({mat2(1, 1, 0, 1), mat2(1, 0, 3, 1)}).index == 8);
}

TEST_CASE("functoriality on stabilizer words") {
    Origami o = family_genus4_h6();
    HomologyModel hm(o);
    SL2Word w1 = {Letter::T, Letter::T, Letter::T};
    SL2Word w2 = {Letter::Tpi};
    SL2Word w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    HomologyAction a1 = affine_action(hm, w1, *veech_witness(o, w1));
    HomologyAction a2 = affine_action(hm, w2, *veech_witness(o, w2));
    HomologyAction a12 = affine_action(hm, w12, *veech_witness(o, w12));
    CHECK(a12.full == a1.full * a2.full);
}
