#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "origamikz/linalg.hpp"

using namespace origamikz;

TEST_CASE("rank and kernel") {
    RatMat id4 = RatMat::identity(4);
    auto rk = rank_kernel(id4);
    CHECK(rk.rank == 4);
    CHECK(rk.kernel.empty());

    RatMat z(2, 3);
    auto rz = rank_kernel(z);
    CHECK(rz.rank == 0);
    CHECK(rz.kernel.size() == 3);

    RatMat m(2, 3, {Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6)});
    auto rm = rank_kernel(m);
    CHECK(rm.rank == 1);
    CHECK(rm.kernel.size() == 2);
    for (const auto& v : rm.kernel) {
        auto img = m.apply(v);
        for (const auto& x : img) CHECK(x == 0);
    }
}

TEST_CASE("char poly") {
    IntMat id2 = IntMat::identity(2);
    CHECK(char_poly(id2) == Poly{{Int(1), Int(-2), Int(1)}});

    IntMat m(2, 2, {Int(0), Int(1), Int(1), Int(0)});
    CHECK(char_poly(m) == Poly{{Int(-1), Int(0), Int(1)}});

    IntMat t(3, 3,
             {Int(2), Int(0), Int(0), Int(0), Int(3), Int(0), Int(0), Int(0), Int(5)});
    Poly p = char_poly(t);
    CHECK(p.eval(2) == 0);
    CHECK(p.eval(3) == 0);
    CHECK(p.eval(5) == 0);
    CHECK(p.eval(1) == (1 - 2) * (1 - 3) * (1 - 5));
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(Int(0)));
    CHECK(is_perfect_square(Int(1)));
    CHECK(is_perfect_square(Int(57600)));
    CHECK(!is_perfect_square(Int(241)));
    CHECK(!is_perfect_square(Int(-4)));

    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        Int t = Int(static_cast<unsigned long>(rng() % 1000000));
        CHECK(is_perfect_square(t * t));
        Int s;
        mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
        CHECK(is_perfect_square(t) == (s * s == t));
    }
}

TEST_CASE("algebra dimension") {
    CHECK(algebra_dimension(std::vector<IntMat>{IntMat::identity(3)}) == 1);

    // 2x2: T and S generate a dense subalgebra of M_2(Q)
    IntMat t(2, 2, {Int(1), Int(1), Int(0), Int(1)});
    IntMat s(2, 2, {Int(0), Int(-1), Int(1), Int(0)});
    CHECK(algebra_dimension(std::vector<IntMat>{t, s}) == 4);

    // diagonal matrices only span the diagonal
    IntMat d(2, 2, {Int(2), Int(0), Int(0), Int(3)});
    CHECK(algebra_dimension(std::vector<IntMat>{d}) == 2);

    CHECK_THROWS_AS(algebra_dimension(std::vector<IntMat>{t, s}, 2), Error);
}

TEST_CASE("algebra dimension is generator-order independent") {
    IntMat t(2, 2, {Int(1), Int(1), Int(0), Int(1)});
    IntMat s(2, 2, {Int(0), Int(-1), Int(1), Int(0)});
    CHECK(algebra_dimension(std::vector<IntMat>{t, s}) ==
          algebra_dimension(std::vector<IntMat>{s, t}));
}

TEST_CASE("hnf") {
    IntMat id3 = IntMat::identity(3);
    CHECK(hnf(id3) == id3);

    IntMat m(3, 2, {Int(2), Int(0), Int(0), Int(2), Int(1), Int(1)});
    IntMat h = hnf(m);
    CHECK(h == IntMat(2, 2, {Int(1), Int(1), Int(0), Int(2)}));

    // idempotent
    CHECK(hnf(h) == h);

    // row lattice preserved: spot-check membership both ways
    // (1,1) = row3; (2,0) = 2*(1,1) - (0,2)
    CHECK(hnf(IntMat(2, 2, {Int(1), Int(1), Int(0), Int(2)})) == h);
}

TEST_CASE("smith form") {
    IntMat m(3, 3, {Int(2), Int(4), Int(4), Int(-6), Int(6), Int(12), Int(10), Int(4), Int(16)});
    Smith s = smith_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK((s.u * s.uinv).is_identity());
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    // diagonal, divisibility chain
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(s.d(i, j) == 0);
    for (int i = 0; i + 1 < s.rank; ++i) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
}

TEST_CASE("smith form of rectangular sparse") {
    IntMat m(4, 6);
    m(0, 0) = 1;
    m(0, 3) = -1;
    m(1, 1) = 2;
    m(1, 4) = 2;
    m(2, 2) = 3;
    m(3, 5) = 0;
    Smith s = smith_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(s.rank == 3);
    CHECK((s.u * s.uinv).is_identity());
}

TEST_CASE("solve and inverse") {
    RatMat m(2, 2, {Rat(2), Rat(1), Rat(1), Rat(1)});
    RatVec b{Rat(3), Rat(2)};
    RatVec x = solve(m, b);
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
    RatMat inv = inverse(m);
    CHECK((m * inv).is_identity());
}

TEST_CASE("mat_pow") {
    IntMat t(2, 2, {Int(1), Int(1), Int(0), Int(1)});
    CHECK(mat_pow(t, 5) == IntMat(2, 2, {Int(1), Int(5), Int(0), Int(1)}));
    CHECK(mat_pow(t, -3) == IntMat(2, 2, {Int(1), Int(-3), Int(0), Int(1)}));
    CHECK(mat_pow(t, 0).is_identity());
}

TEST_CASE("poly printing and palindromes") {
    Poly p{{Int(1), Int(-35), Int(248), Int(-35), Int(1)}};
    CHECK(p.palindromic());
    CHECK(p.str() == "x^4-35x^3+248x^2-35x+1");
    Poly q{{Int(2), Int(1)}};
    CHECK(!q.palindromic());
}

TEST_CASE("rank of the deviation of the published P-matrix") {
    // B for P_{2n} at n = 2, in the basis (Sigma_21, Sigma_31, Z_21, Z_31)
    long n = 2;
    RatMat b(4, 4, {Rat(1), Rat(0), Rat(0), Rat(0),      //
                    Rat(0), Rat(1), Rat(0), Rat(0),      //
                    Rat(-n + 2), Rat(-n + 1), Rat(1), Rat(0),  //
                    Rat(-n + 1), Rat(-n + 2), Rat(0), Rat(1)});
    for (int i = 0; i < 4; ++i) b(i, i) -= 1;
    CHECK(rank_of(b) == 2);
}

TEST_CASE("hnf preserves the lattice determinant") {
    // the 6x6 base-change matrix of the stairs lattice at N = M = 4
    long q = 4 + 4 + 2;
    IntMat c(6, 6, {Int(q), Int(1), Int(-2 * q), Int(0), Int(0), Int(0),  //
                    Int(0), Int(1), Int(0),      Int(0), Int(0), Int(0),  //
                    Int(0), Int(1), Int(-q),     Int(0), Int(0), Int(0),  //
                    Int(0), Int(0), Int(0),      Int(1), Int(0), Int(1 - q + 1),  //
                    Int(0), Int(0), Int(0),      Int(0), Int(1), Int(1),  //
                    Int(0), Int(0), Int(0),      Int(0), Int(0), Int(1)});
    CHECK(abs(det(hnf(c))) == abs(det(c)));
}
