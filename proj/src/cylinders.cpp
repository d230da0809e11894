#include "origamikz/cylinders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace origamikz {

namespace {

// Horizontal decomposition: rows are h-cycles; rows stack across a line iff
// no corner on that line is singular. The line below a row is singular iff
// some square of the row has a corner cycle of length > 1.
struct HorizontalCyl {
    int circumference, height;
    int base_row_square;  // smallest square of one row, for the core chain
};

std::vector<HorizontalCyl> horizontal_cylinders(const Origami& o) {
    int n = o.degree();
    Perm c = o.corner_perm();
    std::vector<char> sq_singular(n, 0);
    for (int i = 0; i < n; ++i)
        if (c.apply0(i) != i) sq_singular[i] = 1;

    std::vector<int> row_of(n, -1);
    std::vector<int> row_min;
    std::vector<int> row_len;
    std::vector<char> row_singular_floor;
    for (int i = 0; i < n; ++i) {
        if (row_of[i] >= 0) continue;
        int id = static_cast<int>(row_min.size());
        int len = 0;
        bool sing = false;
        for (int j = i; row_of[j] < 0; j = o.h().apply0(j)) {
            row_of[j] = id;
            ++len;
            if (sq_singular[j]) sing = true;
        }
        row_min.push_back(i);
        row_len.push_back(len);
        row_singular_floor.push_back(sing);
    }
    int nrows = static_cast<int>(row_min.size());
    std::vector<int> parent(nrows);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i) {
        int up = row_of[o.v().apply0(i)];
        if (!row_singular_floor[up]) {
            int a = find(row_of[i]), b = find(up);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<HorizontalCyl> out;
    std::vector<int> cyl_of(nrows, -1);
    for (int r = 0; r < nrows; ++r) {
        int root = find(r);
        if (cyl_of[root] < 0) {
            cyl_of[root] = static_cast<int>(out.size());
            out.push_back({row_len[r], 0, row_min[r]});
        }
        HorizontalCyl& cyl = out[cyl_of[root]];
        check(cyl.circumference == row_len[r], errc::internal,
              "rows of one cylinder must share a circumference");
        cyl.height += 1;
        cyl.base_row_square = std::min(cyl.base_row_square, row_min[r]);
    }
    int area = 0;
    for (const auto& cyl : out) area += cyl.circumference * cyl.height;
    check(area == n, errc::internal, "cylinder areas must add up to the degree");
    return out;
}

void primitive_direction(long& p, long& q) {
    check(p != 0 || q != 0, errc::not_primitive, "direction (0,0)");
    long g = std::gcd(std::abs(p), std::abs(q));
    p /= g;
    q /= g;
}

}  // namespace

CylinderDecomposition decompose(const HomologyModel& model, long p, long q) {
    primitive_direction(p, q);
    const Origami& o = model.origami();
    int n = o.degree();
    // A in SL(2,Z) with A (p,q)^t = (1,0)^t
    Int g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), Int(p).get_mpz_t(),
               Int(q).get_mpz_t());
    check(g == 1, errc::not_primitive, "direction is not primitive");
    Mat2 trans(2, 2);
    trans(0, 0) = a;
    trans(0, 1) = b;
    trans(1, 0) = -q;
    trans(1, 1) = p;
    SL2Word word = sl2_word_from_matrix(trans);
    Origami sheared = nielsen_apply_word(word, o);

    std::vector<HorizontalCyl> hcyls = horizontal_cylinders(sheared);
    SL2Word back = word_inverse(word);

    CylinderDecomposition d;
    d.p = p;
    d.q = q;
    for (const HorizontalCyl& hc : hcyls) {
        Cylinder cyl;
        cyl.circumference = hc.circumference;
        cyl.height = hc.height;
        IntVec chain(2 * n);
        int j = hc.base_row_square;
        do {
            chain[j] = 1;
            j = sheared.h().apply0(j);
        } while (j != hc.base_row_square);
        // pull the core back to the original marking
        Origami cur = sheared;
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
            chain = transport_chain(*it, cur, chain);
            cur = nielsen_apply(*it, cur);
        }
        check(cur == o, errc::internal, "transport did not return to the base origami");
        cyl.core_chain = chain;
        cyl.core_h1 = model.class_of_chain(chain);
        auto hol = model.chain_holonomy(chain);
        check(hol[0] == Int(p) * cyl.circumference && hol[1] == Int(q) * cyl.circumference,
              errc::internal, "core holonomy must be circumference * direction");
        d.cyls.push_back(std::move(cyl));
    }
    std::stable_sort(d.cyls.begin(), d.cyls.end(),
                     [](const Cylinder& x, const Cylinder& y) {
                         return x.circumference < y.circumference;
                     });
    return d;
}

std::vector<Int> minimal_twist_counts(const CylinderDecomposition& d) {
    // least lambda with lambda * h_i / w_i integral for all i
    Int lam = 1;
    for (const Cylinder& c : d.cyls) {
        Int w = c.circumference, h = c.height;
        Int den = w / gcd(w, h);
        lam = lcm(lam, den);
    }
    std::vector<Int> counts;
    for (const Cylinder& c : d.cyls) counts.push_back(lam * c.height / c.circumference);
    return counts;
}

HomologyAction multitwist_action(const HomologyModel& model, const CylinderDecomposition& d,
                                 std::vector<Int> counts) {
    if (counts.empty()) counts = minimal_twist_counts(d);
    check(counts.size() == d.cyls.size(), errc::bad_params, "one twist count per cylinder");
    // common shear: lambda = m_i w_i / h_i (negative counts give the inverse twist)
    Rat lambda(0);
    for (size_t i = 0; i < counts.size(); ++i) {
        check(counts[i] != 0, errc::bad_params, "twist counts must be nonzero");
        Rat l = Rat(counts[i] * d.cyls[i].circumference) / Rat(d.cyls[i].height);
        if (i == 0)
            lambda = l;
        else
            check(l == lambda, errc::bad_params, "twist counts do not share a shear");
    }
    int r = model.rank();
    HomologyAction act;
    act.full = IntMat(r, r);
    for (int col = 0; col < r; ++col) {
        IntVec e(r);
        e[col] = 1;
        IntVec img = e;
        for (size_t i = 0; i < d.cyls.size(); ++i) {
            Int coef = counts[i] * model.pair(d.cyls[i].core_h1, e);
            if (coef == 0) continue;
            for (int rr = 0; rr < r; ++rr) img[rr] += coef * d.cyls[i].core_h1[rr];
        }
        for (int rr = 0; rr < r; ++rr) act.full(rr, col) = img[rr];
    }
    check(act.full.transpose() * model.omega() * act.full == model.omega(), errc::internal,
          "multitwist is not symplectic");
    for (const Cylinder& c : d.cyls)
        check(act.full.apply(c.core_h1) == c.core_h1, errc::internal,
              "multitwist must fix its core classes");
    // tautological part: parabolic fixing (p,q) with shear lambda; for counts
    // from a genuine affine twist lambda and the matrix below are integral
    {
        check(lambda.get_den() == 1, errc::internal, "non-integral shear");
        Int l = lambda.get_num();
        // conjugate of [[1,lambda],[0,1]] by any A with A(p,q) = (1,0):
        // Id + lambda * (p,q)^t (-q,p)
        act.taut = mat2(0, 0, 0, 0);
        act.taut(0, 0) = 1 - l * d.p * d.q;
        act.taut(0, 1) = l * d.p * d.p;
        act.taut(1, 0) = -l * d.q * d.q;
        act.taut(1, 1) = 1 + l * d.p * d.q;
        IntVec sig = act.full.apply(model.sigma());
        IntVec xi = act.full.apply(model.xi());
        for (int i = 0; i < r; ++i) {
            check(sig[i] == act.taut(0, 0) * model.sigma()[i] + act.taut(1, 0) * model.xi()[i],
                  errc::internal, "multitwist tautological part mismatch");
            check(xi[i] == act.taut(0, 1) * model.sigma()[i] + act.taut(1, 1) * model.xi()[i],
                  errc::internal, "multitwist tautological part mismatch");
        }
    }
    int z = model.zero_rank();
    act.shadow = RatMat(z, z);
    for (int c = 0; c < z; ++c) {
        IntVec col(r);
        for (int i = 0; i < r; ++i) col[i] = model.zero_basis()(i, c);
        RatVec coords = model.zero_coordinates(act.full.apply(col));
        for (int rr = 0; rr < z; ++rr) act.shadow(rr, c) = coords[rr];
    }
    return act;
}

Transvection transvection_h0(const HomologyModel& model, const CylinderDecomposition& d,
                             std::vector<Int> counts) {
    check(d.cyls.size() == 2, errc::not_two_cylinders,
          "transvections need a two-cylinder direction");
    if (counts.empty()) counts = minimal_twist_counts(d);
    HomologyAction act = multitwist_action(model, d, counts);
    const Cylinder &c1 = d.cyls[0], &c2 = d.cyls[1];
    int r = model.rank();
    Transvection t;
    t.x_h1 = IntVec(r);
    for (int i = 0; i < r; ++i)
        t.x_h1[i] = Int(c2.circumference) * c1.core_h1[i] - Int(c1.circumference) * c2.core_h1[i];
    t.x_zero = model.zero_coordinates(t.x_h1);
    // c = m1 h2 / (w2 * area)
    Int area = 0;
    for (const Cylinder& c : d.cyls) area += Int(c.circumference) * c.height;
    t.c = Rat(counts[0] * c2.height) / Rat(Int(c2.circumference) * area);
    check(t.c == Rat(counts[1] * c1.height) / Rat(Int(c1.circumference) * area), errc::internal,
          "transvection coefficient mismatch");
    t.shadow = act.shadow;
    // rank-one check: (shadow - I) has rank 1 with image spanned by X
    RatMat dm = t.shadow;
    for (int i = 0; i < dm.rows(); ++i) dm(i, i) -= 1;
    check(rank_of(dm) == 1, errc::internal, "transvection deviation must have rank 1");
    check((dm * dm).is_zero(), errc::internal, "transvection must be unipotent");
    // D(z) = z + c Omega(X, z) X for z in H1^(0)
    for (int col = 0; col < model.zero_basis().cols(); ++col) {
        IntVec z(r);
        for (int i = 0; i < r; ++i) z[i] = model.zero_basis()(i, col);
        Rat coef = t.c * Rat(model.pair(t.x_h1, z));
        IntVec img = act.full.apply(z);
        for (int rr = 0; rr < r; ++rr) {
            Rat expect = Rat(z[rr]) + coef * Rat(t.x_h1[rr]);
            check(Rat(img[rr]) == expect, errc::internal, "transvection formula mismatch");
        }
    }
    return t;
}

IntMat waist_zero_basis(const HomologyModel& model, const CylinderDecomposition& d1,
                        const CylinderDecomposition& d2) {
    int r = model.rank();
    int total = static_cast<int>(d1.cyls.size() + d2.cyls.size());
    check(total == r, errc::bad_params,
          "waist curves of the two directions do not form an H1 basis");
    IntMat cols(r, r - 2);
    int col = 0;
    for (const CylinderDecomposition* d : {&d1, &d2}) {
        const Cylinder& ref = d->cyls[0];
        for (size_t i = 1; i < d->cyls.size(); ++i) {
            const Cylinder& c = d->cyls[i];
            Int wr = ref.circumference, wc = c.circumference;
            Int g = gcd(wr, wc);
            for (int row = 0; row < r; ++row)
                cols(row, col) = (wr * c.core_h1[row] - wc * ref.core_h1[row]) / g;
            ++col;
        }
    }
    return cols;
}

}  // namespace origamikz
