#include "origamikz/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace origamikz {

RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

IntMat to_int(const RatMat& m) {
    IntMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            check(m(i, j).get_den() == 1, errc::internal, "matrix entry not integral");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntMat mat_pow(const IntMat& m, long e) {
    check(m.square(), errc::not_square, "mat_pow needs a square matrix");
    IntMat base = m;
    if (e < 0) {
        RatMat inv = inverse(to_rat(m));
        base = to_int(inv);  // fails unless integrally invertible
        e = -e;
    }
    IntMat acc = IntMat::identity(m.rows());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Poly::palindromic() const {
    int d = degree();
    for (int i = 0; i <= d; ++i)
        if (coeffs[i] != coeffs[d - i]) return false;
    return true;
}

Int Poly::eval(const Int& x) const {
    Int acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

std::string Poly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs[i];
        if (c == 0) continue;
        if (!first && c > 0) os << '+';
        if (i == 0)
            os << c;
        else if (c == -1)
            os << '-';
        else if (c != 1)
            os << c;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

namespace {

Rat rat_height(const Rat& x) {
    Int n = abs(x.get_num()), d = x.get_den();
    return Rat(n > d ? n : d);
}

// Row echelon over Q with the deterministic pivot rule from the design notes.
// Returns pivot column per row-echelon step; m is reduced in place.
std::vector<int> row_echelon(RatMat& m) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int best = -1;
        Rat best_h;
        for (int i = r; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat h = rat_height(m(i, c));
            if (best < 0 || h < best_h) {
                best = i;
                best_h = h;
            }
        }
        if (best < 0) continue;
        if (best != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
        Rat inv_pivot = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv_pivot;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

RankKernel rank_kernel(const RatMat& m_in) {
    RatMat m = m_in;
    std::vector<int> pivots = row_echelon(m);
    RankKernel out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<char> is_pivot(m.cols(), 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec v(m.cols());
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), c);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

int rank_of(const RatMat& m) {
    RatMat copy = m;
    return static_cast<int>(row_echelon(copy).size());
}
int rank_of(const IntMat& m) { return rank_of(to_rat(m)); }

RatVec solve(const RatMat& m, const RatVec& b) {
    check(static_cast<int>(b.size()) == m.rows(), errc::bad_params, "solve: shape mismatch");
    RatMat aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = row_echelon(aug);
    RatVec x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) {
        check(pivots[r] < m.cols(), errc::internal, "solve: inconsistent system");
        x[pivots[r]] = aug(static_cast<int>(r), m.cols());
    }
    // verify (free variables are set to zero)
    RatVec check_b = m.apply(x);
    for (int i = 0; i < m.rows(); ++i)
        check(check_b[i] == b[i], errc::internal, "solve: inconsistent system");
    return x;
}

RatMat inverse(const RatMat& m) {
    check(m.square(), errc::not_square, "inverse needs a square matrix");
    int n = m.rows();
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = row_echelon(aug);
    check(static_cast<int>(pivots.size()) == n && pivots[n - 1] == n - 1, errc::bad_params,
          "matrix is singular");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Rat det(const RatMat& m) {
    check(m.square(), errc::not_square, "det needs a square matrix");
    RatMat a = m;
    int n = a.rows();
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
            d = -d;
        }
        d *= a(c, c);
        Rat inv_pivot = 1 / a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rat f = a(r, c) * inv_pivot;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

Int det(const IntMat& m) {
    Rat d = det(to_rat(m));
    check(d.get_den() == 1, errc::internal, "integer determinant not integral");
    return d.get_num();
}

Poly char_poly(const IntMat& m) {
    check(m.square(), errc::not_square, "char_poly needs a square matrix");
    int n = m.rows();
    // Faddeev-LeVerrier: all divisions are exact over Z.
    IntVec c(n + 1);
    c[n] = 1;
    IntMat mk = IntMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        Int ck;
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        ck = -ck;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return Poly{std::move(c)};
}

Poly char_poly(const RatMat& m) {
    // clear denominators: char_poly(d*M)(x) = d^n * char_poly(M)(x/d)
    check(m.square(), errc::not_square, "char_poly needs a square matrix");
    int n = m.rows();
    Int d = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d = lcm(d, Int(m(i, j).get_den()));
    IntMat scaled(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat e = m(i, j) * Rat(d);
            scaled(i, j) = e.get_num();
        }
    Poly p = char_poly(scaled);
    // coefficient of x^k in char_poly(M) is p_k / d^(n-k); must be integral here
    IntVec out(n + 1);
    Int pw = 1;
    for (int k = n; k >= 0; --k) {
        check(p.coeffs[k] % pw == 0, errc::internal, "rational char poly is not integral");
        out[k] = p.coeffs[k] / pw;
        pw *= d;
    }
    return Poly{std::move(out)};
}

bool is_perfect_square(const Int& k) {
    if (k < 0) return false;
    return mpz_perfect_square_p(k.get_mpz_t()) != 0;
}

int algebra_dimension(const std::vector<RatMat>& gens, long cap) {
    check(!gens.empty(), errc::bad_params, "algebra_dimension needs at least one generator");
    int d = gens[0].rows();
    for (const auto& g : gens)
        check(g.rows() == d && g.cols() == d, errc::bad_params, "generators must share dimension");
    if (cap < 0) cap = 200L * d * d;

    // Row-reduced basis of the span inside Q^(d*d), with pivot bookkeeping.
    std::vector<RatVec> basis;
    std::vector<int> pivot_of;
    auto flatten = [&](const RatMat& m) {
        RatVec v(static_cast<size_t>(d) * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) v[static_cast<size_t>(i) * d + j] = m(i, j);
        return v;
    };
    auto reduce_insert = [&](RatVec v) -> bool {
        for (size_t k = 0; k < basis.size(); ++k) {
            if (v[pivot_of[k]] == 0) continue;
            Rat f = v[pivot_of[k]];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[k][j];
        }
        int p = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                p = static_cast<int>(j);
                break;
            }
        if (p < 0) return false;
        Rat inv_pivot = 1 / v[p];
        for (size_t j = 0; j < v.size(); ++j) v[j] *= inv_pivot;
        basis.push_back(std::move(v));
        pivot_of.push_back(p);
        return true;
    };

    std::vector<RatMat> elements;
    elements.push_back(RatMat::identity(d));
    reduce_insert(flatten(elements[0]));
    long products = 0;
    for (size_t head = 0; head < elements.size(); ++head) {
        RatMat cur = elements[head];
        for (const RatMat& g : gens) {
            check(products++ < cap, errc::cap_exceeded, "algebra_dimension cap exceeded");
            RatMat prod = g * cur;
            if (reduce_insert(flatten(prod))) elements.push_back(std::move(prod));
        }
        if (static_cast<int>(basis.size()) == d * d) break;  // full algebra, closed
    }
    return static_cast<int>(basis.size());
}

int algebra_dimension(const std::vector<IntMat>& gens, long cap) {
    std::vector<RatMat> rg;
    rg.reserve(gens.size());
    for (const auto& g : gens) rg.push_back(to_rat(g));
    return algebra_dimension(rg, cap);
}

IntMat hnf(const IntMat& m_in) {
    IntMat m = m_in;
    int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // clear column c below row r with gcd steps, smallest pivot first
        while (true) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                if (best < 0 || abs(m(i, c)) < abs(m(best, c))) best = i;
            }
            if (best < 0) break;
            if (best != r)
                for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
            if (m(r, c) < 0)
                for (int j = 0; j < cols; ++j) m(r, j) = -m(r, j);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
                for (int j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
                if (m(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(r, c) == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
            if (q != 0)
                for (int j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        }
        ++r;
    }
    IntMat out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return out;
}

Smith smith_form(const IntMat& m_in) {
    int rows = m_in.rows(), cols = m_in.cols();
    IntMat a = m_in;
    IntMat u = IntMat::identity(rows), uinv = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);

    auto row_swap = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
        for (int c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
        for (int r = 0; r < rows; ++r) std::swap(uinv(r, i), uinv(r, j));
    };
    auto col_swap = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
        for (int r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
    };
    auto row_add = [&](int dst, int src, const Int& f) {  // row dst += f * row src
        if (f == 0) return;
        for (int c = 0; c < cols; ++c) a(dst, c) += f * a(src, c);
        for (int c = 0; c < rows; ++c) u(dst, c) += f * u(src, c);
        for (int r = 0; r < rows; ++r) uinv(r, src) -= f * uinv(r, dst);
    };
    auto col_add = [&](int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < rows; ++r) a(r, dst) += f * a(r, src);
        for (int r = 0; r < cols; ++r) v(r, dst) += f * v(r, src);
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < cols; ++c) a(i, c) = -a(i, c);
        for (int c = 0; c < rows; ++c) u(i, c) = -u(i, c);
        for (int r = 0; r < rows; ++r) uinv(r, i) = -uinv(r, i);
    };

    int t = 0;
    int lim = std::min(rows, cols);
    while (t < lim) {
        // find pivot of smallest absolute value in the remaining block
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                if (pr < 0 || abs(a(i, j)) < abs(a(pr, pc))) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        if (a(t, t) < 0) row_neg(t);
        bool again = false;
        for (int i = t + 1; i < rows; ++i) {
            if (a(i, t) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
            row_add(i, t, -q);
            if (a(i, t) != 0) again = true;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (a(t, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
            col_add(j, t, -q);
            if (a(t, j) != 0) again = true;
        }
        if (again) continue;
        ++t;
    }
    // enforce divisibility chain
    for (int i = 0; i + 1 < t;) {
        if (a(i + 1, i + 1) % a(i, i) == 0) {
            ++i;
            continue;
        }
        col_add(i, i + 1, 1);
        // re-clear the 2x2 block
        while (a(i + 1, i) != 0 || a(i, i + 1) != 0) {
            if (a(i + 1, i) != 0) {
                if (abs(a(i + 1, i)) < abs(a(i, i))) row_swap(i, i + 1);
                if (a(i, i) < 0) row_neg(i);
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i + 1, i).get_mpz_t(), a(i, i).get_mpz_t());
                row_add(i + 1, i, -q);
            }
            if (a(i, i + 1) != 0) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, i + 1).get_mpz_t(), a(i, i).get_mpz_t());
                col_add(i + 1, i, -q);
            }
        }
        if (a(i, i) < 0) row_neg(i);
        if (a(i + 1, i + 1) < 0) row_neg(i + 1);
        i = std::max(0, i - 1);
    }
    Smith s;
    s.d = std::move(a);
    s.u = std::move(u);
    s.uinv = std::move(uinv);
    s.v = std::move(v);
    s.rank = t;
    return s;
}

bool is_symplectic(const IntMat& m, const IntMat& omega) {
    return m.transpose() * omega * m == omega;
}
bool is_symplectic(const RatMat& m, const RatMat& omega) {
    return m.transpose() * omega * m == omega;
}

std::string to_string(const IntMat& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
    }
    os << ']';
    return os.str();
}

}  // namespace origamikz
