#pragma once

#include <initializer_list>
#include <vector>

#include "origamikz/common.hpp"

namespace origamikz {

template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(int rows, int cols, std::initializer_list<T> vals) : Mat(rows, cols) {
        check(static_cast<int>(vals.size()) == rows * cols, errc::bad_params, "bad initializer size");
        size_t i = 0;
        for (const T& v : vals) a_[i++] = v;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    std::vector<T> row(int r) const {
        std::vector<T> v(cols_);
        for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
        return v;
    }
    std::vector<T> col(int c) const {
        std::vector<T> v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool is_identity() const {
        if (!square()) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if ((*this)(r, c) != ((r == c) ? 1 : 0)) return false;
        return true;
    }
    bool is_zero() const {
        for (const T& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) = default;

    friend Mat operator*(const Mat& x, const Mat& y) {
        check(x.cols_ == y.rows_, errc::bad_params, "matrix product shape mismatch");
        Mat z(x.rows_, y.cols_);
        for (int r = 0; r < x.rows_; ++r)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xv = x(r, k);
                if (xv == 0) continue;
                for (int c = 0; c < y.cols_; ++c) z(r, c) += xv * y(k, c);
            }
        return z;
    }
    friend Mat operator+(const Mat& x, const Mat& y) {
        check(x.rows_ == y.rows_ && x.cols_ == y.cols_, errc::bad_params, "shape mismatch");
        Mat z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        check(x.rows_ == y.rows_ && x.cols_ == y.cols_, errc::bad_params, "shape mismatch");
        Mat z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        check(static_cast<int>(v.size()) == cols_, errc::bad_params, "vector length mismatch");
        std::vector<T> out(rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
        return out;
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

RatMat to_rat(const IntMat& m);
// Fails unless every entry is integral.
IntMat to_int(const RatMat& m);

IntMat mat_pow(const IntMat& m, long e);  // e may be negative if m is unimodular

// Integer polynomial, ascending coefficients, no trailing zeros.
struct Poly {
    IntVec coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& operator[](int i) const { return coeffs[i]; }
    bool palindromic() const;
    Int eval(const Int& x) const;
    friend bool operator==(const Poly& a, const Poly& b) = default;
    std::string str() const;  // e.g. "x^4-35x^3+248x^2-35x+1"
};

struct RankKernel {
    int rank;
    std::vector<RatVec> kernel;  // basis of the right kernel
};

// Gaussian elimination over Q; pivot rule: first nonzero column, then the
// entry of smallest height (deterministic).
RankKernel rank_kernel(const RatMat& m);

int rank_of(const RatMat& m);
int rank_of(const IntMat& m);

// Solve m*x = b over Q; fails if inconsistent. Returns one solution.
RatVec solve(const RatMat& m, const RatVec& b);
RatMat inverse(const RatMat& m);

Rat det(const RatMat& m);
Int det(const IntMat& m);

// Monic characteristic polynomial, exact (Faddeev-LeVerrier).
Poly char_poly(const IntMat& m);
Poly char_poly(const RatMat& m);

bool is_perfect_square(const Int& k);

// Dimension over Q of the unital matrix algebra generated by gens: seed with
// the identity and close under left multiplication by generators, Gaussian-
// reducing each product into an independent set. cap limits the number of
// products formed before CapExceeded is raised.
int algebra_dimension(const std::vector<RatMat>& gens, long cap = -1);
int algebra_dimension(const std::vector<IntMat>& gens, long cap = -1);

// Row Hermite normal form: canonical basis of the row lattice. Zero rows are
// dropped; pivots positive; entries above each pivot reduced into [0, pivot).
IntMat hnf(const IntMat& m);

// Smith normal form with transforms: u * m * v = d, u and v unimodular,
// d diagonal with d_1 | d_2 | ... Also returns u^-1.
struct Smith {
    IntMat d;
    IntMat u, uinv;
    IntMat v;
    int rank;
};
Smith smith_form(const IntMat& m);

bool is_symplectic(const IntMat& m, const IntMat& omega);
bool is_symplectic(const RatMat& m, const RatMat& omega);

std::string to_string(const IntMat& m);

}  // namespace origamikz
