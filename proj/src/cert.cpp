#include "origamikz/cert.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

namespace origamikz {

PinchingReport galois_pinching_quartic(const Int& a, const Int& b) {
    PinchingReport r;
    r.a = a;
    r.b = b;
    r.t = -a - 4;
    r.d = b + 2 * a + 2;
    r.delta1 = a * a - 4 * b + 8;
    r.delta2 = (b + 2 + 2 * a) * (b + 2 - 2 * a);
    r.delta12 = r.delta1 * r.delta2;
    r.sq1 = is_perfect_square(r.delta1);
    r.sq2 = is_perfect_square(r.delta2);
    r.sq12 = is_perfect_square(r.delta12);
    r.verdict = r.t > 0 && r.d > 0 && r.delta1 > 0 && !r.sq1 && !r.sq2 && !r.sq12;
    return r;
}

DensityPinching density_pinching(const RatMat& a, const RatMat& b, const IntMat& omega) {
    check(a.rows() == 4 && a.square() && b.rows() == 4 && b.square(), errc::bad_params,
          "pinching test expects 4x4 matrices");
    RatMat om = to_rat(omega);
    check(is_symplectic(a, om) && is_symplectic(b, om), errc::not_symplectic,
          "matrices must preserve the form");
    Poly cp = char_poly(a);
    check(cp.palindromic(), errc::internal, "symplectic char poly must be palindromic");
    DensityPinching out;
    out.pinching = galois_pinching_quartic(cp[3], cp[2]);
    RatMat dev = b;
    for (int i = 0; i < 4; ++i) dev(i, i) -= 1;
    out.deviation_rank = rank_of(dev);
    bool unipotent = (dev * dev * dev * dev).is_zero();
    out.lagrangian_obstruction = false;
    if (out.deviation_rank == 2) {
        // image of (B - I): check Omega restricted to it
        RankKernel rk = rank_kernel(dev.transpose());  // row space basis = image basis? no:
        // columns of dev span the image; collect two independent columns
        std::vector<RatVec> img;
        for (int c = 0; c < 4 && static_cast<int>(img.size()) < 2; ++c) {
            RatVec col(4);
            bool nz = false;
            for (int r = 0; r < 4; ++r) {
                col[r] = dev(r, c);
                if (col[r] != 0) nz = true;
            }
            if (!nz) continue;
            if (img.size() == 1) {
                RatMat two(4, 2);
                for (int r = 0; r < 4; ++r) {
                    two(r, 0) = img[0][r];
                    two(r, 1) = col[r];
                }
                if (rank_of(two) < 2) continue;
            }
            img.push_back(col);
        }
        check(img.size() == 2, errc::internal, "rank-2 deviation needs two image columns");
        Rat pairing = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) pairing += img[0][i] * Rat(omega(i, j)) * img[1][j];
        out.lagrangian_obstruction = (pairing == 0);
    }
    out.verdict = out.pinching.verdict && unipotent && out.deviation_rank >= 1 &&
                  !out.lagrangian_obstruction;
    return out;
}

DensityDFH density_dfh(const std::vector<RatMat>& gens, const RatMat& t, long cap) {
    int d = t.rows();
    RatMat dev = t;
    for (int i = 0; i < d; ++i) dev(i, i) -= 1;
    check(rank_of(dev) == 1 && (dev * dev).is_zero(), errc::bad_params,
          "t must be a transvection");
    std::vector<RatMat> algebra_gens = {t};
    for (const RatMat& g : gens) algebra_gens.push_back(inverse(g) * t * g);
    DensityDFH out;
    out.dimension = algebra_dimension(algebra_gens, cap);
    out.verdict = out.dimension == d * d;
    return out;
}

DWord parse_dword(const std::string& text) {
    DWord w;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        check(text[i] == 'D' || text[i] == 'd', errc::parse_error,
              "expected 'D' in transvection word");
        ++i;
        check(i < text.size() && text[i] >= '1' && text[i] <= '3', errc::parse_error,
              "expected generator index 1..3");
        int gen = text[i] - '1';
        ++i;
        long exp = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
            ++i;
            skip();
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
            check(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                  errc::parse_error, "expected exponent");
            exp = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                exp = exp * 10 + (text[i++] - '0');
            if (neg) exp = -exp;
        }
        check(exp != 0, errc::parse_error, "zero exponent");
        w.push_back({gen, exp});
        skip();
    }
    check(!w.empty(), errc::parse_error, "empty transvection word");
    return w;
}

std::string dword_str(const DWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << 'D' << (w[i].first + 1);
        if (w[i].second != 1) os << '^' << w[i].second;
    }
    return os.str();
}

SVRestriction sv_restrict(const IntMat& gram, const std::array<Rat, 3>& cs) {
    check(gram.rows() == 3 && gram.cols() == 3, errc::bad_params, "gram must be 3x3");
    check((gram + gram.transpose()).is_zero(), errc::bad_params, "gram must be skew");
    SVRestriction out;
    out.gram = gram;
    // basis pair: first (i,j) with Omega(X_i, X_j) != 0 in order (1,2),(1,3),(2,3)
    int bi = -1, bj = -1;
    for (auto [i, j] : {std::pair<int, int>{0, 1}, {0, 2}, {1, 2}})
        if (gram(i, j) != 0) {
            bi = i;
            bj = j;
            break;
        }
    check(bi >= 0, errc::degenerate_configuration, "all pairwise intersections vanish");
    out.bi = bi;
    out.bj = bj;
    // annihilator: kernel of the gram matrix, primitive with first nonzero
    // coordinate positive
    {
        auto rk = rank_kernel(to_rat(gram));
        check(rk.rank == 2 && rk.kernel.size() == 1, errc::degenerate_configuration,
              "W must carry a rank-2 alternating form");
        RatVec k = rk.kernel[0];
        Int lcm_den = 1;
        for (const Rat& x : k) lcm_den = lcm(lcm_den, Int(x.get_den()));
        IntVec e(3);
        Int g = 0;
        for (int i = 0; i < 3; ++i) {
            Rat scaled = k[i] * Rat(lcm_den);
            e[i] = scaled.get_num();
            g = gcd(g, e[i]);
        }
        for (int i = 0; i < 3; ++i) e[i] /= g;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0)
                for (int j = 0; j < 3; ++j) e[j] = -e[j];
            break;
        }
        out.e_x = e;
    }
    // restrictions in the (X1,X2,X3) coordinates, then in the basis {Xi,Xj,e}
    RatMat basis(3, 3);
    basis(bi, 0) = 1;
    basis(bj, 1) = 1;
    for (int i = 0; i < 3; ++i) basis(i, 2) = Rat(out.e_x[i]);
    RatMat basis_inv = inverse(basis);
    for (int k = 0; k < 3; ++k) {
        RatMat m = RatMat::identity(3);
        // D_k(X_j) = X_j + c_k Omega(X_k, X_j) X_k
        for (int j = 0; j < 3; ++j) m(k, j) += cs[k] * Rat(gram(k, j));
        out.restriction[k] = basis_inv * m * basis;
        // each restriction fixes e and has determinant 1
        check(out.restriction[k](0, 2) == 0 && out.restriction[k](1, 2) == 0 &&
                  out.restriction[k](2, 2) == 1,
              errc::internal, "restriction must fix the annihilator");
        check(det(out.restriction[k]) == 1, errc::internal, "restriction must have det 1");
    }
    return out;
}

SVRestriction sv_restrict(const HomologyModel& model, const std::array<Transvection, 3>& ts) {
    // X's must be linearly independent
    RatMat xs(model.rank(), 3);
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < model.rank(); ++r) xs(r, c) = Rat(ts[c].x_h1[r]);
    check(rank_of(xs) == 3, errc::degenerate_configuration, "X1, X2, X3 must be independent");
    IntMat gram(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gram(i, j) = model.pair(ts[i].x_h1, ts[j].x_h1);
    return sv_restrict(gram, {ts[0].c, ts[1].c, ts[2].c});
}

SVVerdict sv_verify_word(const SVRestriction& r, const DWord& word) {
    RatMat acc = RatMat::identity(3);
    for (auto [gen, exp] : word) {
        check(gen >= 0 && gen < 3, errc::bad_params, "generator index out of range");
        // restrictions are unipotent: D^k = I + k (D - I)
        RatMat dev = r.restriction[gen];
        for (int i = 0; i < 3; ++i) dev(i, i) -= 1;
        RatMat powed = RatMat::identity(3);
        if ((dev * dev).is_zero()) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) powed(i, j) += Rat(exp) * dev(i, j);
        } else {
            // fall back to repeated multiplication (restrictions of genuine
            // transvections to W need not be unipotent of degree 2)
            RatMat base = exp > 0 ? r.restriction[gen] : inverse(r.restriction[gen]);
            for (long k = 0; k < std::abs(exp); ++k) powed = powed * base;
        }
        acc = acc * powed;
    }
    SVVerdict v;
    v.element = acc;
    v.ok = acc(0, 0) == 1 && acc(1, 1) == 1 && acc(2, 2) == 1 && acc(0, 1) == 0 &&
           acc(1, 0) == 0 && acc(0, 2) == 0 && acc(1, 2) == 0 &&
           !(acc(2, 0) == 0 && acc(2, 1) == 0);
    return v;
}

std::optional<DWord> sv_search_word(const SVRestriction& r, int max_template_letters,
                                    long max_exponent) {
    // all restrictions trivial: nothing to find
    bool all_trivial = true;
    for (const RatMat& m : r.restriction)
        if (!m.is_identity()) all_trivial = false;
    if (all_trivial) return std::nullopt;

    // template search: w D_a^p w^-1 D_b^q for short w and solved exponents.
    // Enumerate short words w over the six letters in a deterministic order.
    std::vector<DWord> prefixes = {{}};
    for (int len = 0; len < max_template_letters; ++len) {
        std::vector<DWord> next;
        for (const DWord& w : prefixes) {
            for (int a = 0; a < 3; ++a) {
                for (long p = 1; p <= max_exponent; ++p) {
                    for (int b = 0; b < 3; ++b) {
                        if (a == b) continue;
                        // candidate u = w D_a^p w^-1 D_b^q; solve for q over
                        // the unipotent structure
                        DWord u = w;
                        u.push_back({a, p});
                        DWord winv;
                        for (auto it = w.rbegin(); it != w.rend(); ++it)
                            winv.push_back({it->first, -it->second});
                        u.insert(u.end(), winv.begin(), winv.end());
                        RatMat c = sv_verify_word(r, u).element;
                        // c * D_b^q must be radical-shaped; D_b^q = I + q dev
                        RatMat dev = r.restriction[b];
                        for (int i = 0; i < 3; ++i) dev(i, i) -= 1;
                        if (!(dev * dev).is_zero()) continue;
                        // entries of c * (I + q dev) linear in q; solve the
                        // four linear vanishing conditions
                        bool solved = true;
                        std::optional<Rat> q;
                        RatMat cd = c * dev;
                        const std::array<std::pair<int, int>, 4> slots = {
                            std::pair<int, int>{0, 1}, {1, 0}, {0, 2}, {1, 2}};
                        for (auto [i, j] : slots) {
                            Rat lin = cd(i, j);
                            Rat con = c(i, j) - Rat(i == j ? 1 : 0);
                            if (lin == 0) {
                                if (con != 0) solved = false;
                            } else {
                                Rat cand = -con / lin;
                                if (q && *q != cand) solved = false;
                                q = cand;
                            }
                        }
                        // also diagonal must stay 1
                        if (!solved) continue;
                        long qv = 0;
                        if (q) {
                            if (q->get_den() != 1 || *q == 0) continue;
                            if (abs(q->get_num()) > max_exponent) continue;
                            qv = static_cast<long>(q->get_num().get_si());
                        }
                        DWord full = u;
                        if (qv != 0) full.push_back({b, qv});
                        SVVerdict v = sv_verify_word(r, full);
                        if (v.ok) return full;
                    }
                    // exponent growth: try small exponents first, then
                    // powers of two up to the bound
                    if (p >= 8 && p * 2 <= max_exponent)
                        p = p * 2 - 1;
                    else if (p >= 8)
                        break;
                }
            }
            // extend the prefix by one letter for the next round
            for (int a = 0; a < 3; ++a)
                for (long e : {1L, -1L}) {
                    DWord nw = w;
                    if (!nw.empty() && nw.back().first == a) continue;
                    nw.push_back({a, e});
                    next.push_back(nw);
                }
        }
        prefixes = std::move(next);
        if (prefixes.size() > 2000) prefixes.resize(2000);
    }
    return std::nullopt;
}

namespace {

// canonical form of a rational lattice: integer column-HNF numerator over a
// denominator, with common content removed
struct CanonLattice {
    IntMat num;
    Int den;
};

CanonLattice canonical_lattice(const RatMat& basis) {
    Int den = 1;
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) den = lcm(den, Int(basis(i, j).get_den()));
    IntMat num(basis.rows(), basis.cols());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) {
            Rat scaled = basis(i, j) * Rat(den);
            num(i, j) = scaled.get_num();
        }
    num = hnf(num.transpose()).transpose();
    Int content = den;
    for (int i = 0; i < num.rows(); ++i)
        for (int j = 0; j < num.cols(); ++j) content = gcd(content, num(i, j));
    if (content > 1) {
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.cols(); ++j) num(i, j) /= content;
        den /= content;
    }
    return {std::move(num), den};
}

std::string lattice_key(const CanonLattice& l) {
    std::ostringstream os;
    os << l.den << ';';
    for (int i = 0; i < l.num.rows(); ++i)
        for (int j = 0; j < l.num.cols(); ++j) os << l.num(i, j) << ',';
    return os.str();
}

RatMat lattice_basis(const CanonLattice& l) {
    RatMat b(l.num.rows(), l.num.cols());
    for (int i = 0; i < l.num.rows(); ++i)
        for (int j = 0; j < l.num.cols(); ++j) b(i, j) = Rat(l.num(i, j)) / Rat(l.den);
    return b;
}

}  // namespace

LatticeStabilizer lattice_stabilizer(const std::vector<IntMat>& gens, const IntMat& lattice,
                                     long budget) {
    check(!gens.empty(), errc::bad_params, "need at least one generator");
    int d = lattice.rows();
    check(lattice.cols() == d, errc::bad_params, "lattice basis must be square");
    check(det(lattice) != 0, errc::bad_params, "lattice basis must have full rank");
    std::vector<RatMat> rgens, rgens_inv;
    for (const IntMat& g : gens) {
        check(det(g) != 0, errc::bad_params, "generators must be invertible over Q");
        rgens.push_back(to_rat(g));
        rgens_inv.push_back(inverse(to_rat(g)));
    }

    std::vector<CanonLattice> orbit;
    orbit.push_back(canonical_lattice(to_rat(lattice)));
    std::map<std::string, long> ids = {{lattice_key(orbit[0]), 0}};
    std::vector<RatMat> word_to(1, RatMat::identity(d));  // maps base lattice to vertex

    LatticeStabilizer out;
    for (long cur = 0; cur < static_cast<long>(orbit.size()); ++cur) {
        RatMat cur_basis = lattice_basis(orbit[cur]);
        for (size_t gi = 0; gi < rgens.size(); ++gi) {
            for (int sign : {1, -1}) {
                const RatMat& g = sign > 0 ? rgens[gi] : rgens_inv[gi];
                CanonLattice img = canonical_lattice(g * cur_basis);
                auto key = lattice_key(img);
                auto it = ids.find(key);
                if (it == ids.end()) {
                    long id = static_cast<long>(orbit.size());
                    check(id < budget, errc::budget_exceeded, "lattice orbit budget exceeded");
                    ids[key] = id;
                    orbit.push_back(std::move(img));
                    word_to.push_back(g * word_to[cur]);
                } else {
                    long tgt = it->second;
                    RatMat w = inverse(word_to[tgt]) * g * word_to[cur];
                    if (!w.is_identity()) out.stabilizer_gens.push_back(std::move(w));
                }
            }
        }
    }
    out.index = static_cast<long>(orbit.size());
    // membership recheck: every stabilizer generator maps the lattice onto itself
    std::string base_key = lattice_key(orbit[0]);
    RatMat base_basis = lattice_basis(orbit[0]);
    for (const RatMat& w : out.stabilizer_gens)
        check(lattice_key(canonical_lattice(w * base_basis)) == base_key, errc::internal,
              "stabilizer generator does not stabilize the lattice");
    return out;
}

Int sp_order_mod(int m, const Int& n) {
    check(m >= 1 && n >= 2, errc::bad_params, "sp_order_mod needs m >= 1, n >= 2");
    // multiplicative over prime powers; |Sp(2m, Z/p^k)| =
    // p^((k-1) m (2m+1)) * p^(m^2) * prod_{i=1..m} (p^(2i) - 1)
    Int order = 1;
    Int rest = n;
    for (Int p = 2; rest > 1; p += 1) {
        if (rest % p != 0) continue;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        Int factor = 1;
        Int pk1 = 1;
        for (int i = 0; i < (k - 1) * m * (2 * m + 1); ++i) pk1 *= p;
        factor *= pk1;
        Int pm2 = 1;
        for (int i = 0; i < m * m; ++i) pm2 *= p;
        factor *= pm2;
        Int pow = 1;
        for (int i = 1; i <= m; ++i) {
            pow *= p * p;
            factor *= pow - 1;
        }
        order *= factor;
    }
    return order;
}

namespace {

// open-addressing set of uint64 keys
class U64Set {
  public:
    explicit U64Set(size_t cap_pow2 = 1 << 20) : mask_(cap_pow2 - 1), slots_(cap_pow2, kEmpty) {}

    bool insert(uint64_t key) {
        if (size_ * 3 >= slots_.size() * 2) grow();
        size_t i = hash(key) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return false;
            i = (i + 1) & mask_;
        }
        slots_[i] = key;
        ++size_;
        return true;
    }
    size_t size() const { return size_; }
    size_t capacity() const { return slots_.size(); }

  private:
    static constexpr uint64_t kEmpty = ~0ull;
    static size_t hash(uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<size_t>(x);
    }
    void grow() {
        std::vector<uint64_t> old = std::move(slots_);
        slots_.assign(old.size() * 2, kEmpty);
        mask_ = slots_.size() - 1;
        size_ = 0;
        for (uint64_t k : old)
            if (k != kEmpty) insert(k);
    }
    size_t mask_, size_ = 0;
    std::vector<uint64_t> slots_;
};

}  // namespace

Int modn_image_index(const std::vector<IntMat>& gens, long n, long mem_budget_bytes) {
    check(!gens.empty(), errc::bad_params, "need at least one generator");
    int d = gens[0].rows();
    check(d % 2 == 0, errc::bad_params, "need even dimension");
    int m = d / 2;
    check(n >= 2, errc::bad_params, "modulus must be >= 2");
    // standard form J = [[0, I], [-I, 0]]
    IntMat j(d, d);
    for (int i = 0; i < m; ++i) {
        j(i, m + i) = 1;
        j(m + i, i) = -1;
    }
    auto modn = [&](const Int& x) {
        Int r = x % n;
        if (r < 0) r += n;
        return static_cast<uint8_t>(r.get_ui());
    };
    std::vector<std::vector<uint8_t>> gen_bytes;
    for (const IntMat& g : gens) {
        check(g.rows() == d && g.cols() == d, errc::bad_params, "generator size mismatch");
        IntMat t = g.transpose() * j * g;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                check((t(r, c) - j(r, c)) % n == 0, errc::not_symplectic,
                      "generator is not symplectic mod n");
        std::vector<uint8_t> bytes(d * d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) bytes[r * d + c] = modn(g(r, c));
        gen_bytes.push_back(bytes);
        // inverse mod n: J^-1 g^T J has integer entries and inverts g mod n
        IntMat ginv = to_int(inverse(to_rat(g)));
        std::vector<uint8_t> ibytes(d * d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) ibytes[r * d + c] = modn(ginv(r, c));
        if (ibytes != bytes) gen_bytes.push_back(ibytes);
    }
    std::sort(gen_bytes.begin(), gen_bytes.end());
    gen_bytes.erase(std::unique(gen_bytes.begin(), gen_bytes.end()), gen_bytes.end());

    auto mul = [&](const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
        std::vector<uint8_t> c(d * d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                int av = a[i * d + k];
                if (!av) continue;
                for (int jj = 0; jj < d; ++jj)
                    c[i * d + jj] =
                        static_cast<uint8_t>((c[i * d + jj] + av * b[k * d + jj]) % n);
            }
        return c;
    };

    Int subgroup_order;
    if (d == 4 && n <= 16) {
        // packed fast path: 16 entries, 4 bits each; greedily reduce the
        // generating set (membership is a hash lookup) so the closure walk
        // multiplies by as few generators as possible
        auto pack = [&](const std::vector<uint8_t>& b) {
            uint64_t key = 0;
            for (int i = 0; i < 16; ++i) key |= static_cast<uint64_t>(b[i]) << (4 * i);
            return key;
        };
        auto unpack = [&](uint64_t key) {
            std::vector<uint8_t> b(16);
            for (int i = 0; i < 16; ++i) b[i] = (key >> (4 * i)) & 0xf;
            return b;
        };
        std::vector<uint8_t> id(16, 0);
        for (int i = 0; i < 4; ++i) id[i * 4 + i] = 1 % n;

        std::vector<std::vector<uint8_t>> working;
        auto closure = [&](U64Set& seen, std::vector<uint64_t>& elements) {
            for (size_t head = 0; head < elements.size(); ++head) {
                std::vector<uint8_t> cur = unpack(elements[head]);
                for (const auto& g : working) {
                    uint64_t key = pack(mul(cur, g));
                    if (seen.insert(key)) {
                        elements.push_back(key);
                        long bytes = static_cast<long>(seen.capacity()) * 8 +
                                     static_cast<long>(elements.capacity()) * 8;
                        check(bytes < mem_budget_bytes, errc::memory_budget_exceeded,
                              "mod-n enumeration exceeded the memory budget");
                    }
                }
            }
        };
        size_t next_gen = 0;
        U64Set seen;
        std::vector<uint64_t> elements;
        while (true) {
            // add the first generator not yet in the enumerated subgroup
            bool added = false;
            for (; next_gen < gen_bytes.size(); ++next_gen) {
                if (!working.empty() && !seen.insert(pack(gen_bytes[next_gen]))) continue;
                working.push_back(gen_bytes[next_gen]);
                added = true;
                ++next_gen;
                break;
            }
            if (!added) break;
            seen = U64Set();
            elements.clear();
            seen.insert(pack(id));
            elements.push_back(pack(id));
            closure(seen, elements);
        }
        subgroup_order = static_cast<long>(seen.size());
    } else {
        std::unordered_set<std::string> seen;
        std::vector<std::vector<uint8_t>> queue;
        std::vector<uint8_t> id(d * d, 0);
        for (int i = 0; i < d; ++i) id[i * d + i] = static_cast<uint8_t>(1 % n);
        auto key_of = [](const std::vector<uint8_t>& b) {
            return std::string(b.begin(), b.end());
        };
        seen.insert(key_of(id));
        queue.push_back(id);
        for (size_t head = 0; head < queue.size(); ++head) {
            std::vector<uint8_t> cur = queue[head];
            for (const auto& g : gen_bytes) {
                std::vector<uint8_t> nxt = mul(cur, g);
                if (seen.insert(key_of(nxt)).second) {
                    queue.push_back(std::move(nxt));
                    long bytes = static_cast<long>(seen.size()) * (d * d + 64);
                    check(bytes < mem_budget_bytes, errc::memory_budget_exceeded,
                          "mod-n enumeration exceeded the memory budget");
                }
            }
        }
        subgroup_order = static_cast<long>(seen.size());
    }
    Int ambient = sp_order_mod(m, Int(n));
    check(ambient % subgroup_order == 0, errc::internal,
          "subgroup order must divide the ambient order");
    return ambient / subgroup_order;
}

}  // namespace origamikz
