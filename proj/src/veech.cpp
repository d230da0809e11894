#include "origamikz/veech.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace origamikz {

Mat2 mat2(long a, long b, long c, long d) {
    Mat2 m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Mat2 mat2_id() { return IntMat::identity(2); }

Mat2 letter_matrix(Letter l) {
    switch (l) {
        case Letter::T: return mat2(1, 1, 0, 1);
        case Letter::Ti: return mat2(1, -1, 0, 1);
        case Letter::S: return mat2(0, 1, -1, 0);
        case Letter::Si: return mat2(0, -1, 1, 0);
        case Letter::Tp: return mat2(1, 0, 1, 1);
        case Letter::Tpi: return mat2(1, 0, -1, 1);
    }
    fail(errc::internal, "bad letter");
}

Letter letter_inverse(Letter l) {
    switch (l) {
        case Letter::T: return Letter::Ti;
        case Letter::Ti: return Letter::T;
        case Letter::S: return Letter::Si;
        case Letter::Si: return Letter::S;
        case Letter::Tp: return Letter::Tpi;
        case Letter::Tpi: return Letter::Tp;
    }
    fail(errc::internal, "bad letter");
}

Mat2 eval_word(const SL2Word& w) {
    Mat2 m = mat2_id();
    for (Letter l : w) m = m * letter_matrix(l);
    return m;
}

SL2Word word_inverse(const SL2Word& w) {
    SL2Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inverse(*it));
    return out;
}

std::string word_str(const SL2Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        Letter base = w[i];
        long e = static_cast<long>(j - i);
        bool invp = (base == Letter::Ti || base == Letter::Si || base == Letter::Tpi);
        const char* name = (base == Letter::T || base == Letter::Ti)   ? "T"
                           : (base == Letter::S || base == Letter::Si) ? "S"
                                                                       : "T'";
        if (i) os << ' ';
        os << name;
        long exp = invp ? -e : e;
        if (exp != 1) os << '^' << exp;
        i = j;
    }
    return os.str();
}

SL2Word parse_word(const std::string& text) {
    SL2Word w;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' ||
                text[i] == '.'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        char c = text[i];
        Letter base;
        if (c == 'T' || c == 't') {
            ++i;
            if (i < text.size() && text[i] == '\'') {
                base = Letter::Tp;
                ++i;
            } else {
                base = Letter::T;
            }
        } else if (c == 'S' || c == 's') {
            base = Letter::S;
            ++i;
        } else {
            fail(errc::parse_error, std::string("unexpected character '") + c + "' in word");
        }
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
        Letter l = exp >= 0 ? base : letter_inverse(base);
        for (long k = 0; k < std::abs(exp); ++k) w.push_back(l);
        skip();
    }
    return w;
}

Origami nielsen_apply(Letter l, const Origami& o) {
    const Perm &h = o.h(), &v = o.v();
    switch (l) {
        case Letter::T: return Origami(h, v * h.inverse());
        case Letter::Ti: return Origami(h, v * h);
        case Letter::S: return Origami(v, h.inverse());
        case Letter::Si: return Origami(v.inverse(), h);
        case Letter::Tp: return Origami(h * v.inverse(), v);
        case Letter::Tpi: return Origami(h * v, v);
    }
    fail(errc::internal, "bad letter");
}

Origami nielsen_apply_word(const SL2Word& w, const Origami& o) {
    Origami cur = o;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = nielsen_apply(*it, cur);
    return cur;
}

IntVec transport_chain(Letter l, const Origami& o, const IntVec& chain) {
    int n = o.degree();
    check(static_cast<int>(chain.size()) == 2 * n, errc::bad_params, "chain length mismatch");
    IntVec out(2 * n);
    auto x = [&](int i) -> const Int& { return chain[i]; };
    auto y = [&](int i) -> const Int& { return chain[n + i]; };
    const Perm &h = o.h(), &v = o.v();
    switch (l) {
        case Letter::T:  // x_i -> x_i ; y_i -> x_i + y_{h(i)}
            for (int i = 0; i < n; ++i) {
                out[i] += x(i) + y(i);
                out[n + h.apply0(i)] += y(i);
            }
            break;
        case Letter::Ti:  // x_i -> x_i ; y_i -> y_{h^-1(i)} - x_{h^-1(i)}
            for (int i = 0; i < n; ++i) {
                out[i] += x(i);
                int j = h.inverse().apply0(i);
                out[j] -= y(i);
                out[n + j] += y(i);
            }
            break;
        case Letter::S:  // x_i -> -y_i ; y_i -> x_{h^-1(i)}
            for (int i = 0; i < n; ++i) {
                out[n + i] -= x(i);
                out[h.inverse().apply0(i)] += y(i);
            }
            break;
        case Letter::Si:  // x_i -> y_{v^-1(i)} ; y_i -> -x_i
            for (int i = 0; i < n; ++i) {
                out[n + v.inverse().apply0(i)] += x(i);
                out[i] -= y(i);
            }
            break;
        case Letter::Tp:  // x_i -> x_i + y_{h(v^-1(i))} ; y_i -> y_i
            for (int i = 0; i < n; ++i) {
                out[i] += x(i);
                out[n + h.apply0(v.inverse().apply0(i))] += x(i);
                out[n + i] += y(i);
            }
            break;
        case Letter::Tpi:  // x_i -> x_{v^-1(i)} - y_{v^-1(i)} ; y_i -> y_i
            for (int i = 0; i < n; ++i) {
                int j = v.inverse().apply0(i);
                out[j] += x(i);
                out[n + j] -= x(i);
                out[n + i] += y(i);
            }
            break;
    }
    return out;
}

SL2Word sl2_word_from_matrix(const Mat2& m_in) {
    check(m_in.rows() == 2 && m_in.cols() == 2, errc::bad_params, "need a 2x2 matrix");
    check(det(m_in) == 1, errc::not_unimodular, "matrix is not in SL(2,Z)");
    // Reduce W * m = Id by Euclidean steps on the first column; the word for m
    // is then the inverse of the accumulated W.
    Mat2 m = m_in;
    SL2Word left;  // letters multiplied on the left of m, in application order
    auto apply_left = [&](Letter l) {
        m = letter_matrix(l) * m;
        left.push_back(l);
    };
    while (m(1, 0) != 0) {
        if (m(0, 0) != 0 && abs(m(0, 0)) >= abs(m(1, 0))) {
            // subtract q * row2 from row1
            Int q = m(0, 0) / m(1, 0);  // truncated division keeps |a - q c| < |c|
            check(mpz_fits_slong_p(q.get_mpz_t()), errc::budget_exceeded,
                  "word exponent too large");
            long ql = q.get_si();
            for (long k = 0; k < std::abs(ql); ++k) apply_left(ql > 0 ? Letter::Ti : Letter::T);
        } else {
            apply_left(Letter::S);
        }
    }
    // now lower-left is 0, so m = [[a, b], [0, a^-1]] with a = +-1
    if (m(0, 0) == -1) {
        apply_left(Letter::S);
        apply_left(Letter::S);
    }
    if (m(0, 1) != 0) {
        Int q = m(0, 1);
        check(mpz_fits_slong_p(q.get_mpz_t()), errc::budget_exceeded, "word exponent too large");
        long ql = q.get_si();
        for (long k = 0; k < std::abs(ql); ++k) apply_left(ql > 0 ? Letter::Ti : Letter::T);
    }
    check(m.is_identity(), errc::internal, "sl2 reduction did not reach identity");
    // left was applied as M(l_k)...M(l_1) * m_in = Id, so m_in is the product
    // of the letter inverses in the same order
    SL2Word w;
    w.reserve(left.size());
    for (Letter l : left) w.push_back(letter_inverse(l));
    check(eval_word(w) == m_in, errc::internal, "sl2 word does not evaluate back");
    return w;
}

namespace {

std::vector<int> origami_key(const Origami& o) {
    std::vector<int> k;
    k.reserve(2 * o.degree());
    for (int i = 0; i < o.degree(); ++i) k.push_back(o.h().apply0(i));
    for (int i = 0; i < o.degree(); ++i) k.push_back(o.v().apply0(i));
    return k;
}

}  // namespace

std::optional<Perm> veech_witness(const Origami& o, const SL2Word& w) {
    Origami image = nielsen_apply_word(w, o);
    auto [c1, rho1] = canonical_form_with_relabel(o);
    auto [c2, rho2] = canonical_form_with_relabel(image);
    if (!(c1 == c2)) return std::nullopt;
    return rho2.inverse() * rho1;
}

VeechGroup veech_group(const Origami& o, long orbit_budget) {
    VeechGroup vg;
    Origami base = canonical_form(o);
    int deg = base.degree();
    std::map<std::vector<int>, long> ids;
    vg.vertices.push_back(base);
    ids[origami_key(base)] = 0;
    // discovery[i] = {parent, letter} for i > 0; sigma[i] relabels the literal
    // image w_i * base onto the stored canonical form: conj(w_i*base, sigma_i)
    // = vertices[i].
    std::vector<std::pair<long, Letter>> discovery = {{-1, Letter::T}};
    std::vector<Perm> sigma = {Perm(deg)};
    std::map<std::pair<long, int>, Perm> edge_relabel;  // (source, letter-id) -> tau
    vg.edge_t.push_back({-1, -1});
    vg.edge_s.push_back({-1, -1});

    for (long cur = 0; cur < static_cast<long>(vg.vertices.size()); ++cur) {
        for (Letter l : {Letter::T, Letter::S}) {
            auto [img, tau] = canonical_form_with_relabel(nielsen_apply(l, vg.vertices[cur]));
            auto key = origami_key(img);
            auto it = ids.find(key);
            long tgt;
            bool fresh = it == ids.end();
            if (fresh) {
                tgt = static_cast<long>(vg.vertices.size());
                check(tgt < orbit_budget, errc::budget_exceeded, "orbit budget exceeded");
                ids[key] = tgt;
                vg.vertices.push_back(img);
                discovery.push_back({cur, l});
                sigma.push_back(tau * sigma[cur]);
                vg.edge_t.push_back({-1, -1});
                vg.edge_s.push_back({-1, -1});
            } else {
                tgt = it->second;
                edge_relabel.insert({{cur, l == Letter::T ? 0 : 1}, tau});
            }
            if (l == Letter::T)
                vg.edge_t[cur][0] = tgt;
            else
                vg.edge_s[cur][0] = tgt;
        }
    }
    long n = static_cast<long>(vg.vertices.size());
    vg.index = n;
    // inverse edges
    for (long i = 0; i < n; ++i) {
        vg.edge_t[vg.edge_t[i][0]][1] = i;
        vg.edge_s[vg.edge_s[i][0]][1] = i;
    }
    // tree words and matrices: w_i * base ~ vertices[i]
    std::vector<SL2Word> tree(n);
    std::vector<Mat2> tree_mat(n, mat2_id());
    for (long i = 1; i < n; ++i) {
        auto [par, l] = discovery[i];
        tree[i].reserve(tree[par].size() + 1);
        tree[i].push_back(l);
        tree[i].insert(tree[i].end(), tree[par].begin(), tree[par].end());
        tree_mat[i] = letter_matrix(l) * tree_mat[par];
    }
    auto inv2 = [](const Mat2& m) {
        return mat2(0, 0, 0, 0) + Mat2(2, 2, {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)});
    };
    // Schreier generators from non-tree edges: g = w_tgt^-1 l w_src with
    // witness sigma_src^-1 tau^-1 sigma_tgt.
    for (long i = 0; i < n; ++i) {
        for (Letter l : {Letter::T, Letter::S}) {
            long tgt = (l == Letter::T) ? vg.edge_t[i][0] : vg.edge_s[i][0];
            if (tgt > 0 && discovery[tgt].first == i && discovery[tgt].second == l)
                continue;  // tree edge
            const Perm& tau = edge_relabel.at({i, l == Letter::T ? 0 : 1});
            Perm psi = sigma[i].inverse() * tau.inverse() * sigma[tgt];
            Mat2 mat = inv2(tree_mat[tgt]) * letter_matrix(l) * tree_mat[i];
            if (psi.is_identity() && mat.is_identity()) continue;
            SL2Word w = word_inverse(tree[tgt]);
            w.push_back(l);
            w.insert(w.end(), tree[i].begin(), tree[i].end());
            vg.gens.push_back(SchreierGen{std::move(w), std::move(mat), std::move(psi)});
        }
    }
    // -Id acts as S^2
    SL2Word s2 = {Letter::S, Letter::S};
    vg.contains_minus_id = veech_witness(base, s2).has_value();
    return vg;
}

namespace {

// Todd-Coxeter over generators g0=S, g1=S^-1, g2=U, g3=U^-1.
class ToddCoxeter {
  public:
    ToddCoxeter(std::vector<std::vector<int>> relators, std::vector<std::vector<int>> subgens,
                long budget)
        : relators_(std::move(relators)), subgens_(std::move(subgens)), budget_(budget) {}

    CosetTable run() {
        new_coset();  // coset 0 = H
        for (const auto& w : subgens_) scan_and_fill(0, w);
        for (long a = 0; a < static_cast<long>(table_.size()); ++a) {
            if (!live(a)) continue;
            for (const auto& r : relators_) {
                scan_and_fill(rep(a), r);
                if (!live(a)) break;
            }
            if (!live(a)) continue;
            for (int x = 0; x < 4; ++x)
                if (table_[a][x] < 0) {
                    long b = new_coset();
                    set(a, x, b);
                }
        }
        // compaction
        std::vector<long> remap(table_.size(), -1);
        long count = 0;
        for (size_t i = 0; i < table_.size(); ++i)
            if (rep(static_cast<long>(i)) == static_cast<long>(i)) remap[i] = count++;
        CosetTable out;
        out.index = count;
        out.table.assign(count, {-1, -1, -1, -1});
        for (size_t i = 0; i < table_.size(); ++i) {
            if (remap[i] < 0) continue;
            for (int x = 0; x < 4; ++x) {
                check(table_[i][x] >= 0, errc::internal, "incomplete coset table");
                out.table[remap[i]][x] = remap[rep(table_[i][x])];
            }
        }
        return out;
    }

  private:
    std::vector<std::vector<int>> relators_, subgens_;
    long budget_;
    std::vector<std::array<long, 4>> table_;
    std::vector<long> parent_;
    std::deque<std::pair<long, long>> coincidences_;

    static int inv(int x) { return x ^ 1; }

    long rep(long a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool live(long a) { return rep(a) == a; }

    long new_coset() {
        check(static_cast<long>(table_.size()) < budget_, errc::budget_exceeded,
              "coset budget exceeded (possibly infinite index)");
        table_.push_back({-1, -1, -1, -1});
        parent_.push_back(static_cast<long>(table_.size()) - 1);
        return static_cast<long>(table_.size()) - 1;
    }

    void set(long a, int x, long b) {
        a = rep(a);
        b = rep(b);
        long old = table_[a][x];
        if (old >= 0 && rep(old) != b)
            queue_coincidence(rep(old), b);
        else
            table_[a][x] = b;
        old = table_[b][inv(x)];
        if (old >= 0 && rep(old) != a)
            queue_coincidence(rep(old), a);
        else
            table_[b][inv(x)] = a;
        process_coincidences();
    }

    void queue_coincidence(long a, long b) { coincidences_.push_back({a, b}); }

    void process_coincidences() {
        while (!coincidences_.empty()) {
            auto [a, b] = coincidences_.front();
            coincidences_.pop_front();
            a = rep(a);
            b = rep(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            parent_[b] = a;  // b dies
            for (int x = 0; x < 4; ++x) {
                long t = table_[b][x];
                if (t < 0) continue;
                t = rep(t);
                // re-route: a must also go to t under x
                long cur = table_[a][x];
                if (cur < 0) {
                    table_[a][x] = t;
                    long back = table_[t][inv(x)];
                    if (back < 0)
                        table_[t][inv(x)] = a;
                    else if (rep(back) != a)
                        coincidences_.push_back({rep(back), a});
                } else if (rep(cur) != t) {
                    coincidences_.push_back({rep(cur), t});
                }
            }
        }
    }

    void scan_and_fill(long a, const std::vector<int>& w) {
        a = rep(a);
        while (true) {
            long f = a;
            size_t i = 0;
            while (i < w.size()) {
                long nxt = table_[rep(f)][w[i]];
                if (nxt < 0) break;
                f = rep(nxt);
                ++i;
            }
            if (i == w.size()) {
                if (f != a) {
                    queue_coincidence(f, a);
                    process_coincidences();
                }
                return;
            }
            long b = a;
            size_t j = w.size();
            while (j > i) {
                long nxt = table_[rep(b)][inv(w[j - 1])];
                if (nxt < 0) break;
                b = rep(nxt);
                --j;
            }
            if (j == i + 1) {  // deduction closes the scan
                set(rep(f), w[i], rep(b));
                return;
            }
            if (j == i) {  // scans overlap on one letter: coincidence
                queue_coincidence(f, b);
                process_coincidences();
                return;
            }
            // fill one gap and rescan
            long c = new_coset();
            set(rep(f), w[i], c);
            a = rep(a);
        }
    }
};

std::vector<int> word_to_su(const SL2Word& w) {
    // alphabet: 0 = S, 1 = S^-1, 2 = U, 3 = U^-1, where U = S T^-1 is the
    // order-6 element for S = [[0,1],[-1,0]] (so S^2 = U^3 = -Id). Then
    // T = U^-1 S, T^-1 = S^-1 U, T' = S T^-1 S^-1 = U S^-1, T'^-1 = S U^-1.
    std::vector<int> out;
    for (Letter l : w) {
        switch (l) {
            case Letter::T: out.insert(out.end(), {3, 0}); break;
            case Letter::Ti: out.insert(out.end(), {1, 2}); break;
            case Letter::S: out.push_back(0); break;
            case Letter::Si: out.push_back(1); break;
            case Letter::Tp: out.insert(out.end(), {2, 1}); break;
            case Letter::Tpi: out.insert(out.end(), {0, 3}); break;
        }
    }
    return out;
}

CosetTable coset_enumeration(const std::vector<Mat2>& gens, long budget, bool psl) {
    std::vector<std::vector<int>> relators;
    if (psl)
        relators = {{0, 0}, {2, 2, 2}};
    else
        relators = {{0, 0, 0, 0}, {0, 0, 3, 3, 3}};
    std::vector<std::vector<int>> subgens;
    for (const Mat2& g : gens) {
        check(det(g) == 1, errc::not_unimodular, "subgroup generator not in SL(2,Z)");
        subgens.push_back(word_to_su(sl2_word_from_matrix(g)));
    }
    ToddCoxeter tc(std::move(relators), std::move(subgens), budget);
    return tc.run();
}

}  // namespace

CosetTable subgroup_index_sl2z(const std::vector<Mat2>& gens, long budget) {
    return coset_enumeration(gens, budget, false);
}

CosetTable subgroup_index_psl2z(const std::vector<Mat2>& gens, long budget) {
    return coset_enumeration(gens, budget, true);
}

std::string coset_graph_json(const VeechGroup& vg) {
    std::ostringstream os;
    os << "{\"index\":" << vg.index << ",\"vertices\":[";
    for (size_t i = 0; i < vg.vertices.size(); ++i) {
        if (i) os << ',';
        os << "{\"id\":" << i << ",\"h\":\"" << format_cycles(vg.vertices[i].h()) << "\",\"v\":\""
           << format_cycles(vg.vertices[i].v()) << "\"}";
    }
    os << "],\"edges\":[";
    bool first = true;
    for (size_t i = 0; i < vg.vertices.size(); ++i) {
        if (!first) os << ',';
        first = false;
        os << "{\"from\":" << i << ",\"T\":" << vg.edge_t[i][0] << ",\"S\":" << vg.edge_s[i][0]
           << "}";
    }
    os << "]}";
    return os.str();
}

std::string coset_graph_dot(const VeechGroup& vg) {
    std::ostringstream os;
    os << "digraph veech {\n";
    for (size_t i = 0; i < vg.vertices.size(); ++i) {
        os << "  " << i << " -> " << vg.edge_t[i][0] << " [label=T];\n";
        os << "  " << i << " -> " << vg.edge_s[i][0] << " [label=S, style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace origamikz
