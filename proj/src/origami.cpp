#include "origamikz/origami.hpp"

#include <algorithm>
#include <sstream>

#include "origamikz/linalg.hpp"

namespace origamikz {

Origami::Origami(Perm h, Perm v) : h_(std::move(h)), v_(std::move(v)) {
    check(h_.degree() == v_.degree(), errc::degree_mismatch, "h and v must share a degree");
    check(h_.degree() >= 1, errc::bad_params, "empty origami");
    check(is_transitive({h_, v_}, h_.degree()), errc::not_transitive,
          "<h,v> is not transitive: surface is disconnected");
}

Perm Origami::corner_perm() const { return v_ * h_ * v_.inverse() * h_.inverse(); }

std::vector<int> Origami::vertex_classes(int* count) const {
    Perm c = corner_perm();
    int n = degree();
    std::vector<int> cls(n, -1);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        if (cls[i] >= 0) continue;
        for (int j = i; cls[j] < 0; j = c.apply0(j)) cls[j] = k;
        ++k;
    }
    if (count) *count = k;
    return cls;
}

std::string HLKInvariant::str() const {
    std::ostringstream os;
    os << '(' << l0 << ",[" << triple[0] << ',' << triple[1] << ',' << triple[2] << "])";
    return os.str();
}

Origami conjugate(const Origami& o, const Perm& phi) {
    return Origami(phi * o.h() * phi.inverse(), phi * o.v() * phi.inverse());
}

namespace {

// BFS labeling rooted at s: root gets label 0, then neighbors in h-then-v
// order. Returns the relabeling rho (new label of square i is rho[i]).
std::vector<int> bfs_labels(const Origami& o, int s) {
    int n = o.degree();
    std::vector<int> rho(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    rho[s] = 0;
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (int y : {o.h().apply0(x), o.v().apply0(x)}) {
            if (rho[y] < 0) {
                rho[y] = static_cast<int>(queue.size());
                queue.push_back(y);
            }
        }
    }
    return rho;
}

std::vector<int> encode(const Origami& o) {
    std::vector<int> code;
    code.reserve(2 * o.degree());
    for (int i = 0; i < o.degree(); ++i) code.push_back(o.h().apply0(i));
    for (int i = 0; i < o.degree(); ++i) code.push_back(o.v().apply0(i));
    return code;
}

}  // namespace

std::pair<Origami, Perm> canonical_form_with_relabel(const Origami& o) {
    int n = o.degree();
    std::optional<std::vector<int>> best_code;
    std::optional<Perm> best_phi;
    for (int s = 0; s < n; ++s) {
        Perm phi(bfs_labels(o, s));
        Origami cand = conjugate(o, phi);
        std::vector<int> code = encode(cand);
        if (!best_code || code < *best_code) {
            best_code = std::move(code);
            best_phi = std::move(phi);
        }
    }
    return {conjugate(o, *best_phi), *best_phi};
}

Origami canonical_form(const Origami& o) { return canonical_form_with_relabel(o).first; }

Stratum stratum(const Origami& o) {
    Perm c = o.corner_perm();
    std::vector<int> orders;
    for (const auto& cyc : c.cycles()) orders.push_back(static_cast<int>(cyc.size()) - 1);
    std::sort(orders.rbegin(), orders.rend());
    int total = 0;
    for (int k : orders) total += k;
    check(total % 2 == 0, errc::internal, "odd total zero order");
    return Stratum{std::move(orders), total / 2 + 1};
}

bool is_reduced(const Origami& o) {
    int n = o.degree();
    int nv = 0;
    std::vector<int> cls = o.vertex_classes(&nv);
    // spanning tree over vertex classes; edge 2i = x_i (V(i) -> V(h(i))),
    // edge 2i+1 = y_i (V(i) -> V(v(i)))
    std::vector<std::array<long, 2>> pot(nv, {0, 0});
    std::vector<char> seen(nv, 0);
    std::vector<char> in_tree(2 * n, 0);
    seen[cls[0]] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < 2 * n; ++e) {
            int i = e / 2;
            bool horiz = (e % 2) == 0;
            int a = cls[i];
            int b = cls[horiz ? o.h().apply0(i) : o.v().apply0(i)];
            long dx = horiz ? 1 : 0, dy = horiz ? 0 : 1;
            if (seen[a] && !seen[b]) {
                pot[b] = {pot[a][0] + dx, pot[a][1] + dy};
                seen[b] = in_tree[e] = 1;
                grew = true;
            } else if (seen[b] && !seen[a]) {
                pot[a] = {pot[b][0] - dx, pot[b][1] - dy};
                seen[a] = in_tree[e] = 1;
                grew = true;
            }
        }
    }
    std::vector<std::array<long, 2>> hols;
    for (int e = 0; e < 2 * n; ++e) {
        if (in_tree[e]) continue;
        int i = e / 2;
        bool horiz = (e % 2) == 0;
        int a = cls[i];
        int b = cls[horiz ? o.h().apply0(i) : o.v().apply0(i)];
        long dx = horiz ? 1 : 0, dy = horiz ? 0 : 1;
        hols.push_back({pot[a][0] + dx - pot[b][0], pot[a][1] + dy - pot[b][1]});
    }
    IntMat m(static_cast<int>(hols.size()), 2);
    for (size_t r = 0; r < hols.size(); ++r) {
        m(static_cast<int>(r), 0) = hols[r][0];
        m(static_cast<int>(r), 1) = hols[r][1];
    }
    return hnf(m) == IntMat::identity(2);
}

namespace {

// Propagate phi(0)=t under phi h = target_h phi and phi v = target_v phi;
// returns the relabeling if consistent.
std::optional<Perm> propagate(const Origami& o, const Perm& target_h, const Perm& target_v,
                              int t) {
    int n = o.degree();
    std::vector<int> phi(n, -1);
    std::vector<char> hit(n, 0);
    phi[0] = t;
    hit[t] = 1;
    std::vector<int> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        const std::pair<int, int> steps[2] = {
            {o.h().apply0(x), target_h.apply0(phi[x])},
            {o.v().apply0(x), target_v.apply0(phi[x])},
        };
        for (auto [src, dst] : steps) {
            if (phi[src] < 0) {
                if (hit[dst]) return std::nullopt;
                phi[src] = dst;
                hit[dst] = 1;
                queue.push_back(src);
            } else if (phi[src] != dst) {
                return std::nullopt;
            }
        }
    }
    Perm p(phi);
    if (p * o.h() != target_h * p) return std::nullopt;
    if (p * o.v() != target_v * p) return std::nullopt;
    return p;
}

}  // namespace

std::optional<Perm> anti_automorphism(const Origami& o) {
    Perm hi = o.h().inverse(), vi = o.v().inverse();
    for (int t = 0; t < o.degree(); ++t)
        if (auto p = propagate(o, hi, vi, t)) return p;
    return std::nullopt;
}

bool has_translation(const Origami& o) {
    for (int t = 1; t < o.degree(); ++t)
        if (propagate(o, o.h(), o.v(), t)) return true;
    return false;
}

HLKInvariant hlk_invariant(const Origami& o, const Perm& phi) {
    check(phi * o.h() == o.h().inverse() * phi && phi * o.v() == o.v().inverse() * phi,
          errc::not_anti_automorphism, "phi is not an anti-automorphism");
    int n = o.degree();
    int l1 = 0, l2 = 0, l3 = 0;
    for (int i = 0; i < n; ++i) {
        if (o.v().apply0(phi.apply0(i)) == i) ++l1;  // bottom-edge midpoint fixed
        if (o.h().apply0(phi.apply0(i)) == i) ++l2;  // left-edge midpoint fixed
        if (phi.apply0(i) == i) ++l3;                // square center fixed
    }
    int nv = 0;
    std::vector<int> cls = o.vertex_classes(&nv);
    // induced vertex action: bottom-left corner of i -> top-right corner of
    // phi(i) = bottom-left corner of v(h(phi(i)))
    std::vector<char> fixed(nv, 1);
    for (int i = 0; i < n; ++i) {
        int img = o.v().apply0(o.h().apply0(phi.apply0(i)));
        if (cls[img] != cls[i]) fixed[cls[i]] = 0;
    }
    int l0 = -1;
    for (int k = 0; k < nv; ++k)
        if (fixed[k]) ++l0;
    std::array<int, 3> triple{l1, l2, l3};
    std::sort(triple.rbegin(), triple.rend());
    return HLKInvariant{l0, triple};
}

Origami parse_origami_text(const std::string& text) {
    std::istringstream is(text);
    std::string line, hs, vs;
    int n = -1;
    while (std::getline(is, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string val = line.substr(eq + 1);
        if (key == "h")
            hs = val;
        else if (key == "v")
            vs = val;
        else if (key == "n")
            n = std::stoi(val);
        else
            fail(errc::parse_error, "unknown key '" + key + "' in origami text");
    }
    check(!hs.empty() && !vs.empty(), errc::parse_error, "origami text needs h and v lines");
    if (n < 0) {
        // infer degree from the largest symbol
        n = 1;
        for (const std::string* s : {&hs, &vs}) {
            int cur = 0;
            bool in_num = false;
            for (char ch : *s) {
                if (isdigit(static_cast<unsigned char>(ch))) {
                    cur = cur * 10 + (ch - '0');
                    in_num = true;
                } else {
                    if (in_num) n = std::max(n, cur);
                    cur = 0;
                    in_num = false;
                }
            }
            if (in_num) n = std::max(n, cur);
        }
    }
    return Origami(parse_cycles(hs, n), parse_cycles(vs, n));
}

std::string format_origami_text(const Origami& o) {
    std::ostringstream os;
    os << "h = " << format_cycles(o.h()) << "\n";
    os << "v = " << format_cycles(o.v()) << "\n";
    os << "n = " << o.degree() << "\n";
    return os.str();
}

}  // namespace origamikz
