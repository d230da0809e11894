#include "origamikz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace origamikz {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images0) : img_(std::move(images0)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        check(x >= 0 && x < degree(), errc::symbol_out_of_range, "image out of range");
        check(!seen[x], errc::repeated_symbol, "not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_one_line(const std::vector<int>& images1) {
    std::vector<int> v(images1.size());
    for (size_t i = 0; i < images1.size(); ++i) v[i] = images1[i] - 1;
    return Perm(std::move(v));
}

std::vector<int> Perm::one_line() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
    return v;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
    Perm p;
    p.img_ = std::move(v);
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

bool Perm::even() const {
    // parity = (-1)^(n - #cycles)
    int n = degree(), ncyc = 0;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++ncyc;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return ((n - ncyc) % 2) == 0;
}

Perm operator*(const Perm& a, const Perm& b) {
    check(a.degree() == b.degree(), errc::degree_mismatch, "degree mismatch in product");
    std::vector<int> v(a.degree());
    for (int i = 0; i < a.degree(); ++i) v[i] = a.img_[b.img_[i]];
    Perm p;
    p.img_ = std::move(v);
    return p;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            cyc.push_back(j + 1);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Perm parse_cycles(const std::string& text, int n) {
    check(n >= 1, errc::bad_params, "degree must be positive");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(n, 0);

    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        check(text[i] == '(', errc::malformed_cycle, "expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            check(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                  errc::malformed_cycle, "expected symbol at position " + std::to_string(i));
            int val = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                val = val * 10 + (text[i] - '0');
                ++i;
            }
            check(val >= 1 && val <= n, errc::symbol_out_of_range,
                  "symbol " + std::to_string(val) + " out of range 1.." + std::to_string(n));
            check(!used[val - 1], errc::repeated_symbol,
                  "symbol " + std::to_string(val) + " repeated");
            used[val - 1] = 1;
            cyc.push_back(val - 1);
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        skip_ws();
    }
    return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
    auto cyc = p.cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (size_t k = 0; k < c.size(); ++k) {
            if (k) os << ',';
            os << c[k];
        }
        os << ')';
    }
    return os.str();
}

bool is_transitive(const std::vector<Perm>& gens, int n) {
    if (n <= 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Perm& g : gens) {
            for (int y : {g.apply0(x), g.inverse().apply0(x)}) {
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
    }
    return count == n;
}

namespace {

// Deterministic Schreier-Sims with base 0,1,2,...: generator sets per level,
// rebuilt orbits, and a closure sweep repeated until every level is closed
// under the Schreier generators of the level above. Adequate for the degrees
// this project meets (a few hundred).
class StabChain {
  public:
    StabChain(const std::vector<Perm>& gens, int n) : n_(n), levels_(n) {
        for (int i = 0; i < n_; ++i) levels_[i].transversal.assign(n_, -1);
        for (const Perm& g : gens)
            if (!g.is_identity()) levels_[0].own_gens.push_back(g);
        rebuild_all();
        // Sweep until every level is closed under its Schreier generators.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int k = 0; k < n_ && !changed; ++k) {
                Level& L = levels_[k];
                std::vector<Perm> eff = effective_gens(k);
                if (eff.empty()) continue;
                for (size_t xi = 0; xi < L.orbit.size() && !changed; ++xi) {
                    int x = L.orbit[xi];
                    for (const Perm& s : eff) {
                        int y = s.apply0(x);
                        Perm schreier = coset_rep(k, y).inverse() * (s * coset_rep(k, x));
                        auto [res, stuck] = sift(k + 1, std::move(schreier));
                        if (stuck < n_ && insert_gen(stuck, res)) {
                            rebuild_all();
                            changed = true;
                            break;
                        }
                    }
                }
            }
        }
    }

    Int order() const {
        Int o = 1;
        for (int i = 0; i < n_; ++i)
            if (!levels_[i].orbit.empty()) o *= static_cast<long>(levels_[i].orbit.size());
        return o;
    }

  private:
    struct Level {
        std::vector<Perm> own_gens;  // generators first placed at this level;
                                     // each fixes base points < level
        std::vector<int> orbit;
        std::vector<int> transversal;  // index into words; -1 if not in orbit
        std::vector<Perm> words;
    };

    int n_;
    std::vector<Perm> empty_;
    std::vector<Level> levels_;

    const Perm& coset_rep(int level, int x) const {
        return levels_[level].words[levels_[level].transversal[x]];
    }

    // Generators of the level-k stabilizer: everything placed at level >= k.
    std::vector<Perm> effective_gens(int k) const {
        std::vector<Perm> out;
        for (int j = k; j < n_; ++j)
            for (const Perm& g : levels_[j].own_gens) out.push_back(g);
        return out;
    }

    bool insert_gen(int level, const Perm& g) {
        auto& gens = levels_[level].own_gens;
        if (std::find(gens.begin(), gens.end(), g) != gens.end()) return false;
        gens.push_back(g);
        return true;
    }

    void rebuild_all() {
        for (int level = 0; level < n_; ++level) {
            Level& L = levels_[level];
            L.orbit.clear();
            L.words.clear();
            std::fill(L.transversal.begin(), L.transversal.end(), -1);
            std::vector<Perm> eff = effective_gens(level);
            if (eff.empty()) continue;
            L.orbit.push_back(level);
            L.words.push_back(Perm(n_));
            L.transversal[level] = 0;
            for (size_t qi = 0; qi < L.orbit.size(); ++qi) {
                int x = L.orbit[qi];
                for (const Perm& g : eff) {
                    int y = g.apply0(x);
                    if (L.transversal[y] < 0) {
                        L.words.push_back(g * L.words[L.transversal[x]]);
                        L.orbit.push_back(y);
                        L.transversal[y] = static_cast<int>(L.words.size()) - 1;
                    }
                }
            }
        }
    }

    // Sift g through levels >= level; returns residue and the level it got stuck
    // at (n_ when it sifts to the identity).
    std::pair<Perm, int> sift(int level, Perm g) const {
        for (int i = level; i < n_; ++i) {
            if (g.is_identity()) return {g, n_};
            int y = g.apply0(i);
            if (y == i) continue;
            if (levels_[i].transversal[y] < 0) return {g, i};
            g = coset_rep(i, y).inverse() * g;
        }
        return {g, n_};
    }
};

}  // namespace

Int group_order(const std::vector<Perm>& gens, int n) {
    check(n >= 1, errc::bad_params, "degree must be positive");
    for (const Perm& g : gens)
        check(g.degree() == n, errc::degree_mismatch, "generator degree mismatch");
    StabChain chain(gens, n);
    return chain.order();
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

MonodromyClass monodromy_class(const std::vector<Perm>& gens, int n) {
    check(is_transitive(gens, n), errc::not_transitive, "generators are not transitive");
    Int order = group_order(gens, n);
    Int full = factorial(n);
    if (order == full) return MonodromyClass::Symmetric;
    if (order * 2 == full) {
        // A_N iff all generators even
        for (const Perm& g : gens)
            if (!g.even()) return MonodromyClass::Other;
        return MonodromyClass::Alternating;
    }
    return MonodromyClass::Other;
}

const char* to_string(MonodromyClass c) {
    switch (c) {
        case MonodromyClass::Alternating: return "alternating";
        case MonodromyClass::Symmetric: return "symmetric";
        default: return "other";
    }
}

}  // namespace origamikz
