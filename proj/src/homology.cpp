#include "origamikz/homology.hpp"

#include <algorithm>
#include <map>

namespace origamikz {

namespace {

// edge ids: e in [0, n) is x_e; e in [n, 2n) is y_{e-n}
struct Skeleton {
    int n, nv;
    std::vector<int> vcls;
    std::vector<int> tail, head;  // per edge, vertex class ids
    std::vector<char> in_tree;
    std::vector<IntVec> pot;  // per vertex class, chain of the tree path from root
};

Skeleton build_skeleton(const Origami& o) {
    Skeleton sk;
    sk.n = o.degree();
    sk.vcls = o.vertex_classes(&sk.nv);
    sk.tail.resize(2 * sk.n);
    sk.head.resize(2 * sk.n);
    for (int i = 0; i < sk.n; ++i) {
        sk.tail[i] = sk.vcls[i];
        sk.head[i] = sk.vcls[o.h().apply0(i)];
        sk.tail[sk.n + i] = sk.vcls[i];
        sk.head[sk.n + i] = sk.vcls[o.v().apply0(i)];
    }
    sk.in_tree.assign(2 * sk.n, 0);
    sk.pot.assign(sk.nv, IntVec(2 * sk.n));
    std::vector<char> seen(sk.nv, 0);
    seen[sk.vcls[0]] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int e = 0; e < 2 * sk.n; ++e) {
            int a = sk.tail[e], b = sk.head[e];
            if (a == b) continue;
            if (seen[a] && !seen[b]) {
                sk.pot[b] = sk.pot[a];
                sk.pot[b][e] += 1;
                seen[b] = sk.in_tree[e] = 1;
                grew = true;
            } else if (seen[b] && !seen[a]) {
                sk.pot[a] = sk.pot[b];
                sk.pot[a][e] -= 1;
                seen[a] = sk.in_tree[e] = 1;
                grew = true;
            }
        }
    }
    return sk;
}

// Cyclic CCW order of edge ends around each vertex. End ids: 2e = tail of
// edge e, 2e+1 = head. Around the vertex at the bottom-left corner of square
// u the CCW order is: tail x_u, tail y_u, head x_{h^-1(u)}, head
// y_{h v^-1 h^-1(u)}, then the same for the next square c(u) of the corner
// cycle.
std::vector<std::vector<int>> vertex_orders(const Origami& o, const Skeleton& sk) {
    int n = sk.n;
    Perm c = o.corner_perm();
    Perm hi = o.h().inverse(), vi = o.v().inverse();
    std::vector<std::vector<int>> order(sk.nv);
    std::vector<char> done(n, 0);
    for (int s = 0; s < n; ++s) {
        if (done[s]) continue;
        std::vector<int>& lst = order[sk.vcls[s]];
        int u = s;
        do {
            done[u] = 1;
            lst.push_back(2 * u);            // tail x_u
            lst.push_back(2 * (n + u));      // tail y_u
            lst.push_back(2 * hi.apply0(u) + 1);  // head x_{h^-1 u}
            lst.push_back(2 * (n + o.h().apply0(vi.apply0(hi.apply0(u)))) + 1);
            u = c.apply0(u);
        } while (u != s);
    }
    return order;
}

}  // namespace

HomologyModel::HomologyModel(const Origami& o) : o_(o), n_(o.degree()) {
    Skeleton sk = build_skeleton(o);
    int n = n_;
    int m = 2 * n - sk.nv + 1;  // rank of the cycle space

    fund_of_edge_.assign(2 * n, -1);
    std::vector<int> fund_edges;
    for (int e = 0; e < 2 * n; ++e)
        if (!sk.in_tree[e]) {
            fund_of_edge_[e] = static_cast<int>(fund_edges.size());
            fund_edges.push_back(e);
        }
    check(static_cast<int>(fund_edges.size()) == m, errc::internal, "tree size mismatch");

    // fundamental cycles as chains
    fund_chain_.assign(m, IntVec(2 * n));
    for (int k = 0; k < m; ++k) {
        int e = fund_edges[k];
        IntVec& ch = fund_chain_[k];
        ch = sk.pot[sk.tail[e]];
        for (int j = 0; j < 2 * n; ++j) ch[j] -= sk.pot[sk.head[e]][j];
        ch[e] += 1;
    }

    // ribbon structure: circular lists of edge ends, then tree contraction
    std::vector<int> nxt(4 * n, -1), prv(4 * n, -1);
    {
        auto orders = vertex_orders(o, sk);
        for (const auto& lst : orders) {
            int sz = static_cast<int>(lst.size());
            for (int i = 0; i < sz; ++i) {
                nxt[lst[i]] = lst[(i + 1) % sz];
                prv[lst[(i + 1) % sz]] = lst[i];
            }
        }
    }
    std::vector<char> removed(4 * n, 0);
    for (int e = 0; e < 2 * n; ++e) {
        if (!sk.in_tree[e]) continue;
        int a = 2 * e, b = 2 * e + 1;
        int ap = prv[a], an = nxt[a], bp = prv[b], bn = nxt[b];
        removed[a] = removed[b] = 1;
        if (an == a && bn == b) continue;
        if (an == a) {  // tail vertex consisted of this end alone
            nxt[bp] = bn;
            prv[bn] = bp;
            continue;
        }
        if (bn == b) {
            nxt[ap] = an;
            prv[an] = ap;
            continue;
        }
        nxt[ap] = bn;
        prv[bn] = ap;
        nxt[bp] = an;
        prv[an] = bp;
    }
    std::vector<int> pos(4 * n, -1);
    {
        int start = -1;
        for (int i = 0; i < 4 * n; ++i)
            if (!removed[i]) {
                start = i;
                break;
            }
        check(start >= 0, errc::internal, "empty chord diagram");
        int p = 0, cur = start;
        do {
            pos[cur] = p++;
            cur = nxt[cur];
        } while (cur != start);
        check(p == 2 * m, errc::internal, "chord diagram is not a single circle");
    }
    int circle = 2 * m;
    // chord pairing: loop a enters at its head end and leaves at its tail end;
    // two loops cross once per interleaved end pair
    omega_fund_ = IntMat(m, m);
    for (int a = 0; a < m; ++a) {
        int ea = fund_edges[a];
        int a_in = pos[2 * ea + 1], a_out = pos[2 * ea];
        auto in_arc = [&](int x) {
            int c = ((x - a_in) % circle + circle) % circle;
            int e = ((a_out - a_in) % circle + circle) % circle;
            return 0 < c && c < e;
        };
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            int eb = fund_edges[b];
            bool bi = in_arc(pos[2 * eb + 1]), bo = in_arc(pos[2 * eb]);
            if (bi && !bo)
                omega_fund_(a, b) = 1;
            else if (bo && !bi)
                omega_fund_(a, b) = -1;
        }
    }
    check((omega_fund_ + omega_fund_.transpose()).is_zero(), errc::internal,
          "chord pairing not skew");

    // boundary relations in fundamental coordinates
    IntMat rel(m, n);
    for (int i = 0; i < n; ++i) {
        IntVec ch(2 * n);
        ch[i] += 1;
        ch[n + o.h().apply0(i)] += 1;
        ch[o.v().apply0(i)] -= 1;
        ch[n + i] -= 1;
        IntVec fc = fund_coords(ch);
        for (int k = 0; k < m; ++k) rel(k, i) = fc[k];
    }
    check((omega_fund_ * rel).is_zero(), errc::internal, "boundary pairs nontrivially");

    Smith sm = smith_form(rel);
    for (int i = 0; i < sm.rank; ++i)
        check(sm.d(i, i) == 1, errc::internal, "surface homology should be torsion-free");
    int rank2g = m - sm.rank;
    check(rank2g % 2 == 0, errc::internal, "odd H1 rank");
    g_ = rank2g / 2;
    check(g_ == stratum(o).genus, errc::internal, "genus mismatch");

    proj_ = IntMat(rank2g, m);
    for (int r = 0; r < rank2g; ++r)
        for (int c = 0; c < m; ++c) proj_(r, c) = sm.u(sm.rank + r, c);

    basis_chain_.assign(rank2g, IntVec(2 * n));
    for (int c = 0; c < rank2g; ++c) {
        for (int r = 0; r < m; ++r) {
            const Int& coef = sm.uinv(r, sm.rank + c);
            if (coef == 0) continue;
            for (int j = 0; j < 2 * n; ++j) basis_chain_[c][j] += coef * fund_chain_[r][j];
        }
    }

    omega_h1_ = IntMat(rank2g, rank2g);
    for (int i = 0; i < rank2g; ++i)
        for (int j = 0; j < rank2g; ++j) {
            Int acc = 0;
            for (int r = 0; r < m; ++r) {
                const Int& ur = sm.uinv(r, sm.rank + i);
                if (ur == 0) continue;
                for (int c = 0; c < m; ++c)
                    if (omega_fund_(r, c) != 0 && sm.uinv(c, sm.rank + j) != 0)
                        acc += ur * omega_fund_(r, c) * sm.uinv(c, sm.rank + j);
            }
            omega_h1_(i, j) = acc;
        }
    check((omega_h1_ + omega_h1_.transpose()).is_zero(), errc::internal, "omega not skew");
    check(abs(det(omega_h1_)) == 1, errc::internal, "omega not unimodular");

    hol_h1_ = IntMat(2, rank2g);
    for (int c = 0; c < rank2g; ++c) {
        auto hv = chain_holonomy(basis_chain_[c]);
        hol_h1_(0, c) = hv[0];
        hol_h1_(1, c) = hv[1];
    }

    IntVec sigma_chain(2 * n), xi_chain(2 * n);
    for (int i = 0; i < n; ++i) {
        sigma_chain[i] = 1;
        xi_chain[n + i] = 1;
    }
    sigma_h1_ = class_of_chain(sigma_chain);
    xi_h1_ = class_of_chain(xi_chain);

    Smith hs = smith_form(hol_h1_);
    check(hs.rank == 2, errc::internal, "holonomy not of full rank");
    zero_basis_ = IntMat(rank2g, rank2g - 2);
    for (int c = 0; c < rank2g - 2; ++c)
        for (int r = 0; r < rank2g; ++r) zero_basis_(r, c) = hs.v(r, hs.rank + c);
}

IntVec HomologyModel::fund_coords(const IntVec& chain) const {
    int m = static_cast<int>(fund_chain_.size());
    IntVec out(m);
    for (int e = 0; e < 2 * n_; ++e)
        if (fund_of_edge_[e] >= 0) out[fund_of_edge_[e]] = chain[e];
    return out;
}

bool HomologyModel::is_cycle(const IntVec& chain) const {
    IntVec fc = fund_coords(chain);
    IntVec rec(2 * n_);
    for (size_t k = 0; k < fund_chain_.size(); ++k) {
        if (fc[k] == 0) continue;
        for (int j = 0; j < 2 * n_; ++j) rec[j] += fc[k] * fund_chain_[k][j];
    }
    return rec == chain;
}

IntVec HomologyModel::class_of_chain(const IntVec& chain) const {
    check(is_cycle(chain), errc::bad_params, "chain is not a cycle");
    return proj_.apply(fund_coords(chain));
}

std::array<Int, 2> HomologyModel::chain_holonomy(const IntVec& chain) const {
    Int hx = 0, hy = 0;
    for (int i = 0; i < n_; ++i) {
        hx += chain[i];
        hy += chain[n_ + i];
    }
    return {hx, hy};
}

Int HomologyModel::pair(const IntVec& a, const IntVec& b) const {
    check(a.size() == b.size() && static_cast<int>(a.size()) == 2 * g_, errc::bad_params,
          "H1 coordinate length mismatch");
    Int acc = 0;
    for (int i = 0; i < 2 * g_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < 2 * g_; ++j)
            if (omega_h1_(i, j) != 0 && b[j] != 0) acc += a[i] * omega_h1_(i, j) * b[j];
    }
    return acc;
}

IntMat HomologyModel::omega_zero() const {
    IntMat zb = zero_basis_;
    IntMat tmp = zb.transpose() * omega_h1_ * zb;
    return tmp;
}

RatVec HomologyModel::zero_coordinates(const IntVec& v) const {
    int r = 2 * g_;
    RatMat a(r, r);
    for (int i = 0; i < r; ++i) {
        for (int c = 0; c < r - 2; ++c) a(i, c) = Rat(zero_basis_(i, c));
        a(i, r - 2) = Rat(sigma_h1_[i]);
        a(i, r - 1) = Rat(xi_h1_[i]);
    }
    RatVec b(r);
    for (int i = 0; i < r; ++i) b[i] = Rat(v[i]);
    RatVec x = solve(a, b);
    check(x[r - 2] == 0 && x[r - 1] == 0, errc::bad_params,
          "vector has a tautological component");
    return RatVec(x.begin(), x.end() - 2);
}

void HomologyModel::set_zero_basis(IntMat cols) {
    check(cols.rows() == 2 * g_ && cols.cols() == 2 * g_ - 2, errc::bad_params,
          "zero basis must be 2g x (2g-2)");
    check(rank_of(cols) == 2 * g_ - 2, errc::bad_params, "zero basis not independent");
    check((hol_h1_ * cols).is_zero(), errc::bad_params, "zero basis has nonzero holonomy");
    zero_basis_ = std::move(cols);
}

HomologyAction affine_action(const HomologyModel& model, const SL2Word& word,
                             const Perm& relabel) {
    const Origami& o = model.origami();
    int n = o.degree(), r = model.rank();
    std::vector<IntVec> chains = model.basis_chains();
    Origami cur = o;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        for (IntVec& ch : chains) ch = transport_chain(*it, cur, ch);
        cur = nielsen_apply(*it, cur);
    }
    check(cur == conjugate(o, relabel), errc::not_in_veech_group,
          "word does not stabilize the origami via the given relabeling");
    Perm back = relabel.inverse();
    HomologyAction act;
    act.full = IntMat(r, r);
    for (int c = 0; c < r; ++c) {
        IntVec moved(2 * n);
        for (int i = 0; i < n; ++i) {
            moved[back.apply0(i)] = chains[c][i];
            moved[n + back.apply0(i)] = chains[c][n + i];
        }
        IntVec cls = model.class_of_chain(moved);
        for (int rr = 0; rr < r; ++rr) act.full(rr, c) = cls[rr];
    }
    check(act.full.transpose() * model.omega() * act.full == model.omega(), errc::internal,
          "homology action is not symplectic");
    act.taut = eval_word(word);
    // tautological part must agree with the word evaluation
    {
        IntVec sig = act.full.apply(model.sigma());
        IntVec xi = act.full.apply(model.xi());
        for (int i = 0; i < r; ++i) {
            check(sig[i] == act.taut(0, 0) * model.sigma()[i] + act.taut(1, 0) * model.xi()[i],
                  errc::internal, "tautological action mismatch (sigma)");
            check(xi[i] == act.taut(0, 1) * model.sigma()[i] + act.taut(1, 1) * model.xi()[i],
                  errc::internal, "tautological action mismatch (xi)");
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

HomologyAction affine_action_of_matrix(const HomologyModel& model, const Mat2& m) {
    SL2Word w = sl2_word_from_matrix(m);
    auto psi = veech_witness(model.origami(), w);
    check(psi.has_value(), errc::not_in_veech_group, "matrix is not in the Veech group");
    return affine_action(model, w, *psi);
}

std::vector<RatMat> shadow_group(const HomologyModel& model, const VeechGroup& vg) {
    auto [canon, rho0] = canonical_form_with_relabel(model.origami());
    check(canon == vg.vertices[0], errc::bad_params,
          "Veech group was computed for a different origami");
    Perm rho0i = rho0.inverse();
    std::vector<RatMat> out;
    out.reserve(vg.gens.size());
    for (const SchreierGen& g : vg.gens) {
        Perm psi = rho0i * g.relabel * rho0;
        out.push_back(affine_action(model, g.word, psi).shadow);
    }
    return out;
}

IntVec anti_automorphism_chain(const Origami& o, const Perm& phi, const IntVec& chain) {
    int n = o.degree();
    check(static_cast<int>(chain.size()) == 2 * n, errc::bad_params, "chain length mismatch");
    IntVec out(2 * n);
    for (int i = 0; i < n; ++i) {
        out[o.v().apply0(phi.apply0(i))] -= chain[i];
        out[n + o.h().apply0(phi.apply0(i))] -= chain[n + i];
    }
    return out;
}

PrymSplit prym_split(const HomologyModel& model, const Perm& anti,
                     const std::vector<RatMat>& shadow_mats) {
    const Origami& o = model.origami();
    check(anti * o.h() == o.h().inverse() * anti && anti * o.v() == o.v().inverse() * anti,
          errc::not_anti_automorphism, "not an anti-automorphism");
    int r = model.rank(), z = model.zero_rank();
    // involution matrix on H1, then restricted to the zero basis
    IntMat iota(r, r);
    for (int c = 0; c < r; ++c) {
        IntVec img = anti_automorphism_chain(o, anti, model.basis_chains()[c]);
        IntVec cls = model.class_of_chain(img);
        for (int i = 0; i < r; ++i) iota(i, c) = cls[i];
    }
    RatMat izero(z, z);
    for (int c = 0; c < z; ++c) {
        IntVec col(r);
        for (int i = 0; i < r; ++i) col[i] = model.zero_basis()(i, c);
        RatVec coords = model.zero_coordinates(iota.apply(col));
        for (int i = 0; i < z; ++i) izero(i, c) = coords[i];
    }
    check((izero * izero).is_identity(), errc::internal, "iota is not an involution on H^(0)");

    auto eigen_basis = [&](int sign) {
        RatMat m = izero;
        for (int i = 0; i < z; ++i) m(i, i) -= sign;  // kernel of (iota - sign)
        auto rk = rank_kernel(m);
        RatMat basis(z, static_cast<int>(rk.kernel.size()));
        for (size_t c = 0; c < rk.kernel.size(); ++c)
            for (int i = 0; i < z; ++i) basis(i, static_cast<int>(c)) = rk.kernel[c][i];
        return basis;
    };
    PrymSplit out;
    out.plus_basis = eigen_basis(1);
    out.minus_basis = eigen_basis(-1);
    check(out.plus_basis.cols() + out.minus_basis.cols() == z, errc::internal,
          "eigenspaces do not span");

    auto restrict_to = [&](const RatMat& basis, const RatMat& m) {
        int k = basis.cols();
        RatMat res(k, k);
        for (int c = 0; c < k; ++c) {
            RatVec img(z);
            for (int i = 0; i < z; ++i) {
                img[i] = 0;
                for (int j = 0; j < z; ++j) img[i] += m(i, j) * basis(j, c);
            }
            RatVec coords = solve(basis, img);
            for (int i = 0; i < k; ++i) res(i, c) = coords[i];
        }
        return res;
    };
    for (const RatMat& m : shadow_mats) {
        out.plus_actions.push_back(restrict_to(out.plus_basis, m));
        out.minus_actions.push_back(restrict_to(out.minus_basis, m));
    }
    return out;
}

}  // namespace origamikz
