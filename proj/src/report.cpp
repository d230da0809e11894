#include "origamikz/report.hpp"

#include <sstream>

namespace origamikz {

namespace {

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    return Int(j.get<std::string>());
}

json rat_to_json(const Rat& x) {
    if (x.get_den() == 1) return int_to_json(x.get_num());
    std::ostringstream os;
    os << x;
    return json(os.str());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    return Rat(j.get<std::string>());
}

json dword_to_json(const DWord& w) {
    json out = json::array();
    for (auto [g, e] : w) out.push_back(json::array({g + 1, e}));
    return out;
}

DWord dword_from_json(const json& j) {
    DWord w;
    for (const auto& item : j) w.push_back({item[0].get<int>() - 1, item[1].get<long>()});
    return w;
}

}  // namespace

json origami_to_json(const Origami& o) {
    json j;
    j["degree"] = o.degree();
    j["h"] = o.h().one_line();
    j["v"] = o.v().one_line();
    return j;
}

Origami origami_from_json(const json& j) {
    check(j.contains("h") && j.contains("v"), errc::parse_error, "origami json needs h and v");
    Perm h = Perm::from_one_line(j["h"].get<std::vector<int>>());
    Perm v = Perm::from_one_line(j["v"].get<std::vector<int>>());
    return Origami(h, v);
}

json intmat_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(int_to_json(m(i, c)));
        rows.push_back(row);
    }
    return rows;
}

json ratmat_to_json(const RatMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m(i, c)));
        rows.push_back(row);
    }
    return rows;
}

RatMat ratmat_from_json(const json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
    return m;
}

long genus2_shadow_index(const Origami& o, long orbit_budget, long coset_budget) {
    HomologyModel model(o);
    check(model.genus() == 2, errc::bad_params, "shadow index in SL(2,Z) needs genus 2");
    VeechGroup vg = veech_group(o, orbit_budget);
    std::vector<RatMat> shadows = shadow_group(model, vg);
    std::vector<Mat2> mats;
    mats.reserve(shadows.size());
    for (const RatMat& s : shadows) {
        Mat2 m = to_int(s);
        if (!m.is_identity()) mats.push_back(std::move(m));
    }
    std::sort(mats.begin(), mats.end(), [](const Mat2& a, const Mat2& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
            }
        return false;
    });
    mats.erase(std::unique(mats.begin(), mats.end()), mats.end());
    return subgroup_index_sl2z(mats, coset_budget).index;
}

json analyze(const Origami& o, const AnalyzeOptions& opts) {
    auto wanted = [&](const std::string& name) {
        return opts.analyses.empty() ||
               std::find(opts.analyses.begin(), opts.analyses.end(), name) !=
                   opts.analyses.end();
    };
    json out;
    out["schema"] = "origami-kz/1";
    out["input"] = origami_to_json(o);
    json res;
    if (wanted("stratum")) {
        Stratum st = stratum(o);
        res["stratum"] = st.zero_orders;
        res["genus"] = st.genus;
    }
    if (wanted("reduced")) res["reduced"] = is_reduced(o);
    if (wanted("monodromy")) {
        res["monodromy"] = to_string(monodromy_class({o.h(), o.v()}, o.degree()));
        res["group_order"] = int_to_json(group_order({o.h(), o.v()}, o.degree()));
    }
    if (wanted("hlk")) {
        auto phi = anti_automorphism(o);
        if (phi) {
            HLKInvariant inv = hlk_invariant(o, *phi);
            res["hlk"] = {{"l0", inv.l0}, {"triple", inv.triple}};
        } else {
            res["hlk"] = nullptr;
        }
    }
    if (wanted("veech") || wanted("shadow")) {
        try {
            VeechGroup vg = veech_group(o, opts.orbit_budget);
            json veech;
            veech["index"] = vg.index;
            veech["contains_minus_id"] = vg.contains_minus_id;
            veech["generators"] = vg.gens.size();
            res["veech"] = veech;
            if (wanted("shadow")) {
                HomologyModel model(o);
                if (model.genus() == 2) {
                    std::vector<RatMat> shadows = shadow_group(model, vg);
                    std::vector<Mat2> mats;
                    for (const RatMat& s : shadows)
                        if (!to_int(s).is_identity()) mats.push_back(to_int(s));
                    res["shadow"] = {
                        {"sl2_index", subgroup_index_sl2z(mats, opts.coset_budget).index}};
                } else {
                    json gens = json::array();
                    std::vector<RatMat> shadows = shadow_group(model, vg);
                    size_t cap = std::min<size_t>(shadows.size(), 16);
                    for (size_t i = 0; i < cap; ++i) gens.push_back(ratmat_to_json(shadows[i]));
                    res["shadow"] = {{"rank", model.zero_rank()},
                                     {"generators", shadows.size()},
                                     {"first_generators", gens}};
                }
            }
        } catch (const Error& e) {
            if (e.kind() == errc::budget_exceeded)
                res["veech"] = {{"error", "budget exceeded"}};
            else
                throw;
        }
    }
    out["results"] = res;
    return out;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["schema"] = "origami-kz/1";
    j["label"] = cert.label;
    j["origami"] = origami_to_json(cert.origami);
    json dirs = json::array();
    for (auto [p, q] : cert.dirs) dirs.push_back(json::array({p, q}));
    j["directions"] = dirs;
    json counts = json::array(), xs = json::array(), cs = json::array();
    for (const Transvection& t : cert.transvections) {
        json c = json::array();
        // twist counts are recoverable from c and the decomposition; store c
        cs.push_back(rat_to_json(t.c));
        json x = json::array();
        for (const Int& v : t.x_h1) x.push_back(int_to_json(v));
        xs.push_back(x);
    }
    j["X_vectors"] = xs;
    j["coefficients"] = cs;
    if (!cert.failure.empty()) {
        j["failure"] = cert.failure;
    }
    if (cert.failure.empty()) {
        json e = json::array();
        for (const Int& v : cert.restriction.e_x) e.push_back(int_to_json(v));
        j["annihilator"] = e;
        j["basis"] = json::array({cert.restriction.bi + 1, cert.restriction.bj + 1});
        json rs = json::array();
        for (const RatMat& r : cert.restriction.restriction) rs.push_back(ratmat_to_json(r));
        j["restrictions"] = rs;
        if (cert.word) {
            j["word"] = dword_to_json(*cert.word);
            j["word_text"] = dword_str(*cert.word);
            j["word_from_search"] = cert.word_from_search;
            j["element"] = ratmat_to_json(cert.sv.element);
        }
    }
    json verdicts;
    verdicts["sv"] = cert.sv_ok;
    if (cert.pinching)
        verdicts["pinching"] = cert.pinching->verdict;
    else
        verdicts["pinching"] = nullptr;
    if (cert.dfh) {
        verdicts["dfh"] = cert.dfh->verdict;
        j["dfh_dimension"] = cert.dfh->dimension;
    } else {
        verdicts["dfh"] = nullptr;
    }
    if (cert.pinching) {
        const PinchingReport& p = cert.pinching->pinching;
        j["pinching"] = {{"a", int_to_json(p.a)},           {"b", int_to_json(p.b)},
                         {"delta1", int_to_json(p.delta1)}, {"delta2", int_to_json(p.delta2)},
                         {"delta1_square", p.sq1},          {"delta2_square", p.sq2},
                         {"delta12_square", p.sq12},        {"galois_pinching", p.verdict}};
    }
    j["verdicts"] = verdicts;
    return j;
}

json check_certificate(const json& cert) {
    json out;
    out["valid"] = false;
    try {
        Origami o = origami_from_json(cert.at("origami"));
        HomologyModel model(o);
        std::vector<std::string> problems;
        std::array<Transvection, 3> ts;
        for (int i = 0; i < 3; ++i) {
            long p = cert.at("directions")[i][0].get<long>();
            long q = cert.at("directions")[i][1].get<long>();
            CylinderDecomposition d = decompose(model, p, q);
            check(d.cyls.size() == 2, errc::not_two_cylinders, "not a two-cylinder direction");
            // rebuild the transvection with the stored coefficient: counts
            // follow from c = lambda h1 h2 / (w1 w2 area)
            Rat c = rat_from_json(cert.at("coefficients")[i]);
            Int area = 0;
            for (const Cylinder& cyl : d.cyls) area += Int(cyl.circumference) * cyl.height;
            Rat lam = c * Rat(Int(d.cyls[0].circumference) * d.cyls[1].circumference * area) /
                      Rat(Int(d.cyls[0].height) * d.cyls[1].height);
            std::vector<Int> counts;
            for (const Cylinder& cyl : d.cyls) {
                Rat m = lam * Rat(cyl.height) / Rat(cyl.circumference);
                check(m.get_den() == 1, errc::bad_params, "stored coefficient is not a twist");
                counts.push_back(m.get_num());
            }
            ts[i] = transvection_h0(model, d, counts);
            // stored X must match
            json xj = cert.at("X_vectors")[i];
            for (int r = 0; r < model.rank(); ++r)
                if (ts[i].x_h1[r] != int_from_json(xj[r]))
                    problems.push_back("X vector mismatch");
        }
        SVRestriction r = sv_restrict(model, ts);
        for (int i = 0; i < 3; ++i)
            if (int_from_json(cert.at("annihilator")[i]) != r.e_x[i])
                problems.push_back("annihilator mismatch");
        for (int i = 0; i < 3; ++i)
            if (ratmat_from_json(cert.at("restrictions")[i]) != r.restriction[i])
                problems.push_back("restriction mismatch");
        bool sv_ok = false;
        if (cert.contains("word")) {
            DWord w = dword_from_json(cert.at("word"));
            SVVerdict v = sv_verify_word(r, w);
            sv_ok = v.ok;
            if (cert.contains("element") && ratmat_from_json(cert.at("element")) != v.element)
                problems.push_back("element mismatch");
            if (cert.at("verdicts").at("sv").get<bool>() != v.ok)
                problems.push_back("sv verdict mismatch");
        }
        out["problems"] = problems;
        out["sv"] = sv_ok;
        out["valid"] = problems.empty() && sv_ok;
    } catch (const Error& e) {
        out["error"] = e.what();
    }
    return out;
}

std::string table_h2_indices(int n_lo, int n_hi, long orbit_budget) {
    std::ostringstream os;
    os << "n,orbit,a,b,computed,published,match\n";
    for (int n = std::max(3, n_lo); n <= n_hi; ++n) {
        std::vector<std::tuple<std::string, int, int, int>> rows;
        if (n % 2 == 0 || n == 3) {
            rows.push_back({"single", 2, n - 1, 3});
        } else {
            rows.push_back({"A", 2, n - 1, 1});   // a, b even
            rows.push_back({"B", 3, n - 2, 3});   // a, b odd
        }
        for (auto [orbit, a, b, published] : rows) {
            os << n << ',' << orbit << ',' << a << ',' << b << ',';
            try {
                long idx = genus2_shadow_index(family_lshape(a, b), orbit_budget);
                os << idx << ',' << published << ',' << (idx == published ? "yes" : "NO") << '\n';
            } catch (const Error& e) {
                os << "error," << published << ",-\n";
            }
        }
    }
    return os.str();
}

std::string table_h11_indices(int kmax, int lmax, long orbit_budget) {
    std::ostringstream os;
    os << "l\\k";
    for (int k = 2; k <= kmax; ++k) os << ',' << k;
    os << '\n';
    for (int l = 2; l <= lmax; ++l) {
        os << l;
        for (int k = 2; k <= kmax; ++k) {
            os << ',';
            if (k == l) {
                os << '-';  // the surface has a translation; excluded
                continue;
            }
            try {
                os << genus2_shadow_index(family_okl(k, l), orbit_budget);
            } catch (const Error&) {
                os << "budget";
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string table_family_charpolys(int n_lo, int n_hi) {
    std::ostringstream os;
    os << "family,n,a_computed,b_computed,a_published,b_published,match\n";
    for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
        int K = 3 * n, N = 5 * n;
        HomologyModel hm(family_o_prime(K, N));
        HomologyAction a = multitwist_action(
            hm, decompose(hm, 1, 0), {Int(2 * N * (K - 2)), Int(N), Int(2)});
        HomologyAction b = multitwist_action(
            hm, decompose(hm, 0, 1), {Int(-2 * K * (N - 2)), Int(-K), Int(-2)});
        Poly cp = char_poly(a.shadow * b.shadow);
        Int pa = Int(-75) * n * n + 48 * n - 8;
        Int pb = 2 * (Int(450) * n * n * n * n - 480 * n * n * n + 195 * n * n - 48 * n + 7);
        os << "OPrime," << n << ',' << cp[3] << ',' << cp[2] << ',' << pa << ',' << pb << ','
           << (cp[3] == pa && cp[2] == pb ? "yes" : "NO") << '\n';
    }
    for (int n = std::max(2, n_lo); n <= n_hi; ++n) {
        int N = 2 * n;
        HomologyModel hm(family_p(N));
        HomologyAction a = multitwist_action(hm, decompose(hm, 1, 1),
                                             {Int(n * n - 1), Int(n + 1), Int(n - 1)});
        // this pinching pair twists the two diagonals with opposite
        // orientations in this convention
        HomologyAction b = multitwist_action(hm, decompose(hm, -1, 1),
                                             {Int(-2 * (2 * n - 3)), Int(-1), Int(-1)});
        Poly cp = char_poly(a.shadow * b.shadow);
        Int pa = Int(-2) * (Int(n) * n + n - 1);
        Int pb = Int(2) * n * n * n + Int(n) * n + 2 * n - 3;
        os << "P," << n << ',' << cp[3] << ',' << cp[2] << ',' << pa << ',' << pb << ','
           << (cp[3] == pa && cp[2] == pb ? "yes" : "NO") << '\n';
    }
    return os.str();
}

}  // namespace origamikz
