#include "origamikz/certificates.hpp"

#include <map>

namespace origamikz {

Certificate build_certificate(const CertificateRequest& req) {
    Certificate cert;
    cert.label = req.label;
    cert.origami = req.origami;
    cert.dirs = req.dirs;
    HomologyModel model(req.origami);
    check(model.genus() >= 2, errc::bad_params, "certificates need genus >= 2");

    for (int i = 0; i < 3; ++i) {
        CylinderDecomposition d = decompose(model, req.dirs[i].first, req.dirs[i].second);
        check(d.cyls.size() == 2, errc::not_two_cylinders,
              "direction " + std::to_string(req.dirs[i].first) + "," +
                  std::to_string(req.dirs[i].second) + " does not give two cylinders");
        cert.transvections[i] = transvection_h0(model, d, req.counts[i]);
    }

    if (req.run_pinching && model.zero_rank() == 4) {
        // Galois-pinching candidate: product of the horizontal and vertical
        // multitwists (minimal strengths), with the first transvection as the
        // unipotent companion.
        HomologyAction mh = multitwist_action(model, decompose(model, 1, 0));
        HomologyAction mv = multitwist_action(model, decompose(model, 0, 1));
        cert.pinching = density_pinching(mh.shadow * mv.shadow,
                                         cert.transvections[0].shadow, model.omega_zero());
    }
    if (req.run_dfh) {
        HomologyAction mh = multitwist_action(model, decompose(model, 1, 0));
        HomologyAction mv = multitwist_action(model, decompose(model, 0, 1));
        std::vector<RatMat> gens = {mh.shadow, mv.shadow, mh.shadow * mv.shadow,
                                    cert.transvections[1].shadow,
                                    cert.transvections[2].shadow};
        for (const auto& [dir, counts] : req.dfh_extra) {
            CylinderDecomposition d = decompose(model, dir.first, dir.second);
            gens.push_back(multitwist_action(model, d, counts).shadow);
        }
        if (req.dfh_h_power > 0)
            gens.push_back(to_rat(mat_pow(to_int(mh.shadow), req.dfh_h_power)));
        try {
            cert.dfh = density_dfh(gens, cert.transvections[0].shadow);
        } catch (const Error&) {
            cert.dfh = std::nullopt;
        }
    }

    try {
        cert.restriction = sv_restrict(model, cert.transvections);
    } catch (const Error& e) {
        cert.failure = e.what();
        return cert;
    }
    if (req.word) {
        cert.word = req.word;
        cert.sv = sv_verify_word(cert.restriction, *req.word);
    } else {
        auto found = sv_search_word(cert.restriction);
        if (found) {
            cert.word = found;
            cert.word_from_search = true;
            cert.sv = sv_verify_word(cert.restriction, *found);
        } else {
            cert.failure = "no unipotent-radical word found within the search bounds";
            return cert;
        }
    }
    cert.sv_ok = cert.sv.ok;
    return cert;
}

namespace {

// Twist counts for the shear lambda = t * w1 * w2 (the normalization the
// worked examples use), signed: negative t is the inverse twist.
std::vector<Int> product_counts(const HomologyModel& model, long p, long q, long t) {
    CylinderDecomposition d = decompose(model, p, q);
    check(d.cyls.size() == 2, errc::not_two_cylinders, "expected a two-cylinder direction");
    Int lam = Int(t) * d.cyls[0].circumference * d.cyls[1].circumference;
    std::vector<Int> counts;
    for (const Cylinder& c : d.cyls) counts.push_back(lam * c.height / c.circumference);
    return counts;
}

}  // namespace

CertificateRequest family_certificate_request(const std::string& family,
                                              const std::vector<long>& params) {
    CertificateRequest req;
    auto need = [&](size_t k) {
        check(params.size() == k, errc::bad_params,
              family + " takes " + std::to_string(k) + " certificate parameter(s)");
    };
    if (family == "OPrime") {
        need(1);
        long n = params[0];
        check(n >= 1, errc::bad_params, "OPrime certificate needs n >= 1");
        long K = 3 * n, N = 5 * n;
        req.origami = family_o_prime(static_cast<int>(K), static_cast<int>(N));
        req.label = "OPrime(" + std::to_string(K) + "," + std::to_string(N) + ")";
        req.dirs = {{{1, 1}, {1, -1}, {1, 3}}};
        req.counts[0] = {Int(N), Int(K)};
        req.counts[1] = {Int(K + N - 2), Int(2)};
        req.counts[2] = {Int(2 * n + N), Int(n)};
        long s = (5 * n - 4) * (5 * n - 4);
        req.word = DWord{{2, 4}, {1, -s}};
        return req;
    }
    if (family == "P") {
        need(1);
        long n = params[0];
        check(n >= 2, errc::bad_params, "P certificate needs n >= 2");
        long N = 2 * n;
        req.origami = family_p(static_cast<int>(N));
        req.label = "P(" + std::to_string(N) + ")";
        req.dirs = {{{1, 0}, {0, 1}, {2 * N, 1}}};
        req.counts[0] = {Int(N), Int(1)};
        req.counts[1] = {Int(N - 2), Int(3)};
        req.counts[2] = {Int(N - 2), Int(3)};
        req.word = DWord{{0, -2}, {2, 1}, {0, 2}, {1, -1}};
        return req;
    }
    if (family == "Stairs") {
        need(2);
        long N = params[0], m = params[1], M = 4 + 2 * m;
        req.origami = family_stairs(static_cast<int>(N), static_cast<int>(m));
        req.label = "Stairs(" + std::to_string(N) + "," + std::to_string(m) + ")";
        req.dirs = {{{1, 1}, {1, -1}, {1, 2}}};
        req.counts[0] = {Int(N + M - 1), Int(3)};
        req.counts[1] = {Int(N + M - 3), Int(5)};
        req.counts[2] = {Int(2 * N + M + 4), Int(M)};
        long A = 22 - 4 * N - 4 * M, B = 6 + 3 * m, C = 12 - 3 * N + 9 * m;
        if (C == 0)
            req.word = DWord{{1, -2 * B * B}, {2, A * A}};
        // otherwise leave the word to the search
        req.dfh_extra = {{{1, -2}, {Int(m + 6), Int(N + m)}}};
        req.dfh_h_power = N + M + 2;
        return req;
    }
    // the table families; per-direction twist multipliers pinned by making the
    // published words come out as unipotent-radical elements
    struct TableData {
        TableFamily fam;
        std::array<std::pair<long, long>, 3> dirs;
        std::array<long, 3> mult;
    };
    static const std::map<std::string, TableData> table = {
        {"F3n8", {TableFamily::F3n8, {{{1, 2}, {-1, 2}, {1, 3}}}, {1, 1, -1}}},
        {"F3n10", {TableFamily::F3n10, {{{2, 1}, {-2, 1}, {1, 1}}}, {1, 1, -1}}},
        {"F3n12", {TableFamily::F3n12, {{{2, 1}, {1, 2}, {1, 5}}}, {1, 1, -1}}},
        {"F6n14", {TableFamily::F6n14, {{{-2, 1}, {1, 1}, {2, 1}}}, {1, -1, 1}}},
        {"F6n18", {TableFamily::F6n18, {{{2, 1}, {-1, 1}, {1, 1}}}, {1, 1, 1}}},
        {"F6n22", {TableFamily::F6n22, {{{2, 1}, {-1, 1}, {1, 1}}}, {1, 1, 1}}},
    };
    auto it = table.find(family);
    check(it != table.end(), errc::bad_params, "no pinned certificate for '" + family + "'");
    need(1);
    long k = params[0];
    check(k >= 1, errc::bad_params, "subfamily parameter must be >= 1");
    long n = 0;
    DWord word;
    if (family == "F3n8") {
        n = 20 * k - 2;
        word = {{2, 3 * k}, {1, 1}, {2, -3 * k}, {0, -25}};
    } else if (family == "F3n10") {
        n = 4 * k - 3;  // n = 2k'-1 with k' = 2k-1
        word = {{2, k}, {1, 1}, {2, -k}, {0, -9}};
    } else if (family == "F3n12") {
        n = 144 * k - 3;  // n = 2k'-1 with k' = 72k-1
        word = {{2, k}, {0, 12}, {2, -k}, {1, -27}};
    } else if (family == "F6n14") {
        n = 4 * k - 2;
        word = {{1, k}, {0, 1}, {1, -k}, {2, -9}};
    } else if (family == "F6n18") {
        n = 3 * k - 1;
        word = {{0, k}, {1, 1}, {0, -k}, {2, -9}};
    } else {  // F6n22
        n = 4 * k - 1;
        word = {{0, k}, {1, 1}, {0, -k}, {2, -9}};
    }
    const TableData& td = it->second;
    req.origami = family_table_one(td.fam, static_cast<int>(n));
    req.label = family + "(n=" + std::to_string(n) + ")";
    req.dirs = td.dirs;
    HomologyModel model(req.origami);
    for (int i = 0; i < 3; ++i)
        req.counts[i] =
            product_counts(model, td.dirs[i].first, td.dirs[i].second, td.mult[i]);
    req.word = word;
    return req;
}

}  // namespace origamikz
