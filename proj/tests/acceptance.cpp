// Acceptance suite: one line per criterion. Run with --slow to include the
// mod-16 symplectic image (criterion 9b).

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "origamikz/certificates.hpp"
#include "origamikz/report.hpp"

using namespace origamikz;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << ms << " ms)";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

IntVec h_cycle_chain(const Origami& o, int start1) {
    IntVec ch(2 * o.degree());
    int i = start1 - 1;
    do {
        ch[i] = 1;
        i = o.h().apply0(i);
    } while (i != start1 - 1);
    return ch;
}

IntVec v_cycle_chain(const Origami& o, int start1) {
    IntVec ch(2 * o.degree());
    int i = start1 - 1;
    do {
        ch[o.degree() + i] = 1;
        i = o.v().apply0(i);
    } while (i != start1 - 1);
    return ch;
}

IntVec add(const IntVec& a, const IntVec& b, const Int& bc) {
    IntVec out = a;
    for (size_t i = 0; i < a.size(); ++i) out[i] += bc * b[i];
    return out;
}

IntMat cols_to_mat(const std::vector<IntVec>& cols) {
    IntMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[0].size(); ++r)
            m(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
    return m;
}

// O_{3,5} pipeline data shared by criteria 1 and 9: Veech group, shadow
// matrices on the basis (Sigma_l, Sigma_m, Z_l, Z_m)
struct O35Data {
    long veech_index;
    std::vector<IntMat> shadows;  // deduplicated
};

O35Data o35_pipeline() {
    Origami o = family_o_prime(3, 5);
    HomologyModel hm(o);
    IntVec sc = h_cycle_chain(o, 1), sm = h_cycle_chain(o, 2), sl = h_cycle_chain(o, 4);
    IntVec zc = v_cycle_chain(o, 6), zm = v_cycle_chain(o, 5), zl = v_cycle_chain(o, 4);
    std::vector<IntVec> basis = {
        hm.class_of_chain(add(sl, sc, -5)), hm.class_of_chain(add(sm, sc, -2)),
        hm.class_of_chain(add(zl, zc, -3)), hm.class_of_chain(add(zm, zc, -2))};
    hm.set_zero_basis(cols_to_mat(basis));
    VeechGroup vg = veech_group(o);
    std::vector<RatMat> shadows = shadow_group(hm, vg);
    std::vector<IntMat> mats;
    for (const RatMat& s : shadows) {
        IntMat m = to_int(s);
        if (!m.is_identity()) mats.push_back(std::move(m));
    }
    std::sort(mats.begin(), mats.end(), [](const IntMat& a, const IntMat& b) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
        return false;
    });
    mats.erase(std::unique(mats.begin(), mats.end()), mats.end());
    return {vg.index, std::move(mats)};
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = argc > 1 && std::strcmp(argv[1], "--slow") == 0;
    std::cout << "origamikz acceptance suite" << (slow ? " (with slow criteria)" : "")
              << std::endl;

    O35Data o35;
    std::vector<RatMat> stab_gens_cache;

    criterion("1. Veech indices: O_{3,5} 1020, genus-4 H(6) 8, E_5 10", [&](std::string& d) {
        o35 = o35_pipeline();
        long g4 = veech_group(family_genus4_h6()).index;
        long e5 = veech_group(family_e5()).index;
        d = "computed " + std::to_string(o35.veech_index) + ", " + std::to_string(g4) + ", " +
            std::to_string(e5);
        return o35.veech_index == 1020 && g4 == 8 && e5 == 10;
    });

    criterion("2. H(2) shadow indices, n = 4..12", [](std::string& d) {
        for (int n = 4; n <= 12; ++n) {
            if (n % 2 == 0) {
                if (genus2_shadow_index(family_lshape(2, n - 1)) != 3) {
                    d = "even n = " + std::to_string(n);
                    return false;
                }
            } else {
                if (genus2_shadow_index(family_lshape(2, n - 1)) != 1) {  // a, b even
                    d = "orbit A, n = " + std::to_string(n);
                    return false;
                }
                if (genus2_shadow_index(family_lshape(3, n - 2)) != 3) {  // a, b odd
                    d = "orbit B, n = " + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });

    criterion("3. H(1,1) shadow indices: O(3,2), O(6,2), O(6,3), O(10,2), O(20,12)",
              [](std::string& d) {
                  const std::vector<std::tuple<int, int, long>> rows = {
                      {3, 2, 1}, {6, 2, 6}, {6, 3, 4}, {10, 2, 3}, {20, 12, 24}};
                  for (auto [k, l, expect] : rows) {
                      long idx = genus2_shadow_index(family_okl(k, l));
                      if (idx != expect) {
                          d = "O(" + std::to_string(k) + "," + std::to_string(l) + ") gave " +
                              std::to_string(idx);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("4. homology-action oracles (C1/C2, E_5 blocks, trivial element)",
              [](std::string& d) {
                  {
                      Origami o = family_genus4_h6();
                      HomologyModel hm(o);
                      auto cell_x = [&](int i) {
                          IntVec ch(14);
                          ch[i - 1] = 1;
                          return ch;
                      };
                      auto cell_y = [&](int i) {
                          IntVec ch(14);
                          ch[7 + i - 1] = 1;
                          return ch;
                      };
                      std::vector<IntVec> ccols;
                      for (int i : {1, 3, 4, 5})
                          ccols.push_back(hm.class_of_chain(add(cell_x(i), cell_x(7), -1)));
                      for (int i : {1, 2})
                          ccols.push_back(hm.class_of_chain(add(cell_y(i), cell_y(6), -1)));
                      hm.set_zero_basis(cols_to_mat(ccols));
                      HomologyAction a1 = affine_action_of_matrix(hm, mat2(1, 3, 0, 1));
                      HomologyAction a2 = affine_action_of_matrix(hm, mat2(1, 0, -1, 1));
                      IntMat c1(6, 6, {Int(1), Int(0), Int(0), Int(0), Int(2),  Int(0),
                                       Int(0), Int(1), Int(0), Int(0), Int(0),  Int(1),
                                       Int(0), Int(0), Int(1), Int(0), Int(-1), Int(0),
                                       Int(0), Int(0), Int(0), Int(1), Int(0),  Int(0),
                                       Int(0), Int(0), Int(0), Int(0), Int(1),  Int(0),
                                       Int(0), Int(0), Int(0), Int(0), Int(0),  Int(1)});
                      IntMat c2(6, 6, {Int(0),  Int(0), Int(0),  Int(0),  Int(-1), Int(-1),
                                       Int(0),  Int(0), Int(0),  Int(0),  Int(1),  Int(0),
                                       Int(0),  Int(1), Int(1),  Int(1),  Int(0),  Int(-1),
                                       Int(0),  Int(0), Int(-1), Int(-1), Int(0),  Int(1),
                                       Int(1),  Int(1), Int(1),  Int(1),  Int(-1), Int(-1),
                                       Int(-1), Int(0), Int(0),  Int(-1), Int(1),  Int(0)});
                      if (!(a1.shadow == to_rat(c1) && a2.shadow == to_rat(c2))) {
                          d = "genus-4 C1/C2 mismatch";
                          return false;
                      }
                  }
                  Origami o = family_e5();
                  HomologyModel hm(o);
                  IntVec s1 = h_cycle_chain(o, 1), s0 = h_cycle_chain(o, 3),
                         s2 = h_cycle_chain(o, 4);
                  IntVec z1 = v_cycle_chain(o, 1), z0 = v_cycle_chain(o, 2),
                         z2 = v_cycle_chain(o, 5);
                  IntVec S1 = hm.class_of_chain(add(s1, s0, -2)),
                         S2 = hm.class_of_chain(add(s2, s0, -2));
                  IntVec Z1 = hm.class_of_chain(add(add(z1, z1, 2), z0, -1));
                  IntVec Z2 = hm.class_of_chain(add(add(z2, z2, 2), z0, -1));
                  hm.set_zero_basis(cols_to_mat(
                      {add(S1, S2, -1), add(Z1, Z2, -1), add(S1, S2, 1), add(Z1, Z2, 1)}));
                  HomologyAction at2 = affine_action_of_matrix(hm, mat2(1, 2, 0, 1));
                  HomologyAction ab = affine_action_of_matrix(hm, mat2(1, 0, 3, 1));
                  IntMat a_expect(4, 4, {Int(1), Int(3), Int(0), Int(0), Int(0), Int(1), Int(0),
                                        Int(0), Int(0), Int(0), Int(1), Int(1), Int(0), Int(0),
                                        Int(0), Int(1)});
                  IntMat b_expect(4, 4, {Int(1), Int(0), Int(0), Int(0), Int(1), Int(1), Int(0),
                                        Int(0), Int(0), Int(0), Int(1), Int(0), Int(0), Int(0),
                                        Int(1), Int(1)});
                  if (!(at2.shadow == to_rat(a_expect) && ab.shadow == to_rat(b_expect))) {
                      d = "E5 block actions mismatch";
                      return false;
                  }
                  HomologyAction triv = affine_action_of_matrix(hm, mat2(6, -5, 5, -4));
                  if (!triv.shadow.is_identity()) {
                      d = "E5 trivial element acts nontrivially";
                      return false;
                  }
                  return true;
              });

    criterion("5. char-poly formulas for OPrime (n=1..3) and P (n=2..4)", [](std::string& d) {
        for (long n = 1; n <= 3; ++n) {
            int K = 3 * static_cast<int>(n), N = 5 * static_cast<int>(n);
            HomologyModel hm(family_o_prime(K, N));
            HomologyAction a = multitwist_action(hm, decompose(hm, 1, 0),
                                                 {Int(2 * N * (K - 2)), Int(N), Int(2)});
            HomologyAction b = multitwist_action(hm, decompose(hm, 0, 1),
                                                 {Int(-2 * K * (N - 2)), Int(-K), Int(-2)});
            Poly cp = char_poly(a.shadow * b.shadow);
            Int pa = -75 * n * n + 48 * n - 8;
            Int pb = 2 * (450 * n * n * n * n - 480 * n * n * n + 195 * n * n - 48 * n + 7);
            if (cp[3] != pa || cp[2] != pb) {
                d = "OPrime n = " + std::to_string(n);
                return false;
            }
        }
        for (long n = 2; n <= 4; ++n) {
            int N = 2 * static_cast<int>(n);
            HomologyModel hm(family_p(N));
            HomologyAction a = multitwist_action(
                hm, decompose(hm, 1, 1), {Int(n * n - 1), Int(n + 1), Int(n - 1)});
            HomologyAction b = multitwist_action(hm, decompose(hm, -1, 1),
                                                 {Int(-2 * (2 * n - 3)), Int(-1), Int(-1)});
            Poly cp = char_poly(a.shadow * b.shadow);
            Int pa = -2 * (n * n + n - 1);
            Int pb = 2 * n * n * n + n * n + 2 * n - 3;
            if (cp[3] != pa || cp[2] != pb) {
                d = "P n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion("6. pinching discriminants (n=1 via Delta2, n=2 via Delta1, closed forms n<=10)",
              [](std::string& d) {
                  for (long n = 1; n <= 10; ++n) {
                      Int a = -75 * n * n + 48 * n - 8;
                      Int b = 2 * (450 * n * n * n * n - 480 * n * n * n + 195 * n * n -
                                   48 * n + 7);
                      PinchingReport r = galois_pinching_quartic(a, b);
                      Int d1 = 2025 * n * n * n * n - 3360 * n * n * n + 1944 * n * n -
                               384 * n + 16;
                      Int d2 = Int(240) * n * n * (15 * n * n - 16 * n + 4) *
                               (225 * n * n * n * n - 240 * n * n * n + 135 * n * n -
                                48 * n + 8);
                      if (r.delta1 != d1 || r.delta2 != d2) {
                          d = "closed form mismatch at n = " + std::to_string(n);
                          return false;
                      }
                      if (n == 1 && !(r.delta2 == 57600 && r.sq2 && !r.verdict)) {
                          d = "n = 1 must fail via Delta2 = 240^2";
                          return false;
                      }
                      if (n == 2 && !(r.delta1 == 12544 && r.sq1 && !r.verdict)) {
                          d = "n = 2 must fail via Delta1 = 112^2";
                          return false;
                      }
                  }
                  return true;
              });

    criterion("7a. SV certificates: OPrime, Stairs, six table families", [](std::string& d) {
        const std::vector<std::pair<std::string, std::vector<long>>> cases = {
            {"OPrime", {1}}, {"Stairs", {4, 0}}, {"F3n8", {1}},  {"F3n10", {1}},
            {"F3n12", {1}},  {"F6n14", {1}},     {"F6n18", {1}}, {"F6n22", {1}}};
        for (const auto& [fam, params] : cases) {
            auto t0 = std::chrono::steady_clock::now();
            CertificateRequest req = family_certificate_request(fam, params);
            req.run_pinching = false;
            req.run_dfh = false;
            Certificate cert = build_certificate(req);
            if (!cert.failure.empty() || !cert.sv_ok) {
                d = fam + ": " + (cert.failure.empty() ? "word did not verify" : cert.failure);
                return false;
            }
            // the element is a nontrivial unipotent-radical element;
            // verification itself stays under a second
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            if (ms > 60000) {
                d = fam + " took " + std::to_string(ms) + " ms";
                return false;
            }
        }
        // Stairs word is the published D_chi^-72 D_gamma^100 at (4,0)
        CertificateRequest st = family_certificate_request("Stairs", {4, 0});
        if (!st.word || *st.word != DWord{{1, -72}, {2, 100}}) {
            d = "stairs word is not D2^-72 D3^100";
            return false;
        }
        return true;
    });

    criterion("7b. SV certificate for P(6) with the published direction (2N,1)",
              [](std::string& d) {
                  // The published cylinder data itself forces gamma = 2(N-2) alpha + beta in
                  // this direction, so W = span(X1,X2,X3) is two-dimensional and no
                  // unipotent-radical certificate exists there. Kept as stated; see
                  // the project notes. A corrected direction passes (criterion 7c).
                  Certificate cert = build_certificate(family_certificate_request("P", {3}));
                  d = cert.failure.empty() ? "unexpectedly nondegenerate" : cert.failure;
                  return cert.sv_ok &&
                         cert.sv.element == RatMat(3, 3, {Rat(1), Rat(0), Rat(0),  //
                                                          Rat(0), Rat(1), Rat(0),  //
                                                          Rat(4), Rat(0), Rat(1)});
              });

    criterion("7c. SV certificate for P(6) with a corrected third direction",
              [](std::string& d) {
                  CertificateRequest req = family_certificate_request("P", {3});
                  req.dirs[2] = {10, 1};
                  req.counts[2].clear();
                  req.word.reset();
                  req.run_pinching = false;
                  req.run_dfh = false;
                  Certificate cert = build_certificate(req);
                  if (!cert.failure.empty()) {
                      d = cert.failure;
                      return false;
                  }
                  d = "word " + dword_str(*cert.word);
                  return cert.sv_ok;
              });

    criterion("8. DFH density: stairs dim 36 at (4,0), (5,0), (4,1); genus-4 dim 18",
              [](std::string& d) {
                  for (auto [N, m] : std::vector<std::pair<int, int>>{{4, 0}, {5, 0}, {4, 1}}) {
                      int M = 4 + 2 * m;
                      HomologyModel hm(family_stairs(N, m));
                      CylinderDecomposition hd = decompose(hm, 1, 0), vd = decompose(hm, 0, 1);
                      RatMat mdelta = multitwist_action(hm, decompose(hm, 1, 1),
                                                        {Int(N + M - 1), Int(3)})
                                          .shadow;
                      RatMat mchi = multitwist_action(hm, decompose(hm, 1, -1),
                                                      {Int(N + M - 3), Int(5)})
                                        .shadow;
                      RatMat mgamma = multitwist_action(hm, decompose(hm, 1, 2),
                                                        {Int(2 * N + M + 4), Int(M)})
                                          .shadow;
                      RatMat malpha = multitwist_action(hm, decompose(hm, 1, -2),
                                                        {Int(m + 6), Int(N + m)})
                                          .shadow;
                      RatMat mv = multitwist_action(hm, vd,
                                                    {Int(6) * (N - 3) * M, Int(3) * M,
                                                     Int(2) * M, Int(6)})
                                      .shadow;
                      RatMat mh = multitwist_action(hm, hd,
                                                    {Int(6) * (M - 3) * N, Int(3) * N,
                                                     Int(2) * N, Int(6)})
                                      .shadow;
                      RatMat mh_pow = to_rat(mat_pow(to_int(mh), N + M + 2));
                      DensityDFH dfh = density_dfh({mchi, mgamma, malpha, mv, mh_pow}, mdelta);
                      if (dfh.dimension != 36 || !dfh.verdict) {
                          d = "stairs (" + std::to_string(N) + "," + std::to_string(m) +
                              ") dim " + std::to_string(dfh.dimension);
                          return false;
                      }
                  }
                  HomologyModel hm(family_genus4_h6());
                  HomologyAction a1 = affine_action_of_matrix(hm, mat2(1, 3, 0, 1));
                  HomologyAction a2 = affine_action_of_matrix(hm, mat2(1, 0, -1, 1));
                  int dim = algebra_dimension(std::vector<RatMat>{a1.shadow, a2.shadow});
                  if (dim != 18) {
                      d = "genus-4 algebra dim " + std::to_string(dim);
                      return false;
                  }
                  return true;
              });

    criterion("9a. O_{3,5} lattice stabilizer has index 48", [&](std::string& d) {
        if (o35.shadows.empty()) o35 = o35_pipeline();
        // published base change on the basis (Sigma_l, Sigma_m, Z_l, Z_m)
        IntMat t(4, 4, {Int(1), Int(1), Int(0), Int(0),  //
                        Int(0), Int(1), Int(0), Int(0),  //
                        Int(0), Int(0), Int(0), Int(1),  //
                        Int(0), Int(0), Int(1), Int(-7)});
        RatMat tinv = inverse(to_rat(t));
        std::vector<IntMat> hprime;
        for (const IntMat& m : o35.shadows) hprime.push_back(to_int(tinv * to_rat(m) * to_rat(t)));
        IntMat lambda(4, 4);
        lambda(0, 0) = 8;
        lambda(1, 1) = lambda(2, 2) = lambda(3, 3) = 1;
        LatticeStabilizer st = lattice_stabilizer(hprime, lambda);
        stab_gens_cache = st.stabilizer_gens;
        // The published value is 48. This pipeline computes 12 under every
        // matrix/base-change convention, and the companion mod-16 index comes
        // out 46080/4, consistently: one factor of 4 between the published
        // stabilizer and the full one.
        d = "computed index " + std::to_string(st.index) + " (published: 48)";
        return st.index == 48;
    });

    if (slow) {
        criterion("9b. mod-16 symplectic image has index 46080 [slow]", [&](std::string& d) {
            if (stab_gens_cache.empty()) {
                d = "no stabilizer generators";
                return false;
            }
            std::vector<IntMat> tilde;
            IntMat dscale = IntMat::identity(4);
            dscale(0, 0) = 8;
            RatMat dinv = inverse(to_rat(dscale));
            std::set<std::string> seen;
            for (const RatMat& g : stab_gens_cache) {
                IntMat m = to_int(dinv * g * to_rat(dscale));
                if (seen.insert(to_string(m)).second) tilde.push_back(std::move(m));
            }
            // scaled stabilizer lands in Sp(4,Z): every generator is integral
            // and preserves the standard form (checked inside modn_image_index)
            Int idx = modn_image_index(tilde, 16);
            d = "computed index " + idx.get_str() + " (published: 46080 = 4 * 11520)";
            return idx == 46080;
        });
    } else {
        std::cout << "SKIP  9b. mod-16 symplectic image (run with --slow)" << std::endl;
    }

    criterion("10. HLK invariants: P_7 -> (1,[2,2,2]), P_8 -> (0,[3,3,1])", [](std::string& d) {
        auto hlk_of = [](const Origami& o) {
            auto phi = anti_automorphism(o);
            check(phi.has_value(), errc::internal, "missing anti-automorphism");
            return hlk_invariant(o, *phi);
        };
        HLKInvariant p7 = hlk_of(family_p(7)), p8 = hlk_of(family_p(8));
        d = "P7 " + p7.str() + ", P8 " + p8.str();
        return p7 == HLKInvariant{1, {2, 2, 2}} && p8 == HLKInvariant{0, {3, 3, 1}};
    });

    criterion("11. property suites", [](std::string& d) {
        // symplecticity and palindromic char polys of shadow generators
        for (Origami o : {family_e5(), family_genus4_h6()}) {
            HomologyModel hm(o);
            VeechGroup vg = veech_group(o);
            IntMat omega0 = hm.omega_zero();
            std::vector<RatMat> shadows = shadow_group(hm, vg);
            for (const RatMat& s : shadows) {
                if (!(s.transpose() * to_rat(omega0) * s == to_rat(omega0))) {
                    d = "shadow not symplectic";
                    return false;
                }
                if (!char_poly(s).palindromic()) {
                    d = "shadow char poly not palindromic";
                    return false;
                }
            }
        }
        // area conservation over 20 random directions per catalog origami
        std::mt19937 rng(2024);
        for (Origami o : {family_o_prime(3, 5), family_e5(), family_genus4_h6(), family_p(7),
                          family_stairs(4, 0), family_okl(4, 3), family_lshape(3, 2),
                          family_table_one(TableFamily::F3n8, 1)}) {
            HomologyModel hm(o);
            int tried = 0;
            while (tried < 20) {
                long p = static_cast<long>(rng() % 13) - 6;
                long q = static_cast<long>(rng() % 13) - 6;
                if (p == 0 && q == 0) continue;
                ++tried;
                CylinderDecomposition dec = decompose(hm, p, q);
                long area = 0;
                for (const auto& c : dec.cyls)
                    area += static_cast<long>(c.circumference) * c.height;
                if (area != o.degree()) {
                    d = "area mismatch";
                    return false;
                }
            }
        }
        // (transvection - I)^2 = 0 on a sample of two-cylinder directions
        {
            HomologyModel hm(family_o_prime(3, 5));
            for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {1, -1}, {1, 3}}) {
                Transvection t = transvection_h0(hm, decompose(hm, p, q));
                RatMat dev = t.shadow;
                for (int i = 0; i < dev.rows(); ++i) dev(i, i) -= 1;
                if (!(dev * dev).is_zero()) {
                    d = "transvection deviation not square-zero";
                    return false;
                }
            }
        }
        // Nielsen-orbit invariance of stratum / reducedness / monodromy / HLK
        {
            Origami base = family_okl(3, 2);
            VeechGroup vg = veech_group(base);
            Stratum st = stratum(base);
            bool red = is_reduced(base);
            MonodromyClass mc = monodromy_class({base.h(), base.v()}, base.degree());
            bool has_anti = anti_automorphism(base).has_value();
            size_t limit = std::min<size_t>(vg.vertices.size(), 50);
            for (size_t i = 0; i < limit; ++i) {
                const Origami& v = vg.vertices[i];
                if (!(stratum(v) == st) || is_reduced(v) != red ||
                    monodromy_class({v.h(), v.v()}, v.degree()) != mc ||
                    anti_automorphism(v).has_value() != has_anti) {
                    d = "orbit invariant changed";
                    return false;
                }
            }
        }
        // (M_h^(0) - I)^2 = 0 for stairs at five parameter pairs
        for (auto [N, m] : std::vector<std::pair<int, int>>{{4, 0}, {5, 0}, {4, 1}, {6, 1},
                                                            {7, 2}}) {
            int M = 4 + 2 * m;
            HomologyModel hm(family_stairs(N, m));
            RatMat mh = multitwist_action(hm, decompose(hm, 1, 0),
                                          {Int(6) * (M - 3) * N, Int(3) * N, Int(2) * N,
                                           Int(6)})
                            .shadow;
            for (int i = 0; i < 6; ++i) mh(i, i) -= 1;
            if (!(mh * mh).is_zero()) {
                d = "stairs (M_h - I)^2 != 0";
                return false;
            }
        }
        // Omega(alpha, beta) = 2(K-N)(K+N) for OPrime, n = 1..4
        for (int n = 1; n <= 4; ++n) {
            int K = 3 * n, N = 5 * n;
            HomologyModel hm(family_o_prime(K, N));
            Transvection ta = transvection_h0(hm, decompose(hm, 1, 1));
            Transvection tb = transvection_h0(hm, decompose(hm, 1, -1));
            if (hm.pair(ta.x_h1, tb.x_h1) != Int(2) * (K - N) * (K + N)) {
                d = "Omega(alpha,beta) mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                  " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
