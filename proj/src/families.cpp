#include "origamikz/families.hpp"

#include <map>

namespace origamikz {

namespace {

Perm perm_from_map(int n, const std::vector<std::pair<int, int>>& moves) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    for (auto [a, b] : moves) img[a - 1] = b - 1;
    return Perm(std::move(img));
}

}  // namespace

Origami family_o_prime(int k, int n) {
    check(k >= 3 && n >= 3, errc::bad_params, "OPrime needs K >= 3 and N >= 3");
    int d = k + n;
    std::vector<std::pair<int, int>> hm, vm;
    hm.push_back({k - 1, k});
    hm.push_back({k, k - 1});
    for (int i = k + 1; i <= d; ++i) hm.push_back({i, i == d ? k + 1 : i + 1});
    // v = (k+1, k-1, k-2, ..., 1)(k+2, k)
    vm.push_back({k + 1, k - 1});
    for (int i = k - 1; i >= 2; --i) vm.push_back({i, i - 1});
    vm.push_back({1, k + 1});
    vm.push_back({k + 2, k});
    vm.push_back({k, k + 2});
    return Origami(perm_from_map(d, hm), perm_from_map(d, vm));
}

Origami family_p(int n) {
    check(n >= 4, errc::bad_params, "P needs N >= 4");
    int d = n + 1;  // row of n squares plus one stacked on square 1
    std::vector<std::pair<int, int>> hm, vm;
    for (int i = 1; i <= n; ++i) hm.push_back({i, i == n ? 1 : i + 1});
    vm.push_back({1, n + 1});
    vm.push_back({n + 1, 2});
    vm.push_back({2, 1});
    vm.push_back({3, 4});
    for (int j = 4; j <= n - 1; ++j) vm.push_back({j, j + 1});
    vm.push_back({n, 3});
    return Origami(perm_from_map(d, hm), perm_from_map(d, vm));
}

Origami family_stairs(int n, int m) {
    check(n >= 4 && m >= 0, errc::bad_params, "Stairs needs N >= 4 and m >= 0");
    int M = 4 + 2 * m;
    int d = n + M + 2;
    std::vector<std::pair<int, int>> hm, vm;
    for (int i = 1; i <= n; ++i) hm.push_back({i, i == n ? 1 : i + 1});
    hm.push_back({n + 1, n + 2});
    hm.push_back({n + 2, n + 3});
    hm.push_back({n + 3, n + 1});
    hm.push_back({n + 4, n + 5});
    hm.push_back({n + 5, n + 4});
    // tower column above square 1: (1, n+1, n+4, n+6, ..., n+M+2)
    vm.push_back({1, n + 1});
    vm.push_back({n + 1, n + 4});
    int prev = n + 4;
    for (int t = n + 6; t <= n + M + 2; ++t) {
        vm.push_back({prev, t});
        prev = t;
    }
    vm.push_back({prev, 1});
    vm.push_back({2, n + 2});
    vm.push_back({n + 2, n + 5});
    vm.push_back({n + 5, 2});
    vm.push_back({3, n + 3});
    vm.push_back({n + 3, 3});
    return Origami(perm_from_map(d, hm), perm_from_map(d, vm));
}

Origami family_e5() {
    return Origami(parse_cycles("(1,2)(4,5)", 5), parse_cycles("(2,4,3)", 5));
}

Origami family_okl(int k, int l) {
    check(k >= 2 && l >= 2, errc::bad_params, "OKL needs k, l >= 2");
    int d = k + l;
    std::vector<std::pair<int, int>> hm;
    for (int i = 1; i <= k; ++i) hm.push_back({i, i == k ? 1 : i + 1});
    for (int i = k + 1; i <= d; ++i) hm.push_back({i, i == d ? k + 1 : i + 1});
    return Origami(perm_from_map(d, hm), perm_from_map(d, {{k, k + 1}, {k + 1, k}}));
}

Origami family_lshape(int a, int b) {
    check(a >= 2 && b >= 2, errc::bad_params, "LShape needs a, b >= 2");
    int d = a + b - 1;
    std::vector<std::pair<int, int>> hm, vm;
    for (int i = 1; i <= a; ++i) hm.push_back({i, i == a ? 1 : i + 1});
    vm.push_back({1, a + 1});
    for (int j = a + 1; j < d; ++j) vm.push_back({j, j + 1});
    vm.push_back({d, 1});
    return Origami(perm_from_map(d, hm), perm_from_map(d, vm));
}

Origami family_genus4_h6() {
    return Origami(parse_cycles("(2,3,4)(5,7,6)", 7), parse_cycles("(1,2,3,5,4,6,7)", 7));
}

namespace {

struct TableShape {
    int h1, h2, v3;
};

TableShape table_shape(TableFamily fam, int n) {
    switch (fam) {
        case TableFamily::F3n8: return {1, 2, 3 * n};
        case TableFamily::F3n10: return {1, 3, 3 * n};
        case TableFamily::F3n12: return {1, 4, 3 * n};
        case TableFamily::F6n13: return {2, 4, 6 * n};
        // the printed table says V3 = 6n, but the family's square count
        // 6n+14 and its direction data need V3 = 6n+3 (as in the 6n+18
        // and 6n+22 rows)
        case TableFamily::F6n14: return {2, 3, 6 * n + 3};
        case TableFamily::F6n17: return {2, 6, 6 * n};
        case TableFamily::F6n18: return {2, 5, 6 * n + 3};
        case TableFamily::F6n21: return {2, 8, 6 * n};
        case TableFamily::F6n22: return {2, 7, 6 * n + 3};
    }
    fail(errc::bad_params, "unknown table family");
}

}  // namespace

int table_family_degree(TableFamily fam, int n) {
    TableShape s = table_shape(fam, n);
    return s.h1 + (1 + s.v3 + 2) + 2 * s.h2;
}

Origami family_table_one(TableFamily fam, int n) {
    check(n >= 1, errc::bad_params, "table families need n >= 1");
    TableShape s = table_shape(fam, n);
    int w = 1 + s.v3 + 2;        // main row width
    int col0 = w;                // column squares are w+1 .. w+h1, bottom to top
    int blk0 = w + s.h1;         // block squares: row k (top to bottom), cols j=1,2:
                                 //   blk0 + 2*(k-1) + j
    int d = blk0 + 2 * s.h2;
    std::vector<std::pair<int, int>> hm, vm;
    for (int i = 1; i <= w; ++i) hm.push_back({i, i == w ? 1 : i + 1});
    for (int k = 1; k <= s.h2; ++k) {
        int b1 = blk0 + 2 * (k - 1) + 1, b2 = b1 + 1;
        hm.push_back({b1, b2});
        hm.push_back({b2, b1});
    }
    // column over square 1
    vm.push_back({1, col0 + 1});
    for (int j = 1; j < s.h1; ++j) vm.push_back({col0 + j, col0 + j + 1});
    vm.push_back({col0 + s.h1, 1});
    // hanging block under row squares 1+v3+1 and 1+v3+2
    for (int j = 1; j <= 2; ++j) {
        int top = 1 + s.v3 + j;  // row square above the block column
        vm.push_back({blk0 + j, top});
        for (int k = 2; k <= s.h2; ++k)
            vm.push_back({blk0 + 2 * (k - 1) + j, blk0 + 2 * (k - 2) + j});
        vm.push_back({top, blk0 + 2 * (s.h2 - 1) + j});
    }
    return Origami(perm_from_map(d, hm), perm_from_map(d, vm));
}

Origami make_family(const std::string& name, const std::vector<long>& params) {
    auto need = [&](size_t n) {
        check(params.size() == n, errc::bad_params,
              "family " + name + " takes " + std::to_string(n) + " parameter(s)");
    };
    static const std::map<std::string, TableFamily> table = {
        {"F3n8", TableFamily::F3n8},   {"F3n10", TableFamily::F3n10},
        {"F3n12", TableFamily::F3n12}, {"F6n13", TableFamily::F6n13},
        {"F6n14", TableFamily::F6n14}, {"F6n17", TableFamily::F6n17},
        {"F6n18", TableFamily::F6n18}, {"F6n21", TableFamily::F6n21},
        {"F6n22", TableFamily::F6n22},
    };
    if (name == "OPrime") {
        need(2);
        return family_o_prime(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (name == "P") {
        need(1);
        return family_p(static_cast<int>(params[0]));
    }
    if (name == "Stairs") {
        need(2);
        return family_stairs(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (name == "E5") {
        need(0);
        return family_e5();
    }
    if (name == "OKL") {
        need(2);
        return family_okl(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (name == "LShape") {
        need(2);
        return family_lshape(static_cast<int>(params[0]), static_cast<int>(params[1]));
    }
    if (name == "Genus4H6") {
        need(0);
        return family_genus4_h6();
    }
    if (auto it = table.find(name); it != table.end()) {
        need(1);
        return family_table_one(it->second, static_cast<int>(params[0]));
    }
    fail(errc::bad_params, "unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
    return {"OPrime", "P",     "Stairs", "E5",    "OKL",   "LShape", "Genus4H6", "F3n8",
            "F3n10",  "F3n12", "F6n13",  "F6n14", "F6n17", "F6n18",  "F6n21",    "F6n22"};
}

}  // namespace origamikz
