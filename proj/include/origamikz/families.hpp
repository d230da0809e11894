#pragma once

#include <string>
#include <vector>

#include "origamikz/origami.hpp"

namespace origamikz {

// Catalog of the origami families this project studies.

// Staircase with a K-high column and an N-wide row; lives in H^odd(4).
Origami family_o_prime(int k, int n);

// Row of N squares with one square stacked on the first; lives in H^hyp(4).
// Degree N+1.
Origami family_p(int n);

// Stairs origami O_{N,M} with M = 4+2m; genus 4, H(6). Degree N+M+2.
Origami family_stairs(int n, int m);

// Degree-5 Prym example in H^odd(4).
Origami family_e5();

// H(1,1) family: h = (1..k)(k+1..k+l), v = (k,k+1).
Origami family_okl(int k, int l);

// L-shaped H(2) origami: a-wide arm, b-high arm, degree a+b-1.
Origami family_lshape(int a, int b);

// Degree-7 genus-4 origami in H(6) with non-dense shadow group.
Origami family_genus4_h6();

// The nine one-parameter staircase prototypes (row + column + hanging block).
enum class TableFamily { F3n8, F3n10, F3n12, F6n13, F6n14, F6n17, F6n18, F6n21, F6n22 };

Origami family_table_one(TableFamily fam, int n);

// Number of squares of family_table_one(fam, n).
int table_family_degree(TableFamily fam, int n);

// Dispatcher used by the CLI: name in {"OPrime","P","Stairs","E5","OKL",
// "LShape","Genus4H6","F3n8",...,"F6n22"}.
Origami make_family(const std::string& name, const std::vector<long>& params);

std::vector<std::string> family_names();

}  // namespace origamikz
