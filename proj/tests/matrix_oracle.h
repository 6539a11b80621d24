#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "mutclass/diagram.h"

namespace mutclass::testing {

using Matrix = std::vector<std::vector<std::int64_t>>;

Diagram make_diagram(int n, std::initializer_list<Edge> edges);

// Exchange-matrix mutation at k, written directly from the matrix formula.
Matrix matrix_mutate(const Matrix& b, int k);

// i->j iff b[i][j] > 0, with weight b[i][j] * -b[j][i].
Diagram diagram_of(const Matrix& b);

// A skew-symmetrizable matrix whose diagram is d, found by searching factor
// pairs of the weights. None when d admits no such matrix.
std::optional<Matrix> realize(const Diagram& d);

// Random skew-symmetrizable matrix with symmetrizer entries in {1, 2}.
Matrix random_skew_symmetrizable(std::mt19937_64& rng, int n, double density, int max_entry);

bool brute_isomorphic(const Diagram& a, const Diagram& b);

// Random diagram on n vertices with random orientation; may be disconnected.
Diagram random_simply_laced(std::mt19937_64& rng, int n, double density);

}  // namespace mutclass::testing
