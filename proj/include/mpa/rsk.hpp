#pragma once

#include "mpa/combinatorics.hpp"
#include "mpa/multiset_algebra.hpp"

#include <utility>
#include <vector>

namespace mpa {

/// Two-row array of multisets. Bottom entries use the symbols 1..s for 1'..s'.
struct MPBiword {
    std::vector<std::pair<Multiset, Multiset>> columns;  // (B^u, B^l)
    friend bool operator==(const MPBiword&, const MPBiword&) = default;
};

/// Blocks of d as columns, padded with (empty, empty) to length n, sorted by top then bottom in graded lex order.
/// Throws InvalidArgument when rank(d) > n.
MPBiword to_biword(const MultisetDiagram& d, int n);

struct RSKPair {
    MultisetTableau insertion;  // T, primed content
    MultisetTableau recording;  // S, unprimed content
    friend bool operator==(const RSKPair&, const RSKPair&) = default;
};

/// Row-inserts the bottom entries (an entry bumps the leftmost strictly greater one) and records tops.
RSKPair rsk(const MPBiword& bw);

/// Reverse bumping, removing the largest recording entry first and the rightmost among equals.
/// Empty columns are dropped. Throws InvalidArgument on mismatched shapes, non-semistandard input
/// or contents other than lambda.
MultisetDiagram inverse_rsk(const MultisetTableau& t, const MultisetTableau& s, const std::vector<int>& lambda);

/// Edge (I, J) becomes (J, I).
MultisetDiagram transpose_partition(const MultisetDiagram& d);

struct SymmetryReport {
    bool transpose_swaps;     // rsk(d^t) = (S, T)
    bool symmetric;           // d^t = d
    int fixed_blocks;         // columns with B^u = B^l, empty padding columns included
    int odd_columns;          // columns of odd length in the shape
    bool holds() const { return transpose_swaps && (!symmetric || fixed_blocks == odd_columns); }
};
SymmetryReport symmetry_check(const MultisetDiagram& d, int n);

}  // namespace mpa
