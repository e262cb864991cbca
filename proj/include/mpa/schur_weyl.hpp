#pragma once

#include "mpa/combinatorics.hpp"
#include "mpa/matrix.hpp"
#include "mpa/multiset_algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mpa {

/// An operator on F[M(n, lambda)]; entry (b, a) is the coefficient of 1_b in the image of 1_a.
struct OperatorMatrix {
    int n = 0;
    std::vector<int> lambda;
    std::vector<WeakCompositionMatrix> basis;  // row-major lexicographic
    Matrix entries;
};

/// The class of the orbit of (a, b): the edges (a_j, b_j) over all columns j.
MultisetDiagram orbit_of_pair(const WeakCompositionMatrix& a, const WeakCompositionMatrix& b);

/// Some (a, b) with orbit_of_pair(a, b) = g: edges in order, then zero columns.
/// Throws InvalidArgument when rank(g) > n.
std::pair<WeakCompositionMatrix, WeakCompositionMatrix> representative_pair(const MultisetDiagram& g, int n);

/// The 0/1 operator T_g: column a has ones at the rows b with orbit_of_pair(a, b) = g.
/// Throws InvalidArgument when rank(g) > n, ResourceError when dim M(n, lambda) > cap.
OperatorMatrix integral_operator(const MultisetDiagram& g, int n, std::size_t cap = kDefaultMatrixCap);

/// sum_g c_g(n) T_g; classes of rank above n contribute zero.
OperatorMatrix phi(const MPElement& a, int n, std::size_t cap = kDefaultMatrixCap);

/// #{b : orbit_of_pair(a, b) = g2 and orbit_of_pair(b, c) = g1} for the given (a, c).
std::int64_t count_intermediates(const MultisetDiagram& g1, const MultisetDiagram& g2,
                                 const WeakCompositionMatrix& a, const WeakCompositionMatrix& c);

/// count_intermediates at representative_pair(g, n). Throws InvalidArgument when rank(g) > n.
std::int64_t brute_force_structure_count(const MultisetDiagram& g1, const MultisetDiagram& g2,
                                         const MultisetDiagram& g, int n);

/// For a fixed target g, the counts of every (g1, g2) at once, keyed (g1, g2). Pairs with count 0 are absent.
std::map<std::pair<MultisetDiagram, MultisetDiagram>, std::int64_t> structure_counts(const MultisetDiagram& g, int n);

/// Number of S_n-orbits on M(n, lambda)^2, by hashing each pair to its class.
std::size_t centralizer_dimension(int n, const std::vector<int>& lambda);

enum class GeneratorSet { SymmetricGroup, Monomial };

/// SymmetricGroup: commutes with the column permutations (1 2) and (1 2 ... n).
/// Monomial: additionally preserves the column-sum profile, which is commuting with diag(x, 1, ..., 1) and its conjugates.
bool commutant_check(const OperatorMatrix& m, GeneratorSet generators);

/// Dimension of the commutant of the S_n action on F[M(n, lambda)], by solving X P = P X over Q.
std::size_t commutant_dimension(int n, const std::vector<int>& lambda, std::size_t cap = 400);

/// Rank of the span of the T_g over all g with rank(g) <= n.
std::size_t integral_operator_span_rank(int n, const std::vector<int>& lambda, std::size_t cap = kDefaultMatrixCap);

}  // namespace mpa
