#pragma once

#include "mpa/partition_algebra.hpp"
#include "mpa/poly.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mpa {

using Vertex = std::vector<int>;

/// Weighted edge (I, J) between a top vertex I and a bottom vertex J of V_lambda.
struct Edge {
    Vertex top;
    Vertex bottom;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The vertex set V_lambda = {I : 0 <= I_j <= lambda_j}, indexed in lexicographic order.
class VertexSpace {
public:
    explicit VertexSpace(std::vector<int> lambda);

    const std::vector<int>& lambda() const noexcept { return lambda_; }
    std::size_t size() const noexcept { return size_; }
    /// Throws MalformedDiagram when a coordinate is outside [0, lambda_j].
    std::uint32_t index(std::span<const int> v) const;
    Vertex vertex(std::uint32_t idx) const;
    /// |I|, the coordinate sum.
    int norm(std::uint32_t idx) const;

private:
    std::vector<int> lambda_;
    std::size_t size_ = 1;
};

/// A class [Gamma] in B~_lambda: the sorted multiset of its non-zero edges.
///
/// Edges are encoded as index(I) * |V_lambda| + index(J), so ascending codes are
/// the lexicographic order on (I, J).
class MultisetDiagram {
public:
    MultisetDiagram() = default;
    /// Codes need not be sorted; zero-edge codes are dropped. No weight check.
    static MultisetDiagram from_codes(std::vector<int> lambda, std::vector<std::uint32_t> codes);

    const std::vector<int>& lambda() const noexcept { return lambda_; }
    const std::vector<std::uint32_t>& codes() const noexcept { return codes_; }
    std::size_t rank() const noexcept { return codes_.size(); }
    int size() const noexcept;  // |lambda|
    std::vector<Edge> edges() const;

    /// "{(0,1),(1,0),(1,1)}" when lambda has one part, "{((0,1),(1,1)),...}" otherwise.
    std::string to_string() const;

    friend bool operator==(const MultisetDiagram&, const MultisetDiagram&) = default;
    friend std::strong_ordering operator<=>(const MultisetDiagram& a, const MultisetDiagram& b) {
        if (auto c = a.lambda_ <=> b.lambda_; c != 0) return c;
        return a.codes_ <=> b.codes_;
    }

private:
    std::vector<int> lambda_;
    std::vector<std::uint32_t> codes_;
};

/// Drops zero edges and sorts. Throws MalformedDiagram when a vertex lies outside
/// V_lambda or the top or bottom weights do not sum to lambda.
MultisetDiagram canonicalize(const std::vector<int>& lambda, const std::vector<Edge>& raw_edges);

/// F[xi]-combination of classes in B~_lambda.
class MPElement {
public:
    using Terms = std::map<MultisetDiagram, Poly>;

    explicit MPElement(std::vector<int> lambda) : lambda_(std::move(lambda)) {}
    static MPElement basis_element(const MultisetDiagram& g, const Poly& coeff = Poly(1));

    const std::vector<int>& lambda() const noexcept { return lambda_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Poly coefficient(const MultisetDiagram& g) const;
    void add(const MultisetDiagram& g, const Poly& coeff);

    MPElement& operator+=(const MPElement& rhs);
    MPElement& operator-=(const MPElement& rhs);
    MPElement& operator*=(const Poly& s);
    friend MPElement operator+(MPElement a, const MPElement& b) { return a += b; }
    friend MPElement operator-(MPElement a, const MPElement& b) { return a -= b; }
    friend MPElement operator*(MPElement a, const Poly& s) { return a *= s; }
    friend bool operator==(const MPElement&, const MPElement&) = default;

    std::string to_string() const;

private:
    std::vector<int> lambda_;
    Terms terms_;
};

/// All classes of B~_lambda (multiset partitions of {1^l1..s^ls, 1'^l1..s'^ls}), ordered by code sequence.
std::vector<MultisetDiagram> enumerate_basis(const std::vector<int>& lambda);

/// A multiset of paths (I, L, J), stored as distinct vertex-index triples with multiplicities.
struct PathConfiguration {
    std::vector<std::pair<std::array<std::uint32_t, 3>, int>> paths;
    int n = 0;
    friend bool operator==(const PathConfiguration&, const PathConfiguration&) = default;
};

/// Configurations covering Gamma2 on top (edges (I, L)) and Gamma1 below (edges (L, J)),
/// both padded to n edges, grouped by the induced class Gamma_P.
std::map<MultisetDiagram, std::vector<PathConfiguration>> path_configurations(const MultisetDiagram& g1,
                                                                             const MultisetDiagram& g2, int n);

/// Coefficient of [Gamma] in [Gamma1] * [Gamma2].
Poly structure_poly(const MultisetDiagram& g1, const MultisetDiagram& g2, const MultisetDiagram& g);

/// [Gamma1] * [Gamma2] with every structure polynomial.
MPElement multiply_basis(const MultisetDiagram& g1, const MultisetDiagram& g2);
/// Bilinear extension of multiply_basis. Throws InvalidArgument on a lambda mismatch.
MPElement multiply(const MPElement& a, const MPElement& b);
/// Sum of the classes whose edges are all of the form (I, I).
MPElement identity(const std::vector<int>& lambda);

/// Canonical partition diagram d_Gamma in A_|lambda|, by consecutive interval allocation per colour.
SetPartitionDiagram canonical_partition_diagram(const MultisetDiagram& g);
/// The class of B~_lambda whose orbit contains d (inverse of the orbit bijection).
MultisetDiagram class_of_partition_diagram(const SetPartitionDiagram& d, const std::vector<int>& lambda);
/// The S_lambda x S_lambda orbit of d_Gamma, sorted.
std::vector<SetPartitionDiagram> orbit(const MultisetDiagram& g);

/// prod_i lambda_i! / prod_{j,i} b_ij!, where b_ij counts bottom vertices of colour i in block j.
/// For lambda = (k) this is k! / prod_j |B_j^l|!.
Rational alpha_lambda(const SetPartitionDiagram& d, const std::vector<int>& lambda);

/// Orbit-basis image (1/alpha) sum_{d in O} x_d, extended linearly.
PAElement embed(const MPElement& a);

/// Diagrams whose blocks meet each colour interval equally often on top and bottom.
std::vector<SetPartitionDiagram> enumerate_Y(const std::vector<int>& lambda);
/// sum_{d in Y_lambda} (1/alpha_d) x_d.
PAElement idempotent_e(const std::vector<int>& lambda);

/// Every edge has |I| = |J|.
bool is_balanced(const MultisetDiagram& g);
std::vector<MultisetDiagram> balanced_basis(const std::vector<int>& lambda);

/// Edge (I, J) becomes (J, I).
MultisetDiagram transpose(const MultisetDiagram& g);

}  // namespace mpa
