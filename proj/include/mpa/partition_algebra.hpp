#pragma once

#include "mpa/matrix.hpp"
#include "mpa/poly.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mpa {

/// A set partition of {1..k, 1'..k'}.
///
/// Vertices are indexed 0..k-1 for 1..k and k..2k-1 for 1'..k'. The diagram is
/// stored as a restricted growth string over that vertex order, which is the
/// same as listing blocks by their minimal vertex with unprimed before primed.
class SetPartitionDiagram {
public:
    SetPartitionDiagram() = default;

    /// Any labelling of the 2k vertices; equal labels mean the same block.
    static SetPartitionDiagram from_labels(int k, std::span<const int> labels);
    /// Blocks in signed notation: j > 0 is the top vertex j, -j is j'.
    /// Throws MalformedDiagram unless the blocks partition all 2k vertices.
    static SetPartitionDiagram from_blocks(int k, const std::vector<std::vector<int>>& blocks);
    /// {{1,1'},...,{k,k'}}.
    static SetPartitionDiagram identity(int k);

    int k() const noexcept { return k_; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    int label(int vertex) const { return labels_[static_cast<std::size_t>(vertex)]; }
    int block_count() const noexcept { return blocks_; }

    /// Blocks in signed notation, in canonical order.
    std::vector<std::vector<int>> blocks() const;
    /// Blocks as lists of vertex indices, in canonical order.
    std::vector<std::vector<int>> vertex_blocks() const;

    /// "{{1,2,1'},{3,5},...}".
    std::string to_string() const;

    friend bool operator==(const SetPartitionDiagram&, const SetPartitionDiagram&) = default;
    friend std::strong_ordering operator<=>(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.labels_ <=> b.labels_;
    }

private:
    int k_ = 0;
    int blocks_ = 0;
    std::vector<int> labels_;
};

enum class PABasis { Diagram, Orbit };

/// Finite F[xi]-combination of diagrams of a fixed k, in the diagram or orbit basis.
class PAElement {
public:
    using Terms = std::map<SetPartitionDiagram, Poly>;

    PAElement(int k, PABasis basis) : k_(k), basis_(basis) {}
    static PAElement basis_element(const SetPartitionDiagram& d, PABasis basis, const Poly& coeff = Poly(1));

    int k() const noexcept { return k_; }
    PABasis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Poly coefficient(const SetPartitionDiagram& d) const;

    /// Adds coeff * d, dropping the term if it cancels.
    void add(const SetPartitionDiagram& d, const Poly& coeff);

    PAElement& operator+=(const PAElement& rhs);
    PAElement& operator-=(const PAElement& rhs);
    PAElement& operator*=(const Poly& s);
    friend PAElement operator+(PAElement a, const PAElement& b) { return a += b; }
    friend PAElement operator-(PAElement a, const PAElement& b) { return a -= b; }
    friend PAElement operator*(PAElement a, const Poly& s) { return a *= s; }
    friend bool operator==(const PAElement&, const PAElement&) = default;

    std::string to_string() const;

private:
    void check_compatible(const PAElement& rhs) const;

    int k_;
    PABasis basis_;
    Terms terms_;
};

struct Composition {
    SetPartitionDiagram diagram;
    int middle_components = 0;
};

/// d1 o d2 with d2 stacked on top of d1, plus the number of components left in the middle row.
Composition compose_diagrams(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2);

/// d1 d2 = xi^l (d1 o d2), extended bilinearly. Both operands must be in the diagram basis.
PAElement multiply_diagram_basis(const PAElement& a, const PAElement& b);

/// All diagrams of A_k, in canonical label order.
std::vector<SetPartitionDiagram> enumerate_diagrams(int k);

/// Every d' coarser than or equal to d, starting with d itself.
std::vector<SetPartitionDiagram> coarsenings(const SetPartitionDiagram& d);

/// Diagram basis to orbit basis: d = sum of x_{d'} over coarsenings d' of d.
PAElement orbit_from_diagram(const PAElement& a);
/// Orbit basis to diagram basis by back-substitution, finest diagrams first.
PAElement diagram_from_orbit(const PAElement& a);

/// Whether the top row partition of d1 equals the bottom row partition of d2.
bool matches_in_middle(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2);

/// x_{d1} x_{d2} in the orbit basis.
PAElement orbit_product(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2);
/// Bilinear extension of orbit_product. Both operands must be in the orbit basis.
PAElement multiply_orbit_basis(const PAElement& a, const PAElement& b);

/// Exchanges j and j' for every j.
SetPartitionDiagram involution_i(const SetPartitionDiagram& d);
/// Termwise involution; the basis tag is preserved.
PAElement involution_i(const PAElement& a);

/// k! / prod_j |B_j^l|!.
Rational alpha(const SetPartitionDiagram& d);

/// Number of rows of phi_k_matrix refused by default.
inline constexpr std::size_t kDefaultMatrixCap = 20000;

/// Matrix of the action of `x` on (F^n)^{tensor k}, xi evaluated at n.
///
/// Entry (out, in) of x_d is 1 iff the combined index tuple (in, out) has
/// exactly the equality pattern of d. Tuples are ordered lexicographically.
/// Diagram-basis input is converted to the orbit basis first.
Matrix phi_k_matrix(const PAElement& x, int n, std::size_t cap = kDefaultMatrixCap);

}  // namespace mpa
