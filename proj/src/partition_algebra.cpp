#include "mpa/partition_algebra.hpp"

#include "mpa/combinatorics.hpp"
#include "mpa/errors.hpp"
#include "mpa/union_find.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace mpa {

SetPartitionDiagram SetPartitionDiagram::from_labels(int k, std::span<const int> labels) {
    if (k < 0 || labels.size() != static_cast<std::size_t>(2 * k)) throw MalformedDiagram("diagram needs 2k vertex labels");
    SetPartitionDiagram d;
    d.k_ = k;
    d.labels_.resize(labels.size());
    std::unordered_map<int, int> relabel;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto [it, fresh] = relabel.emplace(labels[v], static_cast<int>(relabel.size()));
        d.labels_[v] = it->second;
    }
    d.blocks_ = static_cast<int>(relabel.size());
    return d;
}

SetPartitionDiagram SetPartitionDiagram::from_blocks(int k, const std::vector<std::vector<int>>& blocks) {
    if (k < 0) throw MalformedDiagram("negative k");
    std::vector<int> labels(static_cast<std::size_t>(2 * k), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw MalformedDiagram("empty block");
        for (int v : blocks[b]) {
            if (v == 0 || v > k || v < -k) throw MalformedDiagram("vertex " + std::to_string(v) + " outside 1..k");
            const int idx = v > 0 ? v - 1 : k - v - 1;
            if (labels[static_cast<std::size_t>(idx)] != -1) throw MalformedDiagram("vertex " + std::to_string(v) + " in two blocks");
            labels[static_cast<std::size_t>(idx)] = static_cast<int>(b);
        }
    }
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] == -1) throw MalformedDiagram("vertex not covered by any block");
    }
    return from_labels(k, labels);
}

SetPartitionDiagram SetPartitionDiagram::identity(int k) {
    std::vector<int> labels(static_cast<std::size_t>(2 * k));
    for (int j = 0; j < k; ++j) labels[static_cast<std::size_t>(j)] = labels[static_cast<std::size_t>(k + j)] = j;
    return from_labels(k, labels);
}

std::vector<std::vector<int>> SetPartitionDiagram::vertex_blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (std::size_t v = 0; v < labels_.size(); ++v) out[static_cast<std::size_t>(labels_[v])].push_back(static_cast<int>(v));
    return out;
}

std::vector<std::vector<int>> SetPartitionDiagram::blocks() const {
    auto out = vertex_blocks();
    for (auto& b : out) {
        for (int& v : b) v = v < k_ ? v + 1 : -(v - k_ + 1);
    }
    return out;
}

std::string SetPartitionDiagram::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first_block = true;
    for (const auto& b : blocks()) {
        if (!first_block) os << ",";
        first_block = false;
        os << "{";
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) os << ",";
            if (b[i] > 0) os << b[i];
            else os << -b[i] << "'";
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

PAElement PAElement::basis_element(const SetPartitionDiagram& d, PABasis basis, const Poly& coeff) {
    PAElement e(d.k(), basis);
    e.add(d, coeff);
    return e;
}

Poly PAElement::coefficient(const SetPartitionDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Poly() : it->second;
}

void PAElement::add(const SetPartitionDiagram& d, const Poly& coeff) {
    if (d.k() != k_) throw InvalidArgument("diagram has k=" + std::to_string(d.k()) + ", element has k=" + std::to_string(k_));
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(d, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PAElement::check_compatible(const PAElement& rhs) const {
    if (rhs.k_ != k_) throw InvalidArgument("partition algebra elements with different k");
    if (rhs.basis_ != basis_) throw InvalidArgument("partition algebra elements in different bases");
}

PAElement& PAElement::operator+=(const PAElement& rhs) {
    check_compatible(rhs);
    for (const auto& [d, c] : rhs.terms_) add(d, c);
    return *this;
}

PAElement& PAElement::operator-=(const PAElement& rhs) {
    check_compatible(rhs);
    for (const auto& [d, c] : rhs.terms_) add(d, -c);
    return *this;
}

PAElement& PAElement::operator*=(const Poly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
}

std::string PAElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* sym = basis_ == PABasis::Orbit ? "x_" : "";
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << sym << d.to_string();
    }
    return os.str();
}

Composition compose_diagrams(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2) {
    if (d1.k() != d2.k()) throw InvalidArgument("compose_diagrams: different k");
    const int k = d1.k();
    // Layers: top row of d2 at [0,k), shared middle row at [k,2k), bottom row of d1 at [2k,3k).
    UnionFind uf(static_cast<std::size_t>(3 * k));
    auto link = [&](const SetPartitionDiagram& d, int offset) {
        std::vector<int> first(static_cast<std::size_t>(d.block_count()), -1);
        for (int v = 0; v < 2 * k; ++v) {
            const int node = offset + v;
            int& f = first[static_cast<std::size_t>(d.label(v))];
            if (f < 0) f = node;
            else uf.unite(static_cast<std::size_t>(f), static_cast<std::size_t>(node));
        }
    };
    link(d2, 0);
    link(d1, k);

    std::vector<int> labels(static_cast<std::size_t>(2 * k));
    std::vector<char> touches_outer(static_cast<std::size_t>(3 * k), 0);
    for (int v = 0; v < k; ++v) {
        const auto top = uf.find(static_cast<std::size_t>(v));
        const auto bot = uf.find(static_cast<std::size_t>(2 * k + v));
        labels[static_cast<std::size_t>(v)] = static_cast<int>(top);
        labels[static_cast<std::size_t>(k + v)] = static_cast<int>(bot);
        touches_outer[top] = touches_outer[bot] = 1;
    }
    int middle = 0;
    std::vector<char> counted(static_cast<std::size_t>(3 * k), 0);
    for (int v = k; v < 2 * k; ++v) {
        const auto r = uf.find(static_cast<std::size_t>(v));
        if (!touches_outer[r] && !counted[r]) {
            counted[r] = 1;
            ++middle;
        }
    }
    return {SetPartitionDiagram::from_labels(k, labels), middle};
}

PAElement multiply_diagram_basis(const PAElement& a, const PAElement& b) {
    if (a.basis() != PABasis::Diagram || b.basis() != PABasis::Diagram) {
        throw InvalidArgument("multiply_diagram_basis needs diagram-basis operands");
    }
    if (a.k() != b.k()) throw InvalidArgument("multiply_diagram_basis: different k");
    PAElement out(a.k(), PABasis::Diagram);
    for (const auto& [d1, c1] : a.terms()) {
        for (const auto& [d2, c2] : b.terms()) {
            const auto comp = compose_diagrams(d1, d2);
            out.add(comp.diagram, c1 * c2 * Poly::xi_power(static_cast<unsigned>(comp.middle_components)));
        }
    }
    return out;
}

std::vector<SetPartitionDiagram> enumerate_diagrams(int k) {
    std::vector<SetPartitionDiagram> out;
    for (const auto& rgs : enumerate_set_partitions(2 * k)) out.push_back(SetPartitionDiagram::from_labels(k, rgs));
    return out;
}

std::vector<SetPartitionDiagram> coarsenings(const SetPartitionDiagram& d) {
    std::vector<SetPartitionDiagram> out;
    std::vector<int> labels(d.labels().size());
    for (const auto& merge : enumerate_set_partitions(d.block_count())) {
        for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = merge[static_cast<std::size_t>(d.labels()[v])];
        out.push_back(SetPartitionDiagram::from_labels(d.k(), labels));
    }
    // The all-singletons merge comes last in RGS order; report d itself first.
    std::rotate(out.begin(), out.end() - 1, out.end());
    return out;
}

PAElement orbit_from_diagram(const PAElement& a) {
    if (a.basis() != PABasis::Diagram) throw InvalidArgument("orbit_from_diagram needs a diagram-basis element");
    PAElement out(a.k(), PABasis::Orbit);
    for (const auto& [d, c] : a.terms()) {
        for (const auto& dp : coarsenings(d)) out.add(dp, c);
    }
    return out;
}

PAElement diagram_from_orbit(const PAElement& a) {
    if (a.basis() != PABasis::Orbit) throw InvalidArgument("diagram_from_orbit needs an orbit-basis element");
    // Residual keyed finest first; expanding the finest diagram only adds strictly coarser terms.
    auto finer = [](const SetPartitionDiagram& x, const SetPartitionDiagram& y) {
        if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
        return x < y;
    };
    std::map<SetPartitionDiagram, Poly, decltype(finer)> residual(finer);
    for (const auto& [d, c] : a.terms()) residual.emplace(d, c);
    PAElement out(a.k(), PABasis::Diagram);
    while (!residual.empty()) {
        auto it = residual.begin();
        const SetPartitionDiagram d = it->first;
        const Poly c = it->second;
        out.add(d, c);
        for (const auto& dp : coarsenings(d)) {
            auto [jt, fresh] = residual.try_emplace(dp, -c);
            if (!fresh) {
                jt->second -= c;
                if (jt->second.is_zero()) residual.erase(jt);
            }
        }
    }
    return out;
}

namespace {

// Canonical restricted growth string of d restricted to vertices [from, from + k).
std::vector<int> row_partition(const SetPartitionDiagram& d, int from) {
    std::vector<int> out(static_cast<std::size_t>(d.k()));
    std::unordered_map<int, int> relabel;
    for (int v = 0; v < d.k(); ++v) {
        auto [it, fresh] = relabel.emplace(d.label(from + v), static_cast<int>(relabel.size()));
        out[static_cast<std::size_t>(v)] = it->second;
    }
    return out;
}

// Labels of blocks of d lying entirely in the row [from, from + k).
std::vector<int> one_row_blocks(const SetPartitionDiagram& d, int from) {
    std::vector<int> out;
    const int k = d.k();
    for (const auto& b : d.vertex_blocks()) {
        const bool inside = std::all_of(b.begin(), b.end(), [&](int v) { return v >= from && v < from + k; });
        if (inside) out.push_back(d.label(b.front()));
    }
    return out;
}

}  // namespace

bool matches_in_middle(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2) {
    if (d1.k() != d2.k()) throw InvalidArgument("matches_in_middle: different k");
    return row_partition(d1, 0) == row_partition(d2, d2.k());
}

PAElement orbit_product(const SetPartitionDiagram& d1, const SetPartitionDiagram& d2) {
    const int k = d1.k();
    PAElement out(k, PABasis::Orbit);
    if (!matches_in_middle(d1, d2)) return out;
    const auto comp = compose_diagrams(d1, d2);
    const SetPartitionDiagram& base = comp.diagram;

    // Blocks of the composite that come from top-only blocks of d2 and bottom-only blocks of d1.
    std::vector<int> tops, bottoms;
    for (int lab : one_row_blocks(d2, 0)) {
        for (int v = 0; v < k; ++v) {
            if (d2.label(v) == lab) {
                tops.push_back(base.label(v));
                break;
            }
        }
    }
    for (int lab : one_row_blocks(d1, k)) {
        for (int v = k; v < 2 * k; ++v) {
            if (d1.label(v) == lab) {
                bottoms.push_back(base.label(v));
                break;
            }
        }
    }

    // Partial matchings between `tops` and `bottoms`; each top block joins at most one bottom block.
    std::vector<int> merge(static_cast<std::size_t>(base.block_count()));
    for (int i = 0; i < base.block_count(); ++i) merge[static_cast<std::size_t>(i)] = i;
    std::vector<char> used(bottoms.size(), 0);
    std::vector<int> labels(static_cast<std::size_t>(2 * k));
    auto emit = [&] {
        for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = merge[static_cast<std::size_t>(base.labels()[v])];
        const auto d = SetPartitionDiagram::from_labels(k, labels);
        out.add(d, falling_factorial(Poly::xi_plus(Rational(-d.block_count())), static_cast<unsigned>(comp.middle_components)));
    };
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == tops.size()) {
            emit();
            return;
        }
        self(self, t + 1);
        for (std::size_t j = 0; j < bottoms.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            merge[static_cast<std::size_t>(tops[t])] = bottoms[j];
            self(self, t + 1);
            merge[static_cast<std::size_t>(tops[t])] = tops[t];
            used[j] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

PAElement multiply_orbit_basis(const PAElement& a, const PAElement& b) {
    if (a.basis() != PABasis::Orbit || b.basis() != PABasis::Orbit) {
        throw InvalidArgument("multiply_orbit_basis needs orbit-basis operands");
    }
    if (a.k() != b.k()) throw InvalidArgument("multiply_orbit_basis: different k");
    PAElement out(a.k(), PABasis::Orbit);
    for (const auto& [d1, c1] : a.terms()) {
        for (const auto& [d2, c2] : b.terms()) {
            const Poly c = c1 * c2;
            const PAElement prod = orbit_product(d1, d2);
            for (const auto& [d, p] : prod.terms()) out.add(d, c * p);
        }
    }
    return out;
}

SetPartitionDiagram involution_i(const SetPartitionDiagram& d) {
    const int k = d.k();
    std::vector<int> labels(static_cast<std::size_t>(2 * k));
    for (int v = 0; v < k; ++v) {
        labels[static_cast<std::size_t>(v)] = d.label(k + v);
        labels[static_cast<std::size_t>(k + v)] = d.label(v);
    }
    return SetPartitionDiagram::from_labels(k, labels);
}

PAElement involution_i(const PAElement& a) {
    PAElement out(a.k(), a.basis());
    for (const auto& [d, c] : a.terms()) out.add(involution_i(d), c);
    return out;
}

Rational alpha(const SetPartitionDiagram& d) {
    std::vector<unsigned> sizes(static_cast<std::size_t>(d.block_count()), 0);
    for (int v = d.k(); v < 2 * d.k(); ++v) ++sizes[static_cast<std::size_t>(d.label(v))];
    return Rational(multinomial(static_cast<unsigned>(d.k()), sizes.data(), sizes.size()));
}

Matrix phi_k_matrix(const PAElement& x, int n, std::size_t cap) {
    if (n < 1) throw InvalidArgument("phi_k_matrix: n must be positive");
    const PAElement orbit = x.basis() == PABasis::Orbit ? x : orbit_from_diagram(x);
    const int k = orbit.k();
    std::size_t dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= static_cast<std::size_t>(n);
        if (dim > cap) throw ResourceError("phi_k_matrix: dimension n^k exceeds cap " + std::to_string(cap));
    }
    Matrix m(dim, dim);
    const Rational at(n);
    for (const auto& [d, c] : orbit.terms()) {
        const int b = d.block_count();
        if (b > n) continue;
        const Rational coeff = c.eval(at);
        if (coeff.is_zero()) continue;
        // Injective assignments of index values to blocks.
        std::vector<int> value(static_cast<std::size_t>(b), -1);
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, int blk) -> void {
            if (blk == b) {
                std::size_t in = 0, out = 0;
                for (int v = 0; v < k; ++v) {
                    in = in * static_cast<std::size_t>(n) + static_cast<std::size_t>(value[static_cast<std::size_t>(d.label(v))]);
                    out = out * static_cast<std::size_t>(n) + static_cast<std::size_t>(value[static_cast<std::size_t>(d.label(k + v))]);
                }
                m(out, in) += coeff;
                return;
            }
            for (int val = 0; val < n; ++val) {
                if (taken[static_cast<std::size_t>(val)]) continue;
                taken[static_cast<std::size_t>(val)] = 1;
                value[static_cast<std::size_t>(blk)] = val;
                self(self, blk + 1);
                taken[static_cast<std::size_t>(val)] = 0;
            }
        };
        rec(rec, 0);
    }
    return m;
}

}  // namespace mpa
