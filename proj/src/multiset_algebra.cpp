#include "mpa/multiset_algebra.hpp"

#include "mpa/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace mpa {

VertexSpace::VertexSpace(std::vector<int> lambda) : lambda_(std::move(lambda)) {
    for (int l : lambda_) {
        if (l < 0) throw InvalidArgument("lambda entries must be non-negative");
        size_ *= static_cast<std::size_t>(l + 1);
    }
}

std::uint32_t VertexSpace::index(std::span<const int> v) const {
    if (v.size() != lambda_.size()) throw MalformedDiagram("vertex has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(lambda_.size()));
    std::size_t idx = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < 0 || v[j] > lambda_[j]) throw MalformedDiagram("vertex coordinate outside [0, lambda_j]");
        idx = idx * static_cast<std::size_t>(lambda_[j] + 1) + static_cast<std::size_t>(v[j]);
    }
    return static_cast<std::uint32_t>(idx);
}

Vertex VertexSpace::vertex(std::uint32_t idx) const {
    Vertex v(lambda_.size());
    for (std::size_t j = lambda_.size(); j-- > 0;) {
        const auto radix = static_cast<std::uint32_t>(lambda_[j] + 1);
        v[j] = static_cast<int>(idx % radix);
        idx /= radix;
    }
    return v;
}

int VertexSpace::norm(std::uint32_t idx) const {
    const Vertex v = vertex(idx);
    return std::accumulate(v.begin(), v.end(), 0);
}

MultisetDiagram MultisetDiagram::from_codes(std::vector<int> lambda, std::vector<std::uint32_t> codes) {
    MultisetDiagram g;
    g.lambda_ = std::move(lambda);
    codes.erase(std::remove(codes.begin(), codes.end(), 0u), codes.end());
    std::sort(codes.begin(), codes.end());
    g.codes_ = std::move(codes);
    return g;
}

int MultisetDiagram::size() const noexcept { return std::accumulate(lambda_.begin(), lambda_.end(), 0); }

std::vector<Edge> MultisetDiagram::edges() const {
    const VertexSpace vs(lambda_);
    const auto n = static_cast<std::uint32_t>(vs.size());
    std::vector<Edge> out;
    out.reserve(codes_.size());
    for (auto c : codes_) out.push_back({vs.vertex(c / n), vs.vertex(c % n)});
    return out;
}

namespace {

std::string vertex_string(const Vertex& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

std::string MultisetDiagram::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& e : edges()) {
        if (!first) s += ",";
        first = false;
        if (lambda_.size() == 1) s += "(" + std::to_string(e.top[0]) + "," + std::to_string(e.bottom[0]) + ")";
        else s += "(" + vertex_string(e.top) + "," + vertex_string(e.bottom) + ")";
    }
    return s + "}";
}

MultisetDiagram canonicalize(const std::vector<int>& lambda, const std::vector<Edge>& raw_edges) {
    const VertexSpace vs(lambda);
    const auto n = static_cast<std::uint32_t>(vs.size());
    std::vector<int> top(lambda.size(), 0), bottom(lambda.size(), 0);
    std::vector<std::uint32_t> codes;
    for (const auto& e : raw_edges) {
        const auto i = vs.index(e.top);
        const auto j = vs.index(e.bottom);
        for (std::size_t c = 0; c < lambda.size(); ++c) {
            top[c] += e.top[c];
            bottom[c] += e.bottom[c];
        }
        codes.push_back(i * n + j);
    }
    if (top != lambda) throw MalformedDiagram("top weights do not sum to lambda");
    if (bottom != lambda) throw MalformedDiagram("bottom weights do not sum to lambda");
    return MultisetDiagram::from_codes(lambda, std::move(codes));
}

MPElement MPElement::basis_element(const MultisetDiagram& g, const Poly& coeff) {
    MPElement e(g.lambda());
    e.add(g, coeff);
    return e;
}

Poly MPElement::coefficient(const MultisetDiagram& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Poly() : it->second;
}

void MPElement::add(const MultisetDiagram& g, const Poly& coeff) {
    if (g.lambda() != lambda_) throw InvalidArgument("diagram and element have different lambda");
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(g, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPElement& MPElement::operator+=(const MPElement& rhs) {
    if (rhs.lambda_ != lambda_) throw InvalidArgument("elements with different lambda");
    for (const auto& [g, c] : rhs.terms_) add(g, c);
    return *this;
}

MPElement& MPElement::operator-=(const MPElement& rhs) {
    if (rhs.lambda_ != lambda_) throw InvalidArgument("elements with different lambda");
    for (const auto& [g, c] : rhs.terms_) add(g, -c);
    return *this;
}

MPElement& MPElement::operator*=(const Poly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
}

std::string MPElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << g.to_string();
    }
    return os.str();
}

std::vector<MultisetDiagram> enumerate_basis(const std::vector<int>& lambda) {
    const VertexSpace vs(lambda);
    const std::size_t s = lambda.size();
    const auto nv = static_cast<std::uint32_t>(vs.size());
    // Every non-zero edge with its weight vector (I, J) laid out as 2s coordinates.
    std::vector<std::uint32_t> codes;
    std::vector<std::vector<int>> weights;
    for (std::uint32_t c = 1; c < nv * nv; ++c) {
        const Vertex i = vs.vertex(c / nv), j = vs.vertex(c % nv);
        std::vector<int> w(i);
        w.insert(w.end(), j.begin(), j.end());
        codes.push_back(c);
        weights.push_back(std::move(w));
    }
    std::vector<int> remaining(lambda);
    remaining.insert(remaining.end(), lambda.begin(), lambda.end());
    int left = 2 * std::accumulate(lambda.begin(), lambda.end(), 0);

    std::vector<MultisetDiagram> out;
    std::vector<std::uint32_t> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (left == 0) {
            out.push_back(MultisetDiagram::from_codes(lambda, chosen));
            return;
        }
        for (std::size_t e = from; e < codes.size(); ++e) {
            const auto& w = weights[e];
            bool fits = true;
            for (std::size_t t = 0; t < 2 * s && fits; ++t) fits = w[t] <= remaining[t];
            if (!fits) continue;
            int sz = 0;
            for (std::size_t t = 0; t < 2 * s; ++t) {
                remaining[t] -= w[t];
                sz += w[t];
            }
            left -= sz;
            chosen.push_back(codes[e]);
            self(self, e);
            chosen.pop_back();
            left += sz;
            for (std::size_t t = 0; t < 2 * s; ++t) remaining[t] += w[t];
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

struct Path {
    std::uint32_t i, l, j;
    int count;
};

// Calls visit(paths) for every configuration covering g2 on top and g1 below, padded to n edges.
template <class Visit>
void for_each_configuration(const MultisetDiagram& g1, const MultisetDiagram& g2, int n, Visit&& visit) {
    if (g1.lambda() != g2.lambda()) throw InvalidArgument("diagrams with different lambda");
    if (n < static_cast<int>(g1.rank()) || n < static_cast<int>(g2.rank())) {
        throw InvalidArgument("padding length below diagram rank");
    }
    const VertexSpace vs(g1.lambda());
    const auto nv = static_cast<std::uint32_t>(vs.size());

    // For each middle vertex L: the Gamma2 edges (I, L) and Gamma1 edges (L, J), with multiplicities.
    std::map<std::uint32_t, std::pair<std::vector<std::pair<std::uint32_t, int>>, std::vector<std::pair<std::uint32_t, int>>>> mid;
    auto tally = [](std::vector<std::pair<std::uint32_t, int>>& v, std::uint32_t x, int m) {
        if (m == 0) return;
        if (!v.empty() && v.back().first == x) v.back().second += m;
        else v.emplace_back(x, m);
    };
    tally(mid[0].first, 0, n - static_cast<int>(g2.rank()));
    tally(mid[0].second, 0, n - static_cast<int>(g1.rank()));
    for (auto c : g2.codes()) tally(mid[c % nv].first, c / nv, 1);
    for (auto c : g1.codes()) tally(mid[c / nv].second, c % nv, 1);

    // Contingency tables per middle vertex.
    std::vector<std::vector<std::vector<Path>>> tables;
    for (auto& [l, rc] : mid) {
        auto& [rows, cols] = rc;
        std::sort(rows.begin(), rows.end());  // codes for Gamma2 are sorted by (I, L), not by I within L
        std::vector<std::pair<std::uint32_t, int>> merged;
        for (auto& r : rows) tally(merged, r.first, r.second);
        rows = std::move(merged);
        int rs = 0, cs = 0;
        for (auto& r : rows) rs += r.second;
        for (auto& c : cols) cs += c.second;
        if (rs != cs) return;
        if (rs == 0) continue;
        std::vector<std::vector<Path>> found;
        std::vector<int> col_left(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) col_left[c] = cols[c].second;
        std::vector<Path> cur;
        auto fill = [&](auto&& self, std::size_t r, std::size_t c, int row_left) -> void {
            if (r == rows.size()) {
                found.push_back(cur);
                return;
            }
            if (c + 1 == cols.size()) {
                // Last column takes whatever the row still needs.
                if (row_left > col_left[c]) return;
                if (row_left > 0) {
                    col_left[c] -= row_left;
                    cur.push_back({rows[r].first, l, cols[c].first, row_left});
                }
                const int next = r + 1 < rows.size() ? rows[r + 1].second : 0;
                self(self, r + 1, 0, next);
                if (row_left > 0) {
                    cur.pop_back();
                    col_left[c] += row_left;
                }
                return;
            }
            const int top = std::min(row_left, col_left[c]);
            for (int v = 0; v <= top; ++v) {
                if (v > 0) {
                    col_left[c] -= v;
                    cur.push_back({rows[r].first, l, cols[c].first, v});
                }
                self(self, r, c + 1, row_left - v);
                if (v > 0) {
                    cur.pop_back();
                    col_left[c] += v;
                }
            }
        };
        fill(fill, 0, 0, rows.front().second);
        if (found.empty()) return;
        tables.push_back(std::move(found));
    }

    std::vector<Path> all;
    auto product = [&](auto&& self, std::size_t t) -> void {
        if (t == tables.size()) {
            visit(std::as_const(all));
            return;
        }
        for (const auto& tab : tables[t]) {
            const std::size_t mark = all.size();
            all.insert(all.end(), tab.begin(), tab.end());
            self(self, t + 1);
            all.resize(mark);
        }
    };
    product(product, 0);
}

MultisetDiagram induced_class(const std::vector<int>& lambda, std::uint32_t nv, const std::vector<Path>& paths) {
    std::vector<std::uint32_t> codes;
    for (const auto& p : paths) codes.insert(codes.end(), static_cast<std::size_t>(p.count), p.i * nv + p.j);
    return MultisetDiagram::from_codes(lambda, std::move(codes));
}

// K_P (xi - rank Gamma_P)_m for one configuration.
Poly configuration_term(const std::vector<Path>& paths, std::size_t rank) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<unsigned>> by_edge;
    BigInt denom = 1;
    int loops = 0;
    for (const auto& p : paths) {
        if (p.i == 0 && p.j == 0) {
            if (p.l != 0) {
                denom *= factorial(static_cast<unsigned>(p.count));
                loops += p.count;
            }
            continue;
        }
        by_edge[{p.i, p.j}].push_back(static_cast<unsigned>(p.count));
    }
    BigInt num = 1;
    for (const auto& [e, parts] : by_edge) {
        const unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
        num *= multinomial(total, parts.data(), parts.size());
    }
    return falling_factorial(Poly::xi_plus(Rational(-static_cast<long>(rank))), static_cast<unsigned>(loops)) * Rational(num, denom);
}

}  // namespace

std::map<MultisetDiagram, std::vector<PathConfiguration>> path_configurations(const MultisetDiagram& g1,
                                                                             const MultisetDiagram& g2, int n) {
    std::map<MultisetDiagram, std::vector<PathConfiguration>> out;
    const auto nv = static_cast<std::uint32_t>(VertexSpace(g1.lambda()).size());
    for_each_configuration(g1, g2, n, [&](const std::vector<Path>& paths) {
        PathConfiguration pc;
        pc.n = n;
        for (const auto& p : paths) pc.paths.push_back({{p.i, p.l, p.j}, p.count});
        std::sort(pc.paths.begin(), pc.paths.end());
        out[induced_class(g1.lambda(), nv, paths)].push_back(std::move(pc));
    });
    return out;
}

namespace {

// 2|lambda| edges can be too few when a middle vertex closes a loop: for lambda = (1),
// [{(0,1),(1,0)}]^2 needs three paths. rank(Gamma1) + rank(Gamma2) bounds the non-trivial paths.
int padding_length(const MultisetDiagram& g1, const MultisetDiagram& g2) {
    return std::max(2 * g1.size(), static_cast<int>(g1.rank() + g2.rank()));
}

}  // namespace

MPElement multiply_basis(const MultisetDiagram& g1, const MultisetDiagram& g2) {
    MPElement out(g1.lambda());
    const auto nv = static_cast<std::uint32_t>(VertexSpace(g1.lambda()).size());
    for_each_configuration(g1, g2, padding_length(g1, g2), [&](const std::vector<Path>& paths) {
        const MultisetDiagram g = induced_class(g1.lambda(), nv, paths);
        out.add(g, configuration_term(paths, g.rank()));
    });
    return out;
}

Poly structure_poly(const MultisetDiagram& g1, const MultisetDiagram& g2, const MultisetDiagram& g) {
    if (g.lambda() != g1.lambda()) throw InvalidArgument("diagrams with different lambda");
    Poly out;
    const auto nv = static_cast<std::uint32_t>(VertexSpace(g1.lambda()).size());
    for_each_configuration(g1, g2, padding_length(g1, g2), [&](const std::vector<Path>& paths) {
        if (induced_class(g1.lambda(), nv, paths) == g) out += configuration_term(paths, g.rank());
    });
    return out;
}

MPElement multiply(const MPElement& a, const MPElement& b) {
    if (a.lambda() != b.lambda()) throw InvalidArgument("multiply: elements with different lambda");
    MPElement out(a.lambda());
    for (const auto& [g1, c1] : a.terms()) {
        for (const auto& [g2, c2] : b.terms()) {
            const Poly c = c1 * c2;
            const MPElement prod = multiply_basis(g1, g2);
            for (const auto& [g, p] : prod.terms()) out.add(g, c * p);
        }
    }
    return out;
}

MPElement identity(const std::vector<int>& lambda) {
    MPElement out(lambda);
    const auto nv = static_cast<std::uint32_t>(VertexSpace(lambda).size());
    for (const auto& g : enumerate_basis(lambda)) {
        const bool diagonal = std::all_of(g.codes().begin(), g.codes().end(), [&](std::uint32_t c) { return c / nv == c % nv; });
        if (diagonal) out.add(g, Poly(1));
    }
    return out;
}

namespace {

std::vector<int> colour_offsets(const std::vector<int>& lambda) {
    std::vector<int> off(lambda.size() + 1, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) off[i + 1] = off[i] + lambda[i];
    return off;
}

std::vector<int> colour_of_position(const std::vector<int>& lambda) {
    std::vector<int> col;
    for (std::size_t i = 0; i < lambda.size(); ++i) col.insert(col.end(), static_cast<std::size_t>(lambda[i]), static_cast<int>(i));
    return col;
}

}  // namespace

SetPartitionDiagram canonical_partition_diagram(const MultisetDiagram& g) {
    const auto& lambda = g.lambda();
    const int k = g.size();
    const auto off = colour_offsets(lambda);
    std::vector<int> top_used(lambda.size(), 0), bottom_used(lambda.size(), 0);
    std::vector<int> labels(static_cast<std::size_t>(2 * k), -1);
    int block = 0;
    for (const auto& e : g.edges()) {
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            for (int t = 0; t < e.top[i]; ++t) labels[static_cast<std::size_t>(off[i] + top_used[i] + t)] = block;
            for (int t = 0; t < e.bottom[i]; ++t) labels[static_cast<std::size_t>(k + off[i] + bottom_used[i] + t)] = block;
            top_used[i] += e.top[i];
            bottom_used[i] += e.bottom[i];
        }
        ++block;
    }
    return SetPartitionDiagram::from_labels(k, labels);
}

MultisetDiagram class_of_partition_diagram(const SetPartitionDiagram& d, const std::vector<int>& lambda) {
    const VertexSpace vs(lambda);
    const auto col = colour_of_position(lambda);
    const int k = d.k();
    if (static_cast<int>(col.size()) != k) throw InvalidArgument("diagram size differs from |lambda|");
    const auto nv = static_cast<std::uint32_t>(vs.size());
    std::vector<std::uint32_t> codes;
    for (const auto& b : d.vertex_blocks()) {
        Vertex top(lambda.size(), 0), bottom(lambda.size(), 0);
        for (int v : b) {
            if (v < k) ++top[static_cast<std::size_t>(col[static_cast<std::size_t>(v)])];
            else ++bottom[static_cast<std::size_t>(col[static_cast<std::size_t>(v - k)])];
        }
        codes.push_back(vs.index(top) * nv + vs.index(bottom));
    }
    return MultisetDiagram::from_codes(lambda, std::move(codes));
}

std::vector<SetPartitionDiagram> orbit(const MultisetDiagram& g) {
    const auto& lambda = g.lambda();
    const int k = g.size();
    const auto off = colour_offsets(lambda);
    std::vector<int> swaps;  // position t means transposition of t and t+1 within a colour
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int t = off[i]; t + 1 < off[i + 1]; ++t) swaps.push_back(t);
    }
    std::set<SetPartitionDiagram> seen{canonical_partition_diagram(g)};
    std::vector<SetPartitionDiagram> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<SetPartitionDiagram> next;
        for (const auto& d : frontier) {
            for (int t : swaps) {
                for (int row = 0; row < 2; ++row) {
                    std::vector<int> labels = d.labels();
                    std::swap(labels[static_cast<std::size_t>(row * k + t)], labels[static_cast<std::size_t>(row * k + t + 1)]);
                    auto nd = SetPartitionDiagram::from_labels(k, labels);
                    if (seen.insert(nd).second) next.push_back(std::move(nd));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Rational alpha_lambda(const SetPartitionDiagram& d, const std::vector<int>& lambda) {
    const auto col = colour_of_position(lambda);
    const int k = d.k();
    if (static_cast<int>(col.size()) != k) throw InvalidArgument("diagram size differs from |lambda|");
    std::map<std::pair<int, int>, unsigned> counts;  // (block, colour) -> bottom vertices
    for (int v = 0; v < k; ++v) ++counts[{d.label(k + v), col[static_cast<std::size_t>(v)]}];
    BigInt num = 1, den = 1;
    for (int l : lambda) num *= factorial(static_cast<unsigned>(l));
    for (const auto& [key, c] : counts) den *= factorial(c);
    return Rational(num, den);
}

PAElement embed(const MPElement& a) {
    const int k = std::accumulate(a.lambda().begin(), a.lambda().end(), 0);
    PAElement out(k, PABasis::Orbit);
    for (const auto& [g, c] : a.terms()) {
        const auto orb = orbit(g);
        const Poly coeff = c * (Rational(1) / alpha_lambda(orb.front(), a.lambda()));
        for (const auto& d : orb) out.add(d, coeff);
    }
    return out;
}

std::vector<SetPartitionDiagram> enumerate_Y(const std::vector<int>& lambda) {
    const auto col = colour_of_position(lambda);
    const int k = static_cast<int>(col.size());
    std::vector<SetPartitionDiagram> out;
    for (const auto& d : enumerate_diagrams(k)) {
        std::map<std::pair<int, int>, int> balance;  // (block, colour) -> top minus bottom
        for (int v = 0; v < k; ++v) {
            ++balance[{d.label(v), col[static_cast<std::size_t>(v)]}];
            --balance[{d.label(k + v), col[static_cast<std::size_t>(v)]}];
        }
        if (std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; })) out.push_back(d);
    }
    return out;
}

PAElement idempotent_e(const std::vector<int>& lambda) {
    const int k = std::accumulate(lambda.begin(), lambda.end(), 0);
    PAElement out(k, PABasis::Orbit);
    for (const auto& d : enumerate_Y(lambda)) out.add(d, Poly(Rational(1) / alpha_lambda(d, lambda)));
    return out;
}

bool is_balanced(const MultisetDiagram& g) {
    const VertexSpace vs(g.lambda());
    const auto nv = static_cast<std::uint32_t>(vs.size());
    return std::all_of(g.codes().begin(), g.codes().end(), [&](std::uint32_t c) { return vs.norm(c / nv) == vs.norm(c % nv); });
}

std::vector<MultisetDiagram> balanced_basis(const std::vector<int>& lambda) {
    std::vector<MultisetDiagram> out;
    for (auto& g : enumerate_basis(lambda)) {
        if (is_balanced(g)) out.push_back(std::move(g));
    }
    return out;
}

MultisetDiagram transpose(const MultisetDiagram& g) {
    const auto nv = static_cast<std::uint32_t>(VertexSpace(g.lambda()).size());
    std::vector<std::uint32_t> codes;
    for (auto c : g.codes()) codes.push_back((c % nv) * nv + c / nv);
    return MultisetDiagram::from_codes(g.lambda(), std::move(codes));
}

}  // namespace mpa
