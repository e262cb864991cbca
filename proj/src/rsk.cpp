#include "mpa/rsk.hpp"

#include "mpa/errors.hpp"

#include <algorithm>
#include <string>

namespace mpa {

MPBiword to_biword(const MultisetDiagram& d, int n) {
    if (static_cast<int>(d.rank()) > n) throw InvalidArgument("rank " + std::to_string(d.rank()) + " exceeds n = " + std::to_string(n));
    MPBiword bw;
    for (int t = static_cast<int>(d.rank()); t < n; ++t) bw.columns.emplace_back();
    for (const auto& e : d.edges()) bw.columns.emplace_back(Multiset::from_multiplicities(e.top), Multiset::from_multiplicities(e.bottom));
    std::sort(bw.columns.begin(), bw.columns.end());
    return bw;
}

RSKPair rsk(const MPBiword& bw) {
    std::vector<std::vector<Multiset>> t, s;
    for (const auto& [top, bottom] : bw.columns) {
        Multiset x = bottom;
        std::size_t r = 0;
        for (;; ++r) {
            if (r == t.size()) {
                t.emplace_back();
                s.emplace_back();
            }
            auto& row = t[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(std::move(x));
                s[r].push_back(top);
                break;
            }
            std::swap(*it, x);
        }
    }
    std::vector<int> shape;
    for (const auto& row : t) shape.push_back(static_cast<int>(row.size()));
    IntegerPartition p(shape);
    return {MultisetTableau(p, std::move(t)), MultisetTableau(p, std::move(s))};
}

MultisetDiagram inverse_rsk(const MultisetTableau& t, const MultisetTableau& s, const std::vector<int>& lambda) {
    if (t.shape() != s.shape()) throw InvalidArgument("tableaux of different shapes");
    if (!t.is_semistandard() || !s.is_semistandard()) throw InvalidArgument("tableau is not semistandard");
    const Multiset target = Multiset::from_multiplicities(lambda);
    if (t.content() != target || s.content() != target) throw InvalidArgument("tableau content differs from lambda");
    auto trows = t.rows();
    auto srows = s.rows();
    std::vector<std::pair<Multiset, Multiset>> columns;
    while (true) {
        // Largest recording entry, rightmost among equals; it sits at the end of its row.
        std::size_t best = srows.size();
        for (std::size_t r = 0; r < srows.size(); ++r) {
            if (srows[r].empty()) continue;
            if (best == srows.size() || srows[best].back() < srows[r].back() ||
                (srows[best].back() == srows[r].back() && srows[r].size() > srows[best].size())) {
                best = r;
            }
        }
        if (best == srows.size()) break;
        Multiset top = srows[best].back();
        srows[best].pop_back();
        Multiset x = trows[best].back();
        trows[best].pop_back();
        for (std::size_t r = best; r-- > 0;) {
            auto& row = trows[r];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.begin()) throw InvalidArgument("tableaux do not come from a biword");
            --it;  // rightmost entry strictly less than x
            std::swap(*it, x);
        }
        columns.emplace_back(std::move(top), std::move(x));
    }
    std::vector<Edge> edges;
    for (const auto& [u, l] : columns) {
        if (u.empty() && l.empty()) continue;
        edges.push_back({u.multiplicities(lambda.size()), l.multiplicities(lambda.size())});
    }
    return canonicalize(lambda, edges);
}

MultisetDiagram transpose_partition(const MultisetDiagram& d) { return transpose(d); }

SymmetryReport symmetry_check(const MultisetDiagram& d, int n) {
    SymmetryReport rep{};
    const auto dt = transpose_partition(d);
    const auto forward = rsk(to_biword(d, n));
    const auto backward = rsk(to_biword(dt, n));
    rep.transpose_swaps = backward.insertion == forward.recording && backward.recording == forward.insertion;
    rep.symmetric = dt == d;
    for (const auto& [u, l] : to_biword(d, n).columns) rep.fixed_blocks += u == l;
    const auto conj = forward.insertion.shape().conjugate();
    for (int c : conj.parts()) rep.odd_columns += c % 2;
    return rep;
}

}  // namespace mpa
