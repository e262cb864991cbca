#include "mpa/combinatorics.hpp"

#include "mpa/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mpa {

Multiset::Multiset(std::vector<int> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    if (!entries_.empty() && entries_.front() <= 0) throw InvalidArgument("multiset symbols must be positive");
}

Multiset Multiset::from_multiplicities(std::span<const int> counts) {
    Multiset m;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 0) throw InvalidArgument("negative multiplicity");
        m.entries_.insert(m.entries_.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i + 1));
    }
    return m;
}

std::vector<int> Multiset::multiplicities(std::size_t alphabet_size) const {
    std::vector<int> out(alphabet_size, 0);
    for (int s : entries_) {
        if (static_cast<std::size_t>(s) > alphabet_size) throw InvalidArgument("symbol outside alphabet");
        ++out[static_cast<std::size_t>(s - 1)];
    }
    return out;
}

std::strong_ordering graded_lex_compare(const Multiset& a, const Multiset& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.entries() <=> b.entries();
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) { return graded_lex_compare(a, b); }

std::string Multiset::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + "}";
}

WeakCompositionMatrix::WeakCompositionMatrix(std::vector<int> row_targets, std::size_t cols, std::vector<int> entries)
    : targets_(std::move(row_targets)), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != targets_.size() * cols_) throw InvalidArgument("weak composition: wrong entry count");
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        int sum = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const int v = entries_[i * cols_ + j];
            if (v < 0) throw InvalidArgument("weak composition: negative entry");
            sum += v;
        }
        if (sum != targets_[i]) throw InvalidArgument("weak composition: row sum differs from target");
    }
}

std::vector<int> WeakCompositionMatrix::column(std::size_t col) const {
    std::vector<int> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = at(i, col);
    return out;
}

int WeakCompositionMatrix::column_sum(std::size_t col) const {
    int s = 0;
    for (std::size_t i = 0; i < rows(); ++i) s += at(i, col);
    return s;
}

namespace {

// Compositions of `total` into `parts` non-negative parts, lexicographically ascending.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WeakCompositionMatrix> enumerate_weak_compositions(int n, std::span<const int> lambda) {
    if (n < 1) throw InvalidArgument("enumerate_weak_compositions: n must be positive");
    std::vector<std::vector<std::vector<int>>> per_row;
    for (int li : lambda) {
        if (li < 0) throw InvalidArgument("enumerate_weak_compositions: negative lambda entry");
        std::vector<std::vector<int>> rows;
        std::vector<int> cur;
        compositions(li, n, cur, rows);
        per_row.push_back(std::move(rows));
    }
    std::vector<int> targets(lambda.begin(), lambda.end());
    std::vector<WeakCompositionMatrix> out;
    std::vector<std::size_t> idx(per_row.size(), 0);
    const std::size_t s = per_row.size();
    while (true) {
        std::vector<int> entries;
        entries.reserve(s * static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < s; ++i) {
            const auto& r = per_row[i][idx[i]];
            entries.insert(entries.end(), r.begin(), r.end());
        }
        out.emplace_back(targets, static_cast<std::size_t>(n), std::move(entries));
        // Odometer with the last row least significant.
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (++idx[i] < per_row[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (s == 0) return out;
    }
}

BigInt count_weak_compositions(int n, std::span<const int> lambda) {
    BigInt out = 1;
    for (int li : lambda) out *= binomial(static_cast<unsigned>(n + li - 1), static_cast<unsigned>(li));
    return out;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
        if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

IntegerPartition IntegerPartition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return IntegerPartition();
    for (int c = 0; c < parts_.front(); ++c) {
        int len = 0;
        while (static_cast<std::size_t>(len) < parts_.size() && parts_[static_cast<std::size_t>(len)] > c) ++len;
        out.push_back(len);
    }
    return IntegerPartition(std::move(out));
}

int IntegerPartition::hook(std::size_t row, std::size_t col) const {
    if (row >= parts_.size() || static_cast<int>(col) >= parts_[row]) throw InvalidArgument("hook: cell outside shape");
    const int arm = parts_[row] - static_cast<int>(col) - 1;
    int leg = 0;
    for (std::size_t r = row + 1; r < parts_.size() && parts_[r] > static_cast<int>(col); ++r) ++leg;
    return arm + leg + 1;
}

int IntegerPartition::b_statistic() const {
    int b = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) b += static_cast<int>(i) * parts_[i];
    return b;
}

std::string IntegerPartition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<IntegerPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<IntegerPartition> enumerate_partitions(int n) {
    if (n < 0) throw InvalidArgument("enumerate_partitions: n must be non-negative");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

BigInt count_syt(const IntegerPartition& nu) {
    BigInt hooks = 1;
    for (std::size_t r = 0; r < nu.length(); ++r) {
        for (int c = 0; c < nu.parts()[r]; ++c) hooks *= nu.hook(r, static_cast<std::size_t>(c));
    }
    return factorial(static_cast<unsigned>(nu.size())) / hooks;
}

std::vector<std::vector<int>> enumerate_set_partitions(int m) {
    std::vector<std::vector<int>> out;
    if (m < 0) throw InvalidArgument("enumerate_set_partitions: negative size");
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    std::vector<int> maxima(static_cast<std::size_t>(m), 0);  // maxima[i] = max(rgs[0..i])
    while (true) {
        out.push_back(rgs);
        int i = m - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > maxima[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) return out;
        ++rgs[static_cast<std::size_t>(i)];
        maxima[static_cast<std::size_t>(i)] = std::max(maxima[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < m; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            maxima[static_cast<std::size_t>(j)] = maxima[static_cast<std::size_t>(i)];
        }
    }
}

BigInt bell_number(int m) {
    // Bell triangle.
    if (m < 0) throw InvalidArgument("bell_number: negative size");
    std::vector<BigInt> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

MultisetTableau::MultisetTableau(IntegerPartition shape, std::vector<std::vector<Multiset>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.length()) throw InvalidArgument("tableau: row count differs from shape");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_.parts()[r]) throw InvalidArgument("tableau: row length differs from shape");
    }
}

bool MultisetTableau::is_semistandard() const {
    if (rows_.size() != shape_.length()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_.parts()[r]) return false;
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
            if (r > 0 && !(rows_[r - 1][c] < rows_[r][c])) return false;
        }
    }
    return true;
}

Multiset MultisetTableau::content() const {
    std::vector<int> all;
    for (const auto& row : rows_) {
        for (const auto& cell : row) all.insert(all.end(), cell.entries().begin(), cell.entries().end());
    }
    return Multiset(std::move(all));
}

std::string MultisetTableau::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << " / ";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << " ";
            os << rows_[r][c].to_string();
        }
    }
    return os.str();
}

namespace {

// Backtracking state shared by enumeration and counting. Candidates are all
// sub-multisets of the content in graded lex order, so entry comparisons
// reduce to comparing candidate indices.
struct SsmtSearch {
    std::vector<std::vector<int>> cand_counts;  // multiplicity vectors
    std::vector<int> cand_size;
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // column reading order
    std::vector<std::vector<int>> grid;                      // candidate index per cell
    std::vector<int> remaining;
    int remaining_size = 0;
    std::vector<int> lower_cells_left;  // cells in rows >= 1 at positions >= t

    SsmtSearch(const IntegerPartition& nu, std::span<const int> content) : remaining(content.begin(), content.end()) {
        for (int c : content) {
            if (c < 0) throw InvalidArgument("enumerate_ssmt: negative content multiplicity");
            remaining_size += c;
        }
        // Sub-multisets as multiplicity vectors.
        std::vector<int> cur(content.size(), 0);
        std::vector<Multiset> ms;
        while (true) {
            cand_counts.push_back(cur);
            std::size_t i = 0;
            while (i < cur.size() && cur[i] == content[i]) cur[i++] = 0;
            if (i == cur.size()) break;
            ++cur[i];
        }
        ms.reserve(cand_counts.size());
        for (const auto& v : cand_counts) ms.push_back(Multiset::from_multiplicities(v));
        std::vector<std::size_t> order(cand_counts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ms[a] < ms[b]; });
        std::vector<std::vector<int>> sorted;
        for (auto i : order) {
            sorted.push_back(cand_counts[i]);
            cand_size.push_back(static_cast<int>(ms[i].size()));
        }
        cand_counts = std::move(sorted);

        grid.resize(nu.length());
        for (std::size_t r = 0; r < nu.length(); ++r) grid[r].assign(static_cast<std::size_t>(nu.parts()[r]), -1);
        const int width = nu.length() ? nu.parts()[0] : 0;
        for (int c = 0; c < width; ++c) {
            for (std::size_t r = 0; r < nu.length() && nu.parts()[r] > c; ++r) cells.emplace_back(r, static_cast<std::size_t>(c));
        }
        lower_cells_left.assign(cells.size() + 1, 0);
        for (std::size_t t = cells.size(); t-- > 0;) lower_cells_left[t] = lower_cells_left[t + 1] + (cells[t].first > 0 ? 1 : 0);
    }

    bool fits(std::size_t cand) const {
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (cand_counts[cand][i] > remaining[i]) return false;
        }
        return true;
    }

    template <class Visit>
    void run(std::size_t t, Visit&& visit) {
        if (t == cells.size()) {
            if (remaining_size == 0) visit();
            return;
        }
        const auto [r, c] = cells[t];
        int lo = 0;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        const bool last = t + 1 == cells.size();
        for (std::size_t k = static_cast<std::size_t>(lo); k < cand_counts.size(); ++k) {
            const int sz = cand_size[k];
            if (sz > remaining_size) break;  // sizes are non-decreasing in graded lex order
            if (last && sz != remaining_size) continue;
            if (remaining_size - sz < lower_cells_left[t + 1]) break;
            if (!fits(k)) continue;
            for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] -= cand_counts[k][i];
            remaining_size -= sz;
            grid[r][c] = static_cast<int>(k);
            run(t + 1, visit);
            grid[r][c] = -1;
            remaining_size += sz;
            for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] += cand_counts[k][i];
        }
    }
};

}  // namespace

std::vector<MultisetTableau> enumerate_ssmt(const IntegerPartition& nu, const Multiset& content) {
    const std::size_t s = content.empty() ? 0 : static_cast<std::size_t>(content.entries().back());
    const std::vector<int> counts = content.multiplicities(s);
    SsmtSearch search(nu, counts);
    std::vector<MultisetTableau> out;
    search.run(0, [&] {
        std::vector<std::vector<Multiset>> rows(nu.length());
        for (std::size_t r = 0; r < nu.length(); ++r) {
            for (int k : search.grid[r]) rows[r].push_back(Multiset::from_multiplicities(search.cand_counts[static_cast<std::size_t>(k)]));
        }
        out.emplace_back(nu, std::move(rows));
    });
    return out;
}

std::int64_t count_ssmt(const IntegerPartition& nu, std::span<const int> content_multiplicities) {
    SsmtSearch search(nu, content_multiplicities);
    std::int64_t n = 0;
    search.run(0, [&] { ++n; });
    return n;
}

}  // namespace mpa
