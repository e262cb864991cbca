#pragma once

#include "mpa/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mpa {

/// Finite multiset over the ordered alphabet 1 < 2 < ..., stored as a sorted sequence.
///
/// Ordering is graded lexicographic: smaller cardinality first, ties broken by
/// comparing sorted entries lexicographically. The empty multiset is the minimum.
class Multiset {
public:
    Multiset() = default;
    /// Entries are sorted on construction; every symbol must be positive.
    explicit Multiset(std::vector<int> entries);
    /// Symbol i+1 repeated counts[i] times.
    static Multiset from_multiplicities(std::span<const int> counts);

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    /// Multiplicity vector of length `alphabet_size`.
    std::vector<int> multiplicities(std::size_t alphabet_size) const;

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

    std::string to_string() const;

private:
    std::vector<int> entries_;
};

std::strong_ordering graded_lex_compare(const Multiset& a, const Multiset& b);

/// An s x n matrix of non-negative integers whose i-th row sums to lambda_i.
class WeakCompositionMatrix {
public:
    WeakCompositionMatrix(std::vector<int> row_targets, std::size_t cols, std::vector<int> entries);

    std::size_t rows() const noexcept { return targets_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    int at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    const std::vector<int>& row_targets() const noexcept { return targets_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::vector<int> column(std::size_t col) const;
    /// Sum of column `col`.
    int column_sum(std::size_t col) const;

    friend bool operator==(const WeakCompositionMatrix&, const WeakCompositionMatrix&) = default;
    friend auto operator<=>(const WeakCompositionMatrix& a, const WeakCompositionMatrix& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> targets_;
    std::size_t cols_;
    std::vector<int> entries_;
};

/// All of M(n, lambda) in row-major lexicographic order.
std::vector<WeakCompositionMatrix> enumerate_weak_compositions(int n, std::span<const int> lambda);

/// prod_i C(n + lambda_i - 1, lambda_i).
BigInt count_weak_compositions(int n, std::span<const int> lambda);

/// Weakly decreasing sequence of positive integers.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit IntegerPartition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    IntegerPartition conjugate() const;
    /// Hook length of cell (row, col), both zero-based.
    int hook(std::size_t row, std::size_t col) const;
    /// b(nu) = sum_i (i - 1) nu_i.
    int b_statistic() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<IntegerPartition> enumerate_partitions(int n);

/// Number of standard Young tableaux of shape nu, by the hook length formula.
BigInt count_syt(const IntegerPartition& nu);

/// Set partitions of {0..m-1} as restricted growth strings, in lexicographic order.
std::vector<std::vector<int>> enumerate_set_partitions(int m);

/// Bell number B(m).
BigInt bell_number(int m);

/// Young diagram filled by multisets.
class MultisetTableau {
public:
    MultisetTableau() = default;
    MultisetTableau(IntegerPartition shape, std::vector<std::vector<Multiset>> rows);

    const IntegerPartition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<Multiset>>& rows() const noexcept { return rows_; }
    const Multiset& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

    /// Rows weakly and columns strictly increasing in graded lex order, row r of length shape[r].
    bool is_semistandard() const;
    /// Multiset union of all entries.
    Multiset content() const;

    friend bool operator==(const MultisetTableau&, const MultisetTableau&) = default;

    std::string to_string() const;

private:
    IntegerPartition shape_;
    std::vector<std::vector<Multiset>> rows_;
};

/// All semistandard multiset tableaux of shape nu whose content is `content`.
///
/// Cells are filled column by column, top to bottom; output is lexicographic in
/// the sequence of chosen entries under graded lex order.
std::vector<MultisetTableau> enumerate_ssmt(const IntegerPartition& nu, const Multiset& content);

/// |enumerate_ssmt(nu, {1^c_1, ..., s^c_s})| without materializing the tableaux.
std::int64_t count_ssmt(const IntegerPartition& nu, std::span<const int> content_multiplicities);

}  // namespace mpa
