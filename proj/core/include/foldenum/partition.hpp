#ifndef FOLDENUM_PARTITION_HPP
#define FOLDENUM_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "foldenum/configuration.hpp"

namespace foldenum {

/* Input iterator over any generator exposing `bool next()` and
 * `current()`. The generator is advanced in place, so a range can be
 * walked once.
 */
template <class Generator>
class GeneratorIterator {
public:
    using iterator_category = std::input_iterator_tag;
    using difference_type = std::ptrdiff_t;
    using value_type = std::remove_cvref_t<decltype(std::declval<const Generator&>().current())>;
    using reference = const value_type&;
    using pointer = const value_type*;

    GeneratorIterator() = default;
    explicit GeneratorIterator(Generator& gen) : gen_(&gen), done_(!gen.next()) {}

    reference operator*() const { return gen_->current(); }
    pointer operator->() const { return &gen_->current(); }

    GeneratorIterator& operator++()
    {
        done_ = !gen_->next();
        return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const GeneratorIterator& it, std::default_sentinel_t) { return it.done_; }

private:
    Generator* gen_ = nullptr;
    bool done_ = true;
};

/* Splits the records of m classes between two folds of sizes n0 and n1
 * (n0 + n1 equals the class total). Row 0 of current() is the first
 * fold, row 1 the second.
 *
 * Classes are distributed left to right; the count of class j placed in
 * the first fold ranges over
 *
 *     max(0, c_j - rest1) .. min(c_j, rest0)
 *
 * where rest0/rest1 are the capacities still open in either fold. The
 * last class takes whatever capacity is left. When n0 == n1 the two folds
 * are interchangeable; while the rows agree on every class placed so far
 * the first fold is capped at floor(c_j / 2), which yields each unordered
 * pair of rows once with row 0 <= row 1.
 *
 * An optional floor row imposes floor <= row 0 (lexicographically) on
 * every split produced; the k-fold enumerator uses it to order equal-size
 * folds.
 *
 * Splits come out in ascending order of the first fold's counts, class 0
 * most significant. Working state is O(m).
 */
class TwoFoldPartitioner {
public:
    TwoFoldPartitioner() = default;
    TwoFoldPartitioner(Cell n0, Cell n1, std::span<const Cell> classes);

    bool next();
    const FoldConfiguration& current() const noexcept { return rows_; }

    std::span<const Cell> first_row() const noexcept { return rows_.row(0); }
    std::span<const Cell> second_row() const noexcept { return rows_.row(1); }

    GeneratorIterator<TwoFoldPartitioner> begin() { return GeneratorIterator<TwoFoldPartitioner>(*this); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    friend class PartitionEnumerator;

    // Unchecked; callers guarantee n0 + n1 == sum(classes) and that floor
    // is either empty or a row summing to n0.
    void reset(Cell n0, Cell n1, std::span<const Cell> classes, std::span<const Cell> floor);
    bool descend(std::size_t j);
    void place(std::size_t j, Cell first);
    void close_last_class();

    Cell n0_ = 0;
    Cell n1_ = 0;
    std::vector<Cell> classes_;
    std::vector<Cell> floor_;
    FoldConfiguration rows_;
    // Indexed by class; the values hold on entry to that class.
    std::vector<Cell> open0_;
    std::vector<Cell> open1_;
    std::vector<Cell> upper_;
    std::vector<std::uint8_t> mirror_tied_;
    std::vector<std::uint8_t> floor_tied_;
    bool started_ = false;
    bool exhausted_ = false;
};

// 2 folds, 2 classes: class 0 has c0 records, class 1 the rest.
// Throws std::invalid_argument if a fold is empty or c0 is out of range.
TwoFoldPartitioner partition_2_2(Cell n0, Cell n1, Cell c0);

// 2 folds, m classes. Throws std::invalid_argument on margin mismatch.
TwoFoldPartitioner partition_2_m(Cell n0, Cell n1, const ClassDistribution& classes);

// Restricts an enumerator to the first-fold splits whose ordinal is
// congruent to index modulo count. The union over all indices is the
// full stream.
struct Shard {
    std::size_t index = 0;
    std::size_t count = 1;
};

/* Enumerates every standardized fold configuration for the given fold
 * sizes and class distribution, each exactly once, in a fixed order.
 *
 * Fold 0 is split against the union of the remaining folds, then the
 * remaining folds are enumerated recursively on the leftover class
 * distribution. Equal-size neighbours are kept in order by rejecting any
 * fold whose row would sort before its predecessor's; the rejection is
 * applied while the row is built so dead branches are cut early.
 *
 * current() refers to an internal buffer that is overwritten by next().
 * Working memory is O(k * m) regardless of how many configurations come
 * out.
 */
class PartitionEnumerator {
public:
    PartitionEnumerator(FoldSizes sizes, ClassDistribution classes, Shard shard = {});

    bool next();
    const StandardizedFoldConfiguration& current() const noexcept { return current_; }

    const FoldSizes& sizes() const noexcept { return sizes_; }
    const ClassDistribution& classes() const noexcept { return classes_; }

    GeneratorIterator<PartitionEnumerator> begin() { return GeneratorIterator<PartitionEnumerator>(*this); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    bool next_single_fold();
    void emit_row(std::size_t fold, std::span<const Cell> row);

    FoldSizes sizes_;
    ClassDistribution classes_;
    Shard shard_;
    std::vector<Cell> rest_;  // rest_[f] = sizes[f+1] + ... + sizes[k-1]
    std::vector<TwoFoldPartitioner> levels_;
    StandardizedFoldConfiguration current_;
    std::size_t top_ordinal_ = 0;
    bool started_ = false;
    bool exhausted_ = false;
};

// Throws std::invalid_argument if the fold sizes and class distribution
// do not cover the same number of records.
PartitionEnumerator partition_k_m(const FoldSizes& sizes, const ClassDistribution& classes);

} // namespace foldenum

#endif
