#ifndef FOLDENUM_CONFIGURATION_HPP
#define FOLDENUM_CONFIGURATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace foldenum {

// Record counts. 64 bits so that realistic datasets never overflow a cell.
using Cell = std::int64_t;

/* Per-class record counts of a dataset. At least one class, no negative
 * entries and a positive total. Zero-count classes are allowed; their
 * column is forced to zero in every configuration.
 */
class ClassDistribution {
public:
    explicit ClassDistribution(std::vector<Cell> counts);
    ClassDistribution(std::initializer_list<Cell> counts)
        : ClassDistribution(std::vector<Cell>(counts)) {}

    std::size_t size() const noexcept { return counts_.size(); }
    Cell total() const noexcept { return total_; }
    Cell operator[](std::size_t j) const noexcept { return counts_[j]; }
    std::span<const Cell> counts() const noexcept { return counts_; }

    bool has_empty_class() const noexcept;

    friend bool operator==(const ClassDistribution&, const ClassDistribution&) = default;

private:
    std::vector<Cell> counts_;
    Cell total_ = 0;
};

/* Fold cardinalities in canonical (non-decreasing) order. Every fold
 * holds at least one record.
 */
class FoldSizes {
public:
    explicit FoldSizes(std::vector<Cell> sizes);
    FoldSizes(std::initializer_list<Cell> sizes)
        : FoldSizes(std::vector<Cell>(sizes)) {}

    std::size_t size() const noexcept { return sizes_.size(); }
    Cell total() const noexcept { return total_; }
    Cell operator[](std::size_t i) const noexcept { return sizes_[i]; }
    std::span<const Cell> sizes() const noexcept { return sizes_; }

    bool all_equal() const noexcept { return sizes_.front() == sizes_.back(); }

    friend bool operator==(const FoldSizes&, const FoldSizes&) = default;

private:
    std::vector<Cell> sizes_;
    Cell total_ = 0;
};

// Sizes of k folds over N records: the N mod k larger folds go last.
// Throws std::invalid_argument unless 1 <= k <= N.
FoldSizes fold_sizes(Cell records, Cell folds);

/* Dense k x m matrix; cell (i, j) is the number of records of class j
 * that land in fold i. Stored row-major. Ordering is lexicographic over
 * the shape followed by the cells, which is only meaningful between
 * matrices of the same shape.
 */
class FoldConfiguration {
public:
    FoldConfiguration() = default;
    FoldConfiguration(std::size_t folds, std::size_t classes)
        : folds_(folds), classes_(classes), cells_(folds * classes, 0) {}
    FoldConfiguration(std::initializer_list<std::initializer_list<Cell>> rows);
    explicit FoldConfiguration(const std::vector<std::vector<Cell>>& rows);

    std::size_t folds() const noexcept { return folds_; }
    std::size_t classes() const noexcept { return classes_; }

    Cell operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * classes_ + j]; }
    Cell& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * classes_ + j]; }

    std::span<const Cell> row(std::size_t i) const noexcept {
        return {cells_.data() + i * classes_, classes_};
    }
    std::span<Cell> row(std::size_t i) noexcept { return {cells_.data() + i * classes_, classes_}; }
    std::span<const Cell> cells() const noexcept { return cells_; }

    Cell row_sum(std::size_t i) const noexcept;
    Cell column_sum(std::size_t j) const noexcept;
    Cell total() const noexcept;

    std::vector<std::vector<Cell>> to_rows() const;

    friend bool operator==(const FoldConfiguration&, const FoldConfiguration&) = default;
    friend auto operator<=>(const FoldConfiguration&, const FoldConfiguration&) = default;

private:
    std::size_t folds_ = 0;
    std::size_t classes_ = 0;
    std::vector<Cell> cells_;
};

std::ostream& operator<<(std::ostream& os, const FoldConfiguration& f);

// True when row i sums to sizes[i] for every i and column j sums to
// classes[j] for every j.
bool has_margins(const FoldConfiguration& f, const FoldSizes& sizes, const ClassDistribution& classes);

// Row order of a standardized configuration: row sum first, then the row
// itself compared elementwise from the left.
bool row_precedes(std::span<const Cell> a, std::span<const Cell> b) noexcept;

bool is_standardized(const FoldConfiguration& f) noexcept;

class PartitionEnumerator;

/* A fold configuration whose rows are in canonical order (see
 * row_precedes). Two standardized configurations describe the same
 * fold assignment up to fold relabeling iff their matrices are equal.
 * Only standardize() and the enumerator can produce one.
 */
class StandardizedFoldConfiguration {
public:
    const FoldConfiguration& matrix() const noexcept { return matrix_; }
    operator const FoldConfiguration&() const noexcept { return matrix_; }

    std::size_t folds() const noexcept { return matrix_.folds(); }
    std::size_t classes() const noexcept { return matrix_.classes(); }
    Cell operator()(std::size_t i, std::size_t j) const noexcept { return matrix_(i, j); }
    std::span<const Cell> row(std::size_t i) const noexcept { return matrix_.row(i); }

    friend bool operator==(const StandardizedFoldConfiguration&,
                           const StandardizedFoldConfiguration&) = default;
    friend auto operator<=>(const StandardizedFoldConfiguration&,
                            const StandardizedFoldConfiguration&) = default;

private:
    friend StandardizedFoldConfiguration standardize(FoldConfiguration f);
    friend class PartitionEnumerator;

    StandardizedFoldConfiguration() = default;
    explicit StandardizedFoldConfiguration(FoldConfiguration f) : matrix_(std::move(f)) {}

    FoldConfiguration matrix_;
};

// Reorders rows into canonical order. Idempotent; preserves the multiset
// of rows.
StandardizedFoldConfiguration standardize(FoldConfiguration f);

std::ostream& operator<<(std::ostream& os, const StandardizedFoldConfiguration& f);

} // namespace foldenum

#endif
