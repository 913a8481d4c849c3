#include "foldenum/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace foldenum {

namespace {

void require_positive_fold(Cell n, const char* which)
{
    if (n < 1)
        throw std::invalid_argument(std::string(which) + " fold size must be positive");
}

} // namespace

TwoFoldPartitioner::TwoFoldPartitioner(Cell n0, Cell n1, std::span<const Cell> classes)
{
    require_positive_fold(n0, "first");
    require_positive_fold(n1, "second");
    if (classes.empty())
        throw std::invalid_argument("at least one class is required");
    Cell total = 0;
    for (Cell c : classes) {
        if (c < 0)
            throw std::invalid_argument("class cardinality must be non-negative");
        total += c;
    }
    if (total != n0 + n1)
        throw std::invalid_argument("fold sizes sum to " + std::to_string(n0 + n1) + " but classes sum to " +
                                    std::to_string(total));
    reset(n0, n1, classes, {});
}

void TwoFoldPartitioner::reset(Cell n0, Cell n1, std::span<const Cell> classes, std::span<const Cell> floor)
{
    const std::size_t m = classes.size();
    n0_ = n0;
    n1_ = n1;
    classes_.assign(classes.begin(), classes.end());
    floor_.assign(floor.begin(), floor.end());
    if (rows_.folds() != 2 || rows_.classes() != m)
        rows_ = FoldConfiguration(2, m);
    open0_.resize(m);
    open1_.resize(m);
    upper_.resize(m);
    mirror_tied_.resize(m);
    floor_tied_.resize(m);
    started_ = false;
    exhausted_ = false;
}

void TwoFoldPartitioner::place(std::size_t j, Cell first)
{
    const Cell second = classes_[j] - first;
    rows_(0, j) = first;
    rows_(1, j) = second;
    open0_[j + 1] = open0_[j] - first;
    open1_[j + 1] = open1_[j] - second;
    mirror_tied_[j + 1] = mirror_tied_[j] && first == second;
    floor_tied_[j + 1] = floor_tied_[j] && first == floor_[j];
}

// Opens class j at its smallest admissible count. False if the range is
// empty.
bool TwoFoldPartitioner::descend(std::size_t j)
{
    const Cell c = classes_[j];
    Cell lo = std::max<Cell>(0, c - open1_[j]);
    Cell hi = std::min(c, open0_[j]);
    if (mirror_tied_[j])
        hi = std::min(hi, c / 2);
    if (floor_tied_[j])
        lo = std::max(lo, floor_[j]);
    if (lo > hi)
        return false;
    upper_[j] = hi;
    place(j, lo);
    return true;
}

void TwoFoldPartitioner::close_last_class()
{
    const std::size_t last = classes_.size() - 1;
    rows_(0, last) = open0_[last];
    rows_(1, last) = open1_[last];
}

bool TwoFoldPartitioner::next()
{
    if (exhausted_)
        return false;

    const auto free_classes = static_cast<std::ptrdiff_t>(classes_.size()) - 1;
    std::ptrdiff_t j;
    bool descending;
    if (!started_) {
        started_ = true;
        open0_[0] = n0_;
        open1_[0] = n1_;
        mirror_tied_[0] = n0_ == n1_;
        floor_tied_[0] = !floor_.empty();
        j = 0;
        descending = true;
    } else {
        j = free_classes - 1;
        descending = false;
    }

    for (;;) {
        if (descending) {
            if (j == free_classes) {
                close_last_class();
                return true;
            }
            if (descend(static_cast<std::size_t>(j))) {
                ++j;
            } else {
                descending = false;
                --j;
            }
        } else {
            if (j < 0) {
                exhausted_ = true;
                return false;
            }
            const auto uj = static_cast<std::size_t>(j);
            if (rows_(0, uj) < upper_[uj]) {
                place(uj, rows_(0, uj) + 1);
                ++j;
                descending = true;
            } else {
                --j;
            }
        }
    }
}

TwoFoldPartitioner partition_2_2(Cell n0, Cell n1, Cell c0)
{
    require_positive_fold(n0, "first");
    require_positive_fold(n1, "second");
    if (c0 < 0 || c0 > n0 + n1)
        throw std::invalid_argument("class cardinality " + std::to_string(c0) + " does not fit two folds of total " +
                                    std::to_string(n0 + n1));
    const Cell classes[] = {c0, n0 + n1 - c0};
    return TwoFoldPartitioner(n0, n1, classes);
}

TwoFoldPartitioner partition_2_m(Cell n0, Cell n1, const ClassDistribution& classes)
{
    return TwoFoldPartitioner(n0, n1, classes.counts());
}

PartitionEnumerator::PartitionEnumerator(FoldSizes sizes, ClassDistribution classes, Shard shard)
    : sizes_(std::move(sizes)), classes_(std::move(classes)), shard_(shard)
{
    if (sizes_.total() != classes_.total())
        throw std::invalid_argument("fold sizes sum to " + std::to_string(sizes_.total()) + " but classes sum to " +
                                    std::to_string(classes_.total()));
    if (shard_.count == 0 || shard_.index >= shard_.count)
        throw std::invalid_argument("invalid shard");

    const std::size_t k = sizes_.size();
    const std::size_t m = classes_.size();
    current_ = StandardizedFoldConfiguration(FoldConfiguration(k, m));
    rest_.assign(k, 0);
    for (std::size_t f = k - 1; f-- > 0;)
        rest_[f] = rest_[f + 1] + sizes_[f + 1];
    levels_.resize(k - 1);
}

void PartitionEnumerator::emit_row(std::size_t fold, std::span<const Cell> row)
{
    std::copy(row.begin(), row.end(), current_.matrix_.row(fold).begin());
}

bool PartitionEnumerator::next_single_fold()
{
    if (started_ || shard_.index != 0) {
        exhausted_ = true;
        return false;
    }
    started_ = true;
    emit_row(0, classes_.counts());
    return true;
}

bool PartitionEnumerator::next()
{
    if (exhausted_)
        return false;
    const std::size_t k = sizes_.size();
    if (k == 1)
        return next_single_fold();

    std::size_t f;
    if (!started_) {
        started_ = true;
        levels_[0].reset(sizes_[0], rest_[0], classes_.counts(), {});
        f = 0;
    } else {
        f = k - 2;
    }

    for (;;) {
        TwoFoldPartitioner& level = levels_[f];
        if (!level.next()) {
            if (f == 0) {
                exhausted_ = true;
                return false;
            }
            --f;
            continue;
        }
        if (f == 0 && shard_.count > 1 && top_ordinal_++ % shard_.count != shard_.index)
            continue;

        emit_row(f, level.first_row());
        if (f == k - 2) {
            emit_row(k - 1, level.second_row());
            return true;
        }
        // The leftover distribution is copied into the next level, so the
        // rows written here are never read back as input.
        std::span<const Cell> floor;
        if (sizes_[f] == sizes_[f + 1])
            floor = level.first_row();
        levels_[f + 1].reset(sizes_[f + 1], rest_[f + 1], level.second_row(), floor);
        ++f;
    }
}

PartitionEnumerator partition_k_m(const FoldSizes& sizes, const ClassDistribution& classes)
{
    return PartitionEnumerator(sizes, classes);
}

} // namespace foldenum
