#include "foldenum/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace foldenum {

ClassDistribution::ClassDistribution(std::vector<Cell> counts) : counts_(std::move(counts))
{
    if (counts_.empty())
        throw std::invalid_argument("class distribution needs at least one class");
    for (Cell c : counts_) {
        if (c < 0)
            throw std::invalid_argument("class cardinality must be non-negative, got " + std::to_string(c));
        total_ += c;
    }
    if (total_ == 0)
        throw std::invalid_argument("class distribution has no records");
}

bool ClassDistribution::has_empty_class() const noexcept
{
    return std::find(counts_.begin(), counts_.end(), Cell{0}) != counts_.end();
}

FoldSizes::FoldSizes(std::vector<Cell> sizes) : sizes_(std::move(sizes))
{
    if (sizes_.empty())
        throw std::invalid_argument("at least one fold is required");
    for (Cell s : sizes_) {
        if (s < 1)
            throw std::invalid_argument("fold size must be positive, got " + std::to_string(s));
        total_ += s;
    }
    if (!std::is_sorted(sizes_.begin(), sizes_.end()))
        throw std::invalid_argument("fold sizes must be in non-decreasing order");
}

FoldSizes fold_sizes(Cell records, Cell folds)
{
    if (records < 1)
        throw std::invalid_argument("record count must be positive");
    if (folds < 1)
        throw std::invalid_argument("fold count must be positive");
    if (folds > records)
        throw std::invalid_argument("fold count exceeds records");

    const Cell small = records / folds;
    const Cell large_folds = records % folds;
    std::vector<Cell> sizes(static_cast<std::size_t>(folds), small);
    std::fill(sizes.end() - large_folds, sizes.end(), small + 1);
    return FoldSizes(std::move(sizes));
}

FoldConfiguration::FoldConfiguration(std::initializer_list<std::initializer_list<Cell>> rows)
    : folds_(rows.size()), classes_(rows.size() ? rows.begin()->size() : 0)
{
    cells_.reserve(folds_ * classes_);
    for (const auto& r : rows) {
        if (r.size() != classes_)
            throw std::invalid_argument("ragged fold configuration");
        cells_.insert(cells_.end(), r.begin(), r.end());
    }
}

FoldConfiguration::FoldConfiguration(const std::vector<std::vector<Cell>>& rows)
    : folds_(rows.size()), classes_(rows.empty() ? 0 : rows.front().size())
{
    cells_.reserve(folds_ * classes_);
    for (const auto& r : rows) {
        if (r.size() != classes_)
            throw std::invalid_argument("ragged fold configuration");
        cells_.insert(cells_.end(), r.begin(), r.end());
    }
}

Cell FoldConfiguration::row_sum(std::size_t i) const noexcept
{
    auto r = row(i);
    return std::accumulate(r.begin(), r.end(), Cell{0});
}

Cell FoldConfiguration::column_sum(std::size_t j) const noexcept
{
    Cell s = 0;
    for (std::size_t i = 0; i < folds_; ++i)
        s += (*this)(i, j);
    return s;
}

Cell FoldConfiguration::total() const noexcept
{
    return std::accumulate(cells_.begin(), cells_.end(), Cell{0});
}

std::vector<std::vector<Cell>> FoldConfiguration::to_rows() const
{
    std::vector<std::vector<Cell>> rows;
    rows.reserve(folds_);
    for (std::size_t i = 0; i < folds_; ++i) {
        auto r = row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

std::ostream& operator<<(std::ostream& os, const FoldConfiguration& f)
{
    os << '[';
    for (std::size_t i = 0; i < f.folds(); ++i) {
        if (i)
            os << ',';
        os << '[';
        for (std::size_t j = 0; j < f.classes(); ++j) {
            if (j)
                os << ',';
            os << f(i, j);
        }
        os << ']';
    }
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const StandardizedFoldConfiguration& f)
{
    return os << f.matrix();
}

bool has_margins(const FoldConfiguration& f, const FoldSizes& sizes, const ClassDistribution& classes)
{
    if (f.folds() != sizes.size() || f.classes() != classes.size())
        return false;
    for (std::size_t i = 0; i < f.folds(); ++i)
        if (f.row_sum(i) != sizes[i])
            return false;
    for (std::size_t j = 0; j < f.classes(); ++j)
        if (f.column_sum(j) != classes[j])
            return false;
    return std::all_of(f.cells().begin(), f.cells().end(), [](Cell c) { return c >= 0; });
}

bool row_precedes(std::span<const Cell> a, std::span<const Cell> b) noexcept
{
    const Cell sa = std::accumulate(a.begin(), a.end(), Cell{0});
    const Cell sb = std::accumulate(b.begin(), b.end(), Cell{0});
    if (sa != sb)
        return sa < sb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_standardized(const FoldConfiguration& f) noexcept
{
    for (std::size_t i = 1; i < f.folds(); ++i)
        if (row_precedes(f.row(i), f.row(i - 1)))
            return false;
    return true;
}

StandardizedFoldConfiguration standardize(FoldConfiguration f)
{
    if (is_standardized(f))
        return StandardizedFoldConfiguration(std::move(f));

    std::vector<std::size_t> order(f.folds());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&f](std::size_t a, std::size_t b) {
        return row_precedes(f.row(a), f.row(b));
    });

    FoldConfiguration sorted(f.folds(), f.classes());
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto src = f.row(order[i]);
        std::copy(src.begin(), src.end(), sorted.row(i).begin());
    }
    return StandardizedFoldConfiguration(std::move(sorted));
}

} // namespace foldenum
