#include "foldenum/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace foldenum::oracle {

namespace {

class ColumnSearch {
public:
    ColumnSearch(const FoldSizes& sizes, const ClassDistribution& classes)
        : classes_(classes), open_(sizes.sizes().begin(), sizes.sizes().end()), matrix_(sizes.size(), classes.size())
    {
    }

    std::set<StandardizedFoldConfiguration> run()
    {
        fill(0, 0, classes_[0]);
        return std::move(found_);
    }

private:
    // Places the records of class j still to distribute (left) into folds
    // i, i+1, ... The last fold takes the remainder of each column; the
    // last column takes the remaining capacity of every fold.
    void fill(std::size_t j, std::size_t i, Cell left)
    {
        const std::size_t k = open_.size();
        const std::size_t m = classes_.size();
        if (j + 1 == m) {
            for (std::size_t r = 0; r < k; ++r)
                matrix_(r, j) = open_[r];
            found_.insert(standardize(matrix_));
            return;
        }
        if (i + 1 == k) {
            if (left > open_[i])
                return;
            matrix_(i, j) = left;
            open_[i] -= left;
            fill(j + 1, 0, classes_[j + 1]);
            open_[i] += left;
            return;
        }
        for (Cell x = 0; x <= std::min(left, open_[i]); ++x) {
            matrix_(i, j) = x;
            open_[i] -= x;
            fill(j, i + 1, left - x);
            open_[i] += x;
        }
    }

    const ClassDistribution& classes_;
    std::vector<Cell> open_;
    FoldConfiguration matrix_;
    std::set<StandardizedFoldConfiguration> found_;
};

} // namespace

double search_size_estimate(const FoldSizes& sizes, const ClassDistribution& classes)
{
    double estimate = 1.0;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        for (std::size_t j = 0; j + 1 < classes.size(); ++j)
            estimate *= static_cast<double>(std::min(sizes[i], classes[j]) + 1);
    return estimate;
}

std::set<StandardizedFoldConfiguration> oracle_enumerate(const FoldSizes& sizes, const ClassDistribution& classes,
                                                         double node_limit)
{
    if (sizes.total() != classes.total())
        throw std::invalid_argument("fold sizes and class distribution disagree on the record count");
    const double estimate = search_size_estimate(sizes, classes);
    if (estimate > node_limit) {
        std::ostringstream msg;
        msg << "oracle refuses instance: estimated " << estimate << " search nodes exceeds limit " << node_limit;
        throw InstanceTooLarge(msg.str());
    }
    return ColumnSearch(sizes, classes).run();
}

ConfigCount oracle_count(const FoldSizes& sizes, const ClassDistribution& classes, double node_limit)
{
    return ConfigCount(oracle_enumerate(sizes, classes, node_limit).size());
}

} // namespace foldenum::oracle
