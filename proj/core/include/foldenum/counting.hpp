#ifndef FOLDENUM_COUNTING_HPP
#define FOLDENUM_COUNTING_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "foldenum/configuration.hpp"

namespace foldenum {

// Exact, unbounded configuration count.
using ConfigCount = boost::multiprecision::cpp_int;

// Number of standardized fold configurations, obtained by walking the
// enumerator. With threads > 1 the first-fold splits are dealt out
// round-robin to workers; the result is identical to the sequential count.
ConfigCount count_configurations(const FoldSizes& sizes, const ClassDistribution& classes, unsigned threads = 1);

struct SweepRow {
    std::size_t folds = 0;
    FoldSizes sizes;
    ConfigCount count;
    double elapsed_ms = 0.0;
};

// One row per fold count in [k_min, k_max], ascending, each with
// fold_sizes(N, k) and its configuration count. Throws
// std::invalid_argument unless 1 <= k_min <= k_max <= N.
std::vector<SweepRow> sweep(const ClassDistribution& classes, Cell k_min, Cell k_max, unsigned threads = 1);

/* Binary problem with k equal folds of fold_size records: counts the
 * partitions of c0 into at most k parts, none larger than fold_size.
 * Computed with the bounded-partition recurrence
 *
 *     p(n, parts, largest) = p(n, parts, largest - 1) + p(n - largest, parts - 1, largest)
 *
 * which shares nothing with the enumerator and serves as a cross-check.
 * Throws std::invalid_argument if k or fold_size is not positive or c0
 * is outside [0, k * fold_size].
 */
ConfigCount count_binary_equal_folds(Cell c0, Cell k, Cell fold_size);

// Same, taking a full instance. Throws std::invalid_argument unless there
// are exactly two classes and all folds have the same size.
ConfigCount count_binary_equal_folds(const FoldSizes& sizes, const ClassDistribution& classes);

} // namespace foldenum

#endif
