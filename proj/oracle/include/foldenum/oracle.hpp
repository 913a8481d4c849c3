#ifndef FOLDENUM_ORACLE_HPP
#define FOLDENUM_ORACLE_HPP

#include <set>
#include <stdexcept>

#include "foldenum/configuration.hpp"
#include "foldenum/counting.hpp"

namespace foldenum::oracle {

// Thrown when an instance would make the exhaustive search too expensive.
class InstanceTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr double kDefaultNodeLimit = 1e7;

// Upper bound on the leaves of the unpruned search: the product of
// (min(n_i, c_j) + 1) over the (k - 1) x (m - 1) free cells.
double search_size_estimate(const FoldSizes& sizes, const ClassDistribution& classes);

/* Every k x m non-negative matrix with the given margins, found by plain
 * column-by-column recursion with no symmetry pruning, standardized and
 * collected into a set. Throws InstanceTooLarge when the estimate exceeds
 * node_limit, std::invalid_argument when the margins disagree.
 */
std::set<StandardizedFoldConfiguration> oracle_enumerate(const FoldSizes& sizes, const ClassDistribution& classes,
                                                         double node_limit = kDefaultNodeLimit);

ConfigCount oracle_count(const FoldSizes& sizes, const ClassDistribution& classes,
                         double node_limit = kDefaultNodeLimit);

} // namespace foldenum::oracle

#endif
