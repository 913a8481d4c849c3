#include "foldenum/counting.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "foldenum/partition.hpp"

namespace foldenum {

namespace {

ConfigCount count_shard(const FoldSizes& sizes, const ClassDistribution& classes, Shard shard)
{
    PartitionEnumerator gen(sizes, classes, shard);
    ConfigCount total = 0;
    std::uint64_t run = 0;
    while (gen.next()) {
        if (++run == std::numeric_limits<std::uint64_t>::max()) {
            total += run;
            run = 0;
        }
    }
    total += run;
    return total;
}

} // namespace

ConfigCount count_configurations(const FoldSizes& sizes, const ClassDistribution& classes, unsigned threads)
{
    // Validate on the calling thread so errors surface as exceptions here.
    PartitionEnumerator probe(sizes, classes);
    if (threads <= 1 || sizes.size() == 1)
        return count_shard(sizes, classes, {});

    std::vector<ConfigCount> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        workers.emplace_back([&, w] { partial[w] = count_shard(sizes, classes, Shard{w, threads}); });
    for (auto& t : workers)
        t.join();

    ConfigCount total = 0;
    for (const auto& p : partial)
        total += p;
    return total;
}

std::vector<SweepRow> sweep(const ClassDistribution& classes, Cell k_min, Cell k_max, unsigned threads)
{
    if (k_min < 1)
        throw std::invalid_argument("minimum fold count must be positive");
    if (k_min > k_max)
        throw std::invalid_argument("minimum fold count exceeds maximum");
    if (k_max > classes.total())
        throw std::invalid_argument("fold count exceeds records");

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (Cell k = k_min; k <= k_max; ++k) {
        FoldSizes sizes = fold_sizes(classes.total(), k);
        const auto start = std::chrono::steady_clock::now();
        ConfigCount count = count_configurations(sizes, classes, threads);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back(SweepRow{static_cast<std::size_t>(k), std::move(sizes), std::move(count), elapsed.count()});
    }
    return rows;
}

ConfigCount count_binary_equal_folds(Cell c0, Cell k, Cell fold_size)
{
    if (k < 1)
        throw std::invalid_argument("fold count must be positive");
    if (fold_size < 1)
        throw std::invalid_argument("fold size must be positive");
    if (c0 < 0 || c0 > k * fold_size)
        throw std::invalid_argument("class cardinality " + std::to_string(c0) + " does not fit " + std::to_string(k) +
                                    " folds of size " + std::to_string(fold_size));

    const auto n_max = static_cast<std::size_t>(c0);
    const auto parts_max = static_cast<std::size_t>(k);
    // table[n][p]: partitions of n into at most p parts, each part bounded
    // by the current `largest`. Starts at largest = 0.
    std::vector<std::vector<ConfigCount>> table(n_max + 1, std::vector<ConfigCount>(parts_max + 1, 0));
    for (std::size_t p = 0; p <= parts_max; ++p)
        table[0][p] = 1;

    for (Cell largest = 1; largest <= fold_size; ++largest) {
        const auto step = static_cast<std::size_t>(largest);
        // Ascending n so that table[n - step] already includes this bound.
        for (std::size_t n = step; n <= n_max; ++n)
            for (std::size_t p = parts_max; p >= 1; --p)
                table[n][p] += table[n - step][p - 1];
    }
    return table[n_max][parts_max];
}

ConfigCount count_binary_equal_folds(const FoldSizes& sizes, const ClassDistribution& classes)
{
    if (classes.size() != 2)
        throw std::invalid_argument("binary cross-check needs exactly two classes");
    if (!sizes.all_equal())
        throw std::invalid_argument("binary cross-check needs equal fold sizes");
    if (sizes.total() != classes.total())
        throw std::invalid_argument("fold sizes and class distribution disagree on the record count");
    return count_binary_equal_folds(classes[0], static_cast<Cell>(sizes.size()), sizes[0]);
}

} // namespace foldenum
