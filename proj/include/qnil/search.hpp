#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qnil {

/// Bounds for the deterministic searches. Every search that can run out of
/// budget throws BudgetExhausted rather than returning a negative answer.
struct SearchConfig {
    /// Max height of integer triples tried when constructing a pure square root.
    std::int64_t sqrt_height = 64;
    /// Max coordinate height of candidate vectors in the cyclic-vector searches.
    std::int64_t vector_height = 4;
    /// Max coordinate height of perturbation entries in the inductive step.
    std::int64_t perturbation_height = 2;
    /// Max number of perturbation lists tried per candidate vector.
    std::size_t perturbation_budget = 4000;
    /// Max number of candidate vectors tried in the inductive step.
    std::size_t vector_budget = 64;
    /// Max number of candidate vectors tried when looking for a cyclic vector.
    std::size_t cyclic_budget = 20000;
};

/// Position of v in the order 0, 1, -1, 2, -2, ...
constexpr std::int64_t value_rank(std::int64_t v) { return v > 0 ? 2 * v - 1 : -2 * v; }

/// Visits integer tuples of length `dim` with max |entry| = h for h = min_height..max_height.
/// Within a height, tuples are lexicographic under value_rank. Stops and returns true
/// as soon as `visit` returns true.
bool for_each_tuple_by_height(std::size_t dim, std::int64_t min_height, std::int64_t max_height,
                              const std::function<bool(std::span<const std::int64_t>)>& visit);

}  // namespace qnil
