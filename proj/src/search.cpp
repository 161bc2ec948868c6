#include "qnil/search.hpp"

#include <algorithm>
#include <cstdlib>

namespace qnil {

namespace {

constexpr std::int64_t value_at_rank(std::int64_t r) { return r % 2 == 1 ? (r + 1) / 2 : -(r / 2); }

}  // namespace

bool for_each_tuple_by_height(std::size_t dim, std::int64_t min_height, std::int64_t max_height,
                              const std::function<bool(std::span<const std::int64_t>)>& visit) {
    std::vector<std::int64_t> ranks(dim), tuple(dim);
    for (std::int64_t h = min_height; h <= max_height; ++h) {
        const std::int64_t top = 2 * h;  // largest rank with |value| <= h
        std::fill(ranks.begin(), ranks.end(), 0);
        while (true) {
            std::int64_t height = 0;
            for (std::size_t t = 0; t < dim; ++t) {
                tuple[t] = value_at_rank(ranks[t]);
                height = std::max(height, std::abs(tuple[t]));
            }
            if (height == h && visit(tuple)) return true;
            // odometer increment, last coordinate fastest
            std::size_t pos = dim;
            while (pos > 0) {
                --pos;
                if (ranks[pos] < top) {
                    ++ranks[pos];
                    break;
                }
                ranks[pos] = 0;
                if (pos == 0) {
                    pos = dim + 1;
                    break;
                }
            }
            if (pos == dim + 1 || dim == 0) break;
        }
    }
    return false;
}

}  // namespace qnil
