#include <bhfs/pareto/crowding.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace bhfs {

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front)
{
    const std::size_t size = front.size();
    std::vector<double> distance(size, 0.0);
    if (size == 0) return distance;

    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> order(size);

    auto accumulate = [&](auto value) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return value(front[a]) != value(front[b]) ? value(front[a]) < value(front[b]) : a < b;
        });
        const double lo = static_cast<double>(value(front[order.front()]));
        const double hi = static_cast<double>(value(front[order.back()]));
        for (std::size_t r = 0; r < size; ++r) {
            const std::size_t i = order[r];
            const double v = static_cast<double>(value(front[i]));
            if (v == lo || v == hi) {
                distance[i] = inf;
                continue;
            }
            distance[i] += (static_cast<double>(value(front[order[r + 1]])) -
                            static_cast<double>(value(front[order[r - 1]]))) /
                           (hi - lo);
        }
    };
    accumulate([](const ObjectiveVector& v) { return v.cmax; });
    accumulate([](const ObjectiveVector& v) { return v.tec; });
    return distance;
}

}  // namespace bhfs
