#include <bhfs/baselines/nondominated_sort.hpp>

#include <bhfs/pareto/archive.hpp>

#include <algorithm>

namespace bhfs {

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<const ObjectiveVector> points)
{
    const std::size_t size = points.size();
    std::vector<std::vector<std::size_t>> dominated_by_me(size);
    std::vector<std::size_t> domination_count(size, 0);
    std::vector<std::vector<std::size_t>> fronts;

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < size; ++p) {
        for (std::size_t q = 0; q < size; ++q) {
            if (dominates(points[p], points[q]))
                dominated_by_me[p].push_back(q);
            else if (dominates(points[q], points[p]))
                ++domination_count[p];
        }
        if (domination_count[p] == 0) current.push_back(p);
    }

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current)
            for (std::size_t q : dominated_by_me[p])
                if (--domination_count[q] == 0) next.push_back(q);
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

}  // namespace bhfs
