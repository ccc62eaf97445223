#include <bhfs/pareto/archive.hpp>

#include <algorithm>

namespace bhfs {

namespace {

// Sort by (cmax, tec, input index) and keep a point iff its energy beats every point before
// it; the earliest copy of a duplicated vector comes first and wins.
template <typename T, typename Proj>
std::vector<T> filter(std::vector<T> items, Proj obj)
{
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& va = obj(items[a]);
        const auto& vb = obj(items[b]);
        return va != vb ? va < vb : a < b;
    });
    std::vector<std::size_t> kept;
    bool any = false;
    Energy best_tec = 0;
    for (std::size_t i : order) {
        const auto& v = obj(items[i]);
        if (!any || v.tec < best_tec) {
            kept.push_back(i);
            best_tec = v.tec;
            any = true;
        }
    }
    std::sort(kept.begin(), kept.end());
    std::vector<T> out;
    out.reserve(kept.size());
    for (std::size_t i : kept) out.push_back(std::move(items[i]));
    return out;
}

}  // namespace

std::vector<Solution> nondominated(std::vector<Solution> solutions)
{
    return filter(std::move(solutions), [](const Solution& s) -> const ObjectiveVector& {
        return s.objectives;
    });
}

std::vector<ObjectiveVector> nondominated(std::span<const ObjectiveVector> points)
{
    return filter(std::vector<ObjectiveVector>(points.begin(), points.end()),
                  [](const ObjectiveVector& v) -> const ObjectiveVector& { return v; });
}

bool ParetoArchive::insert(Solution s)
{
    for (const Solution& e : entries_)
        if (weakly_dominates(e.objectives, s.objectives)) return false;
    std::erase_if(entries_, [&](const Solution& e) { return dominates(s.objectives, e.objectives); });
    entries_.push_back(std::move(s));
    return true;
}

bool ParetoArchive::merge(std::span<const Solution> solutions)
{
    bool changed = false;
    for (const Solution& s : solutions) changed |= insert(s);
    return changed;
}

std::vector<ObjectiveVector> ParetoArchive::points() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const Solution& e : entries_) out.push_back(e.objectives);
    return out;
}

std::vector<ObjectiveVector> ParetoArchive::sorted_points() const
{
    auto out = points();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bhfs
