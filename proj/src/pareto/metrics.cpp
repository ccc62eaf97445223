#include <bhfs/pareto/metrics.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/pareto/archive.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bhfs {

NormalizationContext NormalizationContext::from_points(std::span<const ObjectiveVector> points)
{
    NormalizationContext ctx;
    if (points.empty()) return ctx;
    ctx.min_cmax = ctx.max_cmax = static_cast<double>(points.front().cmax);
    ctx.min_tec = ctx.max_tec = static_cast<double>(points.front().tec);
    for (const auto& p : points) {
        ctx.min_cmax = std::min(ctx.min_cmax, static_cast<double>(p.cmax));
        ctx.max_cmax = std::max(ctx.max_cmax, static_cast<double>(p.cmax));
        ctx.min_tec = std::min(ctx.min_tec, static_cast<double>(p.tec));
        ctx.max_tec = std::max(ctx.max_tec, static_cast<double>(p.tec));
    }
    return ctx;
}

NormalizationContext NormalizationContext::from_fronts(
    std::span<const std::vector<ObjectiveVector>> fronts)
{
    std::vector<ObjectiveVector> all;
    for (const auto& f : fronts) all.insert(all.end(), f.begin(), f.end());
    return from_points(all);
}

std::pair<double, double> NormalizationContext::normalize(const ObjectiveVector& v) const noexcept
{
    auto scale = [](double x, double lo, double hi) { return hi > lo ? (x - lo) / (hi - lo) : 0.0; };
    return {scale(static_cast<double>(v.cmax), min_cmax, max_cmax),
            scale(static_cast<double>(v.tec), min_tec, max_tec)};
}

double hypervolume(std::span<const ObjectiveVector> front, const NormalizationContext& ctx)
{
    const double ref = ctx.reference;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(front.size());
    for (const auto& v : front) {
        auto p = ctx.normalize(v);
        // Clip to the box [0, ref]^2; points outside the universe can fall below 0.
        if (p.first < ref && p.second < ref) pts.emplace_back(std::max(p.first, 0.0), std::max(p.second, 0.0));
    }
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end());

    // Sweep left to right; between consecutive x-coordinates the covered height is set by the
    // lowest y seen so far.
    double area = 0.0;
    double best_y = ref;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        best_y = std::min(best_y, pts[i].second);
        const double next_x = i + 1 < pts.size() ? pts[i + 1].first : ref;
        area += (next_x - pts[i].first) * (ref - best_y);
    }
    return area;
}

double generational_distance(std::span<const ObjectiveVector> front,
                             std::span<const ObjectiveVector> reference_front,
                             const NormalizationContext& ctx)
{
    if (front.empty() || reference_front.empty())
        throw InvalidInput("generational distance needs non-empty fronts");
    std::vector<std::pair<double, double>> ref;
    ref.reserve(reference_front.size());
    for (const auto& r : reference_front) ref.push_back(ctx.normalize(r));

    double sum = 0.0;
    for (const auto& v : front) {
        const auto p = ctx.normalize(v);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& r : ref) {
            const double dx = p.first - r.first;
            const double dy = p.second - r.second;
            best = std::min(best, dx * dx + dy * dy);
        }
        sum += best;
    }
    return std::sqrt(sum) / static_cast<double>(front.size());
}

ReferenceFront build_reference_front(std::span<const std::vector<ObjectiveVector>> fronts)
{
    std::vector<ObjectiveVector> all;
    for (const auto& f : fronts) all.insert(all.end(), f.begin(), f.end());
    if (all.empty()) throw InvalidInput("reference front needs at least one point");
    ReferenceFront out;
    out.context = NormalizationContext::from_points(all);
    // Sorting first makes the quadratic filter's duplicate handling order-independent.
    std::sort(all.begin(), all.end());
    out.front = nondominated(all);
    return out;
}

}  // namespace bhfs
