#include <bhfs/baselines/nsga2.hpp>

#include <bhfs/baselines/nondominated_sort.hpp>
#include <bhfs/core/error.hpp>
#include <bhfs/pareto/crowding.hpp>
#include <bhfs/ripg/neh.hpp>
#include <bhfs/ripg/operators.hpp>

#include <algorithm>

namespace bhfs {

void Nsga2Config::validate(int jobs) const
{
    if (population_size < 4 || population_size % 2 != 0)
        throw InvalidConfig("nsga2: population size must be even and at least 4");
    if (crossover_prob < 0.0 || crossover_prob > 1.0 || mutation_prob < 0.0 || mutation_prob > 1.0)
        throw InvalidConfig("nsga2: probabilities must lie in [0, 1]");
    if (!iteration_cap && time_budget_ms <= 0) throw InvalidConfig("nsga2: time budget must be positive");
    for (const auto& p : initial_population)
        if (static_cast<int>(p.size()) != jobs)
            throw InvalidConfig("nsga2: initial population member has the wrong length");
}

Permutation order_crossover(const Permutation& first, const Permutation& second, std::size_t lo,
                            std::size_t hi)
{
    const std::size_t n = first.size();
    Permutation child(n, -1);
    std::vector<char> used(n, 0);
    for (std::size_t i = lo; i <= hi; ++i) {
        child[i] = first[i];
        used[first[i]] = 1;
    }
    std::size_t write = (hi + 1) % n;
    for (std::size_t r = 0; r < n; ++r) {
        const JobId job = second[(hi + 1 + r) % n];
        if (used[job]) continue;
        child[write] = job;
        used[job] = 1;
        write = (write + 1) % n;
    }
    return child;
}

Permutation order_crossover(const Permutation& first, const Permutation& second, Rng& rng)
{
    auto a = uniform_index(rng, first.size());
    auto b = uniform_index(rng, first.size());
    if (a > b) std::swap(a, b);
    return order_crossover(first, second, a, b);
}

std::vector<std::size_t> select_survivors(std::span<const ObjectiveVector> points, std::size_t count)
{
    std::vector<std::size_t> survivors;
    for (const auto& front : fast_nondominated_sort(points)) {
        if (survivors.size() + front.size() <= count) {
            survivors.insert(survivors.end(), front.begin(), front.end());
            continue;
        }
        std::vector<ObjectiveVector> members;
        for (std::size_t i : front) members.push_back(points[i]);
        const auto distance = crowding_distance(members);
        std::vector<std::size_t> order(front.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return distance[a] > distance[b]; });
        for (std::size_t r = 0; survivors.size() < count; ++r) survivors.push_back(front[order[r]]);
        break;
    }
    return survivors;
}

namespace {

struct Individual {
    Permutation sequence;
    ObjectiveVector objectives;
    std::size_t rank = 0;
    double crowding = 0.0;
};

void assign_rank_and_crowding(std::vector<Individual>& population)
{
    std::vector<ObjectiveVector> points;
    for (const auto& ind : population) points.push_back(ind.objectives);
    const auto fronts = fast_nondominated_sort(points);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        std::vector<ObjectiveVector> members;
        for (std::size_t i : fronts[r]) members.push_back(points[i]);
        const auto distance = crowding_distance(members);
        for (std::size_t m = 0; m < fronts[r].size(); ++m) {
            population[fronts[r][m]].rank = r;
            population[fronts[r][m]].crowding = distance[m];
        }
    }
}

const Individual& tournament(const std::vector<Individual>& population, Rng& rng)
{
    const Individual& a = population[uniform_index(rng, population.size())];
    const Individual& b = population[uniform_index(rng, population.size())];
    if (a.rank != b.rank) return a.rank < b.rank ? a : b;
    return b.crowding > a.crowding ? b : a;
}

bool chance(Rng& rng, double p)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

RunResult run_nsga2(const Instance& instance, const Nsga2Config& config)
{
    config.validate(instance.jobs());
    Budget budget(config.time_budget_ms, config.iteration_cap);
    Evaluator eval(instance);
    Rng rng(config.rng_seed);
    TraceRecorder recorder(config.trace, budget);
    ParetoArchive archive;
    const auto size = static_cast<std::size_t>(config.population_size);

    std::vector<Individual> population;
    auto add = [&](std::vector<Individual>& into, Permutation seq) {
        const auto objectives = eval(seq);
        archive.insert({seq, objectives});
        into.push_back({std::move(seq), objectives});
    };

    if (!config.initial_population.empty()) {
        for (std::size_t i = 0; i < size; ++i)
            add(population, config.initial_population[i % config.initial_population.size()]);
    } else {
        add(population, neh_makespan(eval));
        add(population, neh_tec(eval));
        while (population.size() < size) {
            Permutation p = identity_permutation(instance.jobs());
            std::shuffle(p.begin(), p.end(), rng);
            add(population, std::move(p));
        }
    }
    assign_rank_and_crowding(population);
    recorder.record(0, archive, eval.evaluations(), true);

    std::uint64_t generations = 0;
    bool stopped = false;
    while (!stopped && !budget.exhausted(generations)) {
        const auto before = archive.size();
        const auto before_points = archive.sorted_points();
        std::vector<Individual> offspring;
        while (offspring.size() < size) {
            const Individual& p1 = tournament(population, rng);
            const Individual& p2 = tournament(population, rng);
            Permutation c1 = p1.sequence;
            Permutation c2 = p2.sequence;
            if (chance(rng, config.crossover_prob)) {
                c1 = order_crossover(p1.sequence, p2.sequence, rng);
                c2 = order_crossover(p2.sequence, p1.sequence, rng);
            }
            if (chance(rng, config.mutation_prob)) c1 = interchange_move(c1, rng);
            if (chance(rng, config.mutation_prob)) c2 = interchange_move(c2, rng);
            add(offspring, std::move(c1));
            add(offspring, std::move(c2));
            if (budget.out_of_time()) {
                stopped = true;
                break;
            }
        }
        if (stopped) break;

        population.insert(population.end(), std::make_move_iterator(offspring.begin()),
                          std::make_move_iterator(offspring.end()));
        std::vector<ObjectiveVector> points;
        for (const auto& ind : population) points.push_back(ind.objectives);
        std::vector<Individual> next;
        for (std::size_t i : select_survivors(points, size)) next.push_back(std::move(population[i]));
        population = std::move(next);
        assign_rank_and_crowding(population);

        ++generations;
        const bool changed = archive.size() != before || archive.sorted_points() != before_points;
        recorder.record(generations, archive, eval.evaluations(), changed);
    }
    return {archive, recorder.finish(generations, archive, eval.evaluations())};
}

}  // namespace bhfs
