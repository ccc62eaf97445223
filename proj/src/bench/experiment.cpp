#include <bhfs/bench/experiment.hpp>

#include <bhfs/bench/generator.hpp>
#include <bhfs/core/error.hpp>
#include <bhfs/pareto/front_io.hpp>
#include <bhfs/pareto/metrics.hpp>
#include <bhfs/ripg/trace.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>
#include <tuple>

namespace bhfs {

const char* to_string(Method method)
{
    switch (method) {
    case Method::Ripg: return "ripg";
    case Method::Nsga2: return "nsga2";
    case Method::Moig: return "moig";
    }
    return "?";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::Ripg, Method::Nsga2, Method::Moig})
        if (name == to_string(m)) return m;
    throw InvalidConfig("unknown method '" + std::string(name) + "' (expected ripg, nsga2 or moig)");
}

void ExperimentPlan::validate() const
{
    if (instances.empty()) throw InvalidConfig("experiment plan has no instances");
    if (methods.empty()) throw InvalidConfig("experiment plan has no methods");
    if (replications < 1) throw InvalidConfig("replications must be at least 1");
    if (budget_factor_ms < 1) throw InvalidConfig("budget factor must be positive");
    if (workers < 1) throw InvalidConfig("workers must be at least 1");
}

std::int64_t ExperimentPlan::budget_ms(const Instance& instance) const
{
    return static_cast<std::int64_t>(instance.jobs()) * instance.stages() * budget_factor_ms;
}

std::uint64_t run_seed(std::uint64_t master_seed, const std::string& instance_id, Method method, int rep)
{
    return derive_seed(master_seed, {instance_id, to_string(method), std::to_string(rep)});
}

namespace {

std::string number(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

double parse_double(const std::string& s)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidInput("bad number '" + s + "' in CSV");
    return v;
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string run_stem(Method method, int rep) { return std::string(to_string(method)) + "_rep" + std::to_string(rep); }

RunResult execute(const ExperimentPlan& plan, const Instance& instance, Method method, std::uint64_t seed)
{
    const std::int64_t budget = plan.budget_ms(instance);
    switch (method) {
    case Method::Ripg: {
        RipgConfig c = plan.ripg;
        c.time_budget_ms = budget;
        c.rng_seed = seed;
        c.iteration_cap = plan.iteration_cap;
        return run_ripg(instance, c);
    }
    case Method::Nsga2: {
        Nsga2Config c = plan.nsga2;
        c.time_budget_ms = budget;
        c.rng_seed = seed;
        c.iteration_cap = plan.iteration_cap;
        return run_nsga2(instance, c);
    }
    case Method::Moig: {
        MoigConfig c = plan.moig;
        c.time_budget_ms = budget;
        c.rng_seed = seed;
        c.iteration_cap = plan.iteration_cap;
        return run_moig(instance, c);
    }
    }
    throw InvalidConfig("unknown method");
}

void save_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << text;
}

}  // namespace

std::vector<MetricRow> compute_metrics(const std::map<std::string, std::vector<StoredFront>>& fronts,
                                       const std::map<std::string, std::vector<ObjectiveVector>>& extra,
                                       std::map<std::string, std::vector<ObjectiveVector>>* reference)
{
    std::vector<MetricRow> rows;
    for (const auto& [id, stored] : fronts) {
        std::vector<std::vector<ObjectiveVector>> universe;
        for (const auto& f : stored) universe.push_back(f.front);
        if (auto it = extra.find(id); it != extra.end()) universe.push_back(it->second);
        const ReferenceFront ref = build_reference_front(universe);
        if (reference) (*reference)[id] = ref.front;
        for (const auto& f : stored) {
            if (f.front.empty()) continue;
            rows.push_back({id, f.method, f.rep, hypervolume(f.front, ref.context),
                            generational_distance(f.front, ref.front, ref.context)});
        }
    }
    return rows;
}

ExperimentResults run_experiment(const ExperimentPlan& plan)
{
    plan.validate();
    const auto& out = plan.output_dir;
    for (const auto& inst : plan.instances) {
        std::filesystem::create_directories(out / "fronts" / inst.id());
        if (plan.write_traces) std::filesystem::create_directories(out / "traces" / inst.id());
    }
    std::filesystem::create_directories(out / "reference");

    ExperimentResults results;
    for (const auto& inst : plan.instances)
        for (Method m : plan.methods)
            for (int r = 0; r < plan.replications; ++r) {
                RunRecord rec;
                rec.instance = inst.id();
                rec.method = m;
                rec.rep = r;
                rec.seed = run_seed(plan.master_seed, inst.id(), m, r);
                rec.budget_ms = plan.budget_ms(inst);
                results.runs.push_back(std::move(rec));
            }
    std::map<std::string, const Instance*> by_id;
    for (const auto& inst : plan.instances) {
        if (!by_id.emplace(inst.id(), &inst).second) throw InvalidConfig("duplicate instance id " + inst.id());
        results.shapes[inst.id()] = {inst.jobs(), inst.stages(), inst.machines(0)};
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < results.runs.size();) {
            RunRecord& rec = results.runs[i];
            try {
                const Instance& inst = *by_id.at(rec.instance);
                RunResult run = execute(plan, inst, rec.method, rec.seed);
                rec.elapsed_ms = run.trace.elapsed_ms;
                rec.iterations = run.trace.iterations;
                rec.evaluations = run.trace.evaluations;
                rec.front = run.archive.sorted_points();
                const std::string stem = run_stem(rec.method, rec.rep);
                save_front_csv(out / "fronts" / rec.instance / (stem + ".csv"), rec.front);
                if (plan.write_traces) save_trace_jsonl(out / "traces" / rec.instance / (stem + ".jsonl"), run.trace);
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
        }
    };
    const int threads = std::min<int>(plan.workers, static_cast<int>(results.runs.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::map<std::string, std::vector<StoredFront>> fronts;
    for (const auto& rec : results.runs)
        if (!rec.error) fronts[rec.instance].push_back({to_string(rec.method), rec.rep, rec.front});
    results.metrics = compute_metrics(fronts, plan.extra_fronts, &results.reference);
    for (const auto& [id, front] : results.reference) save_front_csv(out / "reference" / (id + ".csv"), front);

    std::ostringstream runs;
    runs << "instance,method,rep,seed,budget_ms,elapsed_ms,iterations,evaluations,status\n";
    for (const auto& r : results.runs)
        runs << r.instance << ',' << to_string(r.method) << ',' << r.rep << ',' << r.seed << ',' << r.budget_ms << ','
             << number(r.elapsed_ms) << ',' << r.iterations << ',' << r.evaluations << ','
             << (r.error ? "error" : "ok") << '\n';
    save_text(out / "runs.csv", runs.str());
    std::ostringstream metrics;
    write_metrics_csv(metrics, results.metrics);
    save_text(out / "metrics.csv", metrics.str());
    std::ostringstream shapes;
    write_shapes_csv(shapes, results.shapes);
    save_text(out / "instances.csv", shapes.str());
    return results;
}

std::map<std::string, std::vector<StoredFront>> load_fronts(const std::filesystem::path& output_dir)
{
    std::map<std::string, std::vector<StoredFront>> out;
    for (const auto& dir : std::filesystem::directory_iterator(output_dir / "fronts")) {
        if (!dir.is_directory()) continue;
        auto& list = out[dir.path().filename().string()];
        for (const auto& file : std::filesystem::directory_iterator(dir.path())) {
            const std::string stem = file.path().stem().string();
            const auto cut = stem.rfind("_rep");
            if (file.path().extension() != ".csv" || cut == std::string::npos) continue;
            list.push_back({stem.substr(0, cut), std::stoi(stem.substr(cut + 4)), load_front_csv(file.path())});
        }
        std::sort(list.begin(), list.end(), [](const StoredFront& a, const StoredFront& b) {
            return std::tie(a.method, a.rep) < std::tie(b.method, b.rep);
        });
    }
    return out;
}

void write_metrics_csv(std::ostream& os, const std::vector<MetricRow>& rows)
{
    os << "instance,method,rep,hv,gd\n";
    for (const auto& r : rows)
        os << r.instance << ',' << r.method << ',' << r.rep << ',' << number(r.hv) << ',' << number(r.gd) << '\n';
}

std::vector<MetricRow> read_metrics_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != "instance,method,rep,hv,gd")
        throw InvalidInput("metrics CSV must start with header instance,method,rep,hv,gd");
    std::vector<MetricRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != 5) throw InvalidInput("metrics CSV row needs 5 fields: " + line);
        rows.push_back({cells[0], cells[1], std::stoi(cells[2]), parse_double(cells[3]), parse_double(cells[4])});
    }
    return rows;
}

std::vector<MetricRow> load_metrics_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    return read_metrics_csv(in);
}

void write_shapes_csv(std::ostream& os, const std::map<std::string, InstanceShape>& shapes)
{
    os << "instance,n,g,m\n";
    for (const auto& [id, s] : shapes) os << id << ',' << s.jobs << ',' << s.stages << ',' << s.machines << '\n';
}

std::map<std::string, InstanceShape> load_shapes_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::string line;
    std::getline(in, line);
    std::map<std::string, InstanceShape> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto c = split_csv(line);
        if (c.size() != 4) throw InvalidInput("instances CSV row needs 4 fields: " + line);
        out[c[0]] = {std::stoi(c[1]), std::stoi(c[2]), std::stoi(c[3])};
    }
    return out;
}

}  // namespace bhfs
