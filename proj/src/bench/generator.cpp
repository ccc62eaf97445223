#include <bhfs/bench/generator.hpp>

#include <bhfs/core/error.hpp>
#include <bhfs/core/instance_io.hpp>
#include <bhfs/core/random.hpp>

#include <algorithm>

namespace bhfs {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::int64_t draw(Rng& rng, IntRange r)
{
    return std::uniform_int_distribution<std::int64_t>(r.low, r.high)(rng);
}

std::string class_id(int n, int g, int m)
{
    return "n" + std::to_string(n) + "_g" + std::to_string(g) + "_m" + std::to_string(m);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::string_view> labels)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](unsigned char c) {
        h ^= c;
        h *= 0x100000001b3ULL;
    };
    for (int shift = 0; shift < 64; shift += 8) mix(static_cast<unsigned char>(master >> shift));
    for (auto label : labels) {
        for (char c : label) mix(static_cast<unsigned char>(c));
        mix(0x1f);  // separator so ("ab","c") != ("a","bc")
    }
    return splitmix64(h);
}

Instance generate_instance(const GeneratorSpec& spec)
{
    for (IntRange r : {spec.proc, spec.energy_proc, spec.energy_block, spec.energy_idle})
        if (r.low < 0 || r.high < r.low) throw InvalidConfig("generator range must satisfy 0 <= low <= high");
    Rng rng(spec.seed);
    Matrix<Time> proc(spec.jobs, spec.stages);
    for (int i = 0; i < spec.jobs; ++i)
        for (int k = 0; k < spec.stages; ++k) proc(i, k) = draw(rng, spec.proc);
    std::vector<Energy> ep(spec.stages), eb(spec.stages), ei(spec.stages);
    for (int k = 0; k < spec.stages; ++k) {
        ep[k] = draw(rng, spec.energy_proc);
        eb[k] = draw(rng, spec.energy_block);
        ei[k] = draw(rng, spec.energy_idle);
    }
    return Instance(spec.id, std::vector<int>(spec.stages, spec.machines), std::move(proc), std::move(ep),
                    std::move(ei), std::move(eb));
}

Benchmark generate_benchmark(std::uint64_t master_seed)
{
    Benchmark out;
    for (int n : kJobClasses)
        for (int g : kStageClasses)
            for (int m : kMachineClasses) {
                GeneratorSpec spec;
                spec.id = class_id(n, g, m);
                spec.jobs = n;
                spec.stages = g;
                spec.machines = m;
                spec.seed = derive_seed(master_seed, {"test", spec.id});
                out.test.push_back(generate_instance(spec));
            }
    for (int n : kJobClasses)
        for (int g : kStageClasses) {
            const std::string cls = "n" + std::to_string(n) + "_g" + std::to_string(g);
            Rng pick(derive_seed(master_seed, {"calibration-machines", cls}));
            GeneratorSpec spec;
            spec.jobs = n;
            spec.stages = g;
            spec.machines = kMachineClasses[uniform_index(pick, std::size(kMachineClasses))];
            spec.id = "cal_" + class_id(n, g, spec.machines);
            spec.seed = derive_seed(master_seed, {"calibration", spec.id});
            out.calibration.push_back(generate_instance(spec));
        }
    return out;
}

std::vector<std::filesystem::path> write_benchmark(const Benchmark& benchmark, const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> written;
    auto dump = [&](const std::vector<Instance>& set, const char* sub) {
        std::filesystem::create_directories(dir / sub);
        for (const auto& inst : set) {
            written.push_back(dir / sub / (inst.id() + ".txt"));
            save_instance(written.back(), inst);
        }
    };
    dump(benchmark.test, "test");
    dump(benchmark.calibration, "calibration");
    return written;
}

std::vector<Instance> load_instances(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<Instance> out;
    for (const auto& f : files) out.push_back(load_instance(f));
    return out;
}

}  // namespace bhfs
