#pragma once

#include <bhfs/core/instance.hpp>

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace bhfs {

inline constexpr std::uint64_t kDefaultMasterSeed = 0x5eed'2024'0b45ULL;

struct IntRange {
    std::int64_t low = 0;
    std::int64_t high = 0;  ///< inclusive
};

struct GeneratorSpec {
    std::string id;
    int jobs = 10;
    int stages = 2;
    int machines = 2;  ///< same count at every stage
    IntRange proc{1, 99};
    IntRange energy_proc{1, 3};
    IntRange energy_block{5, 7};
    IntRange energy_idle{3, 5};
    std::uint64_t seed = 0;
};

/// Stable 64-bit seed from a master seed and labels (FNV-1a over the labels, then splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::string_view> labels);

Instance generate_instance(const GeneratorSpec& spec);

inline constexpr int kJobClasses[] = {6, 8, 10, 12, 15, 20, 30, 50, 100};
inline constexpr int kStageClasses[] = {2, 3, 4};
inline constexpr int kMachineClasses[] = {2, 3};

struct Benchmark {
    std::vector<Instance> test;         ///< one per (n, g, m): 54 instances
    std::vector<Instance> calibration;  ///< one per (n, g) with m drawn at random: 27 instances
};

/// Ids: `n<n>_g<g>_m<m>` for the test set, `cal_n<n>_g<g>_m<m>` for calibration.
Benchmark generate_benchmark(std::uint64_t master_seed);

/// Writes `<dir>/test/<id>.txt` and `<dir>/calibration/<id>.txt`; returns the paths written.
std::vector<std::filesystem::path> write_benchmark(const Benchmark& benchmark, const std::filesystem::path& dir);

/// Loads every `*.txt` instance in `dir`, sorted by file name.
std::vector<Instance> load_instances(const std::filesystem::path& dir);

}  // namespace bhfs
