#pragma once

#include <bhfs/core/instance.hpp>
#include <bhfs/core/instance_io.hpp>

#include <filesystem>
#include <string>

namespace bhfs::fixtures {

inline std::filesystem::path data_dir() { return BHFS_TEST_DATA_DIR; }

/// Two jobs, two single-machine stages, unit energy rates; job 1 blocks for 3 units.
inline Instance two_job()
{
    Matrix<Time> p(2, 2);
    p(0, 0) = 2; p(0, 1) = 5;
    p(1, 0) = 2; p(1, 1) = 2;
    return Instance("two_job", {1, 1}, p, {1, 1}, {1, 1}, {1, 1}, {.allow_pure_flowshop = true});
}

/// The seven-row illustrative instance, stored as printed.
inline Instance seven_jobs() { return load_instance(data_dir() / "seven_jobs.txt"); }

inline Instance from_rows(std::string id, std::vector<int> machines, std::vector<std::vector<Time>> rows,
                          std::vector<Energy> ep, std::vector<Energy> ei, std::vector<Energy> eb)
{
    Matrix<Time> p(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) p(i, k) = rows[i][k];
    return Instance(std::move(id), std::move(machines), p, std::move(ep), std::move(ei), std::move(eb),
                    {.allow_pure_flowshop = true});
}

}  // namespace bhfs::fixtures
