#pragma once

#include <bhfs/ripg/run.hpp>

#include <filesystem>
#include <iosfwd>

namespace bhfs {

/// One JSON object per snapshot:
/// {"iteration":..,"elapsed_ms":..,"archive_size":..,"evaluations":..,"hv":..[,"front":[[cmax,tec],..]]}
void write_trace_jsonl(std::ostream& os, const RunTrace& trace);
void save_trace_jsonl(const std::filesystem::path& path, const RunTrace& trace);

}  // namespace bhfs
