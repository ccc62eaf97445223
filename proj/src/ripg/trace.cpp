#include <bhfs/ripg/trace.hpp>

#include <bhfs/core/error.hpp>

#include <json.hpp>

#include <fstream>

namespace bhfs {

void write_trace_jsonl(std::ostream& os, const RunTrace& trace)
{
    for (const TraceRecord& r : trace.snapshots) {
        nlohmann::ordered_json j;
        j["iteration"] = r.iteration;
        j["elapsed_ms"] = r.elapsed_ms;
        j["archive_size"] = r.archive_size;
        j["evaluations"] = r.evaluations;
        j["hv"] = r.hypervolume;
        if (!r.front.empty()) {
            auto& front = j["front"] = nlohmann::ordered_json::array();
            for (const auto& p : r.front) front.push_back({p.cmax, p.tec});
        }
        os << j.dump() << '\n';
    }
}

void save_trace_jsonl(const std::filesystem::path& path, const RunTrace& trace)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write trace file " + path.string());
    write_trace_jsonl(out, trace);
}

}  // namespace bhfs
