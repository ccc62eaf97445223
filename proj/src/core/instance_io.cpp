#include <bhfs/core/instance_io.hpp>

#include <bhfs/core/error.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace bhfs {

namespace {

constexpr std::string_view kHeader = "bhfs-instance v1";

template <typename T>
void write_row(std::ostream& os, const std::vector<T>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
    os << '\n';
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_integers(const std::string& key, const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::int64_t> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw InvalidInput("instance file: non-integer value '" + token + "' for " + key);
        values.push_back(v);
    }
    return values;
}

}  // namespace

void write_instance(std::ostream& os, const Instance& instance)
{
    os << kHeader << '\n';
    os << "id = " << instance.id() << '\n';
    os << "n = " << instance.jobs() << '\n';
    os << "K = " << instance.stages() << '\n';
    os << "machines_per_stage = ";
    write_row(os, instance.machines_per_stage());
    os << "energy_proc = ";
    write_row(os, instance.energy_proc());
    os << "energy_idle = ";
    write_row(os, instance.energy_idle());
    os << "energy_block = ";
    write_row(os, instance.energy_block());
    os << "proc_time =\n";
    for (JobId j = 0; j < instance.jobs(); ++j) {
        os << ' ';
        for (int k = 0; k < instance.stages(); ++k) os << ' ' << instance.proc(j, k);
        os << '\n';
    }
}

void save_instance(const std::filesystem::path& path, const Instance& instance)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write instance file " + path.string());
    write_instance(out, instance);
}

Instance read_instance(std::istream& is, Instance::Options options)
{
    std::string line;
    if (!std::getline(is, line) || trim(line) != kHeader)
        throw InvalidInput("instance file: missing '" + std::string(kHeader) + "' header");

    // Values may continue on following lines until the next `key =` line.
    std::map<std::string, std::string> fields;
    std::string current;
    while (std::getline(is, line)) {
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        if (eq != std::string::npos) {
            current = trim(body.substr(0, eq));
            if (fields.count(current)) throw InvalidInput("instance file: duplicate key " + current);
            fields[current] = body.substr(eq + 1);
        } else {
            if (current.empty()) throw InvalidInput("instance file: value without key: " + body);
            fields[current] += ' ' + body;
        }
    }

    auto field = [&](const std::string& key) -> const std::string& {
        auto it = fields.find(key);
        if (it == fields.end()) throw InvalidInput("instance file: missing field " + key);
        return it->second;
    };
    auto scalar = [&](const std::string& key) {
        auto v = parse_integers(key, field(key));
        if (v.size() != 1) throw InvalidInput("instance file: " + key + " must be a single integer");
        return v.front();
    };

    const auto n = scalar("n");
    const auto stages = scalar("K");
    if (n < 1 || stages < 1) throw InvalidInput("instance file: n and K must be positive");

    auto vec = [&](const std::string& key, std::size_t expected) {
        auto v = parse_integers(key, field(key));
        if (v.size() != expected)
            throw InvalidInput("instance file: " + key + " has " + std::to_string(v.size()) +
                               " values, expected " + std::to_string(expected));
        return v;
    };

    const auto machines64 = vec("machines_per_stage", stages);
    std::vector<int> machines(machines64.begin(), machines64.end());
    const auto flat = vec("proc_time", n * stages);
    Matrix<Time> proc(n, stages);
    for (std::int64_t j = 0; j < n; ++j)
        for (std::int64_t k = 0; k < stages; ++k) proc(j, k) = flat[j * stages + k];

    return Instance(trim(field("id")), std::move(machines), std::move(proc), vec("energy_proc", stages),
                    vec("energy_idle", stages), vec("energy_block", stages), options);
}

Instance load_instance(const std::filesystem::path& path, Instance::Options options)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open instance file " + path.string());
    return read_instance(in, options);
}

}  // namespace bhfs
