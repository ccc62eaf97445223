#include <bhfs/pareto/front_io.hpp>

#include <bhfs/core/error.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bhfs {

void write_front_csv(std::ostream& os, std::vector<ObjectiveVector> front)
{
    std::sort(front.begin(), front.end());
    os << "cmax,tec\n";
    for (const auto& p : front) os << p.cmax << ',' << p.tec << '\n';
}

void save_front_csv(const std::filesystem::path& path, std::vector<ObjectiveVector> front)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write front file " + path.string());
    write_front_csv(out, std::move(front));
}

std::vector<ObjectiveVector> read_front_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line.rfind("cmax,tec", 0) != 0)
        throw InvalidInput("front file: expected header 'cmax,tec'");
    std::vector<ObjectiveVector> out;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        std::istringstream row(line);
        ObjectiveVector v;
        char comma = 0;
        if (!(row >> v.cmax >> comma >> v.tec) || comma != ',')
            throw InvalidInput("front file: malformed row '" + line + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<ObjectiveVector> load_front_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open front file " + path.string());
    return read_front_csv(in);
}

}  // namespace bhfs
