#include <bhfs/exact/lp_format.hpp>

#include <bhfs/core/error.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bhfs {

std::string format_number(double value)
{
    if (value == 0.0) return "0";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, end);
}

namespace {

constexpr std::size_t kWrapColumn = 240;

class LineWriter {
public:
    explicit LineWriter(std::ostream& os) : os_(os) {}

    void begin(const std::string& head)
    {
        os_ << ' ' << head;
        column_ = head.size() + 1;
    }
    void put(const std::string& token)
    {
        if (column_ + token.size() + 1 > kWrapColumn) {
            os_ << "\n   ";
            column_ = 3;
        }
        os_ << ' ' << token;
        column_ += token.size() + 1;
    }
    void end() { os_ << '\n'; }

private:
    std::ostream& os_;
    std::size_t column_ = 0;
};

void write_terms(LineWriter& w, const MilpModel& model, const std::vector<Term>& terms)
{
    bool first = true;
    for (const Term& t : terms) {
        const double mag = std::fabs(t.coef);
        std::string token;
        if (t.coef < 0)
            token = "- ";
        else if (!first)
            token = "+ ";
        if (mag != 1.0) token += format_number(mag) + " ";
        token += model.variables[t.var].name;
        w.put(token);
        first = false;
    }
    if (terms.empty()) w.put("0");
}

const char* sense_text(Sense s)
{
    switch (s) {
    case Sense::LessEqual: return "<=";
    case Sense::GreaterEqual: return ">=";
    case Sense::Equal: return "=";
    }
    return "=";
}

Constraint family_of(const std::string& row_name)
{
    const auto tag = row_name.substr(0, row_name.find('_'));
    for (int c = 0; c <= static_cast<int>(Constraint::ObjectiveBound); ++c) {
        const auto family = static_cast<Constraint>(c);
        if (constraint_tag(family) == tag) return family;
    }
    throw InvalidInput("LP file: unknown constraint family in row " + row_name);
}

double parse_number(const std::string& token)
{
    if (token == "+inf" || token == "inf" || token == "+infinity" || token == "infinity")
        return HUGE_VAL;
    if (token == "-inf" || token == "-infinity") return -HUGE_VAL;
    double v = 0.0;
    const char* first = token.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw InvalidInput("LP file: bad number '" + token + "'");
    return v;
}

bool is_number(const std::string& token)
{
    if (token.empty()) return false;
    double v = 0.0;
    const char* first = token.data();
    if (*first == '+' || *first == '-') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

void write_lp(std::ostream& os, const MilpModel& model)
{
    os << "\\ bhfs model for instance " << model.instance_id << '\n';
    os << "\\ big_M = " << model.big_m << '\n';
    os << "Minimize\n";
    LineWriter w(os);
    w.begin("obj:");
    write_terms(w, model, model.objective);
    w.end();
    os << "Subject To\n";
    for (const Row& row : model.rows) {
        w.begin(row.name + ":");
        write_terms(w, model, row.terms);
        w.put(sense_text(row.sense));
        w.put(format_number(row.rhs));
        w.end();
    }
    os << "Bounds\n";
    for (const Variable& v : model.variables) {
        if (v.kind != VarKind::Continuous) continue;
        if (v.upper)
            os << ' ' << format_number(v.lower) << " <= " << v.name << " <= " << format_number(*v.upper) << '\n';
        else
            os << ' ' << v.name << " >= " << format_number(v.lower) << '\n';
    }
    os << "Binaries\n";
    LineWriter bw(os);
    bool open = false;
    for (const Variable& v : model.variables) {
        if (v.kind != VarKind::Binary) continue;
        if (!open) {
            bw.begin(v.name);
            open = true;
        } else {
            bw.put(v.name);
        }
    }
    if (open) bw.end();
    os << "End\n";
}

void save_lp(const std::filesystem::path& path, const MilpModel& model)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write LP file " + path.string());
    write_lp(out, model);
    if (!out) throw InvalidInput("failed writing LP file " + path.string());
}

MilpModel read_lp(std::istream& is)
{
    enum class Section { Header, Objective, Constraints, Bounds, Binaries, Done };
    Section section = Section::Header;
    MilpModel model;
    std::vector<std::string> objective_tokens;
    std::vector<std::vector<std::string>> row_tokens;
    std::vector<std::string> bounds_lines;
    std::vector<std::string> binaries;

    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("\\", 0) == 0) {
            std::istringstream c(line.substr(1));
            std::string a, b, eq;
            c >> a;
            if (a == "bhfs") {
                std::string rest;
                c >> b >> b >> b >> b;  // "model for instance <id>"
                model.instance_id = b;
            } else if (a == "big_M") {
                c >> eq >> model.big_m;
            }
            continue;
        }
        std::istringstream in(line);
        std::string first;
        if (!(in >> first)) continue;
        if (line.front() != ' ') {
            if (first == "Minimize") section = Section::Objective;
            else if (first == "Subject") section = Section::Constraints;
            else if (first == "Bounds") section = Section::Bounds;
            else if (first == "Binaries") section = Section::Binaries;
            else if (first == "End") section = Section::Done;
            else throw InvalidInput("LP file: unexpected line '" + line + "'");
            continue;
        }
        std::vector<std::string> tokens{first};
        for (std::string t; in >> t;) tokens.push_back(t);
        switch (section) {
        case Section::Objective:
            objective_tokens.insert(objective_tokens.end(), tokens.begin(), tokens.end());
            break;
        case Section::Constraints:
            if (tokens.front().back() == ':' && line.rfind("   ", 0) != 0)
                row_tokens.push_back(tokens);
            else if (!row_tokens.empty())
                row_tokens.back().insert(row_tokens.back().end(), tokens.begin(), tokens.end());
            else
                throw InvalidInput("LP file: continuation line before any row");
            break;
        case Section::Bounds: bounds_lines.push_back(line); break;
        case Section::Binaries: binaries.insert(binaries.end(), tokens.begin(), tokens.end()); break;
        default: throw InvalidInput("LP file: content outside a section: '" + line + "'");
        }
    }
    if (section != Section::Done) throw InvalidInput("LP file: missing End");

    for (const auto& b : bounds_lines) {
        std::istringstream in(b);
        std::vector<std::string> t;
        for (std::string s; in >> s;) t.push_back(s);
        Variable v;
        if (t.size() == 3 && t[1] == ">=") {
            v.name = t[0];
            v.lower = parse_number(t[2]);
        } else if (t.size() == 5 && t[1] == "<=" && t[3] == "<=") {
            v.name = t[2];
            v.lower = parse_number(t[0]);
            v.upper = parse_number(t[4]);
        } else {
            throw InvalidInput("LP file: unsupported bound '" + b + "'");
        }
        model.variables.push_back(v);
    }
    for (const auto& name : binaries) model.variables.push_back({name, VarKind::Binary, 0.0, std::nullopt});
    model.reindex();

    auto parse_terms = [&](const std::vector<std::string>& t, std::size_t from, std::size_t to) {
        std::vector<Term> terms;
        double sign = 1.0;
        double coef = 1.0;
        for (std::size_t i = from; i < to; ++i) {
            const auto& tok = t[i];
            if (tok == "+") {
                sign = 1.0;
            } else if (tok == "-") {
                sign = -1.0;
            } else if (is_number(tok)) {
                coef = parse_number(tok);
            } else {
                terms.push_back({model.var(tok), sign * coef});
                sign = 1.0;
                coef = 1.0;
            }
        }
        return terms;
    };

    if (objective_tokens.empty() || objective_tokens.front() != "obj:")
        throw InvalidInput("LP file: objective must be named obj");
    model.objective = parse_terms(objective_tokens, 1, objective_tokens.size());
    if (model.objective.size() == 0 && objective_tokens.size() == 2 && objective_tokens[1] == "0")
        model.objective.clear();

    for (const auto& t : row_tokens) {
        if (t.size() < 3) throw InvalidInput("LP file: truncated row " + t.front());
        Row row;
        row.name = t.front().substr(0, t.front().size() - 1);
        row.family = family_of(row.name);
        const auto& sense = t[t.size() - 2];
        if (sense == "<=") row.sense = Sense::LessEqual;
        else if (sense == ">=") row.sense = Sense::GreaterEqual;
        else if (sense == "=") row.sense = Sense::Equal;
        else throw InvalidInput("LP file: bad sense in row " + row.name);
        row.rhs = parse_number(t.back());
        row.terms = parse_terms(t, 1, t.size() - 2);
        model.rows.push_back(std::move(row));
    }
    return model;
}

MilpModel load_lp(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open LP file " + path.string());
    return read_lp(in);
}

std::map<std::string, double> read_solution(std::istream& is)
{
    std::map<std::string, double> values;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream in(line);
        std::string name, value, extra;
        if (!(in >> name >> value) || (in >> extra)) continue;
        if (!is_number(value)) continue;
        values[name] = parse_number(value);
    }
    return values;
}

}  // namespace bhfs
