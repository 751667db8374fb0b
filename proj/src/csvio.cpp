#include "mohaea/csvio.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mohaea {

std::string format_double(double v)
{
    // %.17g round-trips doubles exactly, so resumed experiments reproduce
    // the same bytes as uninterrupted ones
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_objectives_csv(std::ostream& os, const std::vector<ObjectiveVector>& points)
{
    if (points.empty())
        throw std::invalid_argument("refusing to write an empty objective set");
    const std::size_t m = points.front().size();
    for (std::size_t i = 0; i < m; ++i)
        os << (i ? ",f" : "f") << i + 1;
    os << '\n';
    for (const auto& p : points) {
        if (p.size() != m)
            throw std::invalid_argument("ragged objective set");
        for (std::size_t i = 0; i < m; ++i) {
            if (i)
                os << ',';
            os << format_double(p[i]);
        }
        os << '\n';
    }
}

namespace {

std::ofstream open_out(const std::filesystem::path& path)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open for writing: " + path.string());
    return os;
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, const std::filesystem::path& path, int lineno)
{
    // strtod instead of std::stod: stod raises out_of_range on subnormal
    // values, which legitimately occur in objective data
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (s.empty() || end != begin + s.size())
        throw std::runtime_error("malformed CSV value '" + s + "' at " + path.string() + ":" +
                                 std::to_string(lineno));
    return v;
}

} // namespace

void write_objectives_csv(const std::filesystem::path& path, const std::vector<ObjectiveVector>& points)
{
    auto os = open_out(path);
    write_objectives_csv(os, points);
}

std::vector<ObjectiveVector> read_objectives_csv(const std::filesystem::path& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open: " + path.string());
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("empty CSV: " + path.string());
    const std::size_t m = split_csv_line(line).size();
    if (m < 2)
        throw std::runtime_error("front CSV needs at least two objective columns: " + path.string());

    std::vector<ObjectiveVector> points;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto fields = split_csv_line(line);
        if (fields.size() != m)
            throw std::runtime_error("wrong column count at " + path.string() + ":" +
                                     std::to_string(lineno));
        ObjectiveVector p(m);
        for (std::size_t i = 0; i < m; ++i)
            p[i] = parse_double(fields[i], path, lineno);
        points.push_back(std::move(p));
    }
    return points;
}

void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows)
{
    auto os = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("table row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ',';
            os << format_double(row[i]);
        }
        os << '\n';
    }
}

std::vector<std::vector<double>> read_table_csv(const std::filesystem::path& path,
                                                std::vector<std::string>* header_out)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open: " + path.string());
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("empty CSV: " + path.string());
    auto header = split_csv_line(line);
    if (header_out)
        *header_out = header;

    std::vector<std::vector<double>> rows;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::runtime_error("wrong column count at " + path.string() + ":" +
                                     std::to_string(lineno));
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i)
            row[i] = parse_double(fields[i], path, lineno);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace mohaea
