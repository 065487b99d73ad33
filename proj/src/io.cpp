#include "ballpark/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ballpark/errors.hpp"

namespace ballpark {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

PointSet parse_points_text(const std::string& text) {
    std::vector<Point> points;
    std::size_t expected_cols = 0;

    std::istringstream stream(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(stream, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;

        Point p;
        std::size_t col = 0;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const std::size_t comma = body.find(',', pos);
            const std::string cell =
                trimmed(body.substr(pos, (comma == std::string::npos ? body.size() : comma) - pos));
            ++col;
            double value = 0.0;
            const char* begin = cell.data();
            const char* end = cell.data() + cell.size();
            const auto [ptr, ec] = std::from_chars(begin, end, value);
            if (cell.empty() || ec != std::errc() || ptr != end)
                throw ParseError("cell is not a number", row, col);
            p.push_back(value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (expected_cols == 0) {
            expected_cols = p.size();
        } else if (p.size() != expected_cols) {
            throw ParseError("row has " + std::to_string(p.size()) + " columns, expected " +
                                 std::to_string(expected_cols),
                             row, p.size());
        }
        points.push_back(std::move(p));
    }
    if (points.empty()) throw ParseError("no data rows", row == 0 ? 1 : row, 1);
    return PointSet(std::move(points));
}

PointSet parse_points_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_points_text(buffer.str());
}

namespace {

void dump_value(const nlohmann::json& v, std::string& out) {
    using nlohmann::json;
    switch (v.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : v) {
                if (!first) out += ',';
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            out += buf;
            break;
        }
        default:
            out += v.dump();
            break;
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& value) {
    std::string out;
    dump_value(value, out);
    return out;
}

}  // namespace ballpark
