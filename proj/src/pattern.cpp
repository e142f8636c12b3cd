#include "lgcpalm/pattern.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lgcp {

void PointPattern::validate() const {
    if (!(window.area() > 0.0))
        throw std::invalid_argument("PointPattern: window must have positive area");
    for (const auto& p : points) {
        if (!window.contains(p))
            throw std::invalid_argument("PointPattern: point (" + std::to_string(p.x) + ", " +
                                        std::to_string(p.y) + ") outside the window");
    }
}

std::string pattern_to_csv(const PointPattern& pattern) {
    char buf[128];
    std::string out;
    std::snprintf(buf, sizeof(buf), "# window: %.17g %.17g %.17g %.17g\n", pattern.window.x0,
                  pattern.window.x1, pattern.window.y0, pattern.window.y1);
    out += buf;
    if (pattern.seed) {
        std::snprintf(buf, sizeof(buf), "# seed: %llu\n",
                      static_cast<unsigned long long>(*pattern.seed));
        out += buf;
    }
    out += "x,y\n";
    for (const auto& p : pattern.points) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

PointPattern pattern_from_csv(const std::string& text) {
    if (trim(text).empty())
        throw std::invalid_argument("pattern_from_csv: empty input");

    PointPattern pattern;
    bool have_window = false;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = trim(line.substr(1));
            if (body.rfind("window", 0) == 0) {
                std::string rest = body.substr(6);
                for (char& c : rest)
                    if (c == ':' || c == ',') c = ' ';
                std::istringstream vals(rest);
                if (!(vals >> pattern.window.x0 >> pattern.window.x1 >> pattern.window.y0 >>
                      pattern.window.y1))
                    throw std::invalid_argument("pattern_from_csv: malformed window comment");
                have_window = true;
            } else if (body.rfind("seed", 0) == 0) {
                std::string rest = body.substr(4);
                for (char& c : rest)
                    if (c == ':') c = ' ';
                std::istringstream vals(rest);
                unsigned long long seed = 0;
                if (vals >> seed) pattern.seed = seed;
            }
            continue;
        }
        if (line == "x,y") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("pattern_from_csv: malformed row " +
                                        std::to_string(line_no) + ": " + line);
        try {
            std::size_t used_x = 0, used_y = 0;
            const std::string xs = trim(line.substr(0, comma));
            const std::string ys = trim(line.substr(comma + 1));
            const double x = std::stod(xs, &used_x);
            const double y = std::stod(ys, &used_y);
            if (used_x != xs.size() || used_y != ys.size())
                throw std::invalid_argument("trailing junk");
            pattern.points.push_back(Point2{x, y});
        } catch (const std::exception&) {
            throw std::invalid_argument("pattern_from_csv: malformed row " +
                                        std::to_string(line_no) + ": " + line);
        }
    }
    if (!have_window)
        throw std::invalid_argument("pattern_from_csv: missing window declaration");
    pattern.validate();
    return pattern;
}

PointPattern load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_pattern: cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return pattern_from_csv(buffer.str());
}

void save_pattern(const PointPattern& pattern, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_pattern: cannot open " + path);
    out << pattern_to_csv(pattern);
}

} // namespace lgcp
