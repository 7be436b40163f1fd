#include "scat2d/scene_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace scat2d {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, int line_no) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw input_error("scene: line " + std::to_string(line_no) +
                          ": bad number '" + std::string(token) + "'");
    return v;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Scene parse_scene(const std::string& text) {
    Scene s;
    bool have_ball = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "ball") {
            if (have_ball)
                throw input_error("scene: line " + std::to_string(line_no) +
                                  ": duplicate ball line");
            if (tokens.size() != 2)
                throw input_error("scene: line " + std::to_string(line_no) +
                                  ": expected 'ball <radius>'");
            s.ball_radius = parse_double(tokens[1], line_no);
            have_ball = true;
        } else if (tokens[0] == "ellipse") {
            if (tokens.size() != 6)
                throw input_error(
                    "scene: line " + std::to_string(line_no) +
                    ": expected 'ellipse <cx> <cy> <semi_major> <semi_minor> <rotation>'");
            const double cx = parse_double(tokens[1], line_no);
            const double cy = parse_double(tokens[2], line_no);
            const double a = parse_double(tokens[3], line_no);
            const double b = parse_double(tokens[4], line_no);
            const double rot = parse_double(tokens[5], line_no);
            s.obstacles.emplace_back(Vec2{cx, cy}, a, b, rot);
        } else {
            throw input_error("scene: line " + std::to_string(line_no) +
                              ": unknown directive '" + std::string(tokens[0]) + "'");
        }
    }
    if (!have_ball) throw input_error("scene: missing 'ball <radius>' line");
    require_valid(s);
    return s;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

std::string serialize_scene(const Scene& s) {
    std::string out = "ball " + format_double(s.ball_radius) + "\n";
    for (const auto& e : s.obstacles) {
        out += "ellipse " + format_double(e.center.x) + " " + format_double(e.center.y) +
               " " + format_double(e.semi_major) + " " + format_double(e.semi_minor) +
               " " + format_double(e.rotation) + "\n";
    }
    return out;
}

}  // namespace scat2d
