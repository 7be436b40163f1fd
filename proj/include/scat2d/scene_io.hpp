// Scene file grammar, shortest round-trip decimal formatting, and CSV
// plumbing shared by the CLI.
#pragma once

#include <string>
#include <string_view>

#include "scat2d/geometry.hpp"

namespace scat2d {

inline constexpr std::string_view kToolVersion = "scat2d 0.1.0";

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// Strict double parser; the full token must be consumed.
double parse_double(std::string_view token, int line_no);

// Line-oriented grammar: blank lines and '#' comments ignored; exactly one
// `ball <radius>` line; zero or more
// `ellipse <cx> <cy> <semi_major> <semi_minor> <rotation>` lines. Obstacle
// indices follow file order, starting at 1. The parsed scene is validated.
Scene parse_scene(const std::string& text);

Scene load_scene(const std::string& path);

// Inverse of parse_scene up to comments; round-trips exactly.
std::string serialize_scene(const Scene& s);

}  // namespace scat2d
