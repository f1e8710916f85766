#pragma once

#include <string>

#include "durer/partition.hpp"

namespace durer {

// Line-oriented text format, header "PARTITION v1". Sections BOUNDARY,
// POINTS (x y weight), VERTICES, EDGES (index pairs), FACES (vertex index
// lists) and an optional LABELS section. Numbers print with 17 significant
// digits so save/load round-trips exactly.
std::string save_partition(const Partition& p);
Partition load_partition(const std::string& text);

void save_partition_file(const Partition& p, const std::string& path);
Partition load_partition_file(const std::string& path);

// Parse error with 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

std::string format_real(double v);  // %.17g

}  // namespace durer
