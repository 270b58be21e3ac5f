#pragma once

#include "cobord/omega.hpp"

#include <string>
#include <vector>

namespace cobord {

struct TableRow {
    std::string monomial;
    std::string coefficient;
};

// Rows in lexicographic key order; rendering is byte-deterministic.
struct CoefficientTable {
    std::vector<TableRow> rows;
};

std::string monomial_str(const Exp& e, const std::vector<std::string>& names);

CoefficientTable series_table(const Series& s, const std::vector<std::string>& names);

// format: "table" aligns columns, "rows" emits tab-separated lines.
std::string render_table(const CoefficientTable& t, const std::string& format);

// Per-face tables for a class, faces ordered by (size, index order).
std::string render_class(const FaceClass& cls, const std::string& format);

std::vector<std::string> default_names(std::uint32_t arity);

}  // namespace cobord
