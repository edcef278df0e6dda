#pragma once

// Serialization helpers shared by the command-line front end.

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qscatter/cxmat.hpp"
#include "qscatter/experiments.hpp"

namespace qscatter::io {

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed config files or literal values.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 17 significant digits, '.' decimal separator, locale independent.
std::string format_number(double value);
double parse_number(std::string_view text);

std::vector<double> parse_list(std::string_view text);
std::string format_list(const std::vector<double>& values);

/// Parses `a+bi`, `a-bi`, `bi` or `a`.
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

// CSV: header row (x name, curve names, "flags"), LF endings; the flags cell
// joins the per-value statuses with ';'.
std::string to_csv(const SweepTable& table);
SweepTable parse_csv(std::string_view text);

struct SvgOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
};

/// 800x600 line chart, one polyline per column built from its ok points.
std::string render_svg(const SweepTable& table, const SvgOptions& options);

/// Flat `key = value` lines, '#' comments. Keys are returned as written.
std::map<std::string, std::string> parse_config(std::string_view text);
std::map<std::string, std::string> load_config(const std::filesystem::path& path);
std::string format_config(const std::map<std::string, std::string>& entries);

std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace qscatter::io
