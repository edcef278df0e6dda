#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <system_error>

#include "qscatter/io.hpp"

namespace qscatter::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ParseError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_number(part));
    return out;
}

std::string format_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_number(values[i]);
    }
    return out;
}

Complex parse_complex(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.back() != 'i' && text.back() != 'j') return {parse_number(text), 0.0};

    std::string_view body = text.substr(0, text.size() - 1);
    // The sign separating real and imaginary parts: the last +/- that does
    // not start the literal or follow an exponent marker.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    auto imag_of = [](std::string_view s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_number(s);
    };
    if (split_at == std::string_view::npos) return {0.0, imag_of(body)};
    return {parse_number(body.substr(0, split_at)), imag_of(body.substr(split_at))};
}

std::string format_complex(Complex z) {
    std::string out = format_number(z.real());
    const std::string im = format_number(z.imag());
    out += (im.front() == '-' ? "" : "+");
    out += im;
    out += 'i';
    return out;
}

std::string to_csv(const SweepTable& table) {
    std::string out = table.x_name;
    for (const auto& c : table.columns) out += "," + c;
    out += ",flags\n";
    for (const auto& row : table.rows) {
        out += format_number(row.x);
        for (double v : row.values) out += "," + format_number(v);
        out += ',';
        for (std::size_t i = 0; i < row.flags.size(); ++i) {
            if (i) out += ';';
            out += row.flags[i];
        }
        out += '\n';
    }
    return out;
}

SweepTable parse_csv(std::string_view text) {
    SweepTable table;
    std::vector<std::string_view> lines;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!trim(line).empty()) lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("CSV has no header");

    const auto header = split(lines.front(), ',');
    if (header.size() < 3 || header.back() != "flags") {
        throw ParseError("CSV header must be: x, columns..., flags");
    }
    table.x_name = std::string(header.front());
    for (std::size_t i = 1; i + 1 < header.size(); ++i) table.columns.emplace_back(header[i]);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto cells = split(lines[li], ',');
        if (cells.size() != header.size()) {
            throw ParseError("CSV line " + std::to_string(li + 1) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        SweepRow row;
        row.x = parse_number(cells.front());
        for (std::size_t i = 1; i + 1 < cells.size(); ++i) row.values.push_back(parse_number(cells[i]));
        for (auto f : split(cells.back(), ';')) row.flags.emplace_back(f);
        if (row.flags.size() != row.values.size()) {
            throw ParseError("CSV line " + std::to_string(li + 1) + ": flag count mismatch");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::map<std::string, std::string> parse_config(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("config line " + std::to_string(line_no) + ": empty key");
        out[std::string(key)] = std::string(value);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, std::string> load_config(const std::filesystem::path& path) {
    return parse_config(read_file(path));
}

std::string format_config(const std::map<std::string, std::string>& entries) {
    std::string out;
    for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::random_device rd;
    const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + path.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed for " + path.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into place at " + path.string());
    }
}

}  // namespace qscatter::io
