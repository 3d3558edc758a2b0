#include "render.hpp"

#include <charconv>
#include <sstream>

namespace flagbundle::cli {

std::string number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string markdown_table(const Row& header, const std::vector<Row>& rows) {
    std::ostringstream out;
    auto line = [&](const Row& r) {
        out << '|';
        for (const std::string& c : r) {
            out << ' ';
            for (char ch : c) out << (ch == '|' ? "\\|" : std::string(1, ch));
            out << " |";
        }
        out << '\n';
    };
    line(header);
    out << '|';
    for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
    out << '\n';
    for (const Row& r : rows) line(r);
    return out.str();
}

namespace {

std::string csv_cell(const std::string& c) {
    if (c.find_first_of(",\"\n") == std::string::npos) return c;
    std::string q = "\"";
    for (char ch : c) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

}  // namespace

std::string csv_table(const Row& header, const std::vector<Row>& rows) {
    std::ostringstream out;
    auto line = [&](const Row& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i]);
        out << '\n';
    };
    line(header);
    for (const Row& r : rows) line(r);
    return out.str();
}

}  // namespace flagbundle::cli
