#include "flagbundle_cli/cli.hpp"

#include <flagbundle/errors.hpp>

#include <fstream>
#include <sstream>

namespace flagbundle::cli {

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "markdown" || text == "md") return Format::Markdown;
    throw ParseError("unknown format '" + text + "' (json, csv, markdown)", 0);
}

std::map<std::string, double> RunConfig::default_tolerances() {
    return {
        {"einstein", 1e-3}, {"curvature", 1e-5}, {"nijenhuis", 1e-3},
        {"cyt", 1e-3},      {"lck", 1e-6},       {"nonkahler", 0.1},
    };
}

void RunConfig::validate() const {
    if (samples < 1) throw DomainError("samples must be at least 1");
    if (fd_step && !(*fd_step > 0.0 && *fd_step < 0.1)) throw DomainError("fd-step must lie in (0, 0.1)");
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    const auto known = default_tolerances();
    for (const auto& [name, value] : tolerances) {
        if (!known.contains(name)) throw DomainError("unknown tolerance '" + name + "'");
        if (!(value > 0.0)) throw DomainError("tolerance '" + name + "' must be positive");
    }
}

double RunConfig::tolerance(const std::string& check) const { return tolerances.at(check); }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_number(const std::string& v, std::size_t line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw ParseError("expected a number, got '" + v + "' on line " + std::to_string(line), line);
}

}  // namespace

void apply_config_text(const std::string& text, RunConfig& cfg) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value on line " + std::to_string(line), line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(to_number(value, line));
        } else if (key == "samples") {
            cfg.samples = static_cast<int>(to_number(value, line));
        } else if (key == "fd_step") {
            cfg.fd_step = to_number(value, line);
        } else if (key == "radius") {
            cfg.radius = to_number(value, line);
        } else if (key == "format") {
            cfg.format = parse_format(value);
        } else if (key.rfind("tol.", 0) == 0) {
            cfg.tolerances[key.substr(4)] = to_number(value, line);
        } else {
            throw ParseError("unknown key '" + key + "' on line " + std::to_string(line), line);
        }
    }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_text(text.str(), cfg);
}

}  // namespace flagbundle::cli
