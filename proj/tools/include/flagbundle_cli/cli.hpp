#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagbundle::cli {

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& text);

struct RunConfig {
    std::uint64_t seed = 1;
    int samples = 100;
    std::optional<double> fd_step;  // unset: each suite picks its own default
    double radius = 2.0;
    Format format = Format::Json;
    std::map<std::string, double> tolerances = default_tolerances();

    static std::map<std::string, double> default_tolerances();
    /// Throws DomainError on samples < 1, fd_step outside (0, 0.1), or unknown tolerance names.
    void validate() const;
    double tolerance(const std::string& check) const;
};

/// key=value lines; '#' starts a comment. Keys: seed, samples, fd_step,
/// radius, format, tol.<check>. Throws ParseError with the line number.
void apply_config_text(const std::string& text, RunConfig& cfg);
void apply_config_file(const std::string& path, RunConfig& cfg);

/// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagbundle::cli
