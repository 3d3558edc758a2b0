#pragma once

#include <string>
#include <vector>

namespace flagbundle::cli {

using Row = std::vector<std::string>;

/// Shortest round-trip text for a double.
std::string number(double x);

std::string markdown_table(const Row& header, const std::vector<Row>& rows);
std::string csv_table(const Row& header, const std::vector<Row>& rows);

}  // namespace flagbundle::cli
