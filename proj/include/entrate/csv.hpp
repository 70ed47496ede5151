#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace entrate {

/// Decimal rendering with 17 significant digits, '.' decimal point, no
/// locale dependence; format is that of printf("%.17g").
std::string format_g17(double value);

std::uint64_t fnv1a64(std::string_view text);

/// CSV emitter with the reproducibility header every output file starts with:
///   # entrate <command> version=<v> seed=<s> config=<hex digest>
/// Rows are comma-separated with LF line endings.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& command,
              const std::string& canonical_config, std::uint64_t seed);

    void columns(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);

    static std::string num(double value) { return format_g17(value); }

private:
    std::ofstream out_;
};

}  // namespace entrate
