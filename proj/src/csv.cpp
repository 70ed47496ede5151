#include "entrate/csv.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "entrate/errors.hpp"
#include "entrate/version.hpp"

namespace entrate {

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& command,
                     const std::string& canonical_config, std::uint64_t seed)
    : out_(path, std::ios::binary) {
    if (!out_) throw ConfigError("cannot open output file: " + path);
    std::ostringstream header;
    header << "# entrate " << command << " version=" << kVersion << " seed=" << seed
           << " config=" << std::hex << std::setw(16) << std::setfill('0')
           << fnv1a64(canonical_config);
    out_ << header.str() << "\n";
}

void CsvWriter::columns(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) out_ << (i ? "," : "") << names[i];
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
}

}  // namespace entrate
