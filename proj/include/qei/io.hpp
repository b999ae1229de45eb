#pragma once

#include <string>

namespace qei {

/// 17 significant digits, enough to reproduce any double exactly.
std::string format_g17(double v);

/// Writes via a temporary file in the same directory, then renames, so
/// readers never observe a partial file. Throws IoError on failure.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace qei
