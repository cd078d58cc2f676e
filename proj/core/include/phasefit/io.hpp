#pragma once

#include <string>
#include <string_view>

namespace phasefit {

// Writes to a sibling temp file and renames over path, so readers never see a
// partial file. Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

// Shortest "%.<digits>g" rendering.
std::string format_number(double x, int digits = 17);

}  // namespace phasefit
