#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "matchlab/family.hpp"

namespace matchlab {

// .hyp: first line n, then one member per line as increasing vertex indices;
// '#' starts a comment line, blank lines are ignored.
Family parse_hyp(std::string_view text);
std::string format_hyp(const Family& fam);

Family read_hyp(const std::filesystem::path& path);
void write_hyp(const std::filesystem::path& path, const Family& fam);

}  // namespace matchlab
