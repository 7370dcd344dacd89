#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "permdes/permutation.hpp"

namespace permdes {

// PERMSET text format, version 1:
//
//   # optional comment lines
//   n m
//   m rows of n space-separated 1-based images
//
// Blank lines are ignored. Output uses LF endings and single spaces.

PermSet parse_permset(std::string_view text);
PermSet read_permset(const std::filesystem::path& path);

void write_permset(std::ostream& out, const PermSet& set);
std::string format_permset(const PermSet& set);

}  // namespace permdes
