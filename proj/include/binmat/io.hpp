#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "binmat/matroid.hpp"

namespace binmat {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// The ".bm" text format:
//
//   name <string>
//   rank <r>
//   elements <label_1> ... <label_n>
//   <r rows of n space-separated 0/1 entries>
//
// Blank lines and lines whose first non-blank character is '#' are ignored.
// The rows must be independent. Malformed input throws kMalformedInput.

NamedMatroid parse_bm(std::istream& in);
NamedMatroid parse_bm(std::string_view text);
NamedMatroid read_bm_file(const std::filesystem::path& path);

/// Writes the canonical (reduced echelon) representation.
void write_bm(std::ostream& out, std::string_view name, const Matroid& m);
std::string to_bm(std::string_view name, const Matroid& m);

}  // namespace binmat
