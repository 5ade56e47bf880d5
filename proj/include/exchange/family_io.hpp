#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "exchange/family.hpp"

namespace exchange {

// Family file format:
//
//   # comment lines start with '#'
//   n <N>
//   -            (the empty set)
//   1 3 4        (strictly increasing elements of 1..N, single spaces)
//
// Blank lines are skipped, duplicate sets are rejected and the trailing
// newline is optional. Serialization writes members in canonical order.

/// Throws FormatError on malformed input.
Family parse_family(std::string_view text);
Family read_family_file(const std::string& path);

std::string serialize_family(const Family& family);
void write_family(std::ostream& out, const Family& family);

/// "-" for the empty set, otherwise elements separated by `separator`.
std::string format_members(SubsetMask m, char separator = ' ');

}  // namespace exchange
