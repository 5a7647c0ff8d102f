// Text format for families on disk, and deterministic rendering helpers.
//
// File layout (line oriented, '#' starts a comment, blank lines ignored):
//
//   pratt-family v1
//   size 4
//   labels 0 1 2 inf        <- optional, one distinct token per element
//   word 0000
//   word 1000
//
// Word bitstrings list element 0 first. Duplicate words are tolerated with
// a warning and deduplicated; saving always writes canonical order, so a
// load/save round trip is byte-stable.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pratt/core.hpp"

namespace pratt {

struct ParseError : Error {
  using Error::Error;
};

// `warnings` collects non-fatal notes (duplicate words).
Family load_family(std::istream& in, std::vector<std::string>* warnings = nullptr);
Family load_family_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

void save_family(std::ostream& out, const Family& f);
void save_family_file(const std::string& path, const Family& f);

// Crossword as bitstring rows, one per line.
std::string render_crossword(const Crossword& c);

}  // namespace pratt
