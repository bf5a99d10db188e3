#pragma once

#include <iosfwd>
#include <string>

#include "sp/core.hpp"

namespace sp {

// Thrown on malformed election files; the message names the line number.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Format: '#' lines and blank lines are ignored; the first data line is
// "n m"; then n data lines, each a ranking of 1..m, most preferred first.
Election read_election(std::istream& in);
Election read_election_file(const std::string& path);

void write_election(std::ostream& out, const Election& e);
void write_election_file(const std::string& path, const Election& e);

}  // namespace sp
