#include "sp/io.hpp"

#include <fstream>
#include <sstream>

namespace sp {

namespace {

std::string at_line(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

// Returns false at EOF; skips comments and blank lines.
bool next_data_line(std::istream& in, std::string& out, int& line) {
  std::string s;
  while (std::getline(in, s)) {
    ++line;
    const auto pos = s.find_first_not_of(" \t\r");
    if (pos == std::string::npos || s[pos] == '#') continue;
    out = s;
    return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& s, int line) {
  std::istringstream iss(s);
  std::vector<long long> out;
  long long x;
  while (iss >> x) out.push_back(x);
  std::string rest;
  if ((iss.fail() && !iss.eof()) || (iss.clear(), iss >> rest))
    throw parse_error(at_line(line, "expected whitespace-separated integers"));
  return out;
}

}  // namespace

Election read_election(std::istream& in) {
  int line = 0;
  std::string s;
  if (!next_data_line(in, s, line))
    throw parse_error("empty input: missing \"n m\" header");
  const auto header = parse_ints(s, line);
  if (header.size() != 2)
    throw parse_error(at_line(line, "header must be exactly \"n m\""));
  const long long n = header[0], m = header[1];
  if (n < 1 || m < 1 || m > 1000000)
    throw parse_error(at_line(line, "n and m must be positive"));

  Election e;
  e.m = (int)m;
  e.votes.reserve((std::size_t)n);
  for (long long i = 0; i < n; ++i) {
    if (!next_data_line(in, s, line))
      throw parse_error("unexpected end of input: expected " +
                        std::to_string(n) + " votes, got " + std::to_string(i));
    const auto nums = parse_ints(s, line);
    if ((long long)nums.size() != m)
      throw parse_error(at_line(line, "expected " + std::to_string(m) +
                                          " candidates, got " +
                                          std::to_string(nums.size())));
    Vote v;
    v.reserve(nums.size());
    for (long long x : nums) {
      if (x < 1 || x > m)
        throw parse_error(at_line(
            line, "candidate " + std::to_string(x) + " out of range 1.." +
                      std::to_string(m)));
      v.push_back((int)x);
    }
    if (!is_valid_vote(v))
      throw parse_error(at_line(line, "vote is not a permutation of 1.." +
                                          std::to_string(m)));
    e.votes.push_back(std::move(v));
  }
  if (next_data_line(in, s, line))
    throw parse_error(at_line(line, "trailing data after last vote"));
  return e;
}

Election read_election_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return read_election(in);
  } catch (const parse_error& err) {
    throw parse_error(path + ": " + err.what());
  }
}

void write_election(std::ostream& out, const Election& e) {
  out << e.n() << ' ' << e.m << '\n';
  for (const Vote& v : e.votes) {
    for (std::size_t i = 0; i < v.size(); ++i)
      out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

void write_election_file(const std::string& path, const Election& e) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open " + path + " for writing");
  write_election(out, e);
  if (!out) throw parse_error("write failed: " + path);
}

}  // namespace sp
