#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "molsens/polytope.hpp"

namespace molsens {

// Plain-text problem format. Blank lines and `#` comments are ignored;
// numbers are decimals or fractions p/q.
//
//   m K
//   a1 a2 b          (m constraint rows, a1*x1 + a2*x2 <= b)
//   nonneg 0|1       (1 adds x >= 0)
//   c1 c2            (K gradient rows)
struct ProblemFile {
  std::vector<HalfPlane> constraints;
  bool nonneg = true;
  std::vector<Vec2> gradients;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

double parse_number(std::string_view token);

// Shortest decimal that reads back to the same double.
std::string format_number(double value);

ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_text(std::string_view text);
ProblemFile read_problem_file(const std::filesystem::path& path);  // IoError, ParseError

void write_problem(std::ostream& out, const ProblemFile& problem);
std::string serialize_problem(const ProblemFile& problem);

}  // namespace molsens
