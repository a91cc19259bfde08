#include "molsens/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "molsens/errors.hpp"

namespace molsens {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double number_at(const Line& line, std::size_t i) {
  try {
    return parse_number(line.tokens[i]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
}

std::size_t count_at(const Line& line, std::size_t i, const char* what) {
  const std::string& t = line.tokens[i];
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError(line.number, std::string("expected a non-negative integer for ") + what + ", got '" + t + "'");
  }
  return value;
}

void expect_width(const Line& line, std::size_t width, const char* what) {
  if (line.tokens.size() != width) {
    throw ParseError(line.number, std::string("expected ") + std::to_string(width) + " fields in " + what +
                                      ", got " + std::to_string(line.tokens.size()));
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

double parse_number(std::string_view token) {
  auto whole = [](std::string_view s) {
    double v = 0.0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    }
    return v;
  };
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return whole(token);
  const double p = whole(token.substr(0, slash));
  const double q = whole(token.substr(slash + 1));
  if (q == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  return p / q;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

ProblemFile parse_problem(std::istream& in) {
  const std::vector<Line> lines = significant_lines(in);
  if (lines.empty()) throw ParseError(0, "empty problem file");

  std::size_t at = 0;
  const Line& header = lines[at++];
  expect_width(header, 2, "header 'm K'");
  const std::size_t m = count_at(header, 0, "m");
  const std::size_t K = count_at(header, 1, "K");

  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size()) {
      throw ParseError(lines.back().number, std::string("unexpected end of file, missing ") + what);
    }
    return lines[at++];
  };

  ProblemFile problem;
  for (std::size_t i = 0; i < m; ++i) {
    const Line& row = next("constraint row");
    expect_width(row, 3, "constraint row");
    problem.constraints.push_back({number_at(row, 0), number_at(row, 1), number_at(row, 2)});
  }

  const Line& flag = next("'nonneg 0|1' line");
  if (flag.tokens.size() != 2 || flag.tokens[0] != "nonneg" || (flag.tokens[1] != "0" && flag.tokens[1] != "1")) {
    throw ParseError(flag.number, "expected 'nonneg 0' or 'nonneg 1'");
  }
  problem.nonneg = flag.tokens[1] == "1";

  for (std::size_t k = 0; k < K; ++k) {
    const Line& row = next("gradient row");
    expect_width(row, 2, "gradient row");
    problem.gradients.push_back({number_at(row, 0), number_at(row, 1)});
  }
  if (at != lines.size()) throw ParseError(lines[at].number, "trailing content after the last gradient");
  return problem;
}

ProblemFile parse_problem_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_problem(in);
}

ProblemFile read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse_problem(in);
}

void write_problem(std::ostream& out, const ProblemFile& problem) {
  out << problem.constraints.size() << ' ' << problem.gradients.size() << '\n';
  for (const HalfPlane& h : problem.constraints) {
    out << format_number(h.a1) << ' ' << format_number(h.a2) << ' ' << format_number(h.b) << '\n';
  }
  out << "nonneg " << (problem.nonneg ? 1 : 0) << '\n';
  for (const Vec2& g : problem.gradients) out << format_number(g.x) << ' ' << format_number(g.y) << '\n';
}

std::string serialize_problem(const ProblemFile& problem) {
  std::ostringstream out;
  write_problem(out, problem);
  return out.str();
}

}  // namespace molsens
