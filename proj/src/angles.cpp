#include "fidgibbs/angles.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "fidgibbs/errors.hpp"

namespace fidgibbs {

double reduce_angle(double x) {
  if (x >= 0.0 && x < kTwoPi) return x;
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

bool angles_equal(double a, double b, double tol) {
  double d = reduce_angle(a - b);
  return d <= tol || kTwoPi - d <= tol;
}

double grid_to_angle(int m, int grid_size) {
  return kTwoPi * static_cast<double>(m) / static_cast<double>(grid_size);
}

std::optional<int> try_angle_to_grid(double theta, int grid_size) {
  if (grid_size < 1) return std::nullopt;
  double t = reduce_angle(theta);
  int m = static_cast<int>(std::lround(t * grid_size / kTwoPi)) % grid_size;
  if (angles_equal(t, grid_to_angle(m, grid_size))) return m;
  return std::nullopt;
}

int angle_to_grid(double theta, int grid_size) {
  if (auto m = try_angle_to_grid(theta, grid_size)) return *m;
  throw GridError("angle " + std::to_string(theta) + " is not on the " +
                  std::to_string(grid_size) + "-point grid");
}

namespace {

bool parse_long(std::string_view s, long& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<double> parse_angle_literal(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;

  auto pi_pos = text.find("pi");
  if (pi_pos != std::string_view::npos) {
    std::string_view head = text.substr(0, pi_pos);
    std::string_view tail = text.substr(pi_pos + 2);
    double sign = 1.0;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      if (head.front() == '-') sign = -1.0;
      head.remove_prefix(1);
    }
    long num = 1;
    if (!head.empty() && (!parse_long(head, num) || num < 0)) return std::nullopt;
    long den = 1;
    if (!tail.empty()) {
      if (tail.front() != '/') return std::nullopt;
      tail.remove_prefix(1);
      if (!parse_long(tail, den) || den <= 0) return std::nullopt;
    }
    return reduce_angle(sign * (static_cast<double>(num) * std::numbers::pi /
                                static_cast<double>(den)));
  }

  std::string buf(text);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  return reduce_angle(v);
}

std::string format_angle_literal(double angle) {
  // Smallest denominator wins, so pi-rationals come out already reduced.
  constexpr int kMaxDen = 96;
  for (int den = 1; den <= kMaxDen; ++den) {
    long num = std::lround(angle * den / std::numbers::pi);
    if (num < 0) continue;
    double back = static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
    if (back == angle) {
      if (num == 0) return "0";
      std::string s = (num == 1) ? "pi" : std::to_string(num) + "pi";
      if (den > 1) s += "/" + std::to_string(den);
      return s;
    }
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), angle);
  return std::string(buf, res.ptr);
}

std::vector<double> parse_angle_list(std::string_view csv) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string_view item = csv.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
    auto v = parse_angle_literal(item);
    if (!v) {
      throw SpecificationError("bad angle literal '" + std::string(trim(item)) + "'");
    }
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fidgibbs
