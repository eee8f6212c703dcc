#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fidgibbs {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Absolute tolerance for angle and trigonometric comparisons.
inline constexpr double kAngleTol = 1e-12;

// Reduce into [0, 2*pi).  Values already in range pass through bit-identically.
double reduce_angle(double x);

// Modular equality: |a - b| <= tol up to whole turns.
bool angles_equal(double a, double b, double tol = kAngleTol);

// ---- M-point angle grid, phi_m = 2*pi*m/M ---------------------------------

double grid_to_angle(int m, int grid_size);

// Nearest grid index if theta lies on the grid within kAngleTol.
std::optional<int> try_angle_to_grid(double theta, int grid_size);

// Same, but throws GridError for off-grid angles.
int angle_to_grid(double theta, int grid_size);

// ---- Angle literals --------------------------------------------------------
//
// Circuit files and CLI flags share one literal grammar:
//   [-] [INT] "pi" [ "/" INT ]      e.g.  pi, -pi/2, 3pi/8
//   decimal radians                 e.g.  0.3, 1e-2, 0
// Parsed values are reduced into [0, 2*pi).

std::optional<double> parse_angle_literal(std::string_view text);

// Inverse of parse_angle_literal: emits the pi-rational form when the stored
// double is bit-for-bit equal to num*pi/den for a small den, otherwise a
// shortest-round-trip decimal.
std::string format_angle_literal(double angle);

// Comma-separated literals; throws SpecificationError on a bad entry.
std::vector<double> parse_angle_list(std::string_view csv);

}  // namespace fidgibbs
