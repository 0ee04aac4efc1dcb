#pragma once

#include <cmath>

namespace gamma {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Signed doubled area of triangle (a,b,c); positive when counterclockwise.
inline double signed_area2(Point2 a, Point2 b, Point2 c) {
  return cross(b - a, c - a);
}

}  // namespace gamma
