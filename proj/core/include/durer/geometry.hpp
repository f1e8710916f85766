#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace durer {

// Default tolerance for strict geometric comparisons, in model units.
// Predicates report "degenerate" inside this band instead of picking a sign.
inline constexpr double kEta = 1e-9;

constexpr double pi() { return 3.141592653589793238462643383279502884; }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(Vec2 r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(Vec2 r) { x -= r.x; y -= r.y; return *this; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
    double arg() const { return std::atan2(y, x); }

    constexpr bool operator==(const Vec2&) const = default;
};

using Point2 = Vec2;

inline double dist(Point2 a, Point2 b) { return (a - b).norm(); }

// pi/2-clockwise rotation: the matrix of Eq. (4).
constexpr Vec2 rotate90cw(Vec2 v) { return {v.y, -v.x}; }
constexpr Vec2 rotate90ccw(Vec2 v) { return {-v.y, v.x}; }

inline Vec2 rotate(Vec2 v, double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Planar angle normalized to [0, 2*pi).
struct Angle {
    double radians = 0.0;
    Angle() = default;
    explicit Angle(double r) {
        radians = std::fmod(r, 2 * pi());
        if (radians < 0) radians += 2 * pi();
    }
};

// Twice the signed area of triangle abc, computed with an adaptive
// floating-point filter; the returned value carries a reliable sign.
double orient2d_det(Point2 a, Point2 b, Point2 c);

// Sign of orient2d_det classified against eta: +1 ccw, -1 cw, 0 when c lies
// within eta of line ab.
int orient2d(Point2 a, Point2 b, Point2 c, double eta = kEta);

// Unsigned angle a-apex-b in [0, pi]. Throws on a degenerate ray.
double angle_at(Point2 a, Point2 apex, Point2 b);

struct Segment {
    Point2 a, b;
};

enum class IntersectKind { None, Point, Overlap };

struct IntersectionResult {
    IntersectKind kind = IntersectKind::None;
    Point2 p{};   // witness point (Point), or overlap start
    Point2 q{};   // overlap end
};

// Classification of segment intersection; symmetric in its arguments.
// Throws on zero-length input.
IntersectionResult segments_intersect(const Segment& s1, const Segment& s2, double eta = kEta);

// True iff the polygon is strictly convex up to eta. Throws if the input
// self-intersects.
bool polygon_is_convex(const std::vector<Point2>& vertices, double eta = kEta);

bool polygon_is_simple(const std::vector<Point2>& vertices, double eta = kEta);

double polygon_signed_area(const std::vector<Point2>& poly);

// Strict interior test for a simple polygon (crossing number).
bool point_in_polygon(Point2 p, const std::vector<Point2>& poly, double eta = kEta);

// Counterclockwise convex hull (monotone chain), collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts, double eta = kEta);

double polygon_diameter(const std::vector<Point2>& pts);

// Distance from point p to segment ab.
double point_segment_distance(Point2 p, Point2 a, Point2 b);

// Intersection parameter of ray (origin, dir) with segment ab:
// returns (t, s) with origin + t*dir == a + s*(b-a), t > eta, s in [0,1],
// or nullopt.
std::optional<std::pair<double, double>> ray_segment_intersect(
    Point2 origin, Vec2 dir, Point2 a, Point2 b, double eta = kEta);

}  // namespace durer
