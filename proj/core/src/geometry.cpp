#include "durer/geometry.hpp"

#include <algorithm>

namespace durer {

namespace {

// Error-free transformations for the exact fallback (Dekker/Knuth).
struct Dd {
    double hi, lo;
};

Dd two_sum(double a, double b) {
    double s = a + b;
    double bv = s - a;
    double err = (a - (s - bv)) + (b - bv);
    return {s, err};
}

Dd two_diff(double a, double b) {
    double s = a - b;
    double bv = a - s;
    double err = (a - (s + bv)) + (bv - b);
    return {s, err};
}

Dd two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

Dd dd_add(Dd a, Dd b) {
    Dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    Dd r = two_sum(s.hi, lo);
    return r;
}

// Exact-ish sign of (ax*by - ay*bx) via double-double accumulation. The
// inputs are already translated differences, so this is exact whenever the
// translations were; the adaptive filter below only calls it when the plain
// evaluation is inconclusive.
double cross_dd(double ax, double ay, double bx, double by) {
    Dd p1 = two_prod(ax, by);
    Dd p2 = two_prod(ay, bx);
    Dd d = dd_add(p1, {-p2.hi, -p2.lo});
    return d.hi + d.lo;
}

}  // namespace

double orient2d_det(Point2 a, Point2 b, Point2 c) {
    double acx = a.x - c.x, acy = a.y - c.y;
    double bcx = b.x - c.x, bcy = b.y - c.y;
    double detleft = acx * bcy;
    double detright = acy * bcx;
    double det = detleft - detright;

    double detsum = std::abs(detleft) + std::abs(detright);
    // ~ (3 + 16 eps) eps, conservative
    constexpr double errbound = 1.0e-14;
    if (std::abs(det) >= errbound * detsum) return det;
    return cross_dd(acx, acy, bcx, bcy);
}

int orient2d(Point2 a, Point2 b, Point2 c, double eta) {
    double det = orient2d_det(a, b, c);
    double ab = dist(a, b);
    // |det| = distance(c, line ab) * |ab|; degenerate inside an eta strip.
    if (std::abs(det) <= eta * std::max(ab, 1.0)) return 0;
    return det > 0 ? 1 : -1;
}

double angle_at(Point2 a, Point2 apex, Point2 b) {
    Vec2 u = a - apex, v = b - apex;
    double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("angle_at: degenerate ray");
    double c = u.dot(v) / (nu * nv);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c);
}

namespace {

bool on_segment_collinear(Point2 p, Point2 a, Point2 b, double eta) {
    return p.x >= std::min(a.x, b.x) - eta && p.x <= std::max(a.x, b.x) + eta &&
           p.y >= std::min(a.y, b.y) - eta && p.y <= std::max(a.y, b.y) + eta;
}

}  // namespace

IntersectionResult segments_intersect(const Segment& s1, const Segment& s2, double eta) {
    if (dist(s1.a, s1.b) <= eta || dist(s2.a, s2.b) <= eta)
        throw std::invalid_argument("segments_intersect: zero-length segment");

    int d1 = orient2d(s2.a, s2.b, s1.a, eta);
    int d2 = orient2d(s2.a, s2.b, s1.b, eta);
    int d3 = orient2d(s1.a, s1.b, s2.a, eta);
    int d4 = orient2d(s1.a, s1.b, s2.b, eta);

    if (d1 == 0 && d2 == 0) {
        // collinear: project on the dominant axis
        Vec2 d = s1.b - s1.a;
        auto t = [&](Point2 p) {
            return std::abs(d.x) >= std::abs(d.y) ? p.x : p.y;
        };
        double lo1 = std::min(t(s1.a), t(s1.b)), hi1 = std::max(t(s1.a), t(s1.b));
        double lo2 = std::min(t(s2.a), t(s2.b)), hi2 = std::max(t(s2.a), t(s2.b));
        double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi + eta) return {IntersectKind::None, {}, {}};
        auto at = [&](double v) {
            double len = t(s1.b) - t(s1.a);
            double u = len == 0 ? 0 : (v - t(s1.a)) / len;
            return s1.a + d * u;
        };
        if (std::abs(hi - lo) <= eta) return {IntersectKind::Point, at(lo), {}};
        return {IntersectKind::Overlap, at(lo), at(hi)};
    }

    if (d1 * d2 <= 0 && d3 * d4 <= 0) {
        // touching endpoints included
        Vec2 r = s1.b - s1.a, s = s2.b - s2.a;
        double denom = r.cross(s);
        if (std::abs(denom) < 1e-300) {
            // parallel but not collinear per predicates above
            return {IntersectKind::None, {}, {}};
        }
        double t = (s2.a - s1.a).cross(s) / denom;
        Point2 p = s1.a + r * t;
        // guard against predicate/arithmetic disagreement at near-misses
        if (on_segment_collinear(p, s1.a, s1.b, 1e-7) && on_segment_collinear(p, s2.a, s2.b, 1e-7))
            return {IntersectKind::Point, p, {}};
    }
    return {IntersectKind::None, {}, {}};
}

bool polygon_is_simple(const std::vector<Point2>& v, double eta) {
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        Segment si{v[i], v[(i + 1) % n]};
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            Segment sj{v[j], v[(j + 1) % n]};
            if (segments_intersect(si, sj, eta).kind != IntersectKind::None) return false;
        }
    }
    return true;
}

bool polygon_is_convex(const std::vector<Point2>& v, double eta) {
    if (v.size() < 3) throw std::invalid_argument("polygon_is_convex: need >= 3 vertices");
    if (!polygon_is_simple(v, eta)) throw std::invalid_argument("polygon_is_convex: self-intersecting input");
    size_t n = v.size();
    int sign = 0;
    for (size_t i = 0; i < n; ++i) {
        int o = orient2d(v[i], v[(i + 1) % n], v[(i + 2) % n], eta);
        if (o == 0) return false;  // flat corner is not strictly convex
        if (sign == 0) sign = o;
        else if (o != sign) return false;
    }
    return true;
}

double polygon_signed_area(const std::vector<Point2>& poly) {
    double s = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) s += poly[i].cross(poly[(i + 1) % n]);
    return s / 2;
}

bool point_in_polygon(Point2 p, const std::vector<Point2>& poly, double eta) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (point_segment_distance(p, poly[i], poly[(i + 1) % n]) <= eta) return false;
    bool in = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        if ((poly[i].y > p.y) != (poly[j].y > p.y)) {
            double xint = poly[j].x + (poly[i].x - poly[j].x) * (p.y - poly[j].y) / (poly[i].y - poly[j].y);
            if (p.x < xint) in = !in;
        }
    }
    return in;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts, double eta) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Point2> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient2d(h[k - 2], h[k - 1], pts[i], eta) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient2d(h[k - 2], h[k - 1], pts[i], eta) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double polygon_diameter(const std::vector<Point2>& pts) {
    double d = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, dist(pts[i], pts[j]));
    return d;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    Vec2 ab = b - a;
    double L2 = ab.norm2();
    if (L2 == 0) return dist(p, a);
    double t = std::clamp((p - a).dot(ab) / L2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

std::optional<std::pair<double, double>> ray_segment_intersect(
    Point2 origin, Vec2 dir, Point2 a, Point2 b, double eta) {
    Vec2 e = b - a;
    double denom = dir.cross(e);
    if (std::abs(denom) < 1e-300) return std::nullopt;
    Vec2 oa = a - origin;
    double t = oa.cross(e) / denom;
    double s = oa.cross(dir) / denom;
    if (t <= eta) return std::nullopt;
    if (s < -1e-12 || s > 1 + 1e-12) return std::nullopt;
    return std::make_pair(t, std::clamp(s, 0.0, 1.0));
}

}  // namespace durer
