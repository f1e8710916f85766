#include "durer/partition.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace durer {

double InfinitesimalPolyhedron::diameter() const {
    std::vector<Point2> pts = boundary;
    for (auto& w : interior) pts.push_back(w.position);
    return polygon_diameter(pts);
}

InfinitesimalPolyhedron diameter_normalize(const InfinitesimalPolyhedron& ip) {
    double d = polygon_diameter(ip.boundary);
    if (d <= 0) throw std::invalid_argument("diameter_normalize: zero-diameter input");
    InfinitesimalPolyhedron out;
    out.boundary.reserve(ip.boundary.size());
    for (auto p : ip.boundary) out.boundary.push_back(p / d);
    for (auto w : ip.interior) out.interior.push_back({w.position / d, w.weight});
    return out;
}

std::vector<std::string> check_infinitesimal(const InfinitesimalPolyhedron& ip,
                                             double eta, double convexity_slack) {
    std::vector<std::string> issues;
    if (ip.boundary.size() < 3) {
        issues.push_back("boundary has fewer than 3 vertices");
        return issues;
    }
    // convexity with slack: every corner may deviate from convex by at most
    // slack (as a perpendicular deflection)
    size_t n = ip.boundary.size();
    double area = polygon_signed_area(ip.boundary);
    double dir = area >= 0 ? 1.0 : -1.0;
    for (size_t i = 0; i < n; ++i) {
        Point2 a = ip.boundary[i], b = ip.boundary[(i + 1) % n], c = ip.boundary[(i + 2) % n];
        double det = dir * orient2d_det(a, b, c);
        double span = dist(a, c);
        if (det < -(convexity_slack + eta) * std::max(span, 1.0))
            issues.push_back("reflex boundary at corner " + std::to_string((i + 1) % n));
    }
    double s = 0;
    for (auto& w : ip.interior) {
        s += w.weight;
        if (w.weight < 0) issues.push_back("negative weight");
        if (w.weight > 0 && !point_in_polygon(w.position, ip.boundary, eta))
            issues.push_back("weighted point not strictly inside boundary");
    }
    if (std::abs(s - 1.0) > eta * 10) issues.push_back("weight sum != 1");
    return issues;
}

std::vector<int> Partition::outgoing_halfedges(int v) const {
    std::vector<int> out;
    for (int h = 0; h < static_cast<int>(half.size()); ++h)
        if (half[h].origin == v) out.push_back(h);
    return out;
}

std::vector<int> Partition::vertex_neighbors(int v) const {
    std::vector<int> out;
    for (int h = 0; h < static_cast<int>(half.size()); ++h)
        if (half[h].origin == v) out.push_back(dest(h));
    return out;
}

bool Partition::is_boundary_edge(int e) const {
    return half_face[2 * e] == outer_face || half_face[2 * e + 1] == outer_face;
}

bool Partition::is_boundary_vertex(int v) const {
    for (int h : outgoing_halfedges(v))
        if (half_face[h] == outer_face || half_face[twin(h)] == outer_face) return true;
    return false;
}

int Partition::find_edge(int u, int v) const {
    for (int e = 0; e < edge_count(); ++e) {
        auto [a, b] = edge_vertices(e);
        if ((a == u && b == v) || (a == v && b == u)) return e;
    }
    return -1;
}

std::vector<int> Partition::face_vertices(int f) const {
    std::vector<int> out;
    for (int h : faces[f]) out.push_back(half[h].origin);
    return out;
}

std::string Partition::label_of(int v) const {
    for (auto& [name, idx] : labels)
        if (idx == v) return name;
    return "v" + std::to_string(v);
}

double Partition::total_weight() const {
    return std::accumulate(weight.begin(), weight.end(), 0.0);
}

std::vector<int> Partition::weighted_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (weight[v] > 0) out.push_back(v);
    return out;
}

std::vector<int> Partition::boundary_cycle_vertices() const {
    std::vector<int> cycle;
    for (int h : faces[outer_face]) cycle.push_back(half[h].origin);
    // outer face runs clockwise; reverse for a ccw polygon
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

std::vector<Point2> Partition::boundary_polygon() const {
    std::vector<Point2> poly;
    for (int v : boundary_cycle_vertices()) poly.push_back(pos[v]);
    return poly;
}

Partition build_partition(std::vector<Point2> pos, std::vector<double> weight,
                          const std::vector<std::pair<int, int>>& edges,
                          std::map<std::string, int> labels) {
    Partition p;
    p.pos = std::move(pos);
    p.weight = std::move(weight);
    p.labels = std::move(labels);
    if (p.weight.size() != p.pos.size())
        throw std::invalid_argument("build_partition: weight/pos size mismatch");

    std::set<std::pair<int, int>> seen;
    p.half.resize(2 * edges.size());
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (u == v) throw std::invalid_argument("build_partition: loop edge");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("build_partition: duplicate edge");
        if (dist(p.pos[u], p.pos[v]) == 0)
            throw std::invalid_argument("build_partition: zero-length edge");
        p.half[2 * e].origin = u;
        p.half[2 * e + 1].origin = v;
    }

    // angular order of outgoing half-edges at each vertex
    int H = static_cast<int>(p.half.size());
    std::vector<std::vector<int>> ring(p.pos.size());
    for (int h = 0; h < H; ++h) ring[p.half[h].origin].push_back(h);
    std::vector<int> order_in_ring(H);
    for (auto& r : ring) {
        std::sort(r.begin(), r.end(), [&](int a, int b) {
            Vec2 da = p.pos[p.dest(a)] - p.pos[p.half[a].origin];
            Vec2 db = p.pos[p.dest(b)] - p.pos[p.half[b].origin];
            return da.arg() < db.arg();
        });
        for (size_t i = 0; i < r.size(); ++i) order_in_ring[r[i]] = static_cast<int>(i);
    }

    // next(h): at v = dest(h), the clockwise neighbor of twin(h)
    for (int h = 0; h < H; ++h) {
        int t = Partition::twin(h);
        int v = p.half[t].origin;
        auto& r = ring[v];
        int i = order_in_ring[t];
        int prev = r[(i + r.size() - 1) % r.size()];
        p.half[h].next = prev;
    }

    // face cycles
    p.half_face.assign(H, -1);
    for (int h = 0; h < H; ++h) {
        if (p.half_face[h] != -1) continue;
        int f = static_cast<int>(p.faces.size());
        p.faces.emplace_back();
        int cur = h;
        do {
            p.half_face[cur] = f;
            p.faces[f].push_back(cur);
            cur = p.half[cur].next;
        } while (cur != h);
    }

    // outer face: the unique cycle with negative signed area
    p.outer_face = -1;
    double min_area = 0;
    for (int f = 0; f < p.face_count(); ++f) {
        std::vector<Point2> poly;
        for (int h : p.faces[f]) poly.push_back(p.pos[p.half[h].origin]);
        double a = polygon_signed_area(poly);
        if (a < min_area) {
            min_area = a;
            p.outer_face = f;
        }
    }
    if (p.outer_face < 0 && p.face_count() > 0)
        throw std::invalid_argument("build_partition: no outer face found");
    return p;
}

double face_angle_at(const Partition& p, int f, int at) {
    // sum over corners of face f located at vertex `at` (normally one)
    double total = 0;
    const auto& cyc = p.faces[f];
    size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
        int h = cyc[i];
        if (p.half[h].origin != at) continue;
        int hprev = cyc[(i + n - 1) % n];
        Point2 a = p.pos[p.half[hprev].origin];
        Point2 b = p.pos[p.half[h].origin];
        Point2 c = p.pos[p.dest(h)];
        total += angle_at(a, b, c);
    }
    return total;
}

ValidationReport validate(const Partition& p, double eta) {
    ValidationReport r;
    char buf[256];

    if (p.half.empty()) {
        r.violations.push_back("empty mesh");
        return r;
    }
    for (size_t h = 0; h < p.half.size(); ++h) {
        if (p.half[h].next < 0) {
            snprintf(buf, sizeof buf, "broken topology: half-edge %zu has no next", h);
            r.violations.push_back(buf);
            return r;
        }
    }

    // connectivity of the skeleton
    {
        std::vector<char> vis(p.pos.size(), 0);
        std::vector<int> stack{p.half[0].origin};
        vis[stack[0]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : p.vertex_neighbors(v))
                if (!vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
        }
        int used = 0;
        for (size_t v = 0; v < p.pos.size(); ++v) {
            bool has_edge = false;
            for (auto& he : p.half)
                if (he.origin == static_cast<int>(v)) { has_edge = true; break; }
            if (has_edge) {
                ++used;
                if (!vis[v]) r.violations.push_back("skeleton not connected");
            } else if (p.weight[v] > 0) {
                snprintf(buf, sizeof buf, "positive-weight point %s is not a vertex of the mesh",
                         p.label_of(static_cast<int>(v)).c_str());
                r.violations.push_back(buf);
            }
        }
        (void)used;
    }

    double ws = p.total_weight();
    if (std::abs(ws - 1.0) > 10 * eta) {
        snprintf(buf, sizeof buf, "weight sum != 1 (got %.17g)", ws);
        r.violations.push_back(buf);
    }

    // interior faces convex: every corner strictly below pi
    for (int f = 0; f < p.face_count(); ++f) {
        if (f == p.outer_face) continue;
        const auto& cyc = p.faces[f];
        size_t n = cyc.size();
        if (n < 3) {
            snprintf(buf, sizeof buf, "face %d has fewer than 3 sides", f);
            r.violations.push_back(buf);
            continue;
        }
        for (size_t i = 0; i < n; ++i) {
            int hprev = cyc[(i + n - 1) % n], h = cyc[i];
            Point2 a = p.pos[p.half[hprev].origin];
            Point2 b = p.pos[p.half[h].origin];
            Point2 c = p.pos[p.dest(h)];
            // interior faces are ccw; convex corner turns left
            double det = orient2d_det(a, b, c);
            double ang = angle_at(a, b, c);
            double interior = det > 0 ? ang : 2 * pi() - ang;
            r.max_interior_face_angle = std::max(r.max_interior_face_angle, interior);
            if (interior >= pi() - eta) {
                snprintf(buf, sizeof buf,
                         "non-convex face %d: interior angle %.12g rad at %s", f,
                         interior, p.label_of(p.half[h].origin).c_str());
                r.violations.push_back(buf);
            }
        }
    }

    // boundary reflexness is a note: the outer face is exempt from convexity
    {
        auto poly = p.boundary_polygon();
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            double det = orient2d_det(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]);
            if (det < 0) {
                auto cyc = p.boundary_cycle_vertices();
                snprintf(buf, sizeof buf, "note: reflex boundary at %s",
                         p.label_of(cyc[(i + 1) % n]).c_str());
                r.notes.push_back(buf);
            }
        }
    }

    // crossing edges (O(E^2), fine at desk scale)
    {
        int E = p.edge_count();
        for (int e = 0; e < E; ++e) {
            auto [a, b] = p.edge_vertices(e);
            for (int e2 = e + 1; e2 < E; ++e2) {
                auto [c, d] = p.edge_vertices(e2);
                if (a == c || a == d || b == c || b == d) continue;
                auto res = segments_intersect({p.pos[a], p.pos[b]}, {p.pos[c], p.pos[d]}, eta);
                if (res.kind != IntersectKind::None) {
                    snprintf(buf, sizeof buf, "crossing edges: (%s,%s) x (%s,%s)",
                             p.label_of(a).c_str(), p.label_of(b).c_str(),
                             p.label_of(c).c_str(), p.label_of(d).c_str());
                    r.violations.push_back(buf);
                }
            }
        }
    }

    return r;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    os << (ok() ? "VALID" : "INVALID") << "\n";
    for (auto& v : violations) os << "violation: " << v << "\n";
    for (auto& n : notes) os << n << "\n";
    char buf[64];
    snprintf(buf, sizeof buf, "%.12g", max_interior_face_angle);
    os << "max interior face angle: " << buf << "\n";
    return os.str();
}

Angle smallest_skeleton_angle(const Partition& p) {
    double best = 2 * pi();
    for (int v = 0; v < p.vertex_count(); ++v) {
        auto hs = p.outgoing_halfedges(v);
        if (hs.size() < 2) continue;
        std::vector<double> angs;
        for (int h : hs) angs.push_back((p.pos[p.dest(h)] - p.pos[v]).arg());
        std::sort(angs.begin(), angs.end());
        for (size_t i = 0; i < angs.size(); ++i) {
            double a = angs[i];
            double b = angs[(i + 1) % angs.size()];
            double d = b - a;
            if (i + 1 == angs.size()) d += 2 * pi();
            best = std::min(best, d);
        }
    }
    return Angle(best);
}

bool structurally_equal(const Partition& a, const Partition& b) {
    if (a.pos != b.pos || a.weight != b.weight || a.labels != b.labels) return false;
    auto edge_set = [](const Partition& p) {
        std::set<std::pair<int, int>> s;
        for (int e = 0; e < p.edge_count(); ++e) {
            auto [u, v] = p.edge_vertices(e);
            s.insert(std::minmax(u, v));
        }
        return s;
    };
    return edge_set(a) == edge_set(b);
}

InfinitesimalPolyhedron to_infinitesimal(const Partition& p) {
    InfinitesimalPolyhedron ip;
    ip.boundary = p.boundary_polygon();
    for (int v : p.weighted_vertices()) ip.interior.push_back({p.pos[v], p.weight[v]});
    return ip;
}

}  // namespace durer
