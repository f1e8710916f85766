#pragma once

#include <map>
#include <string>
#include <vector>

#include "durer/geometry.hpp"

namespace durer {

struct WeightedPoint {
    Point2 position;
    double weight = 0.0;  // alpha_i >= 0
};

// Convex polygon with weighted interior points, the flat model every cap
// projects onto. Weights sum to 1; diameter 1 after normalization.
struct InfinitesimalPolyhedron {
    std::vector<Point2> boundary;
    std::vector<WeightedPoint> interior;

    double diameter() const;
};

// Uniformly scaled copy with diameter exactly 1; weights unchanged.
// Throws on zero-diameter input.
InfinitesimalPolyhedron diameter_normalize(const InfinitesimalPolyhedron& ip);

// Checks Def-5 style invariants (convex boundary, weights sum 1, points
// strictly inside). convexity_slack loosens the boundary convexity test for
// polygons with deliberately bent sides.
std::vector<std::string> check_infinitesimal(const InfinitesimalPolyhedron& ip,
                                             double eta = kEta,
                                             double convexity_slack = 0.0);

struct HalfEdge {
    int origin = -1;  // vertex the half-edge leaves
    int next = -1;    // next half-edge along the face cycle
};

// Half-edge mesh of a convex geodesic partition. Half-edges are stored in
// twin pairs: twin(h) == h ^ 1. Interior faces run counterclockwise; the
// outer face runs clockwise.
class Partition {
public:
    std::vector<Point2> pos;
    std::vector<double> weight;       // per vertex, 0 for structural vertices
    std::vector<HalfEdge> half;
    std::vector<int> half_face;       // face id per half-edge
    std::vector<std::vector<int>> faces;  // half-edge cycles
    int outer_face = -1;
    std::map<std::string, int> labels;    // optional landmark names

    int vertex_count() const { return static_cast<int>(pos.size()); }
    int edge_count() const { return static_cast<int>(half.size() / 2); }
    int face_count() const { return static_cast<int>(faces.size()); }
    static int twin(int h) { return h ^ 1; }
    int dest(int h) const { return half[twin(h)].origin; }

    // endpoints of undirected edge e (= half pair e*2, e*2+1)
    std::pair<int, int> edge_vertices(int e) const {
        return {half[2 * e].origin, half[2 * e + 1].origin};
    }

    std::vector<int> vertex_neighbors(int v) const;
    std::vector<int> outgoing_halfedges(int v) const;
    bool is_boundary_edge(int e) const;
    bool is_boundary_vertex(int v) const;
    int find_edge(int u, int v) const;  // -1 if absent

    // vertices of face f in cycle order
    std::vector<int> face_vertices(int f) const;

    std::string label_of(int v) const;  // name or "v<idx>"

    double total_weight() const;
    std::vector<int> weighted_vertices() const;

    // boundary polygon, counterclockwise
    std::vector<Point2> boundary_polygon() const;
    std::vector<int> boundary_cycle_vertices() const;
};

// Builds the half-edge structure from vertex positions and undirected edges
// by angular sorting around each vertex (planar embedding from geometry).
// Throws if the edge set has duplicates or zero-length edges.
Partition build_partition(std::vector<Point2> pos, std::vector<double> weight,
                          const std::vector<std::pair<int, int>>& edges,
                          std::map<std::string, int> labels = {});

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;       // non-fatal observations
    double max_interior_face_angle = 0.0; // radians over interior faces
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Lists every violated partition condition: non-convex interior face,
// positive-weight point not a mesh vertex, weight sum != 1, crossing edges,
// broken topology. Boundary reflexness is reported as a note (the outer face
// is explicitly exempt from convexity).
ValidationReport validate(const Partition& p, double eta = kEta);

// Minimal angle between consecutive incident skeleton edges over all vertices.
Angle smallest_skeleton_angle(const Partition& p);

// Interior angle at vertex `at` inside face f.
double face_angle_at(const Partition& p, int f, int at);

// Structural equality: same vertices (exact), weights, edge set, labels.
bool structurally_equal(const Partition& a, const Partition& b);

// Infinitesimal polyhedron view of a partition (outer cycle + weighted points).
InfinitesimalPolyhedron to_infinitesimal(const Partition& p);

}  // namespace durer
