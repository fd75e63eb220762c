#pragma once

#include <array>
#include <map>
#include <vector>

#include "equidissect/exactnum.hpp"

namespace equidissect {

struct Point {
    QuadValue x;
    QuadValue y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

struct Triangle {
    std::array<Point, 3> v;

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.v == b.v; }
};

/// Counterclockwise simple polygon; both invariants are checked at
/// construction (O(n^2) exact edge-pair tests, n is tiny here).
class SimplePolygon {
public:
    static SimplePolygon make(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    size_t size() const { return verts_.size(); }
    const Point& operator[](size_t i) const { return verts_[i]; }
    bool is_convex() const { return convex_; }

    friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) {
        return a.verts_ == b.verts_;
    }

private:
    SimplePolygon() = default;
    std::vector<Point> verts_;
    bool convex_ = false;
};

enum class Location { Inside, Boundary, Outside };

/// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, -1
/// clockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

QuadValue cross(const Point& p, const Point& q, const Point& r);

/// Signed area, positive iff counterclockwise.
QuadValue tri_signed_area(const Triangle& t);

/// Positive shoelace area.
QuadValue poly_area(const SimplePolygon& poly);

/// True iff p lies on the closed segment [a, b]; requires a != b.
bool point_on_segment(const Point& p, const Point& a, const Point& b);

/// Exact point classification against a simple polygon. Boundary is detected
/// edge by edge; interior/exterior by crossing parity along a ray whose
/// direction is retried from a fixed list until no vertex lies on its line.
Location point_in_polygon(const Point& p, const SimplePolygon& poly);

/// Exact area of t1 intersected with t2 (both convex), by clipping t1
/// against the three half-planes of t2. Zero iff the interiors are disjoint.
QuadValue tri_overlap_area(const Triangle& t1, const Triangle& t2);

/// Strict weak order on exact coordinates (representation order, not value
/// order); suitable as a map key comparator.
struct PointRepLess {
    bool operator()(const Point& a, const Point& b) const;
};

/// Memo for point classifications against one fixed polygon; points shared
/// between faces (fan apexes, subdivision points) are classified once.
using PointLocationCache = std::map<Point, Location, PointRepLess>;

/// Containment test for a nondegenerate triangle in a simple polygon: all
/// vertices inside or on the boundary, no triangle edge properly crossing a
/// polygon edge, centroid strictly inside, and no edge midpoint outside (the
/// midpoint condition closes the corner case of a chord anchored on the two
/// edges at a reflex vertex). For convex polygons the vertex test suffices.
bool tri_in_polygon(const Triangle& t, const SimplePolygon& poly,
                    PointLocationCache* cache = nullptr);

/// True iff the open segments (a,b) and (c,d) cross at a single interior
/// point of both (strict straddle both ways).
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

Point segment_midpoint(const Point& a, const Point& b);
Point tri_centroid(const Triangle& t);

struct BBox {
    QuadValue xmin, xmax, ymin, ymax;

    static BBox of(const Triangle& t);
    bool overlaps(const BBox& o) const;
    bool contains(const Point& p) const;
};

}  // namespace equidissect
