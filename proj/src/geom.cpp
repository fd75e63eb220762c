#include "equidissect/geom.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace equidissect {

QuadValue cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const Point& p, const Point& q, const Point& r) {
    return cross(p, q, r).sign();
}

QuadValue tri_signed_area(const Triangle& t) {
    return cross(t.v[0], t.v[1], t.v[2]) / QuadValue(2);
}

QuadValue poly_area(const SimplePolygon& poly) {
    const auto& v = poly.vertices();
    QuadValue sum(0);
    for (size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum / QuadValue(2);
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    auto within = [](const QuadValue& t, const QuadValue& lo, const QuadValue& hi) {
        return lo <= hi ? (lo <= t && t <= hi) : (hi <= t && t <= lo);
    };
    return within(p.x, a.x, b.x) && within(p.y, a.y, b.y);
}

namespace {

// Coprime ray directions, tried in order until none of the polygon's
// vertices lies on the ray's supporting line.
std::vector<std::pair<long, long>> ray_directions(size_t needed) {
    std::vector<std::pair<long, long>> dirs;
    dirs.emplace_back(1, 0);
    for (long n = 2; dirs.size() < needed + 1; ++n) {
        for (long a = 1; a < n && dirs.size() < needed + 1; ++a) {
            if (std::gcd(a, n - a) == 1) dirs.emplace_back(a, n - a);
        }
    }
    return dirs;
}

}  // namespace

Location point_in_polygon(const Point& p, const SimplePolygon& poly) {
    const auto& v = poly.vertices();
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, v[i], v[(i + 1) % n])) return Location::Boundary;
    }
    for (const auto& [dx, dy] : ray_directions(n)) {
        const QuadValue qdx(dx), qdy(dy);
        auto side = [&](const Point& q) {
            return (qdx * (q.y - p.y) - qdy * (q.x - p.x)).sign();
        };
        bool degenerate = false;
        for (const Point& q : v) {
            if (side(q) == 0) { degenerate = true; break; }
        }
        if (degenerate) continue;
        int crossings = 0;
        for (size_t i = 0; i < n; ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            if (side(a) * side(b) >= 0) continue;
            // Segment straddles the line; count it when the hit lies on the
            // positive ray:  t = cross(a-p, b-a) / cross(d, b-a) > 0.
            QuadValue num = (a.x - p.x) * (b.y - a.y) - (a.y - p.y) * (b.x - a.x);
            QuadValue den = qdx * (b.y - a.y) - qdy * (b.x - a.x);
            if (num.sign() * den.sign() > 0) ++crossings;
        }
        return (crossings % 2 == 1) ? Location::Inside : Location::Outside;
    }
    // Unreachable: n vertices can spoil at most n of the n+1 directions.
    throw Error(ErrorCode::ParamOutOfRange, "no admissible ray direction found");
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    if (o1 * o2 >= 0) return false;
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    return o3 * o4 < 0;
}

Point segment_midpoint(const Point& a, const Point& b) {
    QuadValue two(2);
    return Point{(a.x + b.x) / two, (a.y + b.y) / two};
}

Point tri_centroid(const Triangle& t) {
    QuadValue three(3);
    return Point{(t.v[0].x + t.v[1].x + t.v[2].x) / three,
                 (t.v[0].y + t.v[1].y + t.v[2].y) / three};
}

QuadValue tri_overlap_area(const Triangle& t1, const Triangle& t2) {
    // Orient both counterclockwise; degenerate operands have empty interior.
    int s1 = tri_signed_area(t1).sign();
    int s2 = tri_signed_area(t2).sign();
    if (s1 == 0 || s2 == 0) return QuadValue(0);
    Triangle subj = t1;
    if (s1 < 0) std::swap(subj.v[1], subj.v[2]);
    Triangle clip = t2;
    if (s2 < 0) std::swap(clip.v[1], clip.v[2]);

    std::vector<Point> poly(subj.v.begin(), subj.v.end());
    std::vector<Point> next;
    for (int e = 0; e < 3 && !poly.empty(); ++e) {
        const Point& a = clip.v[e];
        const Point& b = clip.v[(e + 1) % 3];
        QuadValue ex = b.x - a.x;
        QuadValue ey = b.y - a.y;
        auto side_of = [&](const Point& q) {
            return (ex * (q.y - a.y) - ey * (q.x - a.x)).sign();
        };
        next.clear();
        const size_t n = poly.size();
        std::vector<int> sides(n);
        for (size_t i = 0; i < n; ++i) sides[i] = side_of(poly[i]);
        for (size_t i = 0; i < n; ++i) {
            const Point& cur = poly[i];
            const Point& nxt = poly[(i + 1) % n];
            int sc = sides[i];
            int sn = sides[(i + 1) % n];
            if (sc >= 0) next.push_back(cur);
            if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
                // Intersection of [cur,nxt] with the clip line.
                QuadValue num = ex * (a.y - cur.y) - ey * (a.x - cur.x);
                QuadValue den = ex * (nxt.y - cur.y) - ey * (nxt.x - cur.x);
                QuadValue s = num / den;
                next.push_back(Point{cur.x + s * (nxt.x - cur.x),
                                     cur.y + s * (nxt.y - cur.y)});
            }
        }
        poly.swap(next);
    }
    if (poly.size() < 3) return QuadValue(0);
    QuadValue sum(0);
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum / QuadValue(2);
}

namespace {

Location locate_cached(const Point& p, const SimplePolygon& poly, PointLocationCache* cache) {
    if (cache == nullptr) return point_in_polygon(p, poly);
    auto it = cache->find(p);
    if (it != cache->end()) return it->second;
    Location loc = point_in_polygon(p, poly);
    cache->emplace(p, loc);
    return loc;
}

}  // namespace

bool tri_in_polygon(const Triangle& t, const SimplePolygon& poly, PointLocationCache* cache) {
    for (const Point& p : t.v) {
        if (locate_cached(p, poly, cache) == Location::Outside) return false;
    }
    if (poly.is_convex()) return true;
    const auto& v = poly.vertices();
    const size_t n = v.size();
    for (int e = 0; e < 3; ++e) {
        const Point& a = t.v[e];
        const Point& b = t.v[(e + 1) % 3];
        for (size_t i = 0; i < n; ++i) {
            if (segments_properly_cross(a, b, v[i], v[(i + 1) % n])) return false;
        }
    }
    if (point_in_polygon(tri_centroid(t), poly) != Location::Inside) return false;
    for (int e = 0; e < 3; ++e) {
        Point mid = segment_midpoint(t.v[e], t.v[(e + 1) % 3]);
        if (locate_cached(mid, poly, cache) == Location::Outside) return false;
    }
    return true;
}

SimplePolygon SimplePolygon::make(std::vector<Point> vertices) {
    const size_t n = vertices.size();
    if (n < 3) {
        throw Error(ErrorCode::MalformedInput, "polygon needs at least 3 vertices");
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (vertices[i] == vertices[j]) {
                throw Error(ErrorCode::MalformedInput, "polygon has repeated vertices");
            }
        }
    }
    // Orientation: positive shoelace sum.
    QuadValue sum(0);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    if (sum.sign() <= 0) {
        throw Error(ErrorCode::MalformedInput, "polygon must be counterclockwise");
    }
    // Simplicity: non-adjacent edges must not meet at all; adjacent edges may
    // share only their common endpoint.
    for (size_t i = 0; i < n; ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % n];
        for (size_t j = i + 1; j < n; ++j) {
            const Point& c = vertices[j];
            const Point& d = vertices[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                const Point& shared = (j == i + 1) ? b : a;
                const Point& e1 = (j == i + 1) ? a : b;  // far end of edge i
                const Point& e2 = (j == i + 1) ? d : c;  // far end of edge j
                if (point_on_segment(e1, c, d) || point_on_segment(e2, a, b)) {
                    throw Error(ErrorCode::MalformedInput,
                                "polygon folds back at vertex " + shared.str());
                }
            } else {
                if (segments_properly_cross(a, b, c, d) || point_on_segment(c, a, b) ||
                    point_on_segment(d, a, b) || point_on_segment(a, c, d) ||
                    point_on_segment(b, c, d)) {
                    throw Error(ErrorCode::MalformedInput, "polygon is not simple");
                }
            }
        }
    }
    SimplePolygon poly;
    poly.convex_ = true;
    for (size_t i = 0; i < n; ++i) {
        if (orient(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) < 0) {
            poly.convex_ = false;
            break;
        }
    }
    poly.verts_ = std::move(vertices);
    return poly;
}

BBox BBox::of(const Triangle& t) {
    BBox b{t.v[0].x, t.v[0].x, t.v[0].y, t.v[0].y};
    for (int i = 1; i < 3; ++i) {
        if (t.v[i].x < b.xmin) b.xmin = t.v[i].x;
        if (b.xmax < t.v[i].x) b.xmax = t.v[i].x;
        if (t.v[i].y < b.ymin) b.ymin = t.v[i].y;
        if (b.ymax < t.v[i].y) b.ymax = t.v[i].y;
    }
    return b;
}

bool BBox::overlaps(const BBox& o) const {
    return !(xmax < o.xmin || o.xmax < xmin || ymax < o.ymin || o.ymax < ymin);
}

bool BBox::contains(const Point& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
}

namespace {

int cmp_rational_rep(const Rational& a, const Rational& b) {
    int c = cmp(a.num(), b.num());
    if (c != 0) return c;
    return cmp(a.den(), b.den());
}

int cmp_quad_rep(const QuadValue& a, const QuadValue& b) {
    if (a.radicand() != b.radicand()) return a.radicand() < b.radicand() ? -1 : 1;
    int c = cmp_rational_rep(a.rat(), b.rat());
    if (c != 0) return c;
    return cmp_rational_rep(a.coef(), b.coef());
}

}  // namespace

bool PointRepLess::operator()(const Point& a, const Point& b) const {
    int c = cmp_quad_rep(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp_quad_rep(a.y, b.y) < 0;
}

}  // namespace equidissect
