#include "equidissect/constructions.hpp"

#include <numeric>
#include <utility>

namespace equidissect {

void DartParams::validate() const {
    if (r < 1 || s < 1) {
        throw Error(ErrorCode::BadHypotheses, "r and s must be positive");
    }
    if (r % 2 == 0) {
        throw Error(ErrorCode::BadHypotheses, "r must be odd, got " + std::to_string(r));
    }
    if (r <= 2 * s) {
        throw Error(ErrorCode::BadHypotheses,
                    "need r > 2s, got r=" + std::to_string(r) + ", s=" + std::to_string(s));
    }
    if (std::gcd(r, s) != 1) {
        throw Error(ErrorCode::BadHypotheses,
                    "r and s must be coprime, got r=" + std::to_string(r) +
                        ", s=" + std::to_string(s));
    }
}

SimplePolygon dart_polygon(const QuadValue& a) {
    if (!(QuadValue(1) < a)) {
        throw Error(ErrorCode::ParamOutOfRange, "dart parameter must satisfy a > 1");
    }
    QuadValue zero(0), one(1);
    return SimplePolygon::make({Point{zero, one}, Point{one, one}, Point{one, zero},
                                Point{a, a}});
}

SimplePolygon kite_polygon(const QuadValue& a) {
    if (a.sign() <= 0 || a == QuadValue(Rational(1, 2))) {
        throw Error(ErrorCode::ParamOutOfRange,
                    "kite parameter must satisfy a > 0, a != 1/2");
    }
    QuadValue zero(0), one(1);
    return SimplePolygon::make({Point{zero, zero}, Point{one, zero}, Point{a, a},
                                Point{zero, one}});
}

Point dart_to_kite_point(const Point& p, const QuadValue& a) {
    if (!(QuadValue(1) < a)) {
        throw Error(ErrorCode::ParamOutOfRange, "map requires a > 1");
    }
    QuadValue one(1);
    QuadValue scale = one / (QuadValue(2) * a - one);
    QuadValue am1 = a - one;
    return Point{scale * (am1 * p.x + a * (one - p.y)),
                 scale * (am1 * p.y + a * (one - p.x))};
}

namespace {

Triangle ccw_face(Point v0, Point v1, Point v2) {
    Triangle t{{std::move(v0), std::move(v1), std::move(v2)}};
    if (tri_signed_area(t).sign() < 0) std::swap(t.v[1], t.v[2]);
    return t;
}

std::int64_t field_of_points(std::int64_t acc, const Point& p) {
    for (const QuadValue* q : {&p.x, &p.y}) {
        if (q->radicand() != 1) {
            if (acc != 1 && acc != q->radicand()) {
                throw Error(ErrorCode::FieldMismatch, "mixed radicands in one figure");
            }
            acc = q->radicand();
        }
    }
    return acc;
}

}  // namespace

std::int64_t field_of(const SimplePolygon& polygon, const std::vector<Triangle>& faces) {
    std::int64_t field = 1;
    for (const Point& p : polygon.vertices()) field = field_of_points(field, p);
    for (const Triangle& t : faces) {
        for (const Point& p : t.v) field = field_of_points(field, p);
    }
    return field;
}

Dissection map_dissection(const Dissection& d, const QuadValue& a) {
    if (!(d.polygon == dart_polygon(a))) {
        throw Error(ErrorCode::PolygonMismatch, "dissection polygon is not D(a)");
    }
    QuadValue one(1);
    QuadValue a_prime = (a - one) / (QuadValue(2) * a - one);
    SimplePolygon kite = kite_polygon(a_prime);
    std::vector<Triangle> faces;
    faces.reserve(d.faces.size());
    for (const Triangle& t : d.faces) {
        // The map reverses orientation; swap two vertices to re-wind while
        // keeping the fan anchor in first position.
        faces.push_back(Triangle{{dart_to_kite_point(t.v[0], a),
                                  dart_to_kite_point(t.v[2], a),
                                  dart_to_kite_point(t.v[1], a)}});
    }
    std::int64_t field = field_of(kite, faces);
    return Dissection{std::move(kite), std::move(faces), field, d.provenance, d.params};
}

WeightedDissection thm1_partition(const DartParams& params, long t, bool paper_literal) {
    params.validate();
    const long r = params.r;
    const long s = params.s;
    if (t % 2 == 0) {
        throw Error(ErrorCode::BadHypotheses, "t must be odd, got " + std::to_string(t));
    }
    if (t < r) {
        throw Error(ErrorCode::BadHypotheses,
                    "need t >= r, got t=" + std::to_string(t) + ", r=" + std::to_string(r));
    }
    Rational a = params.a();
    // q puts (p,q) on the edge from (1,0) to (a,a); the published variant
    // flips the sign of the 2s term, which leaves the edge.
    Rational q = Rational(r * (paper_literal ? t - r - 2 * s : t - r + 2 * s), 2 * s * t);
    Rational p = q + Rational(r - 2 * s, t);
    Point P{QuadValue(p), QuadValue(q)};
    Point top_left{QuadValue(0), QuadValue(1)};
    Point reflex{QuadValue(1), QuadValue(1)};
    Point bottom{QuadValue(1), QuadValue(0)};
    Point tip{QuadValue(a), QuadValue(a)};

    std::vector<Triangle> faces;
    std::vector<long> weights;
    const bool drop_first = !paper_literal && t == r;  // q = 1 makes face 1 degenerate
    if (!drop_first) {
        faces.push_back(ccw_face(top_left, reflex, P));
        weights.push_back((t - r) / 2);
    }
    faces.push_back(ccw_face(reflex, bottom, P));
    weights.push_back((t - r + 2 * s) / 2);
    faces.push_back(ccw_face(top_left, P, tip));
    weights.push_back(r - s);

    return WeightedDissection{dart_polygon(QuadValue(a)),
                              std::move(faces),
                              std::move(weights),
                              1,
                              "thm1",
                              {{"r", r}, {"s", s}, {"t", t}},
                              paper_literal};
}

WeightedDissection thm2_partition(const DartParams& params) {
    params.validate();
    const long r = params.r;
    const long s = params.s;
    if (s % 2 != 0) {
        throw Error(ErrorCode::BadHypotheses, "s must be even, got " + std::to_string(s));
    }
    Rational a = params.a();
    // Chord x + y = 2 through the reflex vertex (1,1); by the dart's mirror
    // symmetry the two endpoints swap coordinates.
    Rational p(3 * r - 4 * s, 2 * r - 2 * s);
    Rational q(r, 2 * r - 2 * s);
    Point P{QuadValue(p), QuadValue(q)};
    Point Pp{QuadValue(q), QuadValue(p)};
    Point top_left{QuadValue(0), QuadValue(1)};
    Point reflex{QuadValue(1), QuadValue(1)};
    Point bottom{QuadValue(1), QuadValue(0)};
    Point tip{QuadValue(a), QuadValue(a)};

    std::vector<Triangle> faces{ccw_face(bottom, reflex, P), ccw_face(top_left, reflex, Pp),
                                ccw_face(P, tip, Pp)};
    std::vector<long> weights{s / 2, s / 2, r - 2 * s};
    return WeightedDissection{dart_polygon(QuadValue(a)),
                              std::move(faces),
                              std::move(weights),
                              1,
                              "thm2",
                              {{"r", r}, {"s", s}}};
}

WeightedDissection thm3_partition(const DartParams& params, long t) {
    params.validate();
    const long r = params.r;
    const long s = params.s;
    if (s % 2 == 0) {
        throw Error(ErrorCode::BadHypotheses, "s must be odd, got " + std::to_string(s));
    }
    if (t < 1 || t % 2 == 0) {
        throw Error(ErrorCode::BadHypotheses, "t must be a positive odd integer");
    }
    if ((r - s) % t != 0) {
        throw Error(ErrorCode::BadHypotheses,
                    "t must divide r-s, got t=" + std::to_string(t) +
                        ", r-s=" + std::to_string(r - s));
    }
    if (t <= r - 2 * s) {
        throw Error(ErrorCode::BadHypotheses,
                    "need t > r-2s, got t=" + std::to_string(t) +
                        ", r-2s=" + std::to_string(r - 2 * s));
    }
    if (t >= 2 * r - 2 * s) {
        throw Error(ErrorCode::BadHypotheses, "need t < 2r-2s");
    }
    const long c = (r - s) / t;
    Rational a = params.a();
    Rational q(r * (t - r + 2 * s), 2 * s * t);
    Rational p = q + Rational(r - 2 * s, t);
    Rational pp(r * (r - t), 2 * s * (2 * r - 2 * s - t));
    Rational qp = pp + Rational(r - 2 * s, 2 * r - 2 * s - t);
    Point P{QuadValue(p), QuadValue(q)};
    Point Pp{QuadValue(pp), QuadValue(qp)};
    Point top_left{QuadValue(0), QuadValue(1)};
    Point reflex{QuadValue(1), QuadValue(1)};
    Point bottom{QuadValue(1), QuadValue(0)};
    Point tip{QuadValue(a), QuadValue(a)};

    std::vector<long> weights{(3 * r - 4 * s - t) / 2 - c * (r - 2 * s), (r - t) / 2,
                              c * (r - 2 * s)};
    for (long w : weights) {
        if (w <= 0) {
            throw Error(ErrorCode::BadHypotheses,
                        "hypotheses admit no positive weight vector");
        }
    }
    std::vector<Triangle> faces{ccw_face(bottom, reflex, P), ccw_face(top_left, reflex, Pp),
                                ccw_face(P, tip, Pp)};
    return WeightedDissection{dart_polygon(QuadValue(a)),
                              std::move(faces),
                              std::move(weights),
                              1,
                              "thm3",
                              {{"r", r}, {"s", s}, {"t", t}}};
}

WeightedDissection thm4_partition(long k) {
    if (k < 1) {
        throw Error(ErrorCode::BadHypotheses, "k must be >= 1, got " + std::to_string(k));
    }
    if (k > 100000) {
        throw Error(ErrorCode::BadHypotheses, "k too large for 64-bit weights");
    }
    const long m = 2 * k + 1;
    const mpz_class mz(m);
    QuadValue a = QuadValue::make(Rational(0), Rational(1, 2 * m), mz);
    QuadValue b = QuadValue::make(Rational(0), Rational(mpz_class(1), mz * mz), mz);
    QuadValue c(Rational(1, m));
    // d = m(1 + sqrt(m)) / ((m-1)(2m-1))
    Rational dd(mpz_class(m), mpz_class(m - 1) * mpz_class(2 * m - 1));
    QuadValue d = QuadValue::make(dd, dd, mz);
    QuadValue one(1);
    QuadValue e = a * (one - d) / (one - a);

    // The zig-zag needs c > b, a < d < 1 and c < a/(1-a); all hold exactly
    // for k >= 1 and are cheap to recheck.
    if (!(b < c) || !(a < d) || !(d < one) || !(c < a / (one - a))) {
        throw Error(ErrorCode::BadHypotheses, "zig-zag inequalities fail");
    }

    QuadValue zero(0);
    Point A{zero, zero};
    Point B{one, zero};
    Point V{a, a};
    Point C{zero, one};
    Point P1{zero, b};
    Point P2{d, e};
    Point P3{zero, c};

    std::vector<Triangle> faces{ccw_face(A, B, P1), ccw_face(B, P2, P1),
                                ccw_face(P1, P2, P3), ccw_face(P2, V, P3),
                                ccw_face(P3, V, C)};
    std::vector<long> weights{2 * m - 1, m * m - 3 * m + 1, m, k, k * (2 * m - 1)};
    SimplePolygon poly = kite_polygon(a);
    std::int64_t field = field_of(poly, faces);
    return WeightedDissection{std::move(poly),
                              std::move(faces),
                              std::move(weights),
                              field,
                              "thm4",
                              {{"k", k}}};
}

Dissection lemma1_refine(const WeightedDissection& wd) {
    std::vector<Triangle> out;
    long total = 0;
    for (long w : wd.weights) total += w;
    out.reserve(static_cast<size_t>(total));
    for (size_t i = 0; i < wd.faces.size(); ++i) {
        const Triangle& t = wd.faces[i];
        const long w = wd.weights[i];
        if (w < 1) {
            throw Error(ErrorCode::BadHypotheses, "weights must be positive");
        }
        // Fan from the first vertex over w equal segments of the opposite edge.
        Point prev = t.v[1];
        QuadValue ex = t.v[2].x - t.v[1].x;
        QuadValue ey = t.v[2].y - t.v[1].y;
        for (long j = 1; j <= w; ++j) {
            Point next = (j == w) ? t.v[2]
                                  : Point{t.v[1].x + ex * QuadValue(Rational(j, w)),
                                          t.v[1].y + ey * QuadValue(Rational(j, w))};
            out.push_back(Triangle{{t.v[0], prev, next}});
            prev = next;
        }
    }
    return Dissection{wd.polygon, std::move(out), wd.field, wd.provenance, wd.params};
}

Dissection thm5_partition(long k) {
    WeightedDissection zigzag = thm4_partition(k);
    Dissection dart = lemma1_refine(zigzag);
    const long m = 2 * k + 1;
    long u = 0;
    for (long w : zigzag.weights) u += w;

    QuadValue a = QuadValue::make(Rational(0), Rational(1, 2 * m), mpz_class(m));
    QuadValue ma = QuadValue(m) * a;  // sqrt(m)/2
    QuadValue zero(0), one(1);
    Point B{one, zero};
    Point C{zero, one};
    Point V{a, a};
    Point W{ma, ma};

    SimplePolygon kite = kite_polygon(ma);
    std::vector<Triangle> faces = std::move(dart.faces);
    faces.reserve(static_cast<size_t>(u * m));
    // The two big triangles flanking the dart each have area (m-1)a/2 =
    // (u(m-1)/2) * (a/u), so fan-splitting them continues the unit area.
    WeightedDissection flanks{kite,
                              {Triangle{{B, W, V}}, Triangle{{C, V, W}}},
                              {u * (m - 1) / 2, u * (m - 1) / 2},
                              zigzag.field,
                              "thm5",
                              {{"k", k}}};
    Dissection refined_flanks = lemma1_refine(flanks);
    for (Triangle& t : refined_flanks.faces) faces.push_back(std::move(t));
    return Dissection{std::move(kite), std::move(faces), zigzag.field, "thm5", {{"k", k}}};
}

std::vector<long> proportion_vector(const std::vector<Triangle>& faces) {
    if (faces.empty()) {
        throw Error(ErrorCode::BadHypotheses, "no faces");
    }
    std::vector<QuadValue> areas;
    areas.reserve(faces.size());
    for (const Triangle& t : faces) {
        QuadValue area = tri_signed_area(t).abs();
        if (area.sign() == 0) {
            throw Error(ErrorCode::BadHypotheses, "degenerate face has no proportion");
        }
        areas.push_back(std::move(area));
    }
    std::vector<Rational> ratios;
    ratios.reserve(areas.size());
    for (const QuadValue& area : areas) {
        QuadValue ratio = area / areas.front();
        if (!ratio.is_rational()) {
            throw Error(ErrorCode::NotCommensurable,
                        "area ratio " + ratio.str() + " is irrational");
        }
        ratios.push_back(ratio.rat());
    }
    mpz_class lcm = 1;
    for (const Rational& r : ratios) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), r.den().get_mpz_t());
        lcm = l;
    }
    std::vector<mpz_class> ints;
    ints.reserve(ratios.size());
    mpz_class g = 0;
    for (const Rational& r : ratios) {
        mpz_class v = r.num() * (lcm / r.den());
        mpz_class ng;
        mpz_gcd(ng.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        g = ng;
        ints.push_back(std::move(v));
    }
    std::vector<long> out;
    out.reserve(ints.size());
    for (mpz_class& v : ints) {
        mpz_class red = v / g;
        if (!red.fits_slong_p()) {
            throw Error(ErrorCode::ParamOutOfRange, "proportion entry overflows");
        }
        out.push_back(red.get_si());
    }
    return out;
}

}  // namespace equidissect
