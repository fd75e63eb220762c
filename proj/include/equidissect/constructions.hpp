#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equidissect/geom.hpp"

namespace equidissect {

/// Parameters of the dart D(a) with a = r/(2s): r, s coprime positive
/// integers, r odd, r > 2s.
struct DartParams {
    long r = 0;
    long s = 0;

    /// Throws BadHypotheses unless the invariants hold.
    void validate() const;
    Rational a() const { return Rational(r, 2 * s); }
};

/// A triangle tiling whose face areas are in the proportion given by
/// `weights`; refining face i into weights[i] equal-area pieces yields an
/// equidissection with sum(weights) faces.
struct WeightedDissection {
    SimplePolygon polygon;
    std::vector<Triangle> faces;
    std::vector<long> weights;
    std::int64_t field = 1;
    std::string provenance;
    std::vector<std::pair<std::string, long>> params;
    bool erratum_variant = false;
};

/// A triangle tiling with all face areas equal.
struct Dissection {
    SimplePolygon polygon;
    std::vector<Triangle> faces;
    std::int64_t field = 1;
    std::string provenance;
    std::vector<std::pair<std::string, long>> params;
};

/// The dart: counterclockwise quadrilateral (0,1),(1,1),(1,0),(a,a) with
/// a > 1; reflex vertex at (1,1), area a-1.
SimplePolygon dart_polygon(const QuadValue& a);

/// The (generalized) kite: quadrilateral with boundary order
/// (0,0),(1,0),(a,a),(0,1), any a > 0 except 1/2; convex for a > 1/2,
/// dart-like with reflex vertex (a,a) for a < 1/2. Area a.
SimplePolygon kite_polygon(const QuadValue& a);

/// The affine map taking D(a) onto Q(a') with a' = (a-1)/(2a-1):
/// (x,y) -> ((a-1)x + a(1-y), (a-1)y + a(1-x)) / (2a-1).
/// It reverses orientation and scales areas by 1/(2a-1).
Point dart_to_kite_point(const Point& p, const QuadValue& a);

/// Pushes a dissection of D(a) through the affine map, yielding a dissection
/// of Q(a') with the same face count (faces re-wound counterclockwise).
Dissection map_dissection(const Dissection& d, const QuadValue& a);

/// Three-triangle partition of D(r/(2s)) with weights
/// ((t-r)/2, (t-r+2s)/2, r-s) summing to t, for odd t >= r. The cut point
/// (p,q) on the edge (1,0)-(a,a) has q = r(t-r+2s)/(2st), p = q + (r-2s)/t.
/// At t = r the first face is degenerate and dropped, leaving weights
/// (s, r-s). With paper_literal set, builds the variant with
/// q = r(t-r-2s)/(2st) instead; that point is off the edge and the result
/// fails verification (kept for regression demonstration).
WeightedDissection thm1_partition(const DartParams& params, long t, bool paper_literal = false);

/// Three-triangle partition of D(r/(2s)) for even s, cut by the chord
/// x + y = 2 through the reflex vertex; weights (s/2, s/2, r-2s) summing to
/// the odd value r-s < r.
WeightedDissection thm2_partition(const DartParams& params);

/// Three-triangle partition of D(r/(2s)) for odd s and an odd divisor t of
/// r-s with r-2s < t < 2(r-s); the chord through (1,1) meets both long edges
/// off-center. Weights ((3r-4s-t)/2 - c(r-2s), (r-t)/2, c(r-2s)) with
/// c = (r-s)/t, summing to the odd value 2(r-s)-t < r.
WeightedDissection thm3_partition(const DartParams& params, long t);

/// Five-triangle zig-zag partition of Q(a) with a = sqrt(m)/(2m), m = 2k+1:
/// cut points (0,b), (d,e), (0,c) with b = sqrt(m)/m^2, c = 1/m,
/// d = m(1+sqrt(m))/((m-1)(2m-1)). Weights
/// (2m-1, m^2-3m+1, m, k, k(2m-1)) summing to the odd value 8k^2+6k+1.
WeightedDissection thm4_partition(long k);

/// Equidissection of the kite Q(sqrt(m)/2) = Q(ma), m = 2k+1, into the odd
/// number u*m of equal-area triangles (u = 8k^2+6k+1): the dart Q(a) carries
/// the refined five-triangle partition, and the two remaining big triangles
/// are each fan-split into u(m-1)/2 pieces of the same area a/u.
Dissection thm5_partition(long k);

/// Refines each weighted face into `weight` equal-area triangles by fanning
/// from the face's first vertex over an equal subdivision of the opposite
/// edge. The output has sum(weights) faces of equal area.
Dissection lemma1_refine(const WeightedDissection& wd);

/// The unique primitive positive-integer vector proportional to the faces'
/// absolute areas. Throws NotCommensurable when some pairwise ratio is
/// irrational.
std::vector<long> proportion_vector(const std::vector<Triangle>& faces);

/// Common radicand of every coordinate (1 when everything is rational).
std::int64_t field_of(const SimplePolygon& polygon, const std::vector<Triangle>& faces);

}  // namespace equidissect
