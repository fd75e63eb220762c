#include "equidissect/verify.hpp"

#include <algorithm>
#include <numeric>

namespace equidissect {

const char* const kCertificateRationale =
    "Tiling certificate: every face is nondegenerate, lies inside the polygon, "
    "every pair of faces has zero overlap area, and the absolute face areas sum "
    "exactly to the polygon area; containment plus pairwise disjointness plus "
    "area conservation leave no region uncovered and none double-covered, so the "
    "faces tile the polygon exactly. An equidissection additionally has all face "
    "areas exactly equal.";

namespace {

bool failure_before(const Failure& a, const Failure& b) {
    // Whole-figure failures (empty face list) sort last.
    if (a.faces.empty() != b.faces.empty()) return b.faces.empty();
    if (a.faces != b.faces) return a.faces < b.faces;
    if (a.code != b.code) return a.code < b.code;
    return a.detail < b.detail;
}

}  // namespace

VerificationReport verify_tiling(const SimplePolygon& polygon,
                                 const std::vector<Triangle>& faces) {
    VerificationReport report;
    report.face_count = faces.size();
    const size_t n = faces.size();

    std::vector<QuadValue> areas;
    areas.reserve(n);
    std::vector<bool> degenerate(n, false);
    for (size_t i = 0; i < n; ++i) {
        QuadValue area = tri_signed_area(faces[i]).abs();
        if (area.sign() == 0) {
            degenerate[i] = true;
            report.failures.push_back({"DEGENERATE_FACE", {i}, "face has zero area"});
        }
        areas.push_back(std::move(area));
    }

    PointLocationCache cache;
    for (size_t i = 0; i < n; ++i) {
        if (degenerate[i]) continue;
        if (!tri_in_polygon(faces[i], polygon, &cache)) {
            report.failures.push_back(
                {"FACE_OUTSIDE", {i}, "face is not contained in the polygon"});
        }
    }

    // Pairwise interior disjointness, pruned by a bounding-box sweep.
    std::vector<BBox> boxes;
    boxes.reserve(n);
    for (const Triangle& t : faces) boxes.push_back(BBox::of(t));
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        auto c = boxes[a].xmin <=> boxes[b].xmin;
        if (c != 0) return c < 0;
        return a < b;
    });
    for (size_t oi = 0; oi < n; ++oi) {
        size_t i = order[oi];
        for (size_t oj = oi + 1; oj < n; ++oj) {
            size_t j = order[oj];
            if (boxes[i].xmax < boxes[j].xmin) break;
            if (!boxes[i].overlaps(boxes[j])) continue;
            QuadValue overlap = tri_overlap_area(faces[i], faces[j]);
            if (overlap.sign() != 0) {
                size_t lo = std::min(i, j), hi = std::max(i, j);
                report.failures.push_back({"OVERLAP",
                                           {lo, hi},
                                           "faces share interior area " + overlap.str()});
            }
        }
    }

    QuadValue total(0);
    for (const QuadValue& area : areas) total += area;
    QuadValue expected = poly_area(polygon);
    if (!(total == expected)) {
        report.failures.push_back({"AREA_SUM",
                                   {},
                                   "face areas sum to " + total.str() + ", polygon area is " +
                                       expected.str()});
    }

    std::sort(report.failures.begin(), report.failures.end(), failure_before);
    report.is_tiling = report.failures.empty();
    return report;
}

VerificationReport verify_equidissection(const SimplePolygon& polygon,
                                         const std::vector<Triangle>& faces) {
    VerificationReport report = verify_tiling(polygon, faces);
    bool equal = !faces.empty();
    if (!faces.empty()) {
        QuadValue first = tri_signed_area(faces[0]).abs();
        for (size_t i = 1; i < faces.size(); ++i) {
            QuadValue area = tri_signed_area(faces[i]).abs();
            if (!(area == first)) {
                equal = false;
                report.failures.push_back({"UNEQUAL_AREAS",
                                           {0, i},
                                           "face 0 has area " + first.str() + ", face " +
                                               std::to_string(i) + " has area " + area.str()});
            }
        }
    }
    std::sort(report.failures.begin(), report.failures.end(), failure_before);
    report.is_equidissection = report.is_tiling && equal;
    if (report.is_equidissection) {
        report.common_area = poly_area(polygon) / QuadValue(static_cast<long>(faces.size()));
    }
    return report;
}

}  // namespace equidissect
