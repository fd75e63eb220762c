#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equidissect/geom.hpp"

namespace equidissect {

struct Failure {
    std::string code;           // DEGENERATE_FACE, FACE_OUTSIDE, OVERLAP, AREA_SUM, UNEQUAL_AREAS
    std::vector<size_t> faces;  // involved face indices (empty for whole-figure failures)
    std::string detail;
};

/// Machine-checkable certificate. The tiling conditions are: (a) every face
/// nondegenerate, (b) every face contained in the polygon, (c) every pair of
/// faces has zero overlap area, (d) the absolute face areas sum exactly to
/// the polygon area. Together they prove an exact tiling of a simple
/// polygon: by (b) the faces stay inside, by (c) they cannot double-cover,
/// and by (d) there is no room left uncovered. An equidissection
/// additionally has all face areas exactly equal.
struct VerificationReport {
    bool is_tiling = false;
    bool is_equidissection = false;
    size_t face_count = 0;
    std::optional<QuadValue> common_area;  // set iff is_equidissection
    std::vector<Failure> failures;         // sorted by face index
};

/// The coverage argument embedded in every emitted report.
extern const char* const kCertificateRationale;

VerificationReport verify_tiling(const SimplePolygon& polygon,
                                 const std::vector<Triangle>& faces);

/// verify_tiling plus the exact equal-area check.
VerificationReport verify_equidissection(const SimplePolygon& polygon,
                                         const std::vector<Triangle>& faces);

}  // namespace equidissect
