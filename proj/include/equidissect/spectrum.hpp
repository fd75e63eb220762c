#pragma once

#include <optional>
#include <vector>

#include "equidissect/constructions.hpp"

namespace equidissect {

enum class SpectrumSource { Thm1, Thm2, Thm3 };

const char* spectrum_source_name(SpectrumSource s);

/// An odd spectrum member together with the construction that witnesses it.
struct SpectrumEntry {
    long value = 0;
    SpectrumSource source = SpectrumSource::Thm1;
    DartParams params;
    std::optional<long> t;  // the t parameter when the witness takes one
};

/// All odd members of S(D(r/(2s))) up to `limit` that the three
/// constructions guarantee: r+2k for every odd value in [r, limit]; r-s when
/// s is even; 2(r-s)-t for every odd divisor t of r-s with r-2s < t < 2(r-s)
/// when s is odd. Every entry is witness-backed: its construction is built,
/// refined and exactly verified before it is returned; duplicates keep the
/// lowest-numbered source. Sorted by value.
std::vector<SpectrumEntry> guaranteed_odd_members(const DartParams& params, long limit);

/// An odd divisor t of r-s with t > r-2s, if one exists (the largest is
/// returned). For odd coprime r, s with 2s < r < 3s and r != s (mod 4),
/// t = (r-s)/2 always qualifies. Requires s odd.
std::optional<long> corollary_witness(long r, long s);

}  // namespace equidissect
