/*
 * Box-pattern counting and the entropy upper-bound estimate
 * log(pattern count) / box volume on cubes [-n, n]^d.
 *
 * Patterns are counted exactly with a layer-by-layer dynamic program
 * (frontier = the last few layers, as dictated by the forbidden-pattern
 * extent), so full shifts and nearest-neighbor systems stay cheap on boxes
 * whose pattern counts are astronomically larger than any enumeration
 * budget. The count itself is an exact big integer; the estimate is a
 * derived float for reporting.
 */

#pragma once

#include "shiftlab/fixed_points.hpp"

namespace shiftlab {

struct EntropyEstimate {
    long long radius;
    BigInt pattern_count;
    double estimate;  // log(pattern_count) / (2*radius+1)^d
};

EntropyEstimate entropy_box_estimate(const SftSpec& spec, long long radius,
                                     const EnumOptions& opts = {});

}  // namespace shiftlab
