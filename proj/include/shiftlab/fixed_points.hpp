/*
 * Counting and enumerating the configurations of an SFT fixed by every
 * translation in a finite-index sublattice L < Z^d. A configuration is a
 * symbol assignment on the fundamental domain of Z^d/L; forbidden patterns
 * are checked at every anchor with wraparound.
 *
 * The search is a column-major backtracking fill with forward checking:
 * each pattern instance is tested exactly once, at the moment its last
 * cell (in fill order) gets assigned.
 *
 * Results are bit-identical for any worker count: the top-level branches
 * (symbol of the first cell) are searched independently with per-branch
 * node caps and merged in branch order, so neither the outcome nor a
 * budget error can depend on scheduling.
 */

#pragma once

#include "shiftlab/lattice.hpp"
#include "shiftlab/numeric.hpp"
#include "shiftlab/sft.hpp"

#include <optional>
#include <vector>

namespace shiftlab {

inline constexpr long long kDefaultMaxNodes = 20'000'000;

struct EnumOptions {
    long long max_nodes = kDefaultMaxNodes;
    int jobs = 1;
};

struct TorusConfiguration {
    Sublattice lattice;
    std::vector<int> values;  // indexed by fundamental cell fill order

    bool operator==(const TorusConfiguration& o) const {
        return lattice == o.lattice && values == o.values;
    }
};

struct FixedPointResult {
    BigInt count;
    std::vector<TorusConfiguration> configs;  // filled in enumerate mode
    long long nodes = 0;
};

FixedPointResult fixed_points(const SftSpec& spec, const Sublattice& L, bool enumerate,
                              const EnumOptions& opts = {});

inline BigInt fixed_point_count(const SftSpec& spec, const Sublattice& L,
                                const EnumOptions& opts = {}) {
    return fixed_points(spec, L, false, opts).count;
}

// true iff the given assignment on the fundamental domain of L avoids all
// forbidden patterns under wraparound (independent validity check, also
// used by test oracles)
bool torus_admissible(const SftSpec& spec, const Sublattice& L, const std::vector<int>& values);

}  // namespace shiftlab
