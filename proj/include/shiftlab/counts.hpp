/*
 * Periodic-point count sequences and periodic equivalence.
 *
 * For d = 1 the sequence is |X^(n)| for n <= horizon; for d >= 2 it is
 * indexed by every HNF sublattice of index <= horizon. Two systems are
 * periodically equivalent up to a horizon when all these counts agree.
 *
 * A 1-D count sequence is orbit-realizable iff every Moebius sum
 * sum_{m|n} mu(n/m) c_m is nonnegative and divisible by n; the quotients
 * are then the orbit counts.
 */

#pragma once

#include "shiftlab/fixed_points.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

struct CountEntry {
    Sublattice lattice;
    BigInt count;
};

struct CountSequence {
    int dim = 1;
    std::vector<CountEntry> entries;

    // 1-based view for d = 1 (entry i-1 is period i)
    std::vector<BigInt> periods() const;
};

CountSequence periodic_count_sequence(const SftSpec& spec, long long horizon,
                                      const EnumOptions& opts = {});

struct EquivalenceVerdict {
    bool equivalent = true;
    std::optional<Sublattice> witness;  // first sublattice where counts differ
    BigInt left, right;
};

EquivalenceVerdict periodically_equivalent(const SftSpec& x, const SftSpec& y, long long horizon,
                                           const EnumOptions& opts = {});

// counts is 1-based via index+1 (counts[0] = period-1 count)
bool orbit_realizable(const std::vector<BigInt>& counts, std::string* reason = nullptr);

// Moebius inversion to orbit counts; throws InputError when not realizable
std::vector<BigInt> orbit_counts(const std::vector<BigInt>& counts);

}  // namespace shiftlab
