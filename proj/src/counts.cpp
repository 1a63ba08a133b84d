#include "shiftlab/counts.hpp"

namespace shiftlab {

std::vector<BigInt> CountSequence::periods() const {
    if (dim != 1) throw InputError("periods(): only defined for 1-D count sequences");
    std::vector<BigInt> out;
    out.reserve(entries.size());
    for (auto& e : entries) out.push_back(e.count);
    return out;
}

CountSequence periodic_count_sequence(const SftSpec& spec, long long horizon,
                                      const EnumOptions& opts) {
    if (horizon < 1) throw InputError("periodic_count_sequence: horizon must be >= 1");
    CountSequence seq;
    seq.dim = spec.dim;
    if (spec.dim == 1) {
        for (long long n = 1; n <= horizon; ++n) {
            Sublattice L = Sublattice::diagonal({n});
            seq.entries.push_back({L, fixed_point_count(spec, L, opts)});
        }
        return seq;
    }
    for (long long k = 1; k <= horizon; ++k)
        for (auto& L : sublattices_of_index(spec.dim, k))
            seq.entries.push_back({L, fixed_point_count(spec, L, opts)});
    return seq;
}

EquivalenceVerdict periodically_equivalent(const SftSpec& x, const SftSpec& y, long long horizon,
                                           const EnumOptions& opts) {
    if (x.dim != y.dim) throw InputError("periodically_equivalent: dimension mismatch");
    EquivalenceVerdict v;
    auto compare_on = [&](const Sublattice& L) {
        BigInt cx = fixed_point_count(x, L, opts);
        BigInt cy = fixed_point_count(y, L, opts);
        if (cx != cy) {
            v.equivalent = false;
            v.witness = L;
            v.left = cx;
            v.right = cy;
            return false;
        }
        return true;
    };
    if (x.dim == 1) {
        for (long long n = 1; n <= horizon; ++n)
            if (!compare_on(Sublattice::diagonal({n}))) return v;
        return v;
    }
    for (long long k = 1; k <= horizon; ++k)
        for (auto& L : sublattices_of_index(x.dim, k))
            if (!compare_on(L)) return v;
    return v;
}

bool orbit_realizable(const std::vector<BigInt>& counts, std::string* reason) {
    for (size_t i = 0; i < counts.size(); ++i) {
        long long n = static_cast<long long>(i) + 1;
        if (counts[i] < 0) {
            if (reason) *reason = "negative count at period " + std::to_string(n);
            return false;
        }
        BigInt s = 0;
        for (long long m = 1; m <= n; ++m)
            if (n % m == 0) s += mobius(n / m) * counts[m - 1];
        if (s < 0) {
            if (reason)
                *reason = "Moebius sum at period " + std::to_string(n) + " is negative (" +
                          s.str() + ")";
            return false;
        }
        if (s % n != 0) {
            if (reason)
                *reason = "Moebius sum at period " + std::to_string(n) + " not divisible by " +
                          std::to_string(n);
            return false;
        }
    }
    return true;
}

std::vector<BigInt> orbit_counts(const std::vector<BigInt>& counts) {
    std::string why;
    if (!orbit_realizable(counts, &why))
        throw InputError("count sequence is not orbit-realizable: " + why);
    std::vector<BigInt> orbits(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) {
        long long n = static_cast<long long>(i) + 1;
        BigInt s = 0;
        for (long long m = 1; m <= n; ++m)
            if (n % m == 0) s += mobius(n / m) * counts[m - 1];
        orbits[i] = s / n;
    }
    return orbits;
}

}  // namespace shiftlab
