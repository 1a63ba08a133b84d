/*
 * Integer vectors and boxes in Z^d. Cells of a box are ordered with the
 * first coordinate varying fastest ("column-major" for d=2), which fixes
 * the deterministic fill order used by every enumerator.
 */

#pragma once

#include "shiftlab/numeric.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace shiftlab {

using Coord = long long;
using Vec = std::vector<Coord>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Coord vec_sum(const Vec& a) {
    Coord s = 0;
    for (Coord x : a) s += x;
    return s;
}

inline Coord l1_norm(const Vec& a) {
    Coord s = 0;
    for (Coord x : a) s += x < 0 ? -x : x;
    return s;
}

// Axis-aligned box [lo, hi], both ends inclusive.
struct Box {
    Vec lo, hi;

    int dim() const { return static_cast<int>(lo.size()); }

    bool contains(const Vec& v) const {
        for (int i = 0; i < dim(); ++i)
            if (v[i] < lo[i] || v[i] > hi[i]) return false;
        return true;
    }

    long long side(int i) const { return hi[i] - lo[i] + 1; }

    long long volume() const {
        long long v = 1;
        for (int i = 0; i < dim(); ++i) v *= side(i);
        return v;
    }

    // index of a cell in fill order (coordinate 0 fastest)
    long long index_of(const Vec& v) const {
        long long idx = 0, stride = 1;
        for (int i = 0; i < dim(); ++i) {
            idx += (v[i] - lo[i]) * stride;
            stride *= side(i);
        }
        return idx;
    }

    Vec cell_at(long long idx) const {
        Vec v(dim());
        for (int i = 0; i < dim(); ++i) {
            v[i] = lo[i] + idx % side(i);
            idx /= side(i);
        }
        return v;
    }

    std::vector<Vec> cells() const {
        std::vector<Vec> out;
        out.reserve(static_cast<size_t>(volume()));
        for (long long i = 0; i < volume(); ++i) out.push_back(cell_at(i));
        return out;
    }

    static Box cube(int d, Coord radius) {
        return Box{Vec(d, -radius), Vec(d, radius)};
    }
};

// unit vector e_i
inline Vec unit_vec(int d, int i, Coord scale = 1) {
    Vec v(d, 0);
    v[i] = scale;
    return v;
}

}  // namespace shiftlab
