#include "shiftlab/lattice.hpp"

#include <sstream>

namespace shiftlab {

Sublattice Sublattice::diagonal(const std::vector<Coord>& diag) {
    Sublattice L;
    L.d = static_cast<int>(diag.size());
    L.basis.assign(L.d, std::vector<Coord>(L.d, 0));
    for (int i = 0; i < L.d; ++i) {
        if (diag[i] <= 0) throw InputError("sublattice: diagonal entries must be positive");
        L.basis[i][i] = diag[i];
    }
    return L;
}

Sublattice Sublattice::from_rows(int d, const std::vector<std::vector<Coord>>& rows) {
    if (static_cast<int>(rows.size()) != d)
        throw InputError("sublattice: expected " + std::to_string(d) + " basis rows");
    Sublattice L;
    L.d = d;
    L.basis = rows;
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(rows[i].size()) != d)
            throw InputError("sublattice: basis rows must have length d");
        if (rows[i][i] <= 0)
            throw InputError("sublattice: diagonal entries must be positive");
        for (int j = 0; j < i; ++j)
            if (rows[i][j] != 0)
                throw InputError("sublattice: basis must be upper triangular");
        for (int j = i + 1; j < d; ++j)
            if (rows[i][j] < 0 || rows[i][j] >= rows[j][j])
                throw InputError("sublattice: off-diagonal entries must satisfy 0 <= b[i][j] < b[j][j]");
    }
    return L;
}

static Coord floor_div(Coord a, Coord b) {
    Coord q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

Vec Sublattice::reduce(Vec v) const {
    // rows are upper triangular, so fixing coordinate i only disturbs
    // coordinates > i
    for (int i = 0; i < d; ++i) {
        Coord q = floor_div(v[i], basis[i][i]);
        if (q != 0)
            for (int j = i; j < d; ++j) v[j] -= q * basis[i][j];
    }
    return v;
}

std::vector<Vec> Sublattice::fundamental_cells() const {
    std::vector<Coord> diag(d);
    for (int i = 0; i < d; ++i) diag[i] = basis[i][i];
    Box box{Vec(d, 0), Vec(d)};
    for (int i = 0; i < d; ++i) box.hi[i] = diag[i] - 1;
    return box.cells();
}

long long Sublattice::cell_index(const Vec& reduced) const {
    long long idx = 0, stride = 1;
    for (int i = 0; i < d; ++i) {
        idx += reduced[i] * stride;
        stride *= basis[i][i];
    }
    return idx;
}

std::string Sublattice::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < d; ++i) {
        os << "[";
        for (int j = 0; j < d; ++j) os << basis[i][j] << (j + 1 < d ? "," : "");
        os << "]" << (i + 1 < d ? "," : "");
    }
    os << "]";
    return os.str();
}

std::vector<Sublattice> sublattices_of_index(int d, long long k) {
    if (d < 1 || d > 3) throw InputError("sublattices_of_index: only dimensions 1..3 are supported");
    if (k < 1) throw InputError("sublattices_of_index: index must be positive");
    std::vector<Sublattice> out;
    if (d == 1) {
        out.push_back(Sublattice::diagonal({k}));
        return out;
    }
    if (d == 2) {
        for (long long a = 1; a <= k; ++a) {
            if (k % a) continue;
            long long c = k / a;
            for (long long b = 0; b < c; ++b)
                out.push_back(Sublattice::from_rows(2, {{a, b}, {0, c}}));
        }
        return out;
    }
    for (long long a = 1; a <= k; ++a) {
        if (k % a) continue;
        for (long long c = 1; c <= k / a; ++c) {
            if ((k / a) % c) continue;
            long long e = k / a / c;
            for (long long b12 = 0; b12 < c; ++b12)
                for (long long b13 = 0; b13 < e; ++b13)
                    for (long long b23 = 0; b23 < e; ++b23)
                        out.push_back(Sublattice::from_rows(
                            3, {{a, b12, b13}, {0, c, b23}, {0, 0, e}}));
        }
    }
    return out;
}

}  // namespace shiftlab
