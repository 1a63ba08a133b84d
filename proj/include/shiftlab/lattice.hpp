/*
 * Finite-index sublattices of Z^d in Hermite normal form.
 *
 * Convention: the basis is stored as rows of an upper-triangular d x d
 * integer matrix with positive diagonal; every entry above a pivot is
 * reduced modulo that pivot (0 <= basis[i][j] < basis[j][j] for i < j).
 * This gives a unique representative per subgroup, so equality and
 * deduplication are structural. The fundamental domain is the box
 * prod_i [0, basis[i][i]).
 */

#pragma once

#include "shiftlab/geometry.hpp"
#include "shiftlab/numeric.hpp"

#include <string>
#include <vector>

namespace shiftlab {

struct Sublattice {
    int d = 1;
    std::vector<std::vector<Coord>> basis;  // row i = i-th basis vector

    static Sublattice diagonal(const std::vector<Coord>& diag);
    static Sublattice from_rows(int d, const std::vector<std::vector<Coord>>& rows);

    long long index() const {
        long long k = 1;
        for (int i = 0; i < d; ++i) k *= basis[i][i];
        return k;
    }

    // canonical representative of v modulo the lattice, inside the
    // fundamental box
    Vec reduce(Vec v) const;

    // fundamental-domain cells in fill order (coordinate 0 fastest)
    std::vector<Vec> fundamental_cells() const;

    long long cell_index(const Vec& reduced) const;

    bool operator==(const Sublattice& o) const { return d == o.d && basis == o.basis; }
    bool operator<(const Sublattice& o) const { return basis < o.basis; }

    std::string to_string() const;
};

// All index-k sublattices of Z^d (d <= 3), each exactly once, in a
// deterministic order.
std::vector<Sublattice> sublattices_of_index(int d, long long k);

}  // namespace shiftlab
