/*
 * Vertex-shift presentations of 1-D SFTs and their zeta series.
 *
 * A 1-D SFT with forbidden words of length <= W+1 is recoded to the graph
 * whose vertices are the admissible W-windows, with an edge u -> v when the
 * (W+1)-window u.v[last] is admissible. Closed paths of length n then
 * biject with n-periodic points for every n >= 1, so tr(A^n) = |X^(n)|.
 *
 * The zeta series exp(sum_n tr(A^n) t^n / n) = 1/det(I - tA) is computed
 * with exact rationals via the Newton identity n*c_n = sum tr(A^k) c_(n-k);
 * a non-integer coefficient is a hard internal error.
 */

#pragma once

#include "shiftlab/numeric.hpp"
#include "shiftlab/polynomial.hpp"
#include "shiftlab/sft.hpp"

#include <vector>

namespace shiftlab {

struct TransferMatrix {
    int n = 0;
    std::vector<std::vector<BigInt>> a;

    static TransferMatrix identity(int n);
    TransferMatrix mul(const TransferMatrix& o) const;
    BigInt trace() const;
    bool strongly_connected() const;
};

TransferMatrix to_transfer_matrix(const SftSpec& spec);

// tr(A^1), ..., tr(A^K)
std::vector<BigInt> trace_sequence(const TransferMatrix& A, int K);

// zeta coefficients c_0..c_K (exact integers)
std::vector<BigInt> zeta_series(const TransferMatrix& A, int K);

// det(xI - A), monic, exact (Faddeev-LeVerrier)
IntPoly char_poly(const TransferMatrix& A);

// det(I - tA) = reversed characteristic polynomial; 1/det is the zeta
// function, used as an independent route in tests
IntPoly det_one_minus_tA(const TransferMatrix& A);

}  // namespace shiftlab
