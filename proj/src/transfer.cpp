#include "shiftlab/transfer.hpp"

#include <algorithm>

namespace shiftlab {

TransferMatrix TransferMatrix::identity(int n) {
    TransferMatrix I;
    I.n = n;
    I.a.assign(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) I.a[i][i] = 1;
    return I;
}

TransferMatrix TransferMatrix::mul(const TransferMatrix& o) const {
    if (n != o.n) throw InputError("matrix size mismatch");
    TransferMatrix r;
    r.n = n;
    r.a.assign(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r.a[i][j] += a[i][k] * o.a[k][j];
        }
    return r;
}

BigInt TransferMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n; ++i) t += a[i][i];
    return t;
}

bool TransferMatrix::strongly_connected() const {
    if (n == 0) return false;
    auto reach = [&](bool transpose) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                const BigInt& w = transpose ? a[v][u] : a[u][v];
                if (w > 0 && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    };
    return reach(false) && reach(true);
}

TransferMatrix to_transfer_matrix(const SftSpec& spec) {
    spec.validate();
    if (spec.dim != 1) throw InputError("to_transfer_matrix: spec must be one-dimensional");
    const int ns = spec.alphabet_size();
    const long long W = std::max<Coord>(1, spec.max_span(0) - 1);

    // normalized patterns: offsets relative to their minimum
    std::vector<std::vector<std::pair<Coord, int>>> pats;
    for (auto& p : spec.forbidden) {
        Coord mn = p.cells.front().first[0];
        for (auto& [v, s] : p.cells) mn = std::min(mn, v[0]);
        std::vector<std::pair<Coord, int>> q;
        for (auto& [v, s] : p.cells) q.push_back({v[0] - mn, s});
        pats.push_back(std::move(q));
    }
    auto word_ok = [&](const std::vector<int>& w) {
        for (auto& q : pats) {
            Coord extent = 0;
            for (auto& [off, s] : q) extent = std::max(extent, off);
            for (Coord t = 0; t + extent < static_cast<Coord>(w.size()); ++t) {
                bool match = true;
                for (auto& [off, s] : q) {
                    if (w[t + off] != s) {
                        match = false;
                        break;
                    }
                }
                if (match) return false;
            }
        }
        return true;
    };

    // admissible W-windows, in lexicographic order
    double window_count = 1;
    for (long long t = 0; t < W; ++t) window_count *= ns;
    if (window_count > 2e6) throw BudgetExceeded(2000000);
    std::vector<std::vector<int>> vertices;
    std::vector<int> w(W, 0);
    while (true) {
        if (word_ok(w)) vertices.push_back(w);
        long long i = W - 1;
        while (i >= 0 && ++w[i] == ns) w[i--] = 0;
        if (i < 0) break;
    }
    if (vertices.empty()) throw InputError("to_transfer_matrix: SFT has no admissible window");

    TransferMatrix A;
    A.n = static_cast<int>(vertices.size());
    A.a.assign(A.n, std::vector<BigInt>(A.n, 0));
    for (int i = 0; i < A.n; ++i) {
        for (int j = 0; j < A.n; ++j) {
            bool overlap = true;
            for (long long t = 1; t < W; ++t) {
                if (vertices[i][t] != vertices[j][t - 1]) {
                    overlap = false;
                    break;
                }
            }
            if (!overlap) continue;
            std::vector<int> joined = vertices[i];
            joined.push_back(vertices[j].back());
            if (word_ok(joined)) A.a[i][j] = 1;
        }
    }
    return A;
}

std::vector<BigInt> trace_sequence(const TransferMatrix& A, int K) {
    std::vector<BigInt> tr;
    tr.reserve(K);
    TransferMatrix P = A;
    for (int k = 1; k <= K; ++k) {
        tr.push_back(P.trace());
        if (k < K) P = P.mul(A);
    }
    return tr;
}

std::vector<BigInt> zeta_series(const TransferMatrix& A, int K) {
    if (K < 1) throw InputError("zeta_series: truncation order must be >= 1");
    auto tr = trace_sequence(A, K);
    std::vector<BigRat> c(K + 1);
    c[0] = 1;
    for (int n = 1; n <= K; ++n) {
        BigRat s = 0;
        for (int k = 1; k <= n; ++k) s += BigRat(tr[k - 1]) * c[n - k];
        c[n] = s / n;
    }
    std::vector<BigInt> out(K + 1);
    for (int n = 0; n <= K; ++n) {
        if (boost::multiprecision::denominator(c[n]) != 1)
            throw std::logic_error("zeta_series: non-integer coefficient (internal error)");
        out[n] = boost::multiprecision::numerator(c[n]);
    }
    return out;
}

IntPoly char_poly(const TransferMatrix& A) {
    // Faddeev-LeVerrier; every division is exact
    int n = A.n;
    std::vector<BigInt> coeffs(n + 1, 0);
    coeffs[n] = 1;
    TransferMatrix M = A;
    BigInt ck;
    for (int k = 1; k <= n; ++k) {
        BigInt t = M.trace();
        if (t % k != 0) throw std::logic_error("char_poly: inexact division (internal error)");
        ck = -t / k;
        coeffs[n - k] = ck;
        if (k < n) {
            TransferMatrix Mk = M;
            for (int i = 0; i < n; ++i) Mk.a[i][i] += ck;
            M = A.mul(Mk);
        }
    }
    return IntPoly(std::move(coeffs));
}

IntPoly det_one_minus_tA(const TransferMatrix& A) {
    IntPoly cp = char_poly(A);
    std::vector<BigInt> rev(cp.c.rbegin(), cp.c.rend());
    return IntPoly(std::move(rev));
}

}  // namespace shiftlab
