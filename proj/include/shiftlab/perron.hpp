/*
 * Perron numbers: real algebraic integers strictly dominating all their
 * conjugates in modulus, carried as (monic irreducible minimal polynomial,
 * certified rational isolating interval).
 *
 * Dominance is decided exactly, never numerically:
 *   - real conjugates are compared through Sturm isolation; the only way a
 *     distinct real conjugate can tie |mu| = lambda is mu = -lambda, i.e.
 *     p(-x) = +-p(x), a syntactic test;
 *   - complex conjugate pairs mu, conj(mu) have |mu|^2 = mu*conj(mu), a
 *     real root of the pair-product polynomial H with H^2 = T/G, where T
 *     has roots lambda_i*lambda_j (all ordered pairs, via a resultant) and
 *     G has roots lambda_i^2 (from p(y)p(-y)). Dominance fails iff H has a
 *     real root >= lambda^2; the equality case H(lambda^2) = 0 reduces to
 *     H(x^2) mod p = 0 because p is the minimal polynomial of lambda.
 *
 * The bounded factorization search enumerates candidate divisors
 * gamma = sum c_i lambda^i with |c_i| <= height in the ring Z[lambda],
 * using the multiplication-matrix characteristic polynomial for minimal
 * polynomials, norms and integrality. Factors outside Q(lambda) are out of
 * search scope, so every verdict carries a "within bounds" qualifier.
 */

#pragma once

#include "shiftlab/polynomial.hpp"
#include "shiftlab/transfer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

struct PerronNumber {
    IntPoly min_poly;  // monic, irreducible over Q
    RatInterval iv;    // isolates the dominant (largest real) root

    double approx() const { return iv.mid_double(); }
    int degree() const { return min_poly.deg(); }
    // norm down to Q: (-1)^deg * constant term
    BigInt field_norm() const;
    bool is_rational_integer() const { return min_poly.deg() == 1; }
    BigInt as_integer() const;  // requires degree 1

    PerronNumber refined(const BigRat& width) const;
    std::string describe() const;
};

// dominant eigenvalue of an irreducible nonnegative integer matrix,
// certified to the requested interval width
PerronNumber perron_root(const TransferMatrix& A, const BigRat& width);

// true iff the largest real root of p is positive and strictly dominates
// every other root in modulus; p must be monic and irreducible
bool is_perron(const IntPoly& p);

// the PerronNumber with this minimal polynomial (selected root = the
// dominant one); throws unless is_perron holds
PerronNumber perron_from_poly(const IntPoly& p, const BigRat& width = BigRat(1, 1000000));

PerronNumber perron_multiply(const PerronNumber& a, const PerronNumber& b);

struct PerronFactorizations {
    // each entry: a multiset of irreducible-within-bounds Perron factors
    // (>1), sorted ascending; entries with a single factor are omitted
    std::vector<std::vector<PerronNumber>> factorizations;
    bool irreducible_within_bounds = false;
    int max_degree = 0;
    long long max_height = 0;
};

PerronFactorizations perron_factorizations(const PerronNumber& lambda, int max_degree,
                                           long long max_height);

}  // namespace shiftlab
