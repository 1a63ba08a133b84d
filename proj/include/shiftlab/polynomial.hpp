/*
 * Dense exact-arithmetic polynomials over Z and Q, with the classical
 * machinery the Perron layer needs:
 *
 *   - Sturm chains: certified real-root counting, isolation, bisection
 *   - resultants (used to build product polynomials of algebraic numbers)
 *   - Kronecker factorization over Z (degrees here are small)
 *   - exact polynomial square roots
 *
 * Certification is the point: dominance of an algebraic number over its
 * conjugates is decided by exact sign computations, never by floating
 * point alone.
 */

#pragma once

#include "shiftlab/numeric.hpp"

#include <string>
#include <vector>

namespace shiftlab {

struct RatPoly;

struct IntPoly {
    std::vector<BigInt> c;  // c[i] is the coefficient of x^i; no leading zeros

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly from_longs(const std::vector<long long>& coeffs);

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    const BigInt& lead() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;

    IntPoly derivative() const;
    IntPoly neg_x() const;  // p(-x)

    BigInt content() const;
    IntPoly primitive_part() const;

    RatPoly to_rat() const;
    std::string to_string() const;  // human form, e.g. "x^2 - x - 1"

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

struct RatPoly {
    std::vector<BigRat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const BigRat& lead() const { return c.back(); }

    BigRat eval(const BigRat& x) const;
    RatPoly derivative() const;

    // clears denominators and makes the leading coefficient positive
    IntPoly to_int_primitive() const;
    // requires all coefficients integral
    IntPoly to_int_exact() const;
    bool is_integral() const;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const BigRat& s, const RatPoly& a);

// quotient/remainder over Q, exact
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// exact division; throws on nonzero remainder
RatPoly divexact(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic gcd

// resultant of a and b (exact; an integer for integer inputs)
BigRat resultant(const RatPoly& a, const RatPoly& b);

// square root of a perfect-square polynomial; throws if not a square
RatPoly poly_sqrt(const RatPoly& s);

IntPoly squarefree_part(const IntPoly& p);

// irreducible factors over Z with multiplicity, primitive with positive
// leading coefficient, deterministic order (Kronecker's method)
std::vector<IntPoly> factor_over_Z(const IntPoly& p);
bool is_irreducible_over_Z(const IntPoly& p);

// ---- certified real roots -------------------------------------------------

struct RatInterval {
    BigRat lo, hi;  // root lies in [lo, hi]; lo == hi means an exact root
    bool exact() const { return lo == hi; }
    BigRat width() const { return hi - lo; }
    double mid_double() const;
};

struct SturmChain {
    std::vector<RatPoly> chain;
    explicit SturmChain(const IntPoly& squarefree);
    int sign_variations(const BigRat& x) const;
    // number of roots in (a, b]
    int count_roots(const BigRat& a, const BigRat& b) const;
};

BigRat cauchy_root_bound(const IntPoly& p);

// disjoint isolating intervals of all real roots, ascending
std::vector<RatInterval> isolate_real_roots(const IntPoly& p);

// shrink an isolating interval below the given width by bisection
RatInterval refine_root(const IntPoly& p, RatInterval iv, const BigRat& width);

// parse "x^2 - x - 1", "x^4-1", "x-2", ... (integer coefficients)
IntPoly parse_poly(const std::string& s);

}  // namespace shiftlab
