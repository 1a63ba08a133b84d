/*
 * Exact arithmetic primitives shared across the toolkit: arbitrary-precision
 * integers and rationals, plus the small number-theoretic helpers (Moebius,
 * divisors, binomials) that the periodic-point machinery leans on.
 *
 * All counting paths are exact; floating point appears only in reporting
 * layers, never inside a count.
 */

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when an enumeration would exceed the configured node budget.
// Always an error, never a silent approximation.
struct BudgetExceeded : std::runtime_error {
    long long bound;
    explicit BudgetExceeded(long long b)
        : std::runtime_error("enumeration budget exceeded (max nodes = " + std::to_string(b) + ")"),
          bound(b) {}
};

// Malformed input: bad spec file, dimension mismatch, parity violation, ...
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt big_pow(const BigInt& base, unsigned long long e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is always a binomial prefix
    }
    return r;
}

inline int mobius(long long n) {
    if (n <= 0) throw InputError("mobius: argument must be positive");
    int primes = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

inline std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline bool is_prime_u64(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % p == 0) return n == p;
    }
    auto mulmod = [](unsigned long long a, unsigned long long b, unsigned long long m) {
        return (unsigned long long)((__uint128_t)a * b % m);
    };
    auto powmod = [&](unsigned long long a, unsigned long long e, unsigned long long m) {
        unsigned long long r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic Miller-Rabin bases for 64-bit range
    for (unsigned long long a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        unsigned long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Prime factorization by trial division (plus a primality check for the
// cofactor). Counts fed to the divisor search are smooth in practice; a
// large non-smooth cofactor is reported as out of budget.
inline std::map<BigInt, int> factorize(BigInt n, long long trial_bound = 1000000) {
    if (n <= 0) throw InputError("factorize: argument must be positive");
    std::map<BigInt, int> f;
    for (long long p = 2; p <= trial_bound && BigInt(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) {
        if (n <= std::numeric_limits<unsigned long long>::max() &&
            is_prime_u64(n.convert_to<unsigned long long>())) {
            ++f[n];
        } else if (BigInt(trial_bound) * trial_bound > n) {
            ++f[n];  // cofactor below trial bound squared is prime
        } else {
            throw BudgetExceeded(trial_bound);
        }
    }
    return f;
}

// All divisors, ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    auto f = factorize(n);
    std::vector<BigInt> divs{1};
    for (auto& [p, e] : f) {
        size_t base = divs.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// log of a big integer, for reporting only
inline double log_big(const BigInt& n) {
    if (n <= 0) throw InputError("log_big: argument must be positive");
    return log(boost::multiprecision::cpp_bin_float_100(n)).convert_to<double>();
}

}  // namespace shiftlab
