#include "shiftlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace shiftlab {

namespace {

void trim_int(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
void trim_rat(std::vector<BigRat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

int sign_of(const BigRat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim_int(c); }

IntPoly IntPoly::from_longs(const std::vector<long long>& coeffs) {
    std::vector<BigInt> v(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + BigRat(*it);
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c.size() <= 1) return IntPoly{};
    std::vector<BigInt> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<long long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::neg_x() const {
    std::vector<BigInt> d = c;
    for (size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (auto& x : c) g = boost::multiprecision::gcd(g, x);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (lead() < 0) g = -g;
    std::vector<BigInt> d = c;
    for (auto& x : d) x /= g;
    return IntPoly(std::move(d));
}

RatPoly IntPoly::to_rat() const {
    RatPoly r;
    r.c.assign(c.begin(), c.end());
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        if (c[i] == 0) continue;
        BigInt a = c[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        BigInt mag = abs(a);
        if (mag != 1 || i == 0) os << mag.str();
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

RatPoly::RatPoly(std::vector<BigRat> coeffs) : c(std::move(coeffs)) { trim_rat(c); }

BigRat RatPoly::eval(const BigRat& x) const {
    BigRat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

RatPoly RatPoly::derivative() const {
    if (c.size() <= 1) return {};
    std::vector<BigRat> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * BigRat(static_cast<long long>(i));
    return RatPoly(std::move(d));
}

bool RatPoly::is_integral() const {
    for (auto& x : c)
        if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

IntPoly RatPoly::to_int_exact() const {
    if (!is_integral()) throw InputError("polynomial has non-integer coefficients");
    std::vector<BigInt> d(c.size());
    for (size_t i = 0; i < c.size(); ++i) d[i] = boost::multiprecision::numerator(c[i]);
    return IntPoly(std::move(d));
}

IntPoly RatPoly::to_int_primitive() const {
    if (is_zero()) return {};
    BigInt l = 1;
    for (auto& x : c) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    std::vector<BigInt> d(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        d[i] = boost::multiprecision::numerator(c[i] * BigRat(l));
    return IntPoly(std::move(d)).primitive_part();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<BigRat> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<BigRat> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRat> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return RatPoly(std::move(r));
}

RatPoly operator*(const BigRat& s, const RatPoly& a) {
    std::vector<BigRat> r = a.c;
    for (auto& x : r) x *= s;
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    std::vector<BigRat> rem = a.c;
    int db = b.deg();
    if (a.deg() < db) return {{}, a};
    std::vector<BigRat> quot(a.deg() - db + 1, 0);
    for (int i = a.deg(); i >= db; --i) {
        BigRat q = rem[i] / b.lead();
        if (q == 0) continue;
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly divexact(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InputError("polynomial division is not exact");
    return q;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (BigRat(1) / a.lead()) * a;  // monic
}

BigRat resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.deg(), n = b.deg();
    if (m == 0) {
        BigRat r = 1;
        for (int i = 0; i < n; ++i) r *= a.c[0];
        return r;
    }
    if (n == 0) {
        BigRat r = 1;
        for (int i = 0; i < m; ++i) r *= b.c[0];
        return r;
    }
    RatPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    BigRat lc_pow = 1;
    for (int i = 0; i < m - r.deg(); ++i) lc_pow *= b.lead();
    BigRat sign = (static_cast<long long>(m) * n) % 2 == 0 ? 1 : -1;
    return sign * lc_pow * resultant(b, r);
}

RatPoly poly_sqrt(const RatPoly& s) {
    if (s.is_zero()) return {};
    if (s.deg() % 2 != 0) throw InputError("poly_sqrt: odd degree");
    int h = s.deg() / 2;
    // make the leading coefficient a perfect square situation: require monic-like
    BigRat lead = s.lead();
    BigInt num = boost::multiprecision::numerator(lead);
    BigInt den = boost::multiprecision::denominator(lead);
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) throw InputError("poly_sqrt: not a perfect square");
    std::vector<BigRat> hc(h + 1, 0);
    hc[h] = BigRat(sn, sd);
    for (int k = 1; k <= h; ++k) {
        // match the coefficient of x^(2h-k)
        BigRat acc = 0;
        for (int i = h - k + 1; i <= h; ++i) {
            int j = 2 * h - k - i;
            if (j > h || j < 0) continue;
            if (i > j) continue;
            if (i == j)
                acc += hc[i] * hc[j];
            else
                acc += 2 * hc[i] * hc[j];
        }
        BigRat target = (2 * h - k <= s.deg()) ? s.c[2 * h - k] : BigRat(0);
        hc[h - k] = (target - acc) / (2 * hc[h]);
    }
    RatPoly hpoly(std::move(hc));
    if (!(hpoly * hpoly - s).is_zero()) throw InputError("poly_sqrt: not a perfect square");
    return hpoly;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.deg() <= 1) return p.primitive_part();
    RatPoly g = poly_gcd(p.to_rat(), p.derivative().to_rat());
    if (g.deg() == 0) return p.primitive_part();
    return divexact(p.to_rat(), g).to_int_primitive();
}

namespace {

// all divisors of |n| with both signs, small magnitudes first
std::vector<BigInt> signed_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (auto& d : divisors(abs(n))) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// Lagrange interpolation through (x_i, y_i); returns {} when the result is
// not a degree-k integer polynomial
bool interpolate_int(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys, IntPoly& out) {
    size_t k = xs.size();
    RatPoly acc;
    for (size_t i = 0; i < k; ++i) {
        RatPoly term(std::vector<BigRat>{BigRat(ys[i])});
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            RatPoly lin(std::vector<BigRat>{BigRat(-xs[j]), 1});
            term = term * lin;
            term = (BigRat(1) / BigRat(xs[i] - xs[j])) * term;
        }
        acc = acc + term;
    }
    if (!acc.is_integral()) return false;
    out = acc.to_int_exact();
    return true;
}

// one nontrivial factor by Kronecker's method, or nullopt when irreducible
bool kronecker_split(const IntPoly& f, IntPoly& factor) {
    int n = f.deg();
    for (int k = 1; k <= n / 2; ++k) {
        // evaluation points 0, 1, -1, 2, -2, ...
        std::vector<BigInt> xs;
        for (int i = 0; static_cast<int>(xs.size()) < k + 1; ++i) {
            if (i == 0)
                xs.push_back(0);
            else {
                xs.push_back(i);
                if (static_cast<int>(xs.size()) < k + 1) xs.push_back(-i);
            }
        }
        std::vector<BigInt> vals;
        bool root_found = false;
        for (auto& x : xs) {
            BigInt v = f.eval(x);
            if (v == 0) {
                // x is an integer root
                factor = IntPoly({-x, 1});
                root_found = true;
                break;
            }
            vals.push_back(v);
        }
        if (root_found) return true;

        std::vector<std::vector<BigInt>> divs;
        for (auto& v : vals) divs.push_back(signed_divisors(v));
        long long combos = 1;
        for (auto& d : divs) {
            combos *= static_cast<long long>(d.size());
            if (combos > 200000)
                throw BudgetExceeded(200000);  // divisor combinations out of budget
        }
        // fix the first divisor positive: g and -g divide alike
        std::vector<size_t> idx(k + 1, 0);
        while (true) {
            bool skip = divs[0][idx[0]] < 0;
            if (!skip) {
                std::vector<BigInt> ys(k + 1);
                for (int i = 0; i <= k; ++i) ys[i] = divs[i][idx[i]];
                IntPoly g;
                if (interpolate_int(xs, ys, g) && g.deg() == k) {
                    auto [q, r] = divmod(f.to_rat(), g.to_rat());
                    if (r.is_zero() && q.is_integral()) {
                        factor = g.primitive_part();
                        if (factor.deg() >= 1) return true;
                    }
                }
            }
            int i = 0;
            while (i <= k && ++idx[i] == divs[i].size()) idx[i++] = 0;
            if (i > k) break;
        }
    }
    return false;
}

}  // namespace

std::vector<IntPoly> factor_over_Z(const IntPoly& p) {
    if (p.is_zero()) throw InputError("factor_over_Z: zero polynomial");
    std::vector<IntPoly> out;
    IntPoly f = p.primitive_part();
    // factors of x
    while (f.deg() >= 1 && f.c[0] == 0) {
        out.push_back(IntPoly({0, 1}));
        f = divexact(f.to_rat(), IntPoly({0, 1}).to_rat()).to_int_exact();
    }
    std::vector<IntPoly> work{f};
    while (!work.empty()) {
        IntPoly cur = work.back();
        work.pop_back();
        if (cur.deg() < 1) continue;
        IntPoly g;
        if (kronecker_split(cur, g)) {
            work.push_back(g);
            work.push_back(divexact(cur.to_rat(), g.to_rat()).to_int_primitive());
        } else {
            out.push_back(cur);
        }
    }
    std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = a.deg(); i >= 0; --i)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    });
    return out;
}

bool is_irreducible_over_Z(const IntPoly& p) {
    if (p.deg() < 1) return false;
    auto f = factor_over_Z(p);
    return f.size() == 1;
}

double RatInterval::mid_double() const {
    return ((lo + hi) / 2).convert_to<double>();
}

SturmChain::SturmChain(const IntPoly& squarefree) {
    RatPoly p0 = squarefree.to_rat();
    RatPoly p1 = squarefree.derivative().to_rat();
    chain.push_back(p0);
    if (p1.is_zero()) return;
    chain.push_back(p1);
    while (true) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(BigRat(-1) * r);
    }
}

int SturmChain::sign_variations(const BigRat& x) const {
    int v = 0, prev = 0;
    for (auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmChain::count_roots(const BigRat& a, const BigRat& b) const {
    return sign_variations(a) - sign_variations(b);
}

BigRat cauchy_root_bound(const IntPoly& p) {
    if (p.deg() < 1) return 1;
    BigRat m = 0;
    for (int i = 0; i < p.deg(); ++i) {
        BigRat r = BigRat(abs(p.c[i])) / BigRat(abs(p.lead()));
        m = std::max(m, r);
    }
    return m + 1;
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.deg() < 1) return {};
    SturmChain chain(sf);
    BigRat bound = cauchy_root_bound(sf);
    std::vector<RatInterval> out;
    // (a, b] with the root count; split until every interval isolates one
    struct Seg {
        BigRat a, b;
        int roots;
    };
    std::vector<Seg> work{{-bound, bound, chain.count_roots(-bound, bound)}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.roots == 0) continue;
        if (s.roots == 1) {
            // shrink endpoints away from exact hits for a clean [lo, hi]
            if (sf.eval(s.b) == 0) {
                out.push_back({s.b, s.b});
                continue;
            }
            out.push_back({s.a, s.b});
            continue;
        }
        BigRat m = (s.a + s.b) / 2;
        if (sf.eval(m) == 0) {
            out.push_back({m, m});
            // remaining roots strictly inside the halves; nudge around m
            BigRat eps = (s.b - s.a) / 1024;
            BigRat ml = m - eps, mr = m + eps;
            while (sf.eval(ml) == 0) ml = (s.a + ml) / 2;
            while (sf.eval(mr) == 0) mr = (mr + s.b) / 2;
            int left = chain.count_roots(s.a, ml);
            int right = chain.count_roots(mr, s.b);
            if (left > 0) work.push_back({s.a, ml, left});
            if (right > 0) work.push_back({mr, s.b, right});
        } else {
            int left = chain.count_roots(s.a, m);
            int right = s.roots - left;
            if (left > 0) work.push_back({s.a, m, left});
            if (right > 0) work.push_back({m, s.b, right});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

RatInterval refine_root(const IntPoly& p, RatInterval iv, const BigRat& width) {
    if (iv.exact()) return iv;
    IntPoly sf = squarefree_part(p);
    int s_lo = sign_of(sf.eval(iv.lo));
    int s_hi = sign_of(sf.eval(iv.hi));
    if (s_lo == 0) return {iv.lo, iv.lo};
    if (s_hi == 0) return {iv.hi, iv.hi};
    if (s_lo == s_hi)
        throw InputError("refine_root: interval endpoints do not bracket a sign change");
    while (iv.hi - iv.lo > width) {
        BigRat m = (iv.lo + iv.hi) / 2;
        int sm = sign_of(sf.eval(m));
        if (sm == 0) return {m, m};
        if (sm == s_lo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

IntPoly parse_poly(const std::string& s) {
    // terms: [+-] [coef] [x [^ exp]]
    std::vector<BigInt> coeffs;
    size_t i = 0;
    auto skip_ws = [&]() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw InputError("empty polynomial");
    bool any = false;
    while (i < s.size()) {
        skip_ws();
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            throw InputError("polynomial parse error near '" + s.substr(i) + "'");
        }
        BigInt coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
            coef = BigInt(num);
            have_coef = true;
        }
        skip_ws();
        int exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                std::string e;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                if (e.empty()) throw InputError("polynomial parse error: missing exponent");
                exp = std::stoi(e);
            }
        } else if (!have_coef) {
            throw InputError("polynomial parse error near '" + s.substr(i) + "'");
        }
        if (static_cast<int>(coeffs.size()) <= exp) coeffs.resize(exp + 1, 0);
        coeffs[exp] += sign * coef;
        any = true;
        skip_ws();
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace shiftlab
