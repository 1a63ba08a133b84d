#include <doctest.h>

#include "shiftlab/counts.hpp"
#include "shiftlab/entropy.hpp"
#include "shiftlab/fixed_points.hpp"
#include "shiftlab/lattice.hpp"
#include "shiftlab/sft.hpp"

#include <cmath>
#include <set>
#include <sstream>

using namespace shiftlab;

namespace {

// brute-force oracle: try all |A|^index assignments of the fundamental
// domain, independent of the backtracking search order
BigInt brute_force_fixed_points(const SftSpec& spec, const Sublattice& L) {
    long long k = L.index();
    int n = spec.alphabet_size();
    std::vector<int> values(k, 0);
    BigInt count = 0;
    while (true) {
        if (torus_admissible(spec, L, values)) ++count;
        long long i = 0;
        while (i < k && ++values[i] == n) values[i++] = 0;
        if (i == k) break;
    }
    return count;
}

}  // namespace

TEST_CASE("Hermite normal form enumeration") {
    CHECK(sublattices_of_index(1, 5).size() == 1);
    CHECK(sublattices_of_index(1, 5)[0].basis[0][0] == 5);
    CHECK(sublattices_of_index(2, 2).size() == 3);
    CHECK(sublattices_of_index(2, 4).size() == 7);  // sigma(4)
    // sigma(k) sublattices of Z^2 for a few more k, and uniqueness
    for (long long k = 1; k <= 8; ++k) {
        auto ls = sublattices_of_index(2, k);
        long long sigma = 0;
        for (long long d = 1; d <= k; ++d)
            if (k % d == 0) sigma += d;
        CHECK(static_cast<long long>(ls.size()) == sigma);
        std::set<std::string> seen;
        for (auto& L : ls) {
            CHECK(L.index() == k);
            seen.insert(L.to_string());
        }
        CHECK(seen.size() == ls.size());
    }
    CHECK_THROWS_AS(sublattices_of_index(4, 2), InputError);
}

TEST_CASE("sublattice reduction is canonical") {
    auto L = Sublattice::from_rows(2, {{2, 1}, {0, 3}});
    auto cells = L.fundamental_cells();
    CHECK(static_cast<long long>(cells.size()) == L.index());
    // every cell reduces to itself, shifted copies reduce back
    for (auto& c : cells) {
        CHECK(L.reduce(c) == c);
        Vec shifted = c;
        shifted[0] += 2 * L.basis[0][0];
        shifted[1] += 2 * L.basis[0][1];
        CHECK(L.reduce(shifted) == c);
        Vec neg = vec_sub(c, Vec{L.basis[1][0] * 3, L.basis[1][1] * 3});
        CHECK(L.reduce(neg) == c);
    }
}

TEST_CASE("full shift construction") {
    auto x = full_shift(2, 1);
    CHECK(x.alphabet_size() == 2);
    CHECK(x.forbidden.empty());
    auto pt = full_shift(1, 3);
    CHECK(pt.alphabet_size() == 1);
    CHECK(fixed_point_count(pt, Sublattice::diagonal({2, 2, 2})) == 1);
    CHECK_THROWS_AS(full_shift(0, 1), InputError);
}

TEST_CASE("fixed points of full shifts obey n^index") {
    for (int n : {2, 3}) {
        auto spec = full_shift(n, 2);
        for (long long k = 1; k <= 5; ++k) {
            for (auto& L : sublattices_of_index(2, k)) {
                CHECK(fixed_point_count(spec, L) == big_pow(n, k));
            }
        }
    }
}

TEST_CASE("chessboard torus counts match brute force") {
    auto cb2 = chessboard_sft(2);
    auto L22 = Sublattice::diagonal({2, 2});
    CHECK(brute_force_fixed_points(cb2, L22) == 18);  // proper 3-colorings of the 4-cycle
    CHECK(fixed_point_count(cb2, L22) == 18);

    // cross-check backtracking against the oracle on several lattices
    for (long long k = 1; k <= 4; ++k) {
        for (auto& L : sublattices_of_index(2, k)) {
            CHECK(fixed_point_count(cb2, L) == brute_force_fixed_points(cb2, L));
        }
    }
}

TEST_CASE("enumerate mode agrees with count mode") {
    auto cb2 = chessboard_sft(2);
    auto L = Sublattice::diagonal({2, 2});
    auto res = fixed_points(cb2, L, true);
    CHECK(res.count == 18);
    CHECK(res.configs.size() == 18);
    for (auto& cfg : res.configs) CHECK(torus_admissible(cb2, L, cfg.values));
    // determinism: same call twice gives identical output
    auto res2 = fixed_points(cb2, L, true);
    CHECK(res.configs == res2.configs);
}

TEST_CASE("parallel enumeration is bit-identical") {
    auto cb2 = chessboard_sft(2);
    for (auto& L : {Sublattice::diagonal({3, 3}), Sublattice::from_rows(2, {{2, 1}, {0, 3}})}) {
        EnumOptions seq{.max_nodes = kDefaultMaxNodes, .jobs = 1};
        EnumOptions par{.max_nodes = kDefaultMaxNodes, .jobs = 8};
        auto a = fixed_points(cb2, L, true, seq);
        auto b = fixed_points(cb2, L, true, par);
        CHECK(a.count == b.count);
        CHECK(a.configs == b.configs);
    }
}

TEST_CASE("budget exceeded is an error, not an approximation") {
    auto spec = full_shift(3, 2);
    EnumOptions tight{.max_nodes = 10, .jobs = 1};
    CHECK_THROWS_AS(fixed_point_count(spec, Sublattice::diagonal({3, 3}), tight), BudgetExceeded);
    // and identical under parallelism
    EnumOptions tight8{.max_nodes = 10, .jobs = 8};
    CHECK_THROWS_AS(fixed_point_count(spec, Sublattice::diagonal({3, 3}), tight8), BudgetExceeded);
}

TEST_CASE("product of SFTs multiplies fixed-point counts") {
    auto f2 = full_shift(2, 1);
    auto f3 = full_shift(3, 1);
    auto p = product_sft(f2, f3);
    CHECK(p.alphabet_size() == 6);
    CHECK(p.forbidden.empty());

    auto gm = golden_mean_sft();
    auto cb1 = chessboard_sft(1);
    auto prod = product_sft(gm, cb1);
    for (long long n = 1; n <= 6; ++n) {
        auto L = Sublattice::diagonal({n});
        CHECK(fixed_point_count(prod, L) ==
              fixed_point_count(gm, L) * fixed_point_count(cb1, L));
    }

    // chessboard(1) x chessboard(1) on the period-3 sublattice: 6*6
    auto cbcb = product_sft(cb1, cb1);
    CHECK(fixed_point_count(cbcb, Sublattice::diagonal({3})) == 36);

    // X x trivial = X
    auto idprod = product_sft(chessboard_sft(2), full_shift(1, 2));
    for (auto& L : sublattices_of_index(2, 3))
        CHECK(fixed_point_count(idprod, L) == fixed_point_count(chessboard_sft(2), L));

    CHECK_THROWS_AS(product_sft(full_shift(2, 1), full_shift(2, 2)), InputError);
}

TEST_CASE("periodic count sequences") {
    auto f2 = full_shift(2, 1);
    auto seq = periodic_count_sequence(f2, 4);
    CHECK(seq.periods() == std::vector<BigInt>{2, 4, 8, 16});

    // golden mean: trace of [[1,1],[1,0]] powers
    auto gm = periodic_count_sequence(golden_mean_sft(), 4);
    CHECK(gm.periods() == std::vector<BigInt>{1, 3, 4, 7});

    // 1-D chessboard: proper 3-colorings of the n-cycle, 2^n + 2(-1)^n
    auto cb = periodic_count_sequence(chessboard_sft(1), 4);
    CHECK(cb.periods() == std::vector<BigInt>{0, 6, 6, 18});
}

TEST_CASE("orbit realizability of count sequences") {
    for (auto spec : {full_shift(2, 1), golden_mean_sft(), chessboard_sft(1)}) {
        auto counts = periodic_count_sequence(spec, 8).periods();
        CHECK(orbit_realizable(counts));
        auto orbits = orbit_counts(counts);
        // reassemble: c_n = sum_{m|n} m * orbits_m
        for (long long n = 1; n <= 8; ++n) {
            BigInt c = 0;
            for (long long m = 1; m <= n; ++m)
                if (n % m == 0) c += m * orbits[m - 1];
            CHECK(c == counts[n - 1]);
        }
    }
    std::string why;
    CHECK_FALSE(orbit_realizable({0, 1}, &why));  // one 2-periodic point is impossible
    CHECK(!why.empty());
}

TEST_CASE("periodic equivalence") {
    auto f6 = full_shift(6, 1);
    auto f2xf3 = product_sft(full_shift(2, 1), full_shift(3, 1));
    auto v = periodically_equivalent(f6, f2xf3, 6);
    CHECK(v.equivalent);

    auto w = periodically_equivalent(full_shift(2, 1), golden_mean_sft(), 4);
    CHECK_FALSE(w.equivalent);
    CHECK(w.witness->index() == 1);
    CHECK(w.left == 2);
    CHECK(w.right == 1);

    auto cb2 = chessboard_sft(2);
    CHECK(periodically_equivalent(cb2, cb2, 4).equivalent);
}

TEST_CASE("entropy box estimates") {
    // full shift: every pattern is admissible, estimate is exactly log 2
    for (int d : {1, 2}) {
        auto est = entropy_box_estimate(full_shift(2, d), 4);
        CHECK(est.pattern_count == big_pow(2, static_cast<unsigned long long>(
                                                  Box::cube(d, 4).volume())));
        CHECK(est.estimate == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }

    // 1-D chessboard windows: 3 * 2^(k-1) admissible words of length k
    auto est = entropy_box_estimate(chessboard_sft(1), 4);
    CHECK(est.pattern_count == 3 * big_pow(2, 8));
    CHECK(est.estimate == doctest::Approx(std::log(768.0) / 9.0).epsilon(1e-12));

    // nonincreasing in the radius, and nonnegative
    double prev = std::numeric_limits<double>::infinity();
    for (long long n : {1, 2, 3}) {
        auto e = entropy_box_estimate(chessboard_sft(2), n);
        CHECK(e.estimate >= 0.0);
        CHECK(e.estimate <= prev + 1e-12);
        prev = e.estimate;
    }
}

TEST_CASE("entropy layer DP matches direct enumeration") {
    // golden mean words of length 2n+1 avoiding "11": Fibonacci
    auto e = entropy_box_estimate(golden_mean_sft(), 2);
    CHECK(e.pattern_count == 13);  // length-5 binary words without adjacent 1s
    auto cb = entropy_box_estimate(chessboard_sft(2), 1);
    // 3x3 proper colorings counted independently below
    auto spec = chessboard_sft(2);
    BigInt direct = 0;
    std::vector<int> v(9, 0);
    Box box = Box::cube(2, 1);
    auto cells = box.cells();
    while (true) {
        bool ok = true;
        for (auto& p : spec.forbidden) {
            for (auto& c : cells) {
                bool match = true;
                for (auto& [off, sym] : p.cells) {
                    Vec q = vec_add(c, off);
                    if (!box.contains(q)) { match = false; break; }
                    if (v[box.index_of(q)] != sym) { match = false; break; }
                }
                if (match) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) ++direct;
        size_t i = 0;
        while (i < 9 && ++v[i] == 3) v[i++] = 0;
        if (i == 9) break;
    }
    CHECK(cb.pattern_count == direct);
}

TEST_CASE("spec file round trip") {
    auto gm = golden_mean_sft();
    std::ostringstream os;
    write_sft(os, gm);
    std::istringstream is(os.str());
    auto back = parse_sft(is);
    CHECK(back.dim == 1);
    CHECK(back.alphabet == gm.alphabet);
    REQUIRE(back.forbidden.size() == 1);
    CHECK(back.forbidden[0].cells == gm.forbidden[0].cells);

    std::istringstream bad("alphabet a b\npattern\n(0)=a\n");
    CHECK_THROWS_AS(parse_sft(bad), InputError);
    std::istringstream bad2("dim 1\nalphabet a\npattern\n(0,0)=a\n");
    CHECK_THROWS_AS(parse_sft(bad2), InputError);
}

TEST_CASE("named systems resolve") {
    CHECK(resolve_named_sft("full(3,2)").alphabet_size() == 3);
    CHECK(resolve_named_sft("chessboard(2)").dim == 2);
    CHECK(resolve_named_sft("goldenmean").forbidden.size() == 1);
    CHECK_THROWS_AS(resolve_named_sft("mystery(1)"), InputError);
}
