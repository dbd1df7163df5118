#include <doctest.h>

#include <algorithm>
#include <set>

#include "hypbill/shiftspace.hpp"
#include "support.hpp"

using namespace hypbill;
using hbtest::Rng;

namespace {

SubshiftHandle sft(int k, std::vector<Word> forbidden, std::string name = "sft") {
    SubshiftSpec s;
    s.closure = ForbiddenSet{k, std::move(forbidden)};
    return SubshiftHandle::sft(s, std::move(name));
}

SubshiftHandle polygon_shift(const PolygonSpec& p) { return SubshiftHandle::sft(forbidden_set(p)); }

int exponent_of(const DyadicDistance& d) {
    REQUIRE(d.exponent.has_value());
    return *d.exponent;
}

// Largest m with equal central languages of length 2m - 1, by brute force.
int oracle_exponent(int k, const std::vector<Word>& fx, const std::vector<Word>& fy, int cap) {
    const hbtest::LanguageOracle x(k, fx);
    const hbtest::LanguageOracle y(k, fy);
    int m = 0;
    while (m < cap && x.words(2 * (m + 1) - 1) == y.words(2 * (m + 1) - 1)) ++m;
    return m;
}

// Entropy of the even-shift approximant forbidding 2 1^k 2 for odd k < 2j:
// transfer matrix on "number of 1s since the last 2" (0..2j, then "long").
double even_approximant_entropy(int j) {
    const int n = 2 * j + 2;
    std::vector<double> v(static_cast<std::size_t>(n), 1.0);
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        std::vector<double> next(static_cast<std::size_t>(n), 0.0);
        for (int s = 0; s < n; ++s) {
            const double x = v[static_cast<std::size_t>(s)];
            // Read a 1.
            next[static_cast<std::size_t>(std::min(s + 1, n - 1))] += x;
            // Read a 2: allowed unless the run is odd and short.
            const bool odd_short = s % 2 == 1 && s < n - 1;
            if (!odd_short) next[0] += x;
        }
        double norm = 0.0;
        for (double y : next) norm = std::max(norm, y);
        for (auto& y : next) y /= norm;
        if (std::abs(norm - lambda) < 1e-15) break;
        lambda = norm;
        v = next;
    }
    return std::log(lambda);
}

}  // namespace

TEST_CASE("central window convention") {
    CHECK(central_window(1) == 1);
    CHECK(central_window(3) == 5);
}

TEST_CASE("subshift_hausdorff: worked examples") {
    const auto full = sft(2, {});
    const auto golden = sft(2, {"11"});
    SUBCASE("a shift is at distance 0 from itself") {
        const auto d = subshift_hausdorff(golden, golden, 8);
        CHECK(d.equal_within_budget());
        CHECK(d.proven_equal);
        CHECK(d.value() == 0.0);
    }
    SUBCASE("full 2-shift vs golden mean") {
        const auto d = subshift_hausdorff(full, golden, 8);
        CHECK(exponent_of(d) == 1);
        CHECK(d.value() == 0.5);
        // B_1 agrees and B_2 already differs, which still leaves m* = 1.
        CHECK(d.first_difference == 2);
        REQUIRE(d.witness.has_value());
        CHECK(d.witness_in_first);
        CHECK(*d.witness == "11");
        CHECK(d.text() == "2^-1");
    }
    SUBCASE("ideal triangle vs lambda=4 triangle") {
        const auto d = subshift_hausdorff(polygon_shift(hbtest::ideal_spec(3)), polygon_shift(hbtest::compact_spec({4, 4, 4})), 8);
        CHECK(exponent_of(d) == 2);
        CHECK(d.value() == 0.25);
        REQUIRE(d.witness.has_value());
        CHECK(d.witness->size() == 5u);
        CHECK(d.witness_in_first);
    }
    SUBCASE("symmetry and alphabet checks") {
        const auto a = subshift_hausdorff(golden, full, 8);
        CHECK(exponent_of(a) == 1);
        CHECK_FALSE(a.witness_in_first);
        // Smaller alphabets embed in the larger one: the letter 3 differs at once.
        const auto wider = subshift_hausdorff(golden, sft(3, {"11"}), 4);
        CHECK(exponent_of(wider) == 0);
        CHECK(wider.value() == 1.0);
    }
}

TEST_CASE("dyadic distance agrees with brute-force point-cloud Hausdorff") {
    // Frozen exponents, each confirmed by both brute-force oracles below.
    const std::vector<std::tuple<int, std::vector<Word>, std::vector<Word>, int>> pairs{
        {2, {}, {"11"}, 1},
        {3, {"11", "22", "33"}, {"11", "22", "33", "12121", "21212", "23232", "32323", "13131", "31313"}, 2},
        {2, {"11"}, {"11", "222"}, 1},
        {2, {"11"}, {"11", "2222"}, 2},
        {3, {"11", "22", "33"}, {"11", "22", "33", "123"}, 1},
    };
    for (const auto& [k, fx, fy, frozen] : pairs) {
        const auto x = sft(k, fx);
        const auto y = sft(k, fy);
        const int cloud = hbtest::cloud_hausdorff_exponent(hbtest::periodic_cloud(k, fx, 6), hbtest::periodic_cloud(k, fy, 6), 10);
        CHECK(cloud == frozen);
        CHECK(oracle_exponent(k, fx, fy, 4) == frozen);
        CHECK(exponent_of(subshift_hausdorff(x, y, 8)) == frozen);
    }
}

TEST_CASE("alphabet-minimized distance") {
    const auto golden = sft(2, {"11"});
    CHECK(alphabet_minimized_distance(golden, sft(2, {"22"}), 6).equal_within_budget());
    const auto full = sft(2, {});
    CHECK(exponent_of(alphabet_minimized_distance(full, golden, 6)) == 1);
    const auto tri = polygon_shift(hbtest::compact_spec({4, 4, 4}));
    CHECK(alphabet_minimized_distance(tri, tri.relabeled({3, 1, 2}), 6).equal_within_budget());
    CHECK(exponent_of(subshift_hausdorff(golden, golden.relabeled({2, 1}), 6)) == 1);
    try {
        alphabet_minimized_distance(sft(9, {}), sft(9, {}), 2);
        FAIL("expected AlphabetTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AlphabetTooLarge);
    }
}

TEST_CASE("SFT approximations") {
    const auto fam = even_shift_family();
    SUBCASE("generated words") {
        CHECK(sft_approximation(fam, 1).spec()->closure.words == std::vector<Word>{"212"});
        CHECK(sft_approximation(fam, 2).spec()->closure.words == std::vector<Word>{"212", "21112"});
        CHECK(sft_approximation(fam, 0).words(3, 100).size() == 8u);
    }
    SUBCASE("large j fixes B_n") {
        const auto even = SubshiftHandle::even_shift();
        for (int n = 1; n <= 10; ++n) {
            const int j = n / 2 + 1;
            CHECK(sft_approximation(fam, j).words(n, 100000) == even.words(n, 100000));
        }
    }
    SUBCASE("decreasing family: nested and non-increasing distances") {
        const auto even = SubshiftHandle::even_shift();
        int previous = 0;
        for (int j = 1; j <= 6; ++j) {
            const auto xj = sft_approximation(fam, j);
            const auto next = sft_approximation(fam, j + 1);
            for (const auto& w : next.words(8, 100000)) CHECK(xj.contains(w));
            const int e = exponent_of(subshift_hausdorff(xj, even, 10));
            CHECK(e >= previous);
            previous = e;
        }
    }
    SUBCASE("increasing padding family converges from inside") {
        const auto pad = padding_family(2, {"11"}, 1, 2, 1);
        const auto limit = sft(2, {"11"});
        int previous = 0;
        for (int j = 1; j <= 5; ++j) {
            const auto xj = sft_approximation(pad, j);
            CHECK(xj.spec()->closure.words.size() == 2u);
            for (const auto& w : xj.words(7, 10000)) CHECK(limit.contains(w));
            const int e = exponent_of(subshift_hausdorff(xj, limit, 12));
            CHECK(e >= previous);
            previous = e;
        }
        CHECK(previous > 1);
    }
}

TEST_CASE("entropy along the even-shift approximants") {
    std::vector<double> h;
    for (int j = 1; j <= 12; ++j) h.push_back(even_approximant_entropy(j));
    const auto fam = even_shift_family();
    for (int j = 1; j <= 6; ++j) {
        CHECK(std::abs(entropy(*sft_approximation(fam, j).spec()).log_perron - h[static_cast<std::size_t>(j - 1)]) < 1e-9);
    }
    for (std::size_t i = 0; i + 2 < h.size(); ++i) {
        CHECK(h[i] > h[i + 1]);
        CHECK(h[i] - h[i + 1] >= h[i + 1] - h[i + 2]);
    }
    CHECK(h[10] - h[11] < 1e-3);
    // The even shift's entropy is log of the golden ratio.
    CHECK(std::abs(h[11] - std::log((1.0 + std::sqrt(5.0)) / 2.0)) < 1e-3);
}

TEST_CASE("finite subshifts are isolated") {
    Rng r(401);
    for (const Word& p : {Word("1"), Word("12"), Word("123"), Word("1213"), Word("1122")}) {
        const int k = 3;
        const auto z = SubshiftHandle::periodic_orbit(p, k);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Word> f;
            const int count = r.integer(1, 5);
            for (int j = 0; j < count; ++j) {
                Word w;
                const int len = r.integer(1, 3);
                for (int t = 0; t < len; ++t) w.push_back(letter_char(r.integer(1, k)));
                f.push_back(w);
            }
            SubshiftSpec spec;
            spec.closure = ForbiddenSet{k, f};
            if (SftLanguage(spec.closure).empty()) continue;
            const auto d = subshift_hausdorff(z, SubshiftHandle::sft(spec), 8);
            if (d.equal_within_budget()) continue;
            CHECK(*d.exponent <= static_cast<int>(p.size()) + 1);
        }
    }
}

TEST_CASE("limit experiments") {
    SUBCASE("constant sequence") {
        const auto x = polygon_shift(hbtest::compact_spec({4, 4, 4}));
        const auto report = limit_experiment({x, x, x}, x, 4, 6);
        for (const auto& row : report.rows) {
            CHECK(row.distance.equal_within_budget());
            CHECK(row.distance.value() == 0.0);
        }
    }
    SUBCASE("even-shift approximants") {
        const auto fam = even_shift_family();
        std::vector<SubshiftHandle> seq;
        for (int j = 1; j <= 5; ++j) seq.push_back(sft_approximation(fam, j));
        const auto report = limit_experiment(seq, SubshiftHandle::even_shift(), 8, 8);
        int previous = 0;
        for (const auto& row : report.rows) {
            CHECK(row.transitive == Truth::True);
            CHECK(row.mixing == Truth::True);
            CHECK(exponent_of(row.distance) > previous);
            previous = exponent_of(row.distance);
        }
        CHECK(report.limit.mixing == Truth::True);
    }
    SUBCASE("three-symbol family: transitive approximants, non-transitive limit") {
        std::vector<SubshiftHandle> seq;
        for (int n = 1; n <= 4; ++n) seq.push_back(SubshiftHandle::sft(single_defect_approximant(n)));
        const auto report = limit_experiment(seq, SubshiftHandle::single_defect(), 8, 8);
        for (const auto& row : report.rows) CHECK(row.transitive == Truth::True);
        CHECK(report.limit.transitive == Truth::False);
        CHECK(report.limit.chain_transitive == Truth::True);
        const auto csv = convergence_csv(report);
        CHECK(csv.rfind("n,distance_exponent,distance,transitive,mixing,chain_transitive,entropy\n", 0) == 0);
    }
}

TEST_CASE("polygon convergence") {
    SUBCASE("cusp opening toward the ideal triangle") {
        std::vector<PolygonSpec> seq;
        for (int n = 1; n <= 6; ++n) seq.push_back(cusp_opening_triangle(n));
        const auto rows = polygon_convergence(seq, hbtest::ideal_spec(3), 8);
        REQUIRE(rows.size() == 6u);
        const std::vector<Word> ideal{"11", "22", "33"};
        int previous = 0;
        for (int n = 1; n <= 6; ++n) {
            const auto& row = rows[static_cast<std::size_t>(n - 1)];
            // The alternation at v_3 has length n + 3; brute-force the agreement.
            const auto fx = forbidden_set(seq[static_cast<std::size_t>(n - 1)]).closure.words;
            const int oracle = oracle_exponent(3, fx, ideal, 6);
            CHECK(oracle == (n + 3) / 2);
            CHECK(exponent_of(row.distance) == oracle);
            CHECK(exponent_of(row.distance) >= previous);
            previous = exponent_of(row.distance);
            CHECK(row.forbidden_removed.empty());
            CHECK(row.forbidden_added.size() == 2u);
            CHECK(row.forbidden_added[0].size() == static_cast<std::size_t>(n + 3));
        }
    }
    SUBCASE("stabilizing compact sequence reaches 0") {
        std::vector<PolygonSpec> seq;
        for (int l : {3, 5, 6, 6, 6}) seq.push_back(hbtest::compact_spec({4, 4, l}));
        const auto rows = polygon_convergence(seq, hbtest::compact_spec({4, 4, 6}), 8);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].distance.equal_within_budget() == (i >= 2));
            if (i >= 2) CHECK(rows[i].distance.proven_equal);
        }
        CHECK(polygon_convergence_csv(rows).find("\n3,") != std::string::npos);
    }
}
