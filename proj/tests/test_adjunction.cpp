#include <doctest.h>

#include <algorithm>
#include <random>

#include "genusbound/adjunction.hpp"

using namespace genusbound;

namespace {

struct CaseSpec {
    long b1 = 0;
    long b2_plus = 2;
    int genus = 1;
    long e = 0;
    long n = 0;
    std::optional<long> d_s;
    long u_power = 0;
    long ones = 0;
    long ambient = 0;
    bool sw = true;
    bool non_torsion = true;
    Chamber chamber = Chamber::not_applicable;
};

AdjunctionCase make(const CaseSpec& cs) {
    AdjunctionCase c;
    c.manifold.b1 = cs.b1;
    c.manifold.b2_plus = cs.b2_plus;
    c.surface.genus = cs.genus;
    c.surface.self_int = Int(cs.n);
    c.surface.non_torsion = cs.non_torsion;
    c.spinc.name = "t";
    c.spinc.pairing_e = Int(cs.e);
    c.spinc.sw_nonvanishing = cs.sw;
    c.spinc.chamber = cs.chamber;
    if (cs.d_s) c.d_s = Int(*cs.d_s);
    c.insertion.u_power = cs.u_power;
    c.insertion.surface_one_dim_count = cs.ones;
    c.insertion.ambient_degree = cs.ambient;
    return c;
}

AdjunctionCase basic_case(long b1, long b2p, int g, long e, long n, long d_s) {
    CaseSpec cs;
    cs.b1 = b1;
    cs.b2_plus = b2p;
    cs.genus = g;
    cs.e = e;
    cs.n = n;
    cs.d_s = d_s;
    cs.u_power = d_s / 2;
    if (b2p == 1) cs.chamber = Chamber::pd_sigma;
    return make(cs);
}

bool has_failure(const TheoremVerdict& v, const char* label) {
    return std::find(v.failed_hypotheses.begin(), v.failed_hypotheses.end(), label) !=
           v.failed_hypotheses.end();
}

}  // namespace

TEST_CASE("genus_floor inverts LHS <= 2g - 2") {
    CHECK(genus_floor(2) == 2);
    CHECK(genus_floor(8) == 5);
    CHECK(genus_floor(7) == 5);  // odd LHS rounds up
    CHECK(genus_floor(0) == 1);
    CHECK(genus_floor(-6) == -2);
}

TEST_CASE("th1 worked examples") {
    auto v = bound_th1(basic_case(0, 2, 1, -2, 0, 0));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 2);

    v = bound_th1(basic_case(3, 2, 1, -2, 2, 4));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 5);  // 4 + 1*4 = 8

    v = bound_th1(basic_case(0, 1, 1, 2, 0, 0));
    CHECK_FALSE(v.applicable);
    CHECK(has_failure(v, hyp::chamber_positivity));
}

TEST_CASE("th1 rejects non-basic insertions and negative dimension") {
    auto c = basic_case(0, 2, 1, -2, 0, 4);
    c.insertion.u_power = 1;  // should be 2
    auto v = bound_th1(c);
    CHECK_FALSE(v.applicable);
    CHECK(has_failure(v, hyp::basic_class));

    c = basic_case(0, 2, 1, -2, 0, 0);
    c.d_s = Int(-2);
    v = bound_th1(c);
    CHECK(has_failure(v, hyp::negative_formal_dim));

    c = basic_case(0, 2, 1, -2, 0, 0);
    c.d_s.reset();
    v = bound_th1(c);
    CHECK(has_failure(v, hyp::formal_dim_unknown));

    c = basic_case(0, 2, 1, -2, -2, 0);
    v = bound_th1(c);
    CHECK(has_failure(v, hyp::self_int_nonneg));
}

TEST_CASE("th2 worked examples") {
    CaseSpec cs;
    cs.e = -2;
    auto v = bound_th2(make(cs), 0);
    CHECK(v.id == TheoremId::th2);
    CHECK(*v.genus_lower_bound == 2);

    cs = CaseSpec{};
    cs.e = -2;
    cs.n = 2;
    cs.ones = 3;  // d_b = 3
    v = bound_th2(make(cs), 3);
    CHECK(v.id == TheoremId::th2);
    CHECK(*v.genus_lower_bound == 6);  // 4 + 6 = 10

    v = bound_th2(make(cs), 1);
    CHECK(v.id == TheoremId::th2_high_degree);
    CHECK(*v.genus_lower_bound == 5);  // 4 + 3 = 7, odd, rounds to 5
}

TEST_CASE("th3 worked examples") {
    CaseSpec cs;
    cs.e = -2;
    auto v = bound_th3(make(cs));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 2);

    cs = CaseSpec{};
    cs.b1 = 2;
    cs.e = -4;
    cs.n = 2;
    cs.ones = 3;
    v = bound_th3(make(cs));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 7);  // 6 + 6 = 12

    cs = CaseSpec{};
    cs.b1 = 4;
    cs.e = -2;
    cs.n = 2;
    v = bound_th3(make(cs));
    CHECK_FALSE(v.applicable);
    CHECK(has_failure(v, hyp::betti_gate));
}

TEST_CASE("th4 worked examples") {
    auto v = bound_th4(basic_case(0, 2, 1, -2, 0, 0));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 2);  // b1 = 0 coincides with th3 at d_b = d_s

    v = bound_th4(basic_case(2, 2, 1, -2, 2, 6));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 7);  // 4 + 12 - 4 = 12

    v = bound_th4(basic_case(2, 2, 1, 0, 1, 0));
    CHECK_FALSE(v.applicable);
    CHECK(has_failure(v, hyp::betti_gate));  // 0 + 3 < 4
}

TEST_CASE("max insertion degree cap and genus bound") {
    CaseSpec cs;
    cs.genus = 5;
    cs.b1 = 2;
    cs.e = -2;
    auto v = max_insertion_degree(make(cs));
    CHECK(v.applicable);
    CHECK(*v.degree_cap == 3);

    cs = CaseSpec{};
    cs.b1 = 3;
    cs.genus = 4;
    cs.e = -6;
    cs.u_power = 2;  // d_b = 4
    v = max_insertion_degree(make(cs));
    CHECK(v.applicable);
    CHECK(*v.genus_lower_bound == 7);  // d_b + b1

    cs = CaseSpec{};
    cs.b1 = 4;
    cs.e = -2;
    cs.n = 2;
    v = max_insertion_degree(make(cs));
    CHECK_FALSE(v.applicable);
    CHECK(has_failure(v, hyp::betti_gate));
}

TEST_CASE("normalize_orientation") {
    auto c = basic_case(0, 2, 1, 4, 0, 0);
    auto out = normalize_orientation(c);
    CHECK(*out.spinc.pairing_e == -4);
    c = basic_case(0, 2, 1, -4, 0, 0);
    CHECK(normalize_orientation(c) == c);
    c = basic_case(0, 2, 1, 0, 0, 0);
    CHECK(normalize_orientation(c) == c);
    c = basic_case(0, 1, 1, -4, 0, 0);
    CHECK_THROWS_AS(normalize_orientation(c), InputError);
}

TEST_CASE("validate_case rejects parity and chamber violations") {
    auto c = basic_case(0, 2, 1, -1, 0, 0);
    CHECK_THROWS_AS(validate_case(c), InputError);

    c = basic_case(0, 1, 1, -2, 0, 0);
    c.spinc.chamber = Chamber::not_applicable;
    CHECK_THROWS_AS(validate_case(c), InputError);

    c = basic_case(0, 2, 1, -2, 0, 0);
    c.spinc.c1_square = Int(8);
    c.manifold.chi = Int(1);
    c.manifold.tau = Int(2);
    // (8 - 2 - 6)/4 = 0 matches d_s = 0
    CHECK_NOTHROW(validate_case(c));
    c.manifold.tau = Int(-2);  // (8 - 2 + 6)/4 = 3 != 0
    CHECK_THROWS_AS(validate_case(c), InputError);
}

TEST_CASE("best_bound aggregates every applicable rule (b1 = 0 case)") {
    auto report = best_bound(basic_case(0, 2, 1, -2, 0, 0));
    REQUIRE(report.verdicts.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(report.verdicts[i].applicable);
        CHECK(*report.verdicts[i].genus_lower_bound == 2);
    }
    CHECK(report.verdicts[4].applicable);  // degree-cap rule
    CHECK(*report.verdicts[4].genus_lower_bound == 0);
    CHECK(*report.best_bound == 2);
    CHECK_FALSE(report.normalization_applied);
}

TEST_CASE("best_bound on the b1 = 1, d_s = 4 basic case") {
    // th4 improves th1 by exactly one here; th3 (with the full insertion
    // degree) is stronger still and wins the aggregate.
    auto report = best_bound(basic_case(1, 2, 1, -2, 2, 4));
    const auto& th1 = report.verdicts[0];
    const auto& th2v = report.verdicts[1];
    const auto& th3 = report.verdicts[2];
    const auto& th4 = report.verdicts[3];
    CHECK(th1.applicable);
    CHECK(*th1.genus_lower_bound == 5);
    CHECK(th4.applicable);
    CHECK(*th4.genus_lower_bound == 6);
    CHECK(*th4.genus_lower_bound - *th1.genus_lower_bound == 1);
    CHECK(th2v.id == TheoremId::th2_high_degree);  // betti floor 0 < d_b = 4
    CHECK(*th2v.genus_lower_bound == 5);
    CHECK(th3.applicable);
    CHECK(*th3.genus_lower_bound == 7);
    CHECK(*report.best_bound == 7);
}

TEST_CASE("best_bound with nothing applicable") {
    auto c = basic_case(0, 2, 1, -2, -2, 0);
    auto report = best_bound(c);
    CHECK_FALSE(report.best_bound.has_value());
    for (const auto& v : report.verdicts) {
        CHECK_FALSE(v.applicable);
        CHECK(has_failure(v, hyp::self_int_nonneg));
    }
}

TEST_CASE("best_bound is invariant under orientation reversal for b2+ > 1") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        long e = static_cast<long>(rng() % 17) - 8;
        long n = static_cast<long>(rng() % 7);
        if ((std::abs(e) + n) % 2 != 0) ++n;
        long d = 2 * static_cast<long>(rng() % 4);
        auto c = basic_case(static_cast<long>(rng() % 4), 2,
                            1 + static_cast<int>(rng() % 4), e, n, d);
        auto r1 = best_bound(c);
        *c.spinc.pairing_e = -*c.spinc.pairing_e;
        auto r2 = best_bound(c);
        CHECK(r1.best_bound == r2.best_bound);
        for (std::size_t i = 0; i < r1.verdicts.size(); ++i) {
            CHECK(r1.verdicts[i].applicable == r2.verdicts[i].applicable);
            CHECK(r1.verdicts[i].genus_lower_bound == r2.verdicts[i].genus_lower_bound);
        }
    }
}

TEST_CASE("chamber pinning: positive pairings stay signed when b2+ = 1") {
    // -e + n < 0 makes every rule inapplicable, even though |e| + n looks large
    auto c = basic_case(0, 1, 1, 4, 0, 0);
    auto report = best_bound(c);
    CHECK_FALSE(report.best_bound.has_value());
    CHECK_FALSE(report.normalization_applied);
    CHECK(has_failure(report.verdicts[0], hyp::chamber_positivity));
    CHECK(has_failure(report.verdicts[2], hyp::betti_gate));  // -4 + 0 < 0 <= 2 b1

    // with -e + n >= 0 the signed rules run: e = 2, n = 4 gives -e + n = 2
    c = basic_case(0, 1, 1, 2, 4, 0);
    report = best_bound(c);
    CHECK(report.verdicts[0].applicable);
    CHECK(*report.verdicts[0].genus_lower_bound == 2);  // (-2 + 4)/2 + 1
}

TEST_CASE("dominance at b1 = 0: th1, th3 and th4 agree on basic insertions") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        long e = -static_cast<long>(rng() % 9);
        long n = static_cast<long>(rng() % 7);
        if ((std::abs(e) + n) % 2 != 0) ++n;
        long d = 2 * static_cast<long>(rng() % 5);
        auto c = basic_case(0, 2, 1 + static_cast<int>(rng() % 3), e, n, d);
        auto v1 = bound_th1(c);
        auto v3 = bound_th3(c);
        auto v4 = bound_th4(c);
        REQUIRE(v1.applicable);
        REQUIRE(v3.applicable);
        REQUIRE(v4.applicable);
        CHECK(*v1.genus_lower_bound == *v3.genus_lower_bound);
        CHECK(*v3.genus_lower_bound == *v4.genus_lower_bound);
    }
}

TEST_CASE("bounds are monotone in the inputs inside the applicable region") {
    for (long e = -8; e <= 0; e += 2) {
        for (long n = 0; n <= 6; n += 2) {
            for (long d = 0; d <= 6; d += 2) {
                auto here = bound_th3(basic_case(0, 2, 1, e, n, d));
                auto more_e = bound_th3(basic_case(0, 2, 1, e - 2, n, d));
                auto more_n = bound_th3(basic_case(0, 2, 1, e, n + 2, d));
                auto more_d = bound_th3(basic_case(0, 2, 1, e, n, d + 2));
                CHECK(*more_e.genus_lower_bound >= *here.genus_lower_bound);
                CHECK(*more_n.genus_lower_bound >= *here.genus_lower_bound);
                CHECK(*more_d.genus_lower_bound >= *here.genus_lower_bound);
            }
        }
    }
}

namespace {

// Applies the blow-up to a basic case and re-reads it as a basic case on the
// transform (insertion U^{d'/2}).
AdjunctionCase blow_case(const AdjunctionCase& c, long r) {
    auto moved = blow_up(c.manifold, c.surface, c.spinc, c.d_s, BlowUpSpec{r});
    AdjunctionCase out;
    out.manifold = moved.manifold;
    out.surface = moved.surface;
    out.spinc = moved.spinc;
    out.d_s = moved.d;
    out.insertion.u_power = static_cast<long>(moved.d->get_si()) / 2;
    return out;
}

}  // namespace

TEST_CASE("blow-up pathway: n <= min(b1, d/2) reduces to th3 with slack 2(b1 - n)") {
    std::mt19937_64 rng(81);
    int checked = 0;
    while (checked < 200) {
        long b1 = rng() % 6;
        long n = static_cast<long>(rng() % (b1 + 1));
        long d = 2 * (n + static_cast<long>(rng() % 5));
        long abs_e = static_cast<long>(rng() % 9);
        if ((abs_e + n) % 2 != 0) ++abs_e;
        while (abs_e + 3 * n < 2 * b1) abs_e += 2;
        auto c = basic_case(b1, 2, 1, -abs_e, n, d);
        auto th4 = bound_th4(c);
        REQUIRE(th4.applicable);

        auto hat = blow_case(c, n);
        CHECK(hat.surface.self_int == 0);
        CHECK(*hat.d_s >= 0);
        auto th3_hat = bound_th3(hat);
        REQUIRE(th3_hat.applicable);
        CHECK(*th3_hat.genus_lower_bound == *th4.genus_lower_bound + (Int(b1) - n));
        CHECK(*th3_hat.genus_lower_bound >= *th4.genus_lower_bound);
        ++checked;
    }
}

TEST_CASE("blow-up pathway: b1 <= min(n, d/2) makes th3 equal th4 exactly") {
    std::mt19937_64 rng(91);
    int checked = 0;
    while (checked < 200) {
        long b1 = rng() % 5;
        long n = static_cast<long>(b1 + rng() % 5);
        long d = 2 * (static_cast<long>(b1) + static_cast<long>(rng() % 5));
        long abs_e = static_cast<long>(rng() % 9);
        if ((abs_e + n) % 2 != 0) ++abs_e;
        auto c = basic_case(b1, 2, 1, -abs_e, n, d);
        auto th4 = bound_th4(c);  // the gate auto-passes: |e| + 3n >= 3n >= 3b1 >= 2b1
        REQUIRE(th4.applicable);

        auto hat = blow_case(c, b1);
        CHECK(hat.surface.self_int >= 0);
        CHECK(*hat.d_s >= 0);
        auto th3_hat = bound_th3(hat);
        REQUIRE(th3_hat.applicable);
        CHECK(*th3_hat.genus_lower_bound == *th4.genus_lower_bound);
        ++checked;
    }
}
