#include <doctest.h>

#include <random>

#include "genusbound/swtopology.hpp"

using namespace genusbound;

TEST_CASE("d_invariant direct substitutions") {
    CHECK(d_invariant(0, 24, -16) == 0);
    CHECK(d_invariant(9, 3, 1) == 0);
    CHECK(d_invariant(8, 4, 0) == 0);
    CHECK(d_invariant(16, 4, 0) == 2);
    CHECK_THROWS_AS(d_invariant(1, 0, 0), InputError);
    CHECK_THROWS_AS(d_invariant(9, 3, 2), InputError);
}

TEST_CASE("wu parity") {
    CHECK(wu_parity_check(2, 0));
    CHECK(wu_parity_check(3, 1));
    CHECK(wu_parity_check(-3, 1));
    CHECK_FALSE(wu_parity_check(1, 0));
}

namespace {

ManifoldData mk_manifold(long b1, long b2p, long chi, long tau) {
    return ManifoldData{b1, b2p, Int(chi), Int(tau)};
}

SpinCData mk_spinc(long e, long c1sq, bool flag) {
    SpinCData sp;
    sp.name = "s";
    sp.pairing_e = Int(e);
    sp.c1_square = Int(c1sq);
    sp.sw_nonvanishing = flag;
    return sp;
}

}  // namespace

TEST_CASE("blow_up with r = 0 changes nothing") {
    auto m = mk_manifold(1, 2, 4, 0);
    SurfaceData s;
    s.genus = 2;
    s.self_int = 3;
    s.non_torsion = true;
    auto sp = mk_spinc(-2, 8, true);
    auto out = blow_up(m, s, sp, Int(6), BlowUpSpec{0});
    CHECK(out.manifold == m);
    CHECK(out.surface == s);
    CHECK(out.spinc == sp);
    CHECK(out.d == Int(6));
}

TEST_CASE("blow_up worked example (-2, 3, 6) with r = 3") {
    auto m = mk_manifold(0, 2, 0, 0);
    SurfaceData s;
    s.genus = 2;
    s.self_int = 3;
    auto sp = mk_spinc(-2, 24, true);  // d = (24 - 0)/4 = 6
    auto out = blow_up(m, s, sp, Int(6), BlowUpSpec{3});
    CHECK(*out.spinc.pairing_e == -11);
    CHECK(out.surface.self_int == 0);
    CHECK(*out.d == 0);
    // d recomputed from the transformed characteristic data agrees
    CHECK(d_invariant(*out.spinc.c1_square, *out.manifold.chi, *out.manifold.tau) == *out.d);
}

TEST_CASE("blow_up shifts the dimension by exactly 2r") {
    auto m = mk_manifold(0, 2, 3, 1);
    SurfaceData s;
    s.genus = 1;
    auto sp = mk_spinc(0, 9, true);
    Int d0 = d_invariant(9, 3, 1);
    auto out = blow_up(m, s, sp, d0, BlowUpSpec{1});
    CHECK(*out.spinc.c1_square == 0);
    CHECK(*out.manifold.chi == 4);
    CHECK(*out.manifold.tau == 0);
    CHECK(d_invariant(*out.spinc.c1_square, *out.manifold.chi, *out.manifold.tau) == d0 - 2);
}

TEST_CASE("blow_up composes additively and preserves parity") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = mk_manifold(static_cast<long>(rng() % 4), 2,
                             static_cast<long>(rng() % 21) - 10,
                             static_cast<long>(rng() % 21) - 10);
        SurfaceData s;
        s.genus = 1 + static_cast<int>(rng() % 5);
        s.self_int = Int(static_cast<long>(rng() % 15) - 3);
        auto sp = mk_spinc(static_cast<long>(rng() % 21) - 10,
                           static_cast<long>(rng() % 31) - 15, true);
        if (!wu_parity_check(*sp.pairing_e, s.self_int)) *sp.pairing_e += 1;
        Int d(static_cast<long>(rng() % 13) - 2);
        long r1 = rng() % 5, r2 = rng() % 5;

        auto once = blow_up(m, s, sp, d, BlowUpSpec{r1});
        auto twice = blow_up(once.manifold, once.surface, once.spinc, once.d, BlowUpSpec{r2});
        auto direct = blow_up(m, s, sp, d, BlowUpSpec{r1 + r2});
        CHECK(twice == direct);
        CHECK(wu_parity_check(*sp.pairing_e, s.self_int) ==
              wu_parity_check(*direct.spinc.pairing_e, direct.surface.self_int));
    }
}

TEST_CASE("sw_blowup_transfer propagates the hypothesis flag") {
    auto sp = mk_spinc(-2, 8, true);
    auto moved = sw_blowup_transfer(sp, BlowUpSpec{2});
    CHECK(moved.sw_nonvanishing);
    CHECK(*moved.c1_square == 8 - 18);
    CHECK(*moved.pairing_e == -2 - 6);

    CHECK(sw_blowup_transfer(sp, BlowUpSpec{0}) == sp);

    auto off = mk_spinc(-2, 8, false);
    CHECK_THROWS_AS(sw_blowup_transfer(off, BlowUpSpec{1}), HypothesisError);
}

TEST_CASE("characteristic warning fires exactly on mod-8 violations") {
    auto m = mk_manifold(0, 2, 3, 1);
    CHECK_FALSE(characteristic_warning(mk_spinc(0, 9, true), m).has_value());
    CHECK(characteristic_warning(mk_spinc(0, 8, true), m).has_value());
    ManifoldData no_tau{0, 2, Int(3), std::nullopt};
    CHECK_FALSE(characteristic_warning(mk_spinc(0, 8, true), no_tau).has_value());
}
