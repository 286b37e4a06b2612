#include <doctest.h>

#include <random>

#include "genusbound/oracle.hpp"
#include "genusbound/symplattice.hpp"

using namespace genusbound;

namespace {

SymplecticVector vec(std::vector<long> xs) {
    SymplecticVector v;
    for (long x : xs) v.coeffs.push_back(Int(x));
    return v;
}

}  // namespace

TEST_CASE("standard form on reference vectors") {
    CHECK(form_eval(a_unit(2, 1), b_unit(2, 1), 2) == 1);
    CHECK(form_eval(a_unit(2, 1), a_unit(2, 2), 2) == 0);
    CHECK(form_eval(b_unit(2, 2), b_unit(2, 1), 2) == 0);
    CHECK(form_eval(b_unit(2, 1), a_unit(2, 1), 2) == -1);
}

TEST_CASE("form is bilinear: 2A1+3A2 against 2B1-B2") {
    auto u = vec({2, 3, 0, 0});
    auto v = vec({0, 0, 2, -1});
    CHECK(form_eval(u, v, 2) == 1);
}

TEST_CASE("form rejects dimension mismatches") {
    CHECK_THROWS_AS(form_eval(vec({1, 0}), vec({1, 0, 0, 0}), 2), InputError);
    CHECK_THROWS_AS(form_eval(vec({1, 0, 0}), vec({1, 0, 0}), 1), InputError);
}

TEST_CASE("form antisymmetry on random vectors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int g = 1 + static_cast<int>(rng() % 5);
        SymplecticVector u, v;
        for (int i = 0; i < 2 * g; ++i) {
            u.coeffs.push_back(Int(static_cast<long>(rng() % 2001)) - 1000);
            v.coeffs.push_back(Int(static_cast<long>(rng() % 2001)) - 1000);
        }
        CHECK(form_eval(u, v, g) == -form_eval(v, u, g));
    }
}

TEST_CASE("verify_basis accepts the identity and reports the first violation") {
    CHECK(verify_basis(SymplecticBasis::identity(3)).ok);

    auto bad = SymplecticBasis::identity(3);
    for (auto& x : bad.b(1).coeffs) x *= 2;
    auto vr = verify_basis(bad);
    CHECK_FALSE(vr.ok);
    CHECK(vr.row == 1);      // A1
    CHECK(vr.col == 3 + 1);  // B1
    CHECK(vr.got == 2);
    CHECK(vr.expected == 1);
    CHECK(vr.describe(3) == "pairing (A1,B1) = 2, expected 1");
}

TEST_CASE("a_shear_change matches the worked example and stays symplectic") {
    auto basis = a_shear_change(SymplecticBasis::identity(3), 1, 2, 3, 1, 0);
    CHECK(basis.a(1) == vec({1, 0, -1, 0, 0, 0}));  // A1 - A3
    CHECK(basis.b(3) == vec({0, 0, 0, 1, 0, 1}));   // B3 + B1
    CHECK(basis.a(2) == a_unit(3, 2));
    CHECK(verify_basis(basis).ok);

    CHECK(a_shear_change(SymplecticBasis::identity(3), 1, 2, 3, 0, 0) ==
          SymplecticBasis::identity(3));

    auto big = a_shear_change(SymplecticBasis::identity(4), 2, 4, 1, -3, 5);
    CHECK(verify_basis(big).ok);
}

TEST_CASE("a_shear_change rejects bad indices") {
    auto id = SymplecticBasis::identity(3);
    CHECK_THROWS_AS(a_shear_change(id, 1, 1, 2, 1, 1), InputError);
    CHECK_THROWS_AS(a_shear_change(id, 1, 2, 4, 1, 1), InputError);
    CHECK_THROWS_AS(a_shear_change(SymplecticBasis::identity(2), 1, 2, 2, 1, 1), InputError);
}

TEST_CASE("a_shear_change inverts with negated parameters") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int g = 3 + static_cast<int>(rng() % 3);
        auto start = random_symplectic_basis(g, 6, rng());
        int i = 1 + static_cast<int>(rng() % g), j, k;
        do { j = 1 + static_cast<int>(rng() % g); } while (j == i);
        do { k = 1 + static_cast<int>(rng() % g); } while (k == i || k == j);
        Int r(static_cast<long>(rng() % 41) - 20), s(static_cast<long>(rng() % 41) - 20);
        auto there = a_shear_change(start, i, j, k, r, s);
        auto back = a_shear_change(there, i, j, k, -r, -s);
        CHECK(back == start);
    }
}

TEST_CASE("completion_bezout canonical representatives") {
    CHECK(completion_bezout(2, 3) == std::pair<Int, Int>{2, -1});
    CHECK(completion_bezout(1, 0) == std::pair<Int, Int>{1, 0});
    CHECK(completion_bezout(-1, 0) == std::pair<Int, Int>{-1, 0});
    CHECK(completion_bezout(0, 1) == std::pair<Int, Int>{0, 1});
    CHECK(completion_bezout(7, -5) == std::pair<Int, Int>{3, 4});  // 21 - 20 = 1
    CHECK_THROWS_AS(completion_bezout(2, 4), InputError);
}

TEST_CASE("pair_completion worked example at g = 2") {
    auto basis = pair_completion(SymplecticBasis::identity(2), 1, 2, 2, 3);
    CHECK(basis.a(1) == vec({2, 3, 0, 0}));    // 2A1 + 3A2
    CHECK(basis.b(1) == vec({0, 0, 2, -1}));   // 2B1 - B2
    CHECK(basis.a(2) == vec({1, 2, 0, 0}));    // A1 + 2A2
    CHECK(basis.b(2) == vec({0, 0, -3, 2}));   // -3B1 + 2B2
    CHECK(verify_basis(basis).ok);
}

TEST_CASE("pair_completion identity and transposition-like cases") {
    auto id = SymplecticBasis::identity(2);
    CHECK(pair_completion(id, 1, 2, 1, 0) == id);

    auto t = pair_completion(id, 1, 2, 0, 1);
    CHECK(t.a(1) == a_unit(2, 2));
    CHECK(verify_basis(t).ok);

    CHECK_THROWS_AS(pair_completion(id, 1, 2, 2, 4), InputError);
    CHECK_THROWS_AS(pair_completion(id, 1, 1, 1, 0), InputError);
}

TEST_CASE("pair_completion places the prescribed combination at slot m") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int g = 2 + static_cast<int>(rng() % 5);
        auto start = random_symplectic_basis(g, 5, rng());
        int m = 1 + static_cast<int>(rng() % g), n;
        do { n = 1 + static_cast<int>(rng() % g); } while (n == m);
        Int am, an;
        do {
            am = Int(static_cast<long>(rng() % 201) - 100);
            an = Int(static_cast<long>(rng() % 201) - 100);
        } while (gcd_int(am, an) != 1);
        auto done = pair_completion(start, m, n, am, an);
        SymplecticVector expect = zero_vector(g);
        for (int t = 0; t < 2 * g; ++t) {
            expect.coeffs[t] = am * start.a(m).coeffs[t] + an * start.a(n).coeffs[t];
        }
        CHECK(done.a(m) == expect);
        CHECK(verify_basis(done).ok);
    }
}

TEST_CASE("symplectic bases have unimodular coordinate matrices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int g = 1 + static_cast<int>(rng() % 4);
        auto basis = random_symplectic_basis(g, 10, rng());
        CHECK(verify_basis(basis).ok);
        CHECK(basis_det_abs(basis) == 1);
    }
}

TEST_CASE("flip and swap keep bases symplectic") {
    auto basis = random_symplectic_basis(3, 8, 99);
    CHECK(verify_basis(flip_pair_sign(basis, 2)).ok);
    CHECK(verify_basis(swap_pairs(basis, 1, 3)).ok);
    CHECK(flip_pair_sign(flip_pair_sign(basis, 2), 2) == basis);
    CHECK(swap_pairs(swap_pairs(basis, 1, 3), 1, 3) == basis);
}
