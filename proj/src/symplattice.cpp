#include "genusbound/symplattice.hpp"

namespace genusbound {

namespace {

void check_genus(int genus) {
    if (genus < 1) throw InputError("genus must be at least 1");
}

void check_slot(int genus, int i, const char* what) {
    if (i < 1 || i > genus) {
        throw InputError(std::string(what) + " index out of range 1..g");
    }
}

void check_vector(const SymplecticVector& v, int genus, const char* what) {
    if (static_cast<int>(v.coeffs.size()) != 2 * genus) {
        throw InputError(std::string(what) + ": expected length 2g");
    }
}

}  // namespace

SymplecticVector zero_vector(int genus) {
    check_genus(genus);
    return SymplecticVector{IntVec(2 * genus, 0)};
}

SymplecticVector a_unit(int genus, int i) {
    check_slot(genus, i, "a_unit");
    auto v = zero_vector(genus);
    v.coeffs[i - 1] = 1;
    return v;
}

SymplecticVector b_unit(int genus, int i) {
    check_slot(genus, i, "b_unit");
    auto v = zero_vector(genus);
    v.coeffs[genus + i - 1] = 1;
    return v;
}

SymplecticBasis SymplecticBasis::identity(int genus) {
    check_genus(genus);
    SymplecticBasis b;
    b.genus = genus;
    b.vectors.reserve(2 * genus);
    for (int i = 1; i <= genus; ++i) b.vectors.push_back(a_unit(genus, i));
    for (int i = 1; i <= genus; ++i) b.vectors.push_back(b_unit(genus, i));
    return b;
}

Int standard_form(const IntVec& u, const IntVec& v) {
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw InputError("standard_form: length mismatch");
    }
    const std::size_t g = u.size() / 2;
    Int acc = 0;
    for (std::size_t i = 0; i < g; ++i) {
        acc += u[i] * v[g + i] - u[g + i] * v[i];
    }
    return acc;
}

Int form_eval(const SymplecticVector& u, const SymplecticVector& v, int genus) {
    check_genus(genus);
    check_vector(u, genus, "form_eval u");
    check_vector(v, genus, "form_eval v");
    return standard_form(u.coeffs, v.coeffs);
}

std::string VerifyResult::describe(int genus) const {
    if (ok) return "ok";
    auto name = [&](int p) {
        return p <= genus ? "A" + std::to_string(p) : "B" + std::to_string(p - genus);
    };
    return "pairing (" + name(row) + "," + name(col) + ") = " + got.get_str() +
           ", expected " + expected.get_str();
}

VerifyResult verify_basis(const SymplecticBasis& basis) {
    check_genus(basis.genus);
    const int g = basis.genus;
    if (static_cast<int>(basis.vectors.size()) != 2 * g) {
        throw InputError("verify_basis: basis must hold 2g vectors");
    }
    for (const auto& v : basis.vectors) check_vector(v, g, "verify_basis");
    for (int r = 0; r < 2 * g; ++r) {
        for (int c = 0; c < 2 * g; ++c) {
            Int expected = 0;
            if (c == r + g) expected = 1;
            if (r == c + g) expected = -1;
            Int got = standard_form(basis.vectors[r].coeffs, basis.vectors[c].coeffs);
            if (got != expected) {
                return VerifyResult{false, r + 1, c + 1, got, expected};
            }
        }
    }
    return VerifyResult{};
}

Int basis_det_abs(const SymplecticBasis& basis) {
    const int n = 2 * basis.genus;
    IntMatrix m(n, IntVec(n));
    for (int col = 0; col < n; ++col) {
        check_vector(basis.vectors[col], basis.genus, "basis_det_abs");
        for (int row = 0; row < n; ++row) m[row][col] = basis.vectors[col].coeffs[row];
    }
    return abs_int(bareiss_det(std::move(m)));
}

SymplecticBasis a_shear_change(const SymplecticBasis& basis, int i, int j, int k,
                               const Int& r, const Int& s) {
    const int g = basis.genus;
    check_slot(g, i, "a_shear i");
    check_slot(g, j, "a_shear j");
    check_slot(g, k, "a_shear k");
    if (i == j || i == k || j == k) {
        throw InputError("a_shear_change: indices must be pairwise distinct");
    }
    SymplecticBasis out = basis;
    for (int t = 0; t < 2 * g; ++t) {
        out.a(i).coeffs[t] -= r * basis.a(k).coeffs[t];
        out.a(j).coeffs[t] -= s * basis.a(k).coeffs[t];
        out.b(k).coeffs[t] += r * basis.b(i).coeffs[t] + s * basis.b(j).coeffs[t];
    }
    return out;
}

std::pair<Int, Int> completion_bezout(const Int& a_m, const Int& a_n) {
    if (gcd_int(a_m, a_n) != 1) {
        throw InputError("completion_bezout: arguments must be coprime");
    }
    if (a_n == 0) return {a_m, 0};  // a_m = ±1 here
    Bezout bz = ext_gcd(a_m, a_n);
    Int p = floor_mod(bz.x, a_n);
    Int q = (1 - p * a_m) / a_n;
    return {p, q};
}

SymplecticBasis pair_completion(const SymplecticBasis& basis, int m, int n,
                                const Int& a_m, const Int& a_n) {
    const int g = basis.genus;
    check_slot(g, m, "pair_completion m");
    check_slot(g, n, "pair_completion n");
    if (m == n) throw InputError("pair_completion: slots must differ");
    auto [p, q] = completion_bezout(a_m, a_n);
    SymplecticBasis out = basis;
    for (int t = 0; t < 2 * g; ++t) {
        out.a(m).coeffs[t] = a_m * basis.a(m).coeffs[t] + a_n * basis.a(n).coeffs[t];
        out.b(m).coeffs[t] = p * basis.b(m).coeffs[t] + q * basis.b(n).coeffs[t];
        out.a(n).coeffs[t] = p * basis.a(n).coeffs[t] - q * basis.a(m).coeffs[t];
        out.b(n).coeffs[t] = a_m * basis.b(n).coeffs[t] - a_n * basis.b(m).coeffs[t];
    }
    return out;
}

SymplecticBasis flip_pair_sign(const SymplecticBasis& basis, int j) {
    check_slot(basis.genus, j, "flip_pair_sign");
    SymplecticBasis out = basis;
    for (auto& x : out.a(j).coeffs) x = -x;
    for (auto& x : out.b(j).coeffs) x = -x;
    return out;
}

SymplecticBasis swap_pairs(const SymplecticBasis& basis, int i, int j) {
    check_slot(basis.genus, i, "swap_pairs i");
    check_slot(basis.genus, j, "swap_pairs j");
    SymplecticBasis out = basis;
    std::swap(out.a(i), out.a(j));
    std::swap(out.b(i), out.b(j));
    return out;
}

}  // namespace genusbound
