#include "genusbound/reduction.hpp"

#include <algorithm>

namespace genusbound {

namespace {

Rat rat_form(const RatVec& u, const RatVec& v) {
    const std::size_t g = u.size() / 2;
    Rat acc = 0;
    for (std::size_t i = 0; i < g; ++i) {
        acc += u[i] * v[g + i] - u[g + i] * v[i];
    }
    return acc;
}

// Integer coefficients c with sum(c[j] * values[j]) = 1. Prefers a single
// unit entry; otherwise folds the extended gcd across the list. Throws if
// the gcd is not 1 (the pairing functional of a primitive vector against a
// basis of a unimodular lattice always has gcd 1).
IntVec combination_for_unit(const IntVec& values) {
    const std::size_t n = values.size();
    IntVec c(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (values[j] == 1 || values[j] == -1) {
            c[j] = values[j];
            return c;
        }
    }
    Int g = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (values[j] == 0) continue;
        if (g == 0) {
            g = abs_int(values[j]);
            c[j] = values[j] > 0 ? 1 : -1;
        } else {
            Bezout bz = ext_gcd(g, values[j]);
            for (std::size_t i = 0; i < j; ++i) c[i] *= bz.x;
            c[j] = bz.y;
            g = bz.g;
        }
        if (g == 1) break;
    }
    if (g != 1) throw InternalError("pairing functional is not primitive");
    return c;
}

struct HyperbolicSplit {
    IntVec partner;                 // t with w(w, t) = 1
    std::vector<IntVec> complement; // saturated basis of {x in L : x _|_ w, t}
};

// L is given by a basis of columns in reference coordinates and must carry a
// unimodular restriction of the standard form; w must be a primitive vector
// of L.
HyperbolicSplit hyperbolic_split(const std::vector<IntVec>& lattice, const IntVec& w) {
    const std::size_t rank = lattice.size();
    const std::size_t n = w.size();
    IntVec values(rank);
    for (std::size_t j = 0; j < rank; ++j) values[j] = standard_form(w, lattice[j]);
    IntVec c = combination_for_unit(values);
    IntVec t(n, 0);
    for (std::size_t j = 0; j < rank; ++j) {
        for (std::size_t r = 0; r < n; ++r) t[r] += c[j] * lattice[j][r];
    }
    if (standard_form(w, t) != 1) throw InternalError("hyperbolic partner construction failed");

    IntMatrix pairing(2, IntVec(rank));
    for (std::size_t j = 0; j < rank; ++j) {
        pairing[0][j] = standard_form(lattice[j], w);
        pairing[1][j] = standard_form(lattice[j], t);
    }
    auto xi = int_kernel(pairing, static_cast<int>(rank));
    if (xi.size() != rank - 2) throw InternalError("symplectic complement has wrong rank");
    std::vector<IntVec> complement;
    complement.reserve(xi.size());
    for (const auto& coord : xi) {
        IntVec col(n, 0);
        for (std::size_t j = 0; j < rank; ++j) {
            for (std::size_t r = 0; r < n; ++r) col[r] += coord[j] * lattice[j][r];
        }
        complement.push_back(std::move(col));
    }
    return {std::move(t), std::move(complement)};
}

// Extends a family of pairwise-orthogonal isotropic primitive vectors
// (spanning a saturated sublattice) to a full symplectic basis: the family
// lands in the leading A-slots.
SymplecticBasis complete_isotropic_family(std::vector<IntVec> family, int genus) {
    const int n = 2 * genus;
    std::vector<IntVec> lattice;
    for (int j = 0; j < n; ++j) {
        IntVec e(n, 0);
        e[j] = 1;
        lattice.push_back(std::move(e));
    }
    std::vector<IntVec> a_out, b_out;
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        auto split = hyperbolic_split(lattice, family[idx]);
        // project the rest of the family into the new complement; subtracting
        // multiples of family[idx] keeps them inside ker(i_*) and isotropic
        for (std::size_t later = idx + 1; later < family.size(); ++later) {
            Int coef = standard_form(family[later], split.partner);
            if (coef != 0) {
                for (int r = 0; r < n; ++r) family[later][r] -= coef * family[idx][r];
            }
        }
        a_out.push_back(family[idx]);
        b_out.push_back(std::move(split.partner));
        lattice = std::move(split.complement);
    }
    while (!lattice.empty()) {
        IntVec w = lattice.front();
        auto split = hyperbolic_split(lattice, w);
        a_out.push_back(std::move(w));
        b_out.push_back(std::move(split.partner));
        lattice = std::move(split.complement);
    }
    SymplecticBasis basis;
    basis.genus = genus;
    for (auto& v : a_out) basis.vectors.push_back(SymplecticVector{std::move(v)});
    for (auto& v : b_out) basis.vectors.push_back(SymplecticVector{std::move(v)});
    auto vr = verify_basis(basis);
    if (!vr.ok) {
        throw InternalError("isotropic completion is not symplectic: " + vr.describe(genus));
    }
    return basis;
}

// Integral basis of a maximal isotropic sublattice of ker(i_*): rational
// symplectic Gram-Schmidt on the kernel (radical vectors plus one vector of
// each hyperbolic pair), then saturation of the resulting span.
std::vector<IntVec> max_isotropic_kernel_basis(const EmbeddingMap& e) {
    const int n = 2 * e.genus;
    auto kernel = int_kernel(clear_row_denominators(e.matrix), n);
    std::vector<RatVec> vecs;
    for (const auto& k : kernel) {
        RatVec v(n);
        for (int r = 0; r < n; ++r) v[r] = Rat(k[r]);
        vecs.push_back(std::move(v));
    }
    std::vector<RatVec> radical, pair_heads;
    while (!vecs.empty()) {
        RatVec x = std::move(vecs.front());
        vecs.erase(vecs.begin());
        int partner = -1;
        for (std::size_t j = 0; j < vecs.size(); ++j) {
            if (rat_form(x, vecs[j]) != 0) {
                partner = static_cast<int>(j);
                break;
            }
        }
        if (partner < 0) {
            radical.push_back(std::move(x));
            continue;
        }
        RatVec y = std::move(vecs[partner]);
        vecs.erase(vecs.begin() + partner);
        Rat c = rat_form(x, y);
        for (auto& q : y) q /= c;  // now w(x, y) = 1
        for (auto& z : vecs) {
            Rat zy = rat_form(z, y);
            Rat zx = rat_form(z, x);
            for (int r = 0; r < n; ++r) z[r] += -zy * x[r] + zx * y[r];
        }
        pair_heads.push_back(std::move(x));
    }
    std::vector<IntVec> iso;
    auto push_scaled = [&](const RatVec& v) {
        Int l = 1;
        for (const auto& q : v) {
            Int d = q.get_den();
            l = l / gcd_int(l, d) * d;
        }
        IntVec w(n);
        for (int r = 0; r < n; ++r) w[r] = Int(v[r].get_num()) * (l / v[r].get_den());
        make_primitive(w);
        iso.push_back(std::move(w));
    };
    for (const auto& v : radical) push_scaled(v);
    for (const auto& v : pair_heads) push_scaled(v);
    return saturate_span(iso, n);
}

RatVec apply_embedding(const EmbeddingMap& e, const IntVec& v) {
    RatVec out(e.matrix.size(), Rat(0));
    for (std::size_t r = 0; r < e.matrix.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out[r] += e.matrix[r][c] * Rat(v[c]);
        }
    }
    return out;
}

}  // namespace

void validate_primitive(const PrimitiveAVector& v) {
    if (v.genus < 1) throw InputError("primitive vector: genus must be at least 1");
    if (static_cast<int>(v.coeffs.size()) != v.genus) {
        throw InputError("primitive vector: expected g coefficients");
    }
    Int g = 0;
    for (const auto& x : v.coeffs) g = gcd_int(g, x);
    if (g == 0) throw InputError("primitive vector: must be nonzero");
    if (g != 1) throw InputError("primitive vector: coefficient gcd is " + g.get_str() + ", not 1");
}

void validate_embedding(const EmbeddingMap& e) {
    if (e.genus < 1) throw InputError("embedding map: genus must be at least 1");
    if (e.ambient_b1 < 0) throw InputError("embedding map: b1 must be nonnegative");
    if (static_cast<int>(e.matrix.size()) != e.ambient_b1) {
        throw InputError("embedding map: expected b1 rows");
    }
    for (const auto& row : e.matrix) {
        if (static_cast<int>(row.size()) != 2 * e.genus) {
            throw InputError("embedding map: expected 2g columns");
        }
    }
}

SymplecticBasis apply_step(const SymplecticBasis& basis, const BasisStep& step) {
    return std::visit(
        [&](const auto& s) -> SymplecticBasis {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AShearStep>) {
                return a_shear_change(basis, s.i, s.j, s.k, s.r, s.s);
            } else if constexpr (std::is_same_v<T, PairCompletionStep>) {
                return pair_completion(basis, s.m, s.n, s.a_m, s.a_n);
            } else if constexpr (std::is_same_v<T, SignFlipStep>) {
                return flip_pair_sign(basis, s.j);
            } else {
                return swap_pairs(basis, s.i, s.j);
            }
        },
        step);
}

Int min_pair_gcd(const IntVec& coeffs) {
    std::vector<Int> nz;
    for (const auto& x : coeffs) {
        if (x != 0) nz.push_back(x);
    }
    if (nz.size() < 2) throw InputError("min_pair_gcd: needs at least two nonzero entries");
    Int best = -1;
    for (std::size_t i = 0; i < nz.size(); ++i) {
        for (std::size_t j = i + 1; j < nz.size(); ++j) {
            Int g = gcd_int(nz[i], nz[j]);
            if (best < 0 || g < best) best = g;
        }
    }
    return best;
}

ReductionTrace complete_primitive(const PrimitiveAVector& v) {
    validate_primitive(v);
    const int g = v.genus;
    SymplecticBasis basis = SymplecticBasis::identity(g);
    IntVec a = v.coeffs;  // coefficients of v in the A-span of the current basis
    std::vector<BasisStep> steps;
    int slot = 0;

    auto nonzero = [&]() {
        std::vector<int> nz;
        for (int i = 0; i < g; ++i) {
            if (a[i] != 0) nz.push_back(i + 1);
        }
        return nz;
    };

    while (true) {
        auto nz = nonzero();
        if (nz.size() == 1) {
            const int j = nz[0];
            if (a[j - 1] == -1) {
                steps.push_back(SignFlipStep{j});
                basis = flip_pair_sign(basis, j);
                a[j - 1] = 1;
            }
            if (a[j - 1] != 1) throw InternalError("descent did not end at a unit coefficient");
            slot = j;
            break;
        }
        if (nz.size() == 2) {
            const int m = nz[0], n = nz[1];
            steps.push_back(PairCompletionStep{m, n, a[m - 1], a[n - 1]});
            basis = pair_completion(basis, m, n, a[m - 1], a[n - 1]);
            std::fill(a.begin(), a.end(), Int(0));
            a[m - 1] = 1;  // v equals the new Am exactly
            slot = m;
            break;
        }

        // N >= 3: pick the pair with the smallest gcd (lexicographic
        // tie-break), then shear the smallest remaining nonzero coefficient
        // into [0, gcd).
        const std::size_t n_before = nz.size();
        const Int gcd_before = min_pair_gcd(a);
        int pi = 0, pj = 0;
        Int best = -1;
        for (std::size_t x = 0; x < nz.size(); ++x) {
            for (std::size_t y = x + 1; y < nz.size(); ++y) {
                Int gxy = gcd_int(a[nz[x] - 1], a[nz[y] - 1]);
                if (best < 0 || gxy < best) {
                    best = gxy;
                    pi = nz[x];
                    pj = nz[y];
                }
            }
        }
        int t = 0;
        for (int idx : nz) {
            if (idx != pi && idx != pj) {
                t = idx;
                break;
            }
        }
        Bezout bz = ext_gcd(a[pi - 1], a[pj - 1]);  // bz.g == best
        Int target = floor_mod(a[t - 1], best);
        Int f = (target - a[t - 1]) / best;
        Int r = f * bz.x;
        Int s = f * bz.y;
        steps.push_back(AShearStep{pi, pj, t, r, s});
        basis = a_shear_change(basis, pi, pj, t, r, s);
        a[t - 1] += r * a[pi - 1] + s * a[pj - 1];
        if (a[t - 1] != target) throw InternalError("shear missed its target residue");

        auto nz_after = nonzero();
        const std::size_t n_after = nz_after.size();
        const Int gcd_after = n_after >= 2 ? min_pair_gcd(a) : Int(0);
        const bool decreased =
            n_after < n_before || (n_after == n_before && gcd_after < gcd_before);
        if (!decreased) throw InternalError("descent metric failed to decrease");
    }

    SymplecticVector embedded = zero_vector(g);
    for (int i = 0; i < g; ++i) embedded.coeffs[i] = v.coeffs[i];
    if (!(basis.a(slot) == embedded)) {
        throw InternalError("completed basis does not contain the input vector");
    }
    auto vr = verify_basis(basis);
    if (!vr.ok) {
        throw InternalError("completed basis is not symplectic: " + vr.describe(g));
    }
    return ReductionTrace{std::move(steps), std::move(basis), slot};
}

int l_invariant(const EmbeddingMap& e) {
    validate_embedding(e);
    const int n = 2 * e.genus;
    auto kernel = int_kernel(clear_row_denominators(e.matrix), n);
    const int dim = static_cast<int>(kernel.size());
    IntMatrix gram(dim, IntVec(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            gram[i][j] = standard_form(kernel[i], kernel[j]);
        }
    }
    const int rank = int_rank(gram, dim);
    if (rank % 2 != 0) throw InternalError("skew-symmetric form has odd rank");
    return dim - rank / 2;
}

ConstructiveL l_lower_bound_constructive(const EmbeddingMap& e) {
    validate_embedding(e);
    auto family = max_isotropic_kernel_basis(e);
    const int value = static_cast<int>(family.size());
    if (value == 0) {
        return ConstructiveL{0, SymplecticBasis::identity(e.genus)};
    }
    SymplecticBasis witness = complete_isotropic_family(std::move(family), e.genus);
    for (int i = 1; i <= value; ++i) {
        for (const auto& q : apply_embedding(e, witness.a(i).coeffs)) {
            if (q != 0) throw InternalError("witness A-vector escapes the kernel");
        }
    }
    return ConstructiveL{value, std::move(witness)};
}

int l_bound_from_betti(int genus, int b1) {
    if (genus < 1) throw InputError("genus must be at least 1");
    if (b1 < 0) throw InputError("b1 must be nonnegative");
    return std::max(0, genus - b1);
}

}  // namespace genusbound
