#include "genusbound/oracle.hpp"

#include <random>
#include <string>
#include <unordered_set>

namespace genusbound {

SymplecticBasis apply_letter(const SymplecticBasis& basis, const MoveLetter& letter) {
    const int g = basis.genus;
    return std::visit(
        [&](const auto& m) -> SymplecticBasis {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, TransvectLetter>) {
                if (m.i == m.k) throw InputError("transvection: i and k must differ");
                SymplecticBasis out = basis;
                for (int t = 0; t < 2 * g; ++t) {
                    out.a(m.i).coeffs[t] -= m.r * basis.a(m.k).coeffs[t];
                    out.b(m.k).coeffs[t] += m.r * basis.b(m.i).coeffs[t];
                }
                return out;
            } else if constexpr (std::is_same_v<T, ShearALetter>) {
                SymplecticBasis out = basis;
                for (int t = 0; t < 2 * g; ++t) {
                    out.b(m.k).coeffs[t] += m.c * basis.a(m.k).coeffs[t];
                }
                return out;
            } else if constexpr (std::is_same_v<T, ShearBLetter>) {
                SymplecticBasis out = basis;
                for (int t = 0; t < 2 * g; ++t) {
                    out.a(m.k).coeffs[t] += m.c * basis.b(m.k).coeffs[t];
                }
                return out;
            } else if constexpr (std::is_same_v<T, ABSwapLetter>) {
                SymplecticBasis out = basis;
                if (!m.inverse) {  // (A, B) -> (B, -A)
                    out.a(m.k) = basis.b(m.k);
                    out.b(m.k) = basis.a(m.k);
                    for (auto& x : out.b(m.k).coeffs) x = -x;
                } else {  // (A, B) -> (-B, A)
                    out.a(m.k) = basis.b(m.k);
                    for (auto& x : out.a(m.k).coeffs) x = -x;
                    out.b(m.k) = basis.a(m.k);
                }
                return out;
            } else if constexpr (std::is_same_v<T, PairSwapLetter>) {
                return swap_pairs(basis, m.i, m.j);
            } else if constexpr (std::is_same_v<T, AShearLetter>) {
                return a_shear_change(basis, m.step.i, m.step.j, m.step.k, m.step.r, m.step.s);
            } else {
                return pair_completion(basis, m.step.m, m.step.n, m.step.a_m, m.step.a_n);
            }
        },
        letter);
}

GeneratorWord random_word(int genus, int steps, std::uint64_t seed) {
    if (genus < 1) throw InputError("random_word: genus must be at least 1");
    if (steps < 0) throw InputError("random_word: steps must be nonnegative");
    std::mt19937_64 rng(seed);
    auto pick_slot = [&]() { return static_cast<int>(rng() % genus) + 1; };
    auto pick_coeff = [&](long lo, long hi) {
        return Int(static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo);
    };

    GeneratorWord word{genus, seed, {}};
    word.letters.reserve(steps);
    for (int s = 0; s < steps; ++s) {
        for (;;) {
            const int kind = static_cast<int>(rng() % 7);
            if (kind == 0 && genus >= 2) {  // transvection between pairs
                int i = pick_slot(), k = pick_slot();
                while (k == i) k = pick_slot();
                word.letters.push_back(TransvectLetter{i, k, pick_coeff(-8, 8)});
                break;
            }
            if (kind == 1) {
                word.letters.push_back(ShearALetter{pick_slot(), pick_coeff(-5, 5)});
                break;
            }
            if (kind == 2) {
                word.letters.push_back(ShearBLetter{pick_slot(), pick_coeff(-5, 5)});
                break;
            }
            if (kind == 3) {
                word.letters.push_back(ABSwapLetter{pick_slot(), rng() % 2 == 0});
                break;
            }
            if (kind == 4 && genus >= 2) {
                int i = pick_slot(), j = pick_slot();
                while (j == i) j = pick_slot();
                word.letters.push_back(PairSwapLetter{i, j});
                break;
            }
            if (kind == 5 && genus >= 3) {
                int i = pick_slot(), j = pick_slot(), k = pick_slot();
                while (j == i) j = pick_slot();
                while (k == i || k == j) k = pick_slot();
                word.letters.push_back(
                    AShearLetter{AShearStep{i, j, k, pick_coeff(-8, 8), pick_coeff(-8, 8)}});
                break;
            }
            if (kind == 6 && genus >= 2) {
                int m = pick_slot(), n = pick_slot();
                while (n == m) n = pick_slot();
                Int am, an;
                do {
                    am = pick_coeff(-20, 20);
                    an = pick_coeff(-20, 20);
                } while (gcd_int(am, an) != 1);
                word.letters.push_back(PairCompletionLetter{PairCompletionStep{m, n, am, an}});
                break;
            }
        }
    }
    return word;
}

SymplecticBasis apply_word(const GeneratorWord& word) {
    SymplecticBasis basis = SymplecticBasis::identity(word.genus);
    for (const auto& letter : word.letters) basis = apply_letter(basis, letter);
    auto vr = verify_basis(basis);
    if (!vr.ok) {
        throw InternalError("generator word broke symplecticity: " + vr.describe(word.genus));
    }
    return basis;
}

SymplecticBasis random_symplectic_basis(int genus, int steps, std::uint64_t seed) {
    return apply_word(random_word(genus, steps, seed));
}

namespace {

std::string basis_key(const SymplecticBasis& basis) {
    std::string key;
    key.reserve(basis.vectors.size() * basis.vectors.size() * 3);
    for (const auto& v : basis.vectors) {
        for (const auto& x : v.coeffs) {
            key += x.get_str();
            key += ',';
        }
        key += ';';
    }
    return key;
}

// Inverse-closed move set for the search ball.
std::vector<MoveLetter> search_moves(int genus) {
    std::vector<MoveLetter> moves;
    for (int i = 1; i <= genus; ++i) {
        for (int k = 1; k <= genus; ++k) {
            if (i == k) continue;
            moves.push_back(TransvectLetter{i, k, 1});
            moves.push_back(TransvectLetter{i, k, -1});
        }
    }
    for (int k = 1; k <= genus; ++k) {
        moves.push_back(ShearALetter{k, 1});
        moves.push_back(ShearALetter{k, -1});
        moves.push_back(ShearBLetter{k, 1});
        moves.push_back(ShearBLetter{k, -1});
        moves.push_back(ABSwapLetter{k, false});
        moves.push_back(ABSwapLetter{k, true});
    }
    for (int i = 1; i <= genus; ++i) {
        for (int j = i + 1; j <= genus; ++j) {
            moves.push_back(PairSwapLetter{i, j});
        }
    }
    return moves;
}

int leading_kernel_count(const IntMatrix& im, const SymplecticBasis& basis) {
    const int g = basis.genus;
    for (int i = 1; i <= g; ++i) {
        for (const auto& row : im) {
            Int acc = 0;
            for (int c = 0; c < 2 * g; ++c) acc += row[c] * basis.a(i).coeffs[c];
            if (acc != 0) return i - 1;
        }
    }
    return g;
}

}  // namespace

ExhaustiveLResult exhaustive_l(const EmbeddingMap& e, int move_budget, std::size_t state_cap) {
    validate_embedding(e);
    if (move_budget < 1) throw InputError("exhaustive_l: move budget must be positive");
    const int g = e.genus;
    const IntMatrix im = clear_row_denominators(e.matrix);
    const auto moves = search_moves(g);

    std::unordered_set<std::string> visited;
    std::vector<SymplecticBasis> frontier{SymplecticBasis::identity(g)};
    visited.insert(basis_key(frontier.front()));

    ExhaustiveLResult result;
    result.value = leading_kernel_count(im, frontier.front());
    std::vector<int> best_by_level{result.value};
    bool truncated = false;

    for (int level = 1; level <= move_budget && !frontier.empty(); ++level) {
        std::vector<SymplecticBasis> next;
        for (const auto& basis : frontier) {
            for (const auto& move : moves) {
                SymplecticBasis candidate = apply_letter(basis, move);
                auto key = basis_key(candidate);
                if (!visited.insert(std::move(key)).second) continue;
                if (visited.size() > state_cap) {
                    truncated = true;
                    break;
                }
                int score = leading_kernel_count(im, candidate);
                if (score > result.value) result.value = score;
                if (result.value == g) break;  // cannot improve further
                next.push_back(std::move(candidate));
            }
            if (truncated || result.value == g) break;
        }
        result.levels = level;
        best_by_level.push_back(result.value);
        if (truncated || result.value == g) break;
        frontier = std::move(next);
    }

    result.states = visited.size();
    const int n_levels = static_cast<int>(best_by_level.size());
    if (result.value == g) {
        result.stabilized = true;  // l never exceeds g
    } else if (!truncated && n_levels >= 3) {
        result.stabilized = best_by_level[n_levels - 1] == best_by_level[n_levels - 3];
    }
    return result;
}

SymplecticBasis replay(const ReductionTrace& trace) {
    if (trace.final_basis.genus < 1) throw InputError("corrupt trace: missing final basis");
    SymplecticBasis basis = SymplecticBasis::identity(trace.final_basis.genus);
    try {
        for (const auto& step : trace.steps) basis = apply_step(basis, step);
    } catch (const InputError& err) {
        throw InputError(std::string("corrupt trace: ") + err.what());
    }
    if (!(basis == trace.final_basis)) {
        throw InputError("corrupt trace: replay does not reproduce the recorded basis");
    }
    return basis;
}

}  // namespace genusbound
