#include "genusbound/adjunction.hpp"

#include <algorithm>

namespace genusbound {

const char* theorem_id_name(TheoremId id) {
    switch (id) {
        case TheoremId::th1: return "th1";
        case TheoremId::th2: return "th2";
        case TheoremId::th2_high_degree: return "th2_high_degree";
        case TheoremId::th3: return "th3";
        case TheoremId::th4: return "th4";
        case TheoremId::key: return "key";
    }
    return "?";
}

Int genus_floor(const Int& lhs) {
    return floor_div(lhs + 3, 2);
}

namespace {

bool is_b2_one(const AdjunctionCase& c) { return c.manifold.b2_plus == 1; }

const Int& pairing(const AdjunctionCase& c) { return *c.spinc.pairing_e; }

// |e| for b2+ > 1, -e for b2+ = 1.
Int signed_pairing(const AdjunctionCase& c) {
    return is_b2_one(c) ? Int(-pairing(c)) : abs_int(pairing(c));
}

void check_common(const AdjunctionCase& c, std::vector<std::string>& fails) {
    if (!c.surface.non_torsion) fails.push_back(hyp::non_torsion);
    if (c.surface.self_int < 0) fails.push_back(hyp::self_int_nonneg);
}

void check_sw(const AdjunctionCase& c, std::vector<std::string>& fails) {
    if (!c.spinc.sw_nonvanishing) fails.push_back(hyp::sw_nonvanishing);
}

// Basic class: nonvanishing against exactly U^{d(s)/2}, so the insertion is
// (u_power = d_s/2, no one-dimensional classes, trivial ambient part) and
// d(s) must be even and nonnegative.
void check_basic(const AdjunctionCase& c, std::vector<std::string>& fails) {
    check_sw(c, fails);
    if (!c.d_s) {
        fails.push_back(hyp::formal_dim_unknown);
        return;
    }
    if (*c.d_s < 0) {
        fails.push_back(hyp::negative_formal_dim);
        return;
    }
    const bool even = floor_mod(*c.d_s, 2) == 0;
    const bool shape = even && Int(2) * c.insertion.u_power == *c.d_s &&
                       c.insertion.surface_one_dim_count == 0 &&
                       c.insertion.ambient_degree == 0;
    if (!shape) fails.push_back(hyp::basic_class);
}

void check_positivity(const AdjunctionCase& c, std::vector<std::string>& fails) {
    if (is_b2_one(c) && -pairing(c) + c.surface.self_int < 0) {
        fails.push_back(hyp::chamber_positivity);
    }
}

TheoremVerdict finish(TheoremVerdict v, const std::optional<Int>& lhs) {
    v.applicable = v.failed_hypotheses.empty();
    if (v.applicable && lhs) v.genus_lower_bound = genus_floor(*lhs);
    return v;
}

}  // namespace

void validate_case(const AdjunctionCase& c) {
    validate_manifold(c.manifold);
    validate_insertion(c.insertion);
    if (c.surface.genus < 1) throw InputError("surface: genus must be at least 1");
    if (!c.spinc.pairing_e) {
        throw InputError("spinc '" + c.spinc.name + "': pairing_e is required");
    }
    if (!wu_parity_check(pairing(c), c.surface.self_int)) {
        throw InputError("wu_parity: |pairing_e| + self_intersection must be even (spinc '" +
                         c.spinc.name + "')");
    }
    if (is_b2_one(c) && c.spinc.chamber != Chamber::pd_sigma) {
        throw InputError("chamber_required: b2_plus = 1 needs chamber \"pd_sigma\" (spinc '" +
                         c.spinc.name + "')");
    }
    if (c.d_s && c.spinc.c1_square && c.manifold.chi && c.manifold.tau) {
        Int expect = d_invariant(*c.spinc.c1_square, *c.manifold.chi, *c.manifold.tau);
        if (expect != *c.d_s) {
            throw InputError("d_mismatch: d_s = " + c.d_s->get_str() +
                             " but (c1^2 - 2chi - 3tau)/4 = " + expect.get_str());
        }
    }
    if (c.surface.embedding) {
        validate_embedding(*c.surface.embedding);
        if (c.surface.embedding->genus != c.surface.genus) {
            throw InputError("embedding genus does not match the surface genus");
        }
        if (c.surface.embedding->ambient_b1 != c.manifold.b1) {
            throw InputError("embedding row count does not match b1");
        }
    }
}

AdjunctionCase normalize_orientation(const AdjunctionCase& c) {
    if (is_b2_one(c)) {
        throw InputError("normalize_orientation: forbidden for b2_plus = 1 (chamber is pinned)");
    }
    AdjunctionCase out = c;
    if (out.spinc.pairing_e && *out.spinc.pairing_e > 0) {
        *out.spinc.pairing_e = -*out.spinc.pairing_e;
    }
    return out;
}

TheoremVerdict bound_th1(const AdjunctionCase& c) {
    TheoremVerdict v{TheoremId::th1};
    check_common(c, v.failed_hypotheses);
    check_basic(c, v.failed_hypotheses);
    check_positivity(c, v.failed_hypotheses);
    std::optional<Int> lhs;
    if (v.failed_hypotheses.empty()) {
        const Int coeff = c.manifold.b1 >= 1 ? 1 : 2;
        lhs = signed_pairing(c) + c.surface.self_int + coeff * *c.d_s;
    }
    return finish(std::move(v), lhs);
}

TheoremVerdict bound_th2(const AdjunctionCase& c, int l_sigma) {
    const Int d_b = c.insertion.degree_b();
    TheoremVerdict v{d_b <= l_sigma ? TheoremId::th2 : TheoremId::th2_high_degree};
    check_common(c, v.failed_hypotheses);
    check_sw(c, v.failed_hypotheses);
    check_positivity(c, v.failed_hypotheses);
    std::optional<Int> lhs;
    if (v.failed_hypotheses.empty()) {
        const Int correction = v.id == TheoremId::th2 ? Int(2) * d_b : d_b;
        lhs = signed_pairing(c) + c.surface.self_int + correction;
    }
    return finish(std::move(v), lhs);
}

TheoremVerdict bound_th3(const AdjunctionCase& c) {
    TheoremVerdict v{TheoremId::th3};
    check_common(c, v.failed_hypotheses);
    check_sw(c, v.failed_hypotheses);
    if (signed_pairing(c) + c.surface.self_int < Int(2) * c.manifold.b1) {
        v.failed_hypotheses.push_back(hyp::betti_gate);
    }
    std::optional<Int> lhs;
    if (v.failed_hypotheses.empty()) {
        lhs = signed_pairing(c) + c.surface.self_int + Int(2) * c.insertion.degree_b();
    }
    return finish(std::move(v), lhs);
}

TheoremVerdict bound_th4(const AdjunctionCase& c) {
    TheoremVerdict v{TheoremId::th4};
    check_common(c, v.failed_hypotheses);
    check_basic(c, v.failed_hypotheses);
    check_positivity(c, v.failed_hypotheses);
    if (signed_pairing(c) + Int(3) * c.surface.self_int < Int(2) * c.manifold.b1) {
        v.failed_hypotheses.push_back(hyp::betti_gate);
    }
    std::optional<Int> lhs;
    if (v.failed_hypotheses.empty()) {
        lhs = signed_pairing(c) + c.surface.self_int + Int(2) * *c.d_s -
              Int(2) * c.manifold.b1;
    }
    return finish(std::move(v), lhs);
}

TheoremVerdict max_insertion_degree(const AdjunctionCase& c) {
    TheoremVerdict v{TheoremId::key};
    check_common(c, v.failed_hypotheses);
    check_sw(c, v.failed_hypotheses);
    if (signed_pairing(c) + c.surface.self_int < Int(2) * c.manifold.b1) {
        v.failed_hypotheses.push_back(hyp::betti_gate);
    }
    v.applicable = v.failed_hypotheses.empty();
    if (v.applicable) {
        v.degree_cap = Int(c.surface.genus) - c.manifold.b1;
        v.genus_lower_bound = c.insertion.degree_b() + c.manifold.b1;
    }
    return v;
}

namespace {

std::vector<TheoremVerdict> evaluate_all(const AdjunctionCase& c, int l_sigma) {
    return {bound_th1(c), bound_th2(c, l_sigma), bound_th3(c), bound_th4(c),
            max_insertion_degree(c)};
}

TheoremVerdict merge_orientations(const TheoremVerdict& a, const TheoremVerdict& b) {
    if (a.applicable && b.applicable) {
        return (a.genus_lower_bound >= b.genus_lower_bound) ? a : b;
    }
    if (b.applicable) return b;
    return a;
}

}  // namespace

BoundReport best_bound(const AdjunctionCase& c, std::optional<int> l_sigma) {
    validate_case(c);

    BoundReport report;
    int l_used = 0;
    if (l_sigma) {
        l_used = *l_sigma;
        report.l_source = "given";
    } else if (c.surface.embedding) {
        l_used = l_invariant(*c.surface.embedding);
        report.l_source = "embedding";
    } else {
        l_used = l_bound_from_betti(c.surface.genus,
                                    static_cast<int>(std::min<long>(
                                        c.manifold.b1, c.surface.genus)));
        report.l_source = "betti_floor";
    }
    report.l_sigma = l_used;

    if (is_b2_one(c)) {
        report.verdicts = evaluate_all(c, l_used);
    } else {
        report.normalization_applied = pairing(c) > 0;
        auto direct = evaluate_all(c, l_used);
        AdjunctionCase flipped = c;
        *flipped.spinc.pairing_e = -pairing(c);
        auto mirrored = evaluate_all(flipped, l_used);
        report.verdicts.reserve(direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) {
            if (direct[i].applicable != mirrored[i].applicable ||
                direct[i].genus_lower_bound != mirrored[i].genus_lower_bound) {
                throw InternalError("orientation reversal changed a verdict for b2+ > 1");
            }
            report.verdicts.push_back(merge_orientations(direct[i], mirrored[i]));
        }
    }

    for (const auto& v : report.verdicts) {
        if (!v.applicable) continue;
        if (!report.best_bound || *v.genus_lower_bound > *report.best_bound) {
            report.best_bound = v.genus_lower_bound;
        }
    }
    return report;
}

}  // namespace genusbound
