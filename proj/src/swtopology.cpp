#include "genusbound/swtopology.hpp"

namespace genusbound {

const char* chamber_name(Chamber c) {
    return c == Chamber::pd_sigma ? "pd_sigma" : "not_applicable";
}

void validate_manifold(const ManifoldData& m) {
    if (m.b1 < 0) throw InputError("manifold: b1 must be nonnegative");
    if (m.b2_plus < 1) throw InputError("manifold: b2_plus must be at least 1");
}

void validate_blowup(const BlowUpSpec& spec) {
    if (spec.r < 0) throw InputError("blowup: r must be nonnegative");
}

void validate_insertion(const InsertionData& ins) {
    if (ins.u_power < 0 || ins.surface_one_dim_count < 0 || ins.ambient_degree < 0) {
        throw InputError("insertion: degrees must be nonnegative");
    }
}

Int d_invariant(const Int& c1_square, const Int& chi, const Int& tau) {
    Int num = c1_square - (Int(2) * chi + Int(3) * tau);
    if (floor_mod(num, 4) != 0) {
        throw InputError("inconsistent Spin^c data: c1^2 - (2 chi + 3 tau) = " + num.get_str() +
                         " is not divisible by 4");
    }
    return num / 4;
}

bool wu_parity_check(const Int& e, const Int& n) {
    return floor_mod(abs_int(e) + n, 2) == 0;
}

std::optional<std::string> characteristic_warning(const SpinCData& sp, const ManifoldData& m) {
    if (!sp.c1_square || !m.tau) return std::nullopt;
    if (floor_mod(*sp.c1_square - *m.tau, 8) != 0) {
        return "spinc '" + sp.name + "': c1_square = " + sp.c1_square->get_str() +
               " is not congruent to tau = " + m.tau->get_str() +
               " mod 8; not a characteristic element";
    }
    return std::nullopt;
}

namespace {

SpinCData transform_spinc(const SpinCData& sp, long r) {
    SpinCData out = sp;
    if (out.c1_square) *out.c1_square -= Int(9) * r;
    if (out.pairing_e) *out.pairing_e -= Int(3) * r;
    return out;
}

}  // namespace

BlowUpResult blow_up(const ManifoldData& m, const SurfaceData& s, const SpinCData& sp,
                     const std::optional<Int>& d, const BlowUpSpec& spec) {
    validate_manifold(m);
    validate_blowup(spec);
    const long r = spec.r;
    BlowUpResult out;
    out.manifold = m;
    if (out.manifold.chi) *out.manifold.chi += r;
    if (out.manifold.tau) *out.manifold.tau -= r;
    out.surface = s;
    out.surface.self_int -= r;
    out.spinc = transform_spinc(sp, r);
    if (d) out.d = *d - Int(2) * r;
    return out;
}

SpinCData sw_blowup_transfer(const SpinCData& sp, const BlowUpSpec& spec) {
    validate_blowup(spec);
    if (!sp.sw_nonvanishing) {
        throw HypothesisError("sw_blowup_transfer: the Seiberg-Witten hypothesis flag is not set");
    }
    return transform_spinc(sp, spec.r);
}

}  // namespace genusbound
