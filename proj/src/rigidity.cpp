#include "cag/rigidity.hpp"

namespace cag {

namespace {

/// Identity with the first unipotent coordinate sheared by `bump`.
VarietyMorphism shear(const GroupPresentation &g, const LaurentPoly &bump) {
    VarietyMorphism r = identity_morphism(g).morphism();
    r.u_coords[0] = r.u_coords[0] + bump;
    return r;
}

LaurentPoly counterexample_bump(const GroupPresentation &g) {
    RingSig sig{g.n, g.m};
    if (g.n >= 2) {
        // x1 -> x1 + x2^2
        return LaurentPoly::var_x(sig, 1).pow(2);
    }
    if (g.n == 1 && g.m >= 1) {
        // x1 -> x1 + (y1 - 1)
        return LaurentPoly::var_y(sig, 0) - LaurentPoly::constant(sig, Rat(1));
    }
    throw GroupIsRigid();
}

} // namespace

RigidityVerdict classify_rigidity(const GroupPresentation &g) {
    RigidityVerdict v;
    if (g.n == 0) {
        v.rigid = true;
        v.reason = g.m == 0 ? RigidityReason::antiaffine : RigidityReason::semiabelian;
        return v;
    }
    if (g.n == 1 && g.m == 0) {
        v.rigid = true;
        v.reason = RigidityReason::Ga_times_antiaffine_semiabelian;
        return v;
    }
    v.rigid = false;
    v.reason = RigidityReason::not_rigid;
    v.counterexample = synthesize_counterexample(g);
    return v;
}

VarietyMorphism synthesize_counterexample(const GroupPresentation &g) {
    return shear(g, counterexample_bump(g));
}

VarietyMorphism synthesize_counterexample_inverse(const GroupPresentation &g) {
    return shear(g, -counterexample_bump(g));
}

const char *rigidity_reason_name(RigidityReason r) {
    switch (r) {
        case RigidityReason::antiaffine: return "antiaffine";
        case RigidityReason::semiabelian: return "semiabelian";
        case RigidityReason::Ga_times_antiaffine_semiabelian:
            return "Ga_times_antiaffine_semiabelian";
        case RigidityReason::not_rigid: return "not_rigid";
    }
    return "unknown";
}

} // namespace cag
