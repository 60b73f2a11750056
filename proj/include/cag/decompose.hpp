#ifndef CAG_DECOMPOSE_HPP
#define CAG_DECOMPOSE_HPP

#include <optional>

#include "cag/retract.hpp"

namespace cag {

struct UnipotentFactorInDomain : Error {
    UnipotentFactorInDomain()
        : Error("domain has a unipotent direct factor; decomposition does not apply") {}
};
struct NotMutuallyInverse : Error {
    NotMutuallyInverse() : Error("morphisms are not mutually inverse") {}
};

/// phi = tau ∘ psi + i ∘ chi ∘ p, with T the torus factor of the domain and
/// U the unipotent factor of the codomain.
struct Decomposition {
    VarietyMorphism tau;  // translation on the codomain
    Homomorphism psi;     // G -> H
    VarietyMorphism chi;  // T -> U, pointed, zero retract
    Homomorphism p;       // projection G -> T
    Homomorphism i;       // inclusion U -> H
};

/// Requires the domain to have no unipotent direct factor (n = 0).
Decomposition decompose(const VarietyMorphism &f);

VarietyMorphism recompose(const Decomposition &d);

/// Recomputes tau, psi, chi from f and compares componentwise.
bool verify_uniqueness(const VarietyMorphism &f, const Decomposition &d);

struct IsoResult {
    bool is_iso = false;
    std::optional<VarietyMorphism> inverse;
};

/// f is a variety isomorphism iff its psi is a group isomorphism; when true
/// the explicit inverse is assembled and verified.
IsoResult is_variety_iso(const VarietyMorphism &f);

bool check_mutual_inverse(const VarietyMorphism &f, const VarietyMorphism &g);

/// Group isomorphism obtained from a variety isomorphism (f, f_inv).
Homomorphism transfer_iso(const VarietyMorphism &f, const VarietyMorphism &f_inv);

/// True iff every block of the homomorphism is invertible over its ring.
bool is_group_isomorphism(const Homomorphism &h);

/// Exact inverse of a group isomorphism.
Homomorphism invert_homomorphism(const Homomorphism &h);

} // namespace cag

#endif
