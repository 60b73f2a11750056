#include "cag/decompose.hpp"

namespace cag {

namespace {

GroupPresentation torus_factor(const GroupPresentation &g) {
    return GroupPresentation{0, g.m, {}};
}

GroupPresentation unipotent_factor(const GroupPresentation &g) {
    return GroupPresentation{g.n, 0, {}};
}

/// Projection of G onto its torus factor.
Homomorphism torus_projection(const GroupPresentation &g) {
    IntMatrix t = IntMatrix::identity(g.m);
    return hom_from_blocks(g, torus_factor(g), RatMatrix(0, g.n), t, {});
}

/// Inclusion of the unipotent factor of H into H.
Homomorphism unipotent_inclusion(const GroupPresentation &h) {
    RatMatrix u = RatMatrix::identity(h.n);
    return hom_from_blocks(unipotent_factor(h), h, u, IntMatrix(h.m, 0), {});
}

} // namespace

Decomposition decompose(const VarietyMorphism &f) {
    if (f.domain.n != 0) throw UnipotentFactorInDomain();
    PointedNormalization pn = pointed_normalize(f);
    Homomorphism psi = retract(pn.pointed);

    GroupPresentation t = torus_factor(f.domain);
    GroupPresentation u = unipotent_factor(f.codomain);

    // the torus-to-unipotent residue: the pointed unipotent coordinates of f,
    // whole (the homomorphism part in them is empty since n_G = 0)
    VarietyMorphism chi;
    chi.domain = t;
    chi.codomain = u;
    chi.u_coords = pn.pointed.u_coords;

    return Decomposition{pn.tau, psi, chi, torus_projection(f.domain),
                         unipotent_inclusion(f.codomain)};
}

VarietyMorphism recompose(const Decomposition &d) {
    return add(compose(d.tau, d.psi),
               compose(d.i, compose(d.chi, d.p)));
}

bool verify_uniqueness(const VarietyMorphism &f, const Decomposition &d) {
    if (recompose(d) != f) return false;
    Decomposition fresh = decompose(f);
    return fresh.tau == d.tau && fresh.psi == d.psi && fresh.chi == d.chi &&
           fresh.p == d.p && fresh.i == d.i;
}

bool is_group_isomorphism(const Homomorphism &h) {
    const VarietyMorphism &f = h.morphism();
    if (!groups_isomorphic(f.domain, f.codomain)) return false;
    if (!rat_matrix_invertible(jacobian_at_identity(f))) return false;
    if (!int_matrix_unimodular(torus_exponent_matrix(f))) return false;
    for (const auto &[b, blk] : f.brick_blocks)
        if (!int_matrix_unimodular(blk.matrix)) return false;
    return true;
}

Homomorphism invert_homomorphism(const Homomorphism &h) {
    const VarietyMorphism &f = h.morphism();
    if (!is_group_isomorphism(h)) throw Singular();
    std::map<BrickId, IntMatrix> bricks;
    for (const auto &[b, blk] : f.brick_blocks)
        bricks.emplace(b, int_matrix_unimodular_inverse(blk.matrix));
    return hom_from_blocks(f.codomain, f.domain,
                           rat_matrix_invert(jacobian_at_identity(f)),
                           int_matrix_unimodular_inverse(torus_exponent_matrix(f)), bricks);
}

bool check_mutual_inverse(const VarietyMorphism &f, const VarietyMorphism &g) {
    if (f.domain != g.codomain || f.codomain != g.domain) throw SignatureMismatch();
    return compose(f, g) == identity_morphism(f.codomain).morphism() &&
           compose(g, f) == identity_morphism(f.domain).morphism();
}

IsoResult is_variety_iso(const VarietyMorphism &f) {
    if (f.domain.n != 0) throw UnipotentFactorInDomain();
    if (!groups_isomorphic(f.domain, f.codomain)) return {};
    Decomposition d = decompose(f);
    if (!is_group_isomorphism(d.psi)) return {};

    Homomorphism psi_inv = invert_homomorphism(d.psi);
    VarietyMorphism tau_inv = translation(f.codomain, point_negate(evaluate_at_identity(f)));
    // phi^-1 = psi^-1 ∘ tau^-1 ∘ (id_H - i∘chi∘p∘psi^-1∘tau^-1)
    VarietyMorphism correction =
        compose(d.i, compose(d.chi, compose(d.p, compose(psi_inv, tau_inv))));
    VarietyMorphism inner = add(identity_morphism(f.codomain), negate(correction));
    VarietyMorphism inverse = compose(psi_inv, compose(tau_inv, inner));
    if (!check_mutual_inverse(f, inverse))
        throw Error("assembled inverse failed verification");
    return IsoResult{true, inverse};
}

Homomorphism transfer_iso(const VarietyMorphism &f, const VarietyMorphism &f_inv) {
    if (!check_mutual_inverse(f, f_inv)) throw NotMutuallyInverse();
    Homomorphism psi = retract_general(f).psi;
    Homomorphism psi_inv = retract_general(f_inv).psi;
    // functoriality makes the retractions mutually inverse; assert it
    if (compose(psi, psi_inv) != identity_morphism(f.codomain).morphism() ||
        compose(psi_inv, psi) != identity_morphism(f.domain).morphism())
        throw Error("transferred isomorphism failed verification");
    return psi;
}

} // namespace cag
