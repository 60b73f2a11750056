#include "cag/retract.hpp"

namespace cag {

Homomorphism retract(const VarietyMorphism &f) {
    if (!is_pointed(f)) throw NotPointed();
    std::map<BrickId, IntMatrix> bricks;
    for (const auto &[b, blk] : f.brick_blocks) bricks.emplace(b, blk.matrix);
    // torus coefficients are 1 by pointedness, so the exponent matrix is the
    // whole torus datum; y-dependence of the u-coordinates is dropped (no
    // nonzero homomorphisms of multiplicative type into unipotent groups)
    return hom_from_blocks(f.domain, f.codomain, jacobian_at_identity(f),
                           torus_exponent_matrix(f), bricks);
}

GeneralRetraction retract_general(const VarietyMorphism &f) {
    PointedNormalization pn = pointed_normalize(f);
    return GeneralRetraction{pn.tau, retract(pn.pointed)};
}

} // namespace cag
