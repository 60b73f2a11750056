#ifndef CAG_RETRACT_HPP
#define CAG_RETRACT_HPP

#include "cag/morphisms.hpp"

namespace cag {

/// The unique homomorphism retraction of a pointed variety morphism:
/// Jacobian of the x-restriction at the identity, character exponents read
/// off the unit coordinates, brick blocks copied verbatim.
Homomorphism retract(const VarietyMorphism &f);

struct GeneralRetraction {
    VarietyMorphism tau; // translation by f(0)
    Homomorphism psi;    // retract of the pointed normalization
};

GeneralRetraction retract_general(const VarietyMorphism &f);

} // namespace cag

#endif
