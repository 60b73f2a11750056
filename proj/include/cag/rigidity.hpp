#ifndef CAG_RIGIDITY_HPP
#define CAG_RIGIDITY_HPP

#include <optional>

#include "cag/morphisms.hpp"

namespace cag {

struct GroupIsRigid : Error {
    GroupIsRigid() : Error("group is rigid; no counterexample exists") {}
};

enum class RigidityReason {
    antiaffine,
    semiabelian,
    Ga_times_antiaffine_semiabelian,
    not_rigid,
};

/// rigid means: every pointed variety automorphism is a group automorphism.
/// The verdict formula is complete for the split class only.
struct RigidityVerdict {
    bool rigid = false;
    RigidityReason reason = RigidityReason::not_rigid;
    std::optional<VarietyMorphism> counterexample;
};

RigidityVerdict classify_rigidity(const GroupPresentation &g);

/// A pointed variety automorphism that is not a homomorphism; throws
/// GroupIsRigid when none exists.
VarietyMorphism synthesize_counterexample(const GroupPresentation &g);

/// The synthesized counterexample's inverse (same shape, minus sign).
VarietyMorphism synthesize_counterexample_inverse(const GroupPresentation &g);

const char *rigidity_reason_name(RigidityReason r);

} // namespace cag

#endif
