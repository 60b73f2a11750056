#ifndef CAG_MORPHISMS_HPP
#define CAG_MORPHISMS_HPP

#include <map>
#include <string>
#include <vector>

#include "cag/groups.hpp"
#include "cag/laurent.hpp"
#include "cag/matrix.hpp"

namespace cag {

struct NonUnitTorusCoordinate : Error {
    explicit NonUnitTorusCoordinate(const std::string &what) : Error(what) {}
};
struct BrickMismatch : Error {
    explicit BrickMismatch(const std::string &what) : Error(what) {}
};
struct NotPointed : Error {
    NotPointed() : Error("morphism is not pointed") {}
};
struct ZeroTorusComponent : Error {
    ZeroTorusComponent() : Error("translation point has a zero torus component") {}
};

/// Z-linear combination of named point symbols on one brick coordinate.
using PointCombo = std::map<std::string, BigInt>;

PointCombo combo_add(const PointCombo &a, const PointCombo &b);
PointCombo combo_negate(const PointCombo &a);
PointCombo combo_scale(const BigInt &c, const PointCombo &a);
bool combo_is_zero(const PointCombo &a);

/// Coordinates of a formal point on a brick power: one combo per coordinate.
struct FormalPointExpr {
    BrickId brick;
    std::vector<PointCombo> coords;
    bool operator==(const FormalPointExpr &o) const = default;
};

/// Morphism data into one codomain brick power: an integer matrix acting on
/// the domain's coordinates of the same brick (width 0 when the domain lacks
/// it) plus a formal translation.
struct BrickBlock {
    IntMatrix matrix;
    std::vector<PointCombo> translation; // length = matrix.rows()
    bool operator==(const BrickBlock &o) const = default;
};

/// A point of a split presentation, brick coordinates formal.
struct GroupPoint {
    std::vector<Rat> u;
    std::vector<Rat> t; // must stay nonzero
    std::map<BrickId, std::vector<PointCombo>> bricks;
    bool operator==(const GroupPoint &o) const = default;
};

GroupPoint identity_point(const GroupPresentation &g);
GroupPoint point_negate(const GroupPoint &p);

/// Coordinate data of a variety morphism between split presentations.
/// u_coords live over the domain's (n, m) signature and never touch brick
/// coordinates; t_coords are units; brick blocks connect equal bricks only.
struct VarietyMorphism {
    GroupPresentation domain;
    GroupPresentation codomain;
    std::vector<LaurentPoly> u_coords;           // size codomain.n
    std::vector<Unit> t_coords;                  // size codomain.m
    std::map<BrickId, BrickBlock> brick_blocks;  // keyed by codomain bricks

    bool operator==(const VarietyMorphism &o) const = default;
};

/// Unvalidated input: torus coordinates still arbitrary Laurent polynomials.
struct RawMorphism {
    GroupPresentation domain;
    GroupPresentation codomain;
    std::vector<LaurentPoly> u_coords;
    std::vector<LaurentPoly> t_coords;
    std::map<BrickId, BrickBlock> brick_blocks;
};

/// Checks every structural invariant; the diagnostic lists all violations.
VarietyMorphism validate(const RawMorphism &raw);

GroupPoint evaluate_at_identity(const VarietyMorphism &f);
bool is_pointed(const VarietyMorphism &f);

/// Structural homomorphism shape: u linear in x with no constant and no y,
/// unit coefficients 1, brick translations zero.
bool is_homomorphism(const VarietyMorphism &f);

/// The identity f(a+b) = f(a)+f(b) checked symbolically in doubled variables.
bool is_homomorphism_symbolic(const VarietyMorphism &f);

/// A VarietyMorphism known to satisfy the homomorphism shape.
class Homomorphism {
public:
    explicit Homomorphism(VarietyMorphism m);
    const VarietyMorphism &morphism() const { return m_; }
    operator const VarietyMorphism &() const { return m_; }
    bool operator==(const Homomorphism &o) const { return m_ == o.m_; }

private:
    VarietyMorphism m_;
};

VarietyMorphism compose(const VarietyMorphism &outer, const VarietyMorphism &inner);
VarietyMorphism add(const VarietyMorphism &f, const VarietyMorphism &g);
VarietyMorphism negate(const VarietyMorphism &f);

/// (f, g): G -> H1 x H2 by coordinate concatenation.
VarietyMorphism pairing(const VarietyMorphism &f, const VarietyMorphism &g);

VarietyMorphism translation(const GroupPresentation &h, const GroupPoint &by);

struct PointedNormalization {
    VarietyMorphism tau;     // translation by f(0)
    VarietyMorphism pointed; // tau^-1 ∘ f
};
PointedNormalization pointed_normalize(const VarietyMorphism &f);

// canonical homomorphisms
Homomorphism identity_morphism(const GroupPresentation &g);
Homomorphism zero_morphism(const GroupPresentation &g, const GroupPresentation &h);
/// Addition H x H -> H.
Homomorphism addition_hom(const GroupPresentation &h);
/// Projection G x H -> G (factor = 1) or -> H (factor = 2).
Homomorphism projection_hom(const GroupPresentation &g, const GroupPresentation &h, int factor);
/// Inclusion of a factor into G x H.
Homomorphism inclusion_hom(const GroupPresentation &g, const GroupPresentation &h, int factor);
/// Multiplication by c; c must be an integer when G has torus or brick parts.
Homomorphism scalar_hom(const GroupPresentation &g, const Rat &c);

/// Assembles a homomorphism from its blocks: unipotent Jacobian (n_H x n_G),
/// torus exponent matrix (m_H x m_G), and one integer block per shared brick.
Homomorphism hom_from_blocks(const GroupPresentation &g, const GroupPresentation &h,
                             const RatMatrix &unipotent, const IntMatrix &torus,
                             const std::map<BrickId, IntMatrix> &bricks);

IntMatrix torus_exponent_matrix(const VarietyMorphism &f);
RatMatrix jacobian_at_identity(const VarietyMorphism &f);

std::string point_to_string(const GroupPoint &p);
std::string combo_to_string(const PointCombo &c);

} // namespace cag

#endif
