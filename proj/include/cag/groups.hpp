#ifndef CAG_GROUPS_HPP
#define CAG_GROUPS_HPP

#include <map>
#include <string>

#include "cag/rat.hpp"

namespace cag {

/// Formal abelian variety symbol: End = Z, Hom between distinct bricks = 0.
using BrickId = std::string;

/// Split presentation Ga^n x Gm^m x prod_b b^k_b of a connected commutative
/// algebraic group over Q.
struct GroupPresentation {
    std::size_t n = 0; // unipotent rank
    std::size_t m = 0; // torus rank
    std::map<BrickId, std::size_t> bricks; // powers >= 1

    bool operator==(const GroupPresentation &o) const = default;

    bool is_trivial() const { return n == 0 && m == 0 && bricks.empty(); }
    std::size_t brick_power(const BrickId &b) const {
        auto it = bricks.find(b);
        return it == bricks.end() ? 0 : it->second;
    }
};

struct StructuralParts {
    GroupPresentation affine_part;     // (n, m, {})
    GroupPresentation antiaffine_part; // (0, 0, bricks)
    GroupPresentation mult_type_part;  // (0, m, {})
    GroupPresentation unipotent_part;  // (n, 0, {})
};

struct GroupPredicates {
    bool is_torus;
    bool is_antiaffine;
    bool is_semiabelian;
    bool has_unipotent_direct_factor;
};

StructuralParts structural_parts(const GroupPresentation &g);
GroupPredicates predicates(const GroupPresentation &g);

/// Direct product: ranks add, brick powers add. In a product the first
/// factor's coordinates come first (also within each shared brick).
GroupPresentation product(const GroupPresentation &g, const GroupPresentation &h);

/// Within the split class, group isomorphism type is exactly (n, m, bricks).
bool groups_isomorphic(const GroupPresentation &g, const GroupPresentation &h);

std::string group_to_string(const GroupPresentation &g);

} // namespace cag

#endif
