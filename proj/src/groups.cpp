#include "cag/groups.hpp"

#include <sstream>

namespace cag {

StructuralParts structural_parts(const GroupPresentation &g) {
    StructuralParts p;
    p.affine_part = {g.n, g.m, {}};
    p.antiaffine_part = {0, 0, g.bricks};
    p.mult_type_part = {0, g.m, {}};
    p.unipotent_part = {g.n, 0, {}};
    return p;
}

GroupPredicates predicates(const GroupPresentation &g) {
    GroupPredicates p;
    p.is_torus = g.n == 0 && g.bricks.empty();
    p.is_antiaffine = g.n == 0 && g.m == 0;
    p.is_semiabelian = g.n == 0;
    // valid because presentations are split
    p.has_unipotent_direct_factor = g.n >= 1;
    return p;
}

GroupPresentation product(const GroupPresentation &g, const GroupPresentation &h) {
    GroupPresentation p;
    p.n = g.n + h.n;
    p.m = g.m + h.m;
    p.bricks = g.bricks;
    for (const auto &[b, k] : h.bricks) p.bricks[b] += k;
    return p;
}

bool groups_isomorphic(const GroupPresentation &g, const GroupPresentation &h) {
    return g == h;
}

std::string group_to_string(const GroupPresentation &g) {
    if (g.is_trivial()) return "1";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string &name, std::size_t k) {
        if (k == 0) return;
        if (!first) out << "*";
        first = false;
        out << name;
        if (k != 1) out << "^" << k;
    };
    emit("Ga", g.n);
    emit("Gm", g.m);
    for (const auto &[b, k] : g.bricks) emit(b, k);
    return out.str();
}

} // namespace cag
