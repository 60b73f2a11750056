#include "cag/random_gen.hpp"

namespace cag {

Rat Gen::rat(long max_abs, long max_den) {
    return Rat(int_in(-max_abs, max_abs), int_in(1, max_den));
}

Rat Gen::nonzero_rat(long max_abs, long max_den) {
    for (;;) {
        Rat r = rat(max_abs, max_den);
        if (!r.is_zero()) return r;
    }
}

GroupPresentation Gen::presentation(std::size_t max_n, std::size_t max_m,
                                    std::size_t max_bricks, std::size_t max_power) {
    static const char *alphabet[] = {"E", "F"};
    GroupPresentation g;
    g.n = static_cast<std::size_t>(int_in(0, static_cast<long>(max_n)));
    g.m = static_cast<std::size_t>(int_in(0, static_cast<long>(max_m)));
    std::size_t count = static_cast<std::size_t>(int_in(0, static_cast<long>(max_bricks)));
    for (std::size_t i = 0; i < count && i < 2; ++i)
        g.bricks[alphabet[i]] = static_cast<std::size_t>(int_in(1, static_cast<long>(max_power)));
    return g;
}

LaurentPoly Gen::laurent(RingSig sig, std::size_t max_terms, long max_deg) {
    LaurentPoly f(sig);
    std::size_t terms = static_cast<std::size_t>(int_in(0, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial mono{std::vector<long>(sig.n, 0), std::vector<long>(sig.m, 0)};
        long budget = max_deg;
        for (std::size_t i = 0; i < sig.n; ++i) {
            long e = int_in(0, budget);
            mono.x_exps[i] = e;
            budget -= e;
        }
        for (std::size_t j = 0; j < sig.m; ++j) mono.y_exps[j] = int_in(-2, 2);
        f.add_term(mono, rat());
    }
    return f;
}

Unit Gen::unit(std::size_t m, bool coeff_one, long max_exp) {
    Unit u;
    u.coeff = coeff_one ? Rat(1) : nonzero_rat();
    for (std::size_t j = 0; j < m; ++j) u.y_exps.push_back(int_in(-max_exp, max_exp));
    return u;
}

GroupPoint Gen::point(const GroupPresentation &g) {
    GroupPoint p;
    for (std::size_t i = 0; i < g.n; ++i) p.u.push_back(rat());
    for (std::size_t j = 0; j < g.m; ++j) p.t.push_back(nonzero_rat());
    for (const auto &[b, k] : g.bricks) {
        std::vector<PointCombo> combos(k);
        for (auto &c : combos) {
            // symbols P, Q registered per brick by convention
            long cp = int_in(-2, 2), cq = int_in(-2, 2);
            if (cp) c["P_" + b] = cp;
            if (cq) c["Q_" + b] = cq;
        }
        p.bricks[b] = std::move(combos);
    }
    return p;
}

VarietyMorphism Gen::pointed_morphism(const GroupPresentation &g, const GroupPresentation &h) {
    RingSig sig{g.n, g.m};
    RawMorphism raw;
    raw.domain = g;
    raw.codomain = h;
    std::vector<Rat> x0(g.n, Rat(0));
    std::vector<Rat> y1(g.m, Rat(1));
    for (std::size_t i = 0; i < h.n; ++i) {
        LaurentPoly f = laurent(sig);
        // force f(0, 1) = 0
        f = f - LaurentPoly::constant(sig, lp_evaluate(f, x0, y1));
        raw.u_coords.push_back(f);
    }
    for (std::size_t j = 0; j < h.m; ++j)
        raw.t_coords.push_back(LaurentPoly::from_unit(sig, unit(g.m, true)));
    for (const auto &[b, k] : h.bricks) {
        std::size_t width = g.brick_power(b);
        BrickBlock blk{IntMatrix(k, width), std::vector<PointCombo>(k)};
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < width; ++c) blk.matrix.at(r, c) = int_in(-3, 3);
        raw.brick_blocks[b] = std::move(blk);
    }
    return validate(raw);
}

VarietyMorphism Gen::morphism(const GroupPresentation &g, const GroupPresentation &h) {
    VarietyMorphism f = pointed_morphism(g, h);
    return compose(translation(h, point(h)), f);
}

Homomorphism Gen::homomorphism(const GroupPresentation &g, const GroupPresentation &h) {
    RatMatrix u(h.n, g.n);
    for (std::size_t i = 0; i < h.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j) u.at(i, j) = rat();
    IntMatrix t(h.m, g.m);
    for (std::size_t i = 0; i < h.m; ++i)
        for (std::size_t j = 0; j < g.m; ++j) t.at(i, j) = int_in(-3, 3);
    std::map<BrickId, IntMatrix> bricks;
    for (const auto &[b, k] : h.bricks) {
        std::size_t width = g.brick_power(b);
        IntMatrix m(k, width);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < width; ++c) m.at(r, c) = int_in(-3, 3);
        bricks.emplace(b, std::move(m));
    }
    return hom_from_blocks(g, h, u, t, bricks);
}

IntMatrix Gen::unimodular(std::size_t k, int steps) {
    IntMatrix m = IntMatrix::identity(k);
    if (k < 2) {
        if (k == 1 && chance(0.5)) m.at(0, 0) = -1;
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(int_in(0, static_cast<long>(k) - 1));
        std::size_t j = static_cast<std::size_t>(int_in(0, static_cast<long>(k) - 1));
        if (i == j) continue;
        if (chance(0.8)) {
            BigInt c = int_in(-2, 2);
            for (std::size_t col = 0; col < k; ++col) m.at(i, col) += c * m.at(j, col);
        } else {
            for (std::size_t col = 0; col < k; ++col) std::swap(m.at(i, col), m.at(j, col));
            for (std::size_t col = 0; col < k; ++col) m.at(i, col) = -m.at(i, col);
        }
    }
    return m;
}

RatMatrix Gen::invertible_rat(std::size_t k) {
    for (;;) {
        RatMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m.at(i, j) = rat();
        if (rat_matrix_invertible(m)) return m;
    }
}

} // namespace cag
