#include "cag/morphisms.hpp"

#include <sstream>

namespace cag {

PointCombo combo_add(const PointCombo &a, const PointCombo &b) {
    PointCombo r = a;
    for (const auto &[sym, c] : b) {
        r[sym] += c;
        if (r[sym] == 0) r.erase(sym);
    }
    return r;
}

PointCombo combo_negate(const PointCombo &a) {
    PointCombo r;
    for (const auto &[sym, c] : a) r.emplace(sym, -c);
    return r;
}

PointCombo combo_scale(const BigInt &c, const PointCombo &a) {
    PointCombo r;
    if (c == 0) return r;
    for (const auto &[sym, k] : a) r.emplace(sym, c * k);
    return r;
}

bool combo_is_zero(const PointCombo &a) { return a.empty(); }

namespace {

std::vector<PointCombo> combos_add(const std::vector<PointCombo> &a,
                                   const std::vector<PointCombo> &b) {
    std::vector<PointCombo> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = combo_add(a[i], b[i]);
    return r;
}

std::vector<PointCombo> matrix_apply(const IntMatrix &m, const std::vector<PointCombo> &v) {
    std::vector<PointCombo> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i] = combo_add(r[i], combo_scale(m.at(i, j), v[j]));
    return r;
}

RingSig domain_sig(const GroupPresentation &g) { return RingSig{g.n, g.m}; }

Unit unit_one(std::size_t m) { return Unit{Rat(1), std::vector<long>(m, 0)}; }

Unit unit_var(std::size_t m, std::size_t j) {
    Unit u = unit_one(m);
    u.y_exps[j] = 1;
    return u;
}

BrickBlock zero_block(std::size_t rows, std::size_t cols) {
    return BrickBlock{IntMatrix(rows, cols), std::vector<PointCombo>(rows)};
}

} // namespace

GroupPoint identity_point(const GroupPresentation &g) {
    GroupPoint p;
    p.u.assign(g.n, Rat(0));
    p.t.assign(g.m, Rat(1));
    for (const auto &[b, k] : g.bricks) p.bricks[b] = std::vector<PointCombo>(k);
    return p;
}

GroupPoint point_negate(const GroupPoint &p) {
    GroupPoint r;
    for (const Rat &v : p.u) r.u.push_back(-v);
    for (const Rat &v : p.t) r.t.push_back(v.inverse());
    for (const auto &[b, combos] : p.bricks) {
        std::vector<PointCombo> neg;
        for (const auto &c : combos) neg.push_back(combo_negate(c));
        r.bricks[b] = std::move(neg);
    }
    return r;
}

VarietyMorphism validate(const RawMorphism &raw) {
    std::vector<std::string> problems;
    bool non_unit = false;
    const RingSig sig = domain_sig(raw.domain);

    if (raw.u_coords.size() != raw.codomain.n)
        problems.push_back("expected " + std::to_string(raw.codomain.n) + " unipotent coordinates");
    if (raw.t_coords.size() != raw.codomain.m)
        problems.push_back("expected " + std::to_string(raw.codomain.m) + " torus coordinates");

    for (std::size_t i = 0; i < raw.u_coords.size(); ++i)
        if (raw.u_coords[i].sig() != sig)
            problems.push_back("unipotent coordinate " + std::to_string(i + 1) +
                               " has wrong ring signature");

    VarietyMorphism f;
    f.domain = raw.domain;
    f.codomain = raw.codomain;
    f.u_coords = raw.u_coords;

    for (std::size_t j = 0; j < raw.t_coords.size(); ++j) {
        const LaurentPoly &g = raw.t_coords[j];
        if (g.sig() != sig) {
            problems.push_back("torus coordinate " + std::to_string(j + 1) +
                               " has wrong ring signature");
            continue;
        }
        auto u = lp_unit_decompose(g);
        if (!u) {
            problems.push_back("torus coordinate " + std::to_string(j + 1) +
                               " is not a unit: " + lp_to_string(g));
            non_unit = true;
            continue;
        }
        f.t_coords.push_back(*u);
    }

    for (const auto &[b, k] : raw.codomain.bricks) {
        auto it = raw.brick_blocks.find(b);
        std::size_t width = raw.domain.brick_power(b);
        if (it == raw.brick_blocks.end()) {
            f.brick_blocks[b] = zero_block(k, width);
            continue;
        }
        const BrickBlock &blk = it->second;
        if (blk.matrix.rows() != k || blk.matrix.cols() != width ||
            blk.translation.size() != k) {
            problems.push_back("brick block " + b + " has wrong shape");
            continue;
        }
        f.brick_blocks[b] = blk;
    }
    for (const auto &[b, blk] : raw.brick_blocks)
        if (!raw.codomain.bricks.count(b))
            problems.push_back("brick block " + b + " does not match any codomain brick");

    if (!problems.empty()) {
        std::string msg = "invalid morphism:";
        for (const auto &p : problems) msg += "\n  - " + p;
        if (non_unit) throw NonUnitTorusCoordinate(msg);
        throw BrickMismatch(msg);
    }
    return f;
}

GroupPoint evaluate_at_identity(const VarietyMorphism &f) {
    GroupPoint p;
    std::vector<Rat> x0(f.domain.n, Rat(0));
    std::vector<Rat> y1(f.domain.m, Rat(1));
    for (const auto &g : f.u_coords) p.u.push_back(lp_evaluate(g, x0, y1));
    for (const auto &u : f.t_coords) p.t.push_back(u.coeff);
    for (const auto &[b, blk] : f.brick_blocks) p.bricks[b] = blk.translation;
    return p;
}

bool is_pointed(const VarietyMorphism &f) {
    return evaluate_at_identity(f) == identity_point(f.codomain);
}

bool is_homomorphism(const VarietyMorphism &f) {
    for (const auto &g : f.u_coords)
        for (const auto &[mono, c] : g.terms()) {
            long xdeg = 0;
            for (long e : mono.x_exps) xdeg += e;
            for (long e : mono.y_exps)
                if (e) return false;
            if (xdeg != 1) return false;
        }
    for (const auto &u : f.t_coords)
        if (!u.coeff.is_one()) return false;
    for (const auto &[b, blk] : f.brick_blocks)
        for (const auto &c : blk.translation)
            if (!combo_is_zero(c)) return false;
    return true;
}

bool is_homomorphism_symbolic(const VarietyMorphism &f) {
    const std::size_t n = f.domain.n, m = f.domain.m;
    RingSig dbl{2 * n, 2 * m};
    // a + b in doubled variables
    std::vector<LaurentPoly> x_sum;
    std::vector<Unit> y_sum;
    std::vector<LaurentPoly> x_a, x_b;
    std::vector<Unit> y_a, y_b;
    for (std::size_t i = 0; i < n; ++i) {
        x_sum.push_back(LaurentPoly::var_x(dbl, i) + LaurentPoly::var_x(dbl, n + i));
        x_a.push_back(LaurentPoly::var_x(dbl, i));
        x_b.push_back(LaurentPoly::var_x(dbl, n + i));
    }
    for (std::size_t j = 0; j < m; ++j) {
        Unit u = unit_one(2 * m);
        u.y_exps[j] = 1;
        u.y_exps[m + j] = 1;
        y_sum.push_back(u);
        y_a.push_back(unit_var(2 * m, j));
        y_b.push_back(unit_var(2 * m, m + j));
    }
    for (const auto &g : f.u_coords) {
        LaurentPoly lhs = lp_substitute(g, dbl, x_sum, y_sum);
        LaurentPoly rhs = lp_substitute(g, dbl, x_a, y_a) + lp_substitute(g, dbl, x_b, y_b);
        if (lhs != rhs) return false;
    }
    for (const auto &u : f.t_coords)
        if (!(u.coeff * u.coeff == u.coeff)) return false; // c^2 = c, c != 0 => c = 1
    for (const auto &[b, blk] : f.brick_blocks)
        for (const auto &c : blk.translation)
            if (!combo_is_zero(c)) return false;
    return true;
}

Homomorphism::Homomorphism(VarietyMorphism m) : m_(std::move(m)) {
    if (!is_homomorphism(m_)) throw Error("morphism is not a homomorphism");
}

VarietyMorphism compose(const VarietyMorphism &outer, const VarietyMorphism &inner) {
    if (inner.codomain != outer.domain) throw SignatureMismatch();
    VarietyMorphism r;
    r.domain = inner.domain;
    r.codomain = outer.codomain;
    RingSig sig = domain_sig(inner.domain);
    for (const auto &g : outer.u_coords)
        r.u_coords.push_back(lp_substitute(g, sig, inner.u_coords, inner.t_coords));
    for (const auto &u : outer.t_coords) {
        Unit composed{u.coeff, std::vector<long>(inner.domain.m, 0)};
        for (std::size_t j = 0; j < u.y_exps.size(); ++j)
            if (u.y_exps[j]) composed = composed * inner.t_coords[j].pow(u.y_exps[j]);
        r.t_coords.push_back(composed);
    }
    for (const auto &[b, blk] : outer.brick_blocks) {
        std::size_t width = inner.domain.brick_power(b);
        auto it = inner.brick_blocks.find(b);
        if (it == inner.brick_blocks.end()) {
            // brick absent in the middle group: contribution reduces to the
            // outer translation
            BrickBlock z = zero_block(blk.matrix.rows(), width);
            z.translation = blk.translation;
            r.brick_blocks[b] = std::move(z);
        } else {
            BrickBlock c;
            c.matrix = blk.matrix * it->second.matrix;
            c.translation =
                combos_add(matrix_apply(blk.matrix, it->second.translation), blk.translation);
            r.brick_blocks[b] = std::move(c);
        }
    }
    return r;
}

VarietyMorphism add(const VarietyMorphism &f, const VarietyMorphism &g) {
    if (f.domain != g.domain || f.codomain != g.codomain) throw SignatureMismatch();
    VarietyMorphism r;
    r.domain = f.domain;
    r.codomain = f.codomain;
    for (std::size_t i = 0; i < f.u_coords.size(); ++i)
        r.u_coords.push_back(f.u_coords[i] + g.u_coords[i]);
    for (std::size_t j = 0; j < f.t_coords.size(); ++j)
        r.t_coords.push_back(f.t_coords[j] * g.t_coords[j]);
    for (const auto &[b, blk] : f.brick_blocks) {
        const BrickBlock &other = g.brick_blocks.at(b);
        BrickBlock sum;
        sum.matrix = blk.matrix + other.matrix;
        sum.translation = combos_add(blk.translation, other.translation);
        r.brick_blocks[b] = std::move(sum);
    }
    return r;
}

VarietyMorphism negate(const VarietyMorphism &f) {
    VarietyMorphism r;
    r.domain = f.domain;
    r.codomain = f.codomain;
    for (const auto &g : f.u_coords) r.u_coords.push_back(-g);
    for (const auto &u : f.t_coords) r.t_coords.push_back(u.inverse());
    for (const auto &[b, blk] : f.brick_blocks) {
        BrickBlock neg;
        neg.matrix = -blk.matrix;
        for (const auto &c : blk.translation) neg.translation.push_back(combo_negate(c));
        r.brick_blocks[b] = std::move(neg);
    }
    return r;
}

VarietyMorphism pairing(const VarietyMorphism &f, const VarietyMorphism &g) {
    if (f.domain != g.domain) throw SignatureMismatch();
    VarietyMorphism r;
    r.domain = f.domain;
    r.codomain = product(f.codomain, g.codomain);
    r.u_coords = f.u_coords;
    r.u_coords.insert(r.u_coords.end(), g.u_coords.begin(), g.u_coords.end());
    r.t_coords = f.t_coords;
    r.t_coords.insert(r.t_coords.end(), g.t_coords.begin(), g.t_coords.end());
    for (const auto &[b, k] : r.codomain.bricks) {
        std::size_t width = f.domain.brick_power(b);
        std::size_t k1 = f.codomain.brick_power(b);
        std::size_t k2 = g.codomain.brick_power(b);
        BrickBlock blk = zero_block(k, width);
        auto copy_rows = [&](const BrickBlock &src, std::size_t offset, std::size_t rows) {
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < width; ++j)
                    blk.matrix.at(offset + i, j) = src.matrix.at(i, j);
                blk.translation[offset + i] = src.translation[i];
            }
        };
        if (k1) copy_rows(f.brick_blocks.at(b), 0, k1);
        if (k2) copy_rows(g.brick_blocks.at(b), k1, k2);
        r.brick_blocks[b] = std::move(blk);
    }
    return r;
}

VarietyMorphism translation(const GroupPresentation &h, const GroupPoint &by) {
    if (by.u.size() != h.n || by.t.size() != h.m) throw SignatureMismatch();
    for (const Rat &v : by.t)
        if (v.is_zero()) throw ZeroTorusComponent();
    VarietyMorphism r;
    r.domain = h;
    r.codomain = h;
    RingSig sig = domain_sig(h);
    for (std::size_t i = 0; i < h.n; ++i)
        r.u_coords.push_back(LaurentPoly::var_x(sig, i) + LaurentPoly::constant(sig, by.u[i]));
    for (std::size_t j = 0; j < h.m; ++j) {
        Unit u = unit_var(h.m, j);
        u.coeff = by.t[j];
        r.t_coords.push_back(u);
    }
    for (const auto &[b, k] : h.bricks) {
        BrickBlock blk;
        blk.matrix = IntMatrix::identity(k);
        auto it = by.bricks.find(b);
        blk.translation = it != by.bricks.end() ? it->second : std::vector<PointCombo>(k);
        if (blk.translation.size() != k) throw SignatureMismatch();
        r.brick_blocks[b] = std::move(blk);
    }
    return r;
}

PointedNormalization pointed_normalize(const VarietyMorphism &f) {
    GroupPoint at0 = evaluate_at_identity(f);
    VarietyMorphism tau = translation(f.codomain, at0);
    VarietyMorphism tau_inv = translation(f.codomain, point_negate(at0));
    return PointedNormalization{tau, compose(tau_inv, f)};
}

Homomorphism identity_morphism(const GroupPresentation &g) {
    VarietyMorphism r;
    r.domain = g;
    r.codomain = g;
    RingSig sig = domain_sig(g);
    for (std::size_t i = 0; i < g.n; ++i) r.u_coords.push_back(LaurentPoly::var_x(sig, i));
    for (std::size_t j = 0; j < g.m; ++j) r.t_coords.push_back(unit_var(g.m, j));
    for (const auto &[b, k] : g.bricks) {
        BrickBlock blk = zero_block(k, k);
        blk.matrix = IntMatrix::identity(k);
        r.brick_blocks[b] = std::move(blk);
    }
    return Homomorphism(r);
}

Homomorphism zero_morphism(const GroupPresentation &g, const GroupPresentation &h) {
    VarietyMorphism r;
    r.domain = g;
    r.codomain = h;
    RingSig sig = domain_sig(g);
    for (std::size_t i = 0; i < h.n; ++i) r.u_coords.push_back(LaurentPoly::zero(sig));
    for (std::size_t j = 0; j < h.m; ++j) r.t_coords.push_back(unit_one(g.m));
    for (const auto &[b, k] : h.bricks)
        r.brick_blocks[b] = zero_block(k, g.brick_power(b));
    return Homomorphism(r);
}

Homomorphism addition_hom(const GroupPresentation &h) {
    GroupPresentation dom = product(h, h);
    VarietyMorphism r;
    r.domain = dom;
    r.codomain = h;
    RingSig sig = domain_sig(dom);
    for (std::size_t i = 0; i < h.n; ++i)
        r.u_coords.push_back(LaurentPoly::var_x(sig, i) + LaurentPoly::var_x(sig, h.n + i));
    for (std::size_t j = 0; j < h.m; ++j) {
        Unit u = unit_one(dom.m);
        u.y_exps[j] = 1;
        u.y_exps[h.m + j] = 1;
        r.t_coords.push_back(u);
    }
    for (const auto &[b, k] : h.bricks) {
        BrickBlock blk = zero_block(k, 2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            blk.matrix.at(i, i) = 1;
            blk.matrix.at(i, k + i) = 1;
        }
        r.brick_blocks[b] = std::move(blk);
    }
    return Homomorphism(r);
}

Homomorphism projection_hom(const GroupPresentation &g, const GroupPresentation &h, int factor) {
    GroupPresentation dom = product(g, h);
    const GroupPresentation &cod = factor == 1 ? g : h;
    VarietyMorphism r;
    r.domain = dom;
    r.codomain = cod;
    RingSig sig = domain_sig(dom);
    std::size_t xoff = factor == 1 ? 0 : g.n;
    std::size_t yoff = factor == 1 ? 0 : g.m;
    for (std::size_t i = 0; i < cod.n; ++i)
        r.u_coords.push_back(LaurentPoly::var_x(sig, xoff + i));
    for (std::size_t j = 0; j < cod.m; ++j)
        r.t_coords.push_back(unit_var(dom.m, yoff + j));
    for (const auto &[b, k] : cod.bricks) {
        std::size_t width = dom.brick_power(b);
        std::size_t boff = factor == 1 ? 0 : g.brick_power(b);
        BrickBlock blk = zero_block(k, width);
        for (std::size_t i = 0; i < k; ++i) blk.matrix.at(i, boff + i) = 1;
        r.brick_blocks[b] = std::move(blk);
    }
    return Homomorphism(r);
}

Homomorphism inclusion_hom(const GroupPresentation &g, const GroupPresentation &h, int factor) {
    GroupPresentation cod = product(g, h);
    const GroupPresentation &dom = factor == 1 ? g : h;
    VarietyMorphism r;
    r.domain = dom;
    r.codomain = cod;
    RingSig sig = domain_sig(dom);
    std::size_t xoff = factor == 1 ? 0 : g.n;
    std::size_t yoff = factor == 1 ? 0 : g.m;
    for (std::size_t i = 0; i < cod.n; ++i) {
        bool inside = i >= xoff && i < xoff + dom.n;
        r.u_coords.push_back(inside ? LaurentPoly::var_x(sig, i - xoff)
                                    : LaurentPoly::zero(sig));
    }
    for (std::size_t j = 0; j < cod.m; ++j) {
        bool inside = j >= yoff && j < yoff + dom.m;
        r.t_coords.push_back(inside ? unit_var(dom.m, j - yoff) : unit_one(dom.m));
    }
    for (const auto &[b, k] : cod.bricks) {
        std::size_t width = dom.brick_power(b);
        std::size_t boff = factor == 1 ? 0 : g.brick_power(b);
        BrickBlock blk = zero_block(k, width);
        for (std::size_t i = 0; i < width; ++i) blk.matrix.at(boff + i, i) = 1;
        r.brick_blocks[b] = std::move(blk);
    }
    return Homomorphism(r);
}

Homomorphism scalar_hom(const GroupPresentation &g, const Rat &c) {
    if (!c.is_integer() && (g.m > 0 || !g.bricks.empty()))
        throw Error("scalar map on torus or brick parts requires an integer");
    VarietyMorphism r;
    r.domain = g;
    r.codomain = g;
    RingSig sig = domain_sig(g);
    for (std::size_t i = 0; i < g.n; ++i)
        r.u_coords.push_back(LaurentPoly::var_x(sig, i) * c);
    long k = c.is_integer() ? static_cast<long>(c.num().get_si()) : 0;
    for (std::size_t j = 0; j < g.m; ++j) r.t_coords.push_back(unit_var(g.m, j).pow(k));
    for (const auto &[b, kb] : g.bricks) {
        BrickBlock blk = zero_block(kb, kb);
        for (std::size_t i = 0; i < kb; ++i) blk.matrix.at(i, i) = c.num();
        r.brick_blocks[b] = std::move(blk);
    }
    return Homomorphism(r);
}

Homomorphism hom_from_blocks(const GroupPresentation &g, const GroupPresentation &h,
                             const RatMatrix &unipotent, const IntMatrix &torus,
                             const std::map<BrickId, IntMatrix> &bricks) {
    if (unipotent.rows() != h.n || unipotent.cols() != g.n) throw ShapeMismatch();
    if (torus.rows() != h.m || torus.cols() != g.m) throw ShapeMismatch();
    VarietyMorphism r;
    r.domain = g;
    r.codomain = h;
    RingSig sig = domain_sig(g);
    for (std::size_t i = 0; i < h.n; ++i) {
        LaurentPoly f = LaurentPoly::zero(sig);
        for (std::size_t j = 0; j < g.n; ++j)
            f = f + LaurentPoly::var_x(sig, j) * unipotent.at(i, j);
        r.u_coords.push_back(f);
    }
    for (std::size_t i = 0; i < h.m; ++i) {
        Unit u = unit_one(g.m);
        for (std::size_t j = 0; j < g.m; ++j)
            u.y_exps[j] = static_cast<long>(torus.at(i, j).get_si());
        r.t_coords.push_back(u);
    }
    for (const auto &[b, k] : h.bricks) {
        std::size_t width = g.brick_power(b);
        BrickBlock blk = zero_block(k, width);
        auto it = bricks.find(b);
        if (it != bricks.end()) {
            if (it->second.rows() != k || it->second.cols() != width) throw ShapeMismatch();
            blk.matrix = it->second;
        }
        r.brick_blocks[b] = std::move(blk);
    }
    return Homomorphism(r);
}

IntMatrix torus_exponent_matrix(const VarietyMorphism &f) {
    IntMatrix r(f.codomain.m, f.domain.m);
    for (std::size_t i = 0; i < f.t_coords.size(); ++i)
        for (std::size_t j = 0; j < f.domain.m; ++j)
            r.at(i, j) = f.t_coords[i].y_exps[j];
    return r;
}

RatMatrix jacobian_at_identity(const VarietyMorphism &f) {
    RatMatrix j(f.codomain.n, f.domain.n);
    std::vector<Rat> x0(f.domain.n, Rat(0));
    std::vector<Rat> y1(f.domain.m, Rat(1));
    for (std::size_t r = 0; r < f.codomain.n; ++r)
        for (std::size_t c = 0; c < f.domain.n; ++c)
            j.at(r, c) = lp_evaluate(lp_partial(f.u_coords[r], c), x0, y1);
    return j;
}

std::string combo_to_string(const PointCombo &c) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[sym, k] : c) {
        BigInt a = k;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out << a.get_str() << "*";
        out << sym;
    }
    return out.str();
}

std::string point_to_string(const GroupPoint &p) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    auto sep = [&]() {
        if (!first) out << ", ";
        first = false;
    };
    for (std::size_t i = 0; i < p.u.size(); ++i) {
        sep();
        out << "x" << (i + 1) << "=" << p.u[i].str();
    }
    for (std::size_t j = 0; j < p.t.size(); ++j) {
        sep();
        out << "y" << (j + 1) << "=" << p.t[j].str();
    }
    for (const auto &[b, combos] : p.bricks)
        for (std::size_t i = 0; i < combos.size(); ++i) {
            sep();
            out << b << "[" << (i + 1) << "]=" << combo_to_string(combos[i]);
        }
    out << ")";
    return out.str();
}

} // namespace cag
