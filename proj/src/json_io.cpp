#include "cag/json_io.hpp"

#include "cag/dsl.hpp"

namespace cag {

namespace {

Json combo_to_json(const PointCombo &c) {
    Json out = Json::array();
    for (const auto &[sym, k] : c) out.push_back({sym, k.get_str()});
    return out;
}

PointCombo combo_from_json(const Json &j) {
    PointCombo c;
    for (const auto &pair : j) {
        BigInt k(pair.at(1).get<std::string>());
        if (k != 0) c[pair.at(0).get<std::string>()] = k;
    }
    return c;
}

Json int_matrix_to_json(const IntMatrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix int_matrix_from_json(const Json &j) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    IntMatrix m(rows, cols);
    const Json &entries = j.at("entries");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = BigInt(entries.at(i).at(c).get<std::string>());
    return m;
}

} // namespace

Json group_to_json(const GroupPresentation &g) {
    Json bricks = Json::object();
    for (const auto &[b, k] : g.bricks) bricks[b] = k;
    return Json{{"n", g.n}, {"m", g.m}, {"bricks", std::move(bricks)}};
}

GroupPresentation group_from_json(const Json &j) {
    GroupPresentation g;
    g.n = j.at("n").get<std::size_t>();
    g.m = j.at("m").get<std::size_t>();
    for (const auto &[b, k] : j.at("bricks").items())
        g.bricks[b] = k.get<std::size_t>();
    return g;
}

Json morphism_to_json(const VarietyMorphism &f) {
    Json u = Json::array();
    for (const auto &g : f.u_coords) u.push_back(lp_to_string(g));
    Json t = Json::array();
    for (const auto &unit : f.t_coords) {
        Json exps = Json::array();
        for (long e : unit.y_exps) exps.push_back(e);
        t.push_back({{"coeff", unit.coeff.str()}, {"y_exps", std::move(exps)}});
    }
    Json bricks = Json::object();
    for (const auto &[b, blk] : f.brick_blocks) {
        Json trans = Json::array();
        for (const auto &c : blk.translation) trans.push_back(combo_to_json(c));
        bricks[b] = {{"matrix", int_matrix_to_json(blk.matrix)},
                     {"translation", std::move(trans)}};
    }
    return Json{{"domain", group_to_json(f.domain)},
                {"codomain", group_to_json(f.codomain)},
                {"u_coords", std::move(u)},
                {"t_coords", std::move(t)},
                {"brick_blocks", std::move(bricks)}};
}

VarietyMorphism morphism_from_json(const Json &j) {
    RawMorphism raw;
    raw.domain = group_from_json(j.at("domain"));
    raw.codomain = group_from_json(j.at("codomain"));
    RingSig sig{raw.domain.n, raw.domain.m};
    for (const auto &s : j.at("u_coords"))
        raw.u_coords.push_back(parse_poly(s.get<std::string>(), sig));
    for (const auto &tj : j.at("t_coords")) {
        Unit u;
        u.coeff = Rat::parse(tj.at("coeff").get<std::string>());
        for (const auto &e : tj.at("y_exps")) u.y_exps.push_back(e.get<long>());
        raw.t_coords.push_back(LaurentPoly::from_unit(sig, u));
    }
    for (const auto &[b, bj] : j.at("brick_blocks").items()) {
        BrickBlock blk;
        blk.matrix = int_matrix_from_json(bj.at("matrix"));
        for (const auto &cj : bj.at("translation"))
            blk.translation.push_back(combo_from_json(cj));
        raw.brick_blocks[b] = std::move(blk);
    }
    return validate(raw);
}

Json decomposition_to_json(const Decomposition &d) {
    return Json{{"tau", morphism_to_json(d.tau)},
                {"psi", morphism_to_json(d.psi)},
                {"chi", morphism_to_json(d.chi)}};
}

Json verdict_to_json(const RigidityVerdict &v) {
    Json j{{"rigid", v.rigid}, {"reason", rigidity_reason_name(v.reason)}};
    if (v.counterexample) j["counterexample"] = morphism_to_json(*v.counterexample);
    return j;
}

Json point_to_json(const GroupPoint &p) {
    Json u = Json::array();
    for (const auto &v : p.u) u.push_back(v.str());
    Json t = Json::array();
    for (const auto &v : p.t) t.push_back(v.str());
    Json bricks = Json::object();
    for (const auto &[b, combos] : p.bricks) {
        Json arr = Json::array();
        for (const auto &c : combos) arr.push_back(combo_to_json(c));
        bricks[b] = std::move(arr);
    }
    return Json{{"u", std::move(u)}, {"t", std::move(t)}, {"bricks", std::move(bricks)}};
}

} // namespace cag
