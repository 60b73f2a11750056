#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cag/dsl.hpp"
#include "cag/json_io.hpp"
#include "cag/random_gen.hpp"

namespace {

using namespace cag;

struct Options {
    std::string input;
    std::string format = "text";
    std::uint64_t seed = 1;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_json(const std::string &text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

/// Loads a .cag source or a single-morphism JSON document (bound to "f").
SourceFile load_input(const Options &opt, int &exit_code) {
    if (opt.input.empty()) throw Error("--input FILE is required for this verb");
    std::string text = read_file(opt.input);
    if (looks_like_json(text)) {
        SourceFile file;
        file.morphisms.push_back({"f", morphism_from_json(Json::parse(text))});
        return file;
    }
    ParseResult pr = parse_source(text);
    if (!pr.ok()) {
        for (const auto &d : pr.diagnostics)
            std::cerr << opt.input << ":" << d.span.line << ":" << d.span.col << ": "
                      << d.message << "\n";
        exit_code = 1;
    }
    return pr.file;
}

const VarietyMorphism &need_morphism(const SourceFile &file, const std::string &name) {
    const VarietyMorphism *m = file.find_morphism(name);
    if (!m) throw Error("no morphism named '" + name + "' in the input");
    return *m;
}

GroupPresentation resolve_group(const Options &opt, const std::string &arg) {
    if (!opt.input.empty()) {
        int rc = 0;
        SourceFile file = load_input(opt, rc);
        if (const GroupPresentation *g = file.find_group(arg)) return *g;
    }
    return parse_group_expr(arg);
}

void print_morphism(const VarietyMorphism &f, const Options &opt) {
    if (opt.format == "json")
        std::cout << morphism_to_json(f).dump(2) << "\n";
    else
        std::cout << serialize_morphism_decl({"result", f});
}

PointCombo parse_combo_text(const std::string &text) {
    PointCombo c;
    std::size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (text.substr(i) == "0") return c;
    while (i < text.size()) {
        long sign = 1;
        if (text[i] == '+') { ++i; }
        else if (text[i] == '-') { sign = -1; ++i; }
        skip();
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        if (i < text.size() && text[i] == '*') ++i;
        std::string sym;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            sym += text[i++];
        if (sym.empty()) throw Error("malformed point expression: " + text);
        BigInt k = digits.empty() ? BigInt(1) : BigInt(digits);
        k *= sign;
        c[sym] += k;
        if (c[sym] == 0) c.erase(sym);
        skip();
    }
    return c;
}

GroupPoint parse_point_arg(const std::string &text, const GroupPresentation &g) {
    GroupPoint p = identity_point(g);
    std::vector<bool> u_set(g.n, false), t_set(g.m, false);
    std::string normalized = text;
    for (char &c : normalized)
        if (c == ';') c = ',';
    std::stringstream ss(normalized);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw Error("expected name=value in --at: " + item);
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t");
            std::size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        name = trim(name);
        value = trim(value);
        if (name.size() >= 2 && (name[0] == 'x' || name[0] == 'y') &&
            name.find('[') == std::string::npos) {
            std::size_t idx = std::stoul(name.substr(1));
            if (name[0] == 'x') {
                if (idx < 1 || idx > g.n) throw Error("no coordinate " + name);
                p.u[idx - 1] = Rat::parse(value);
                u_set[idx - 1] = true;
            } else {
                if (idx < 1 || idx > g.m) throw Error("no coordinate " + name);
                p.t[idx - 1] = Rat::parse(value);
                t_set[idx - 1] = true;
            }
            continue;
        }
        std::size_t lb = name.find('[');
        std::size_t rb = name.find(']');
        if (lb == std::string::npos || rb == std::string::npos)
            throw Error("bad coordinate name in --at: " + name);
        std::string brick = name.substr(0, lb);
        std::size_t idx = std::stoul(name.substr(lb + 1, rb - lb - 1));
        auto it = p.bricks.find(brick);
        if (it == p.bricks.end() || idx < 1 || idx > it->second.size())
            throw Error("no coordinate " + name);
        it->second[idx - 1] = parse_combo_text(value);
    }
    return p;
}

int run_selftest(const Options &opt) {
    Gen gen(opt.seed);
    int failures = 0;
    auto report = [&](const char *name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    bool retract_law = true;
    for (int i = 0; i < 25 && retract_law; ++i) {
        GroupPresentation g = gen.presentation(), h = gen.presentation();
        Homomorphism hom = gen.homomorphism(g, h);
        retract_law = retract(hom) == hom;
    }
    report("retraction fixes homomorphisms", retract_law);

    bool additive = true;
    for (int i = 0; i < 25 && additive; ++i) {
        GroupPresentation g = gen.presentation(), h = gen.presentation();
        VarietyMorphism f1 = gen.pointed_morphism(g, h);
        VarietyMorphism f2 = gen.pointed_morphism(g, h);
        additive = retract(add(f1, f2)) == Homomorphism(add(retract(f1), retract(f2)));
    }
    report("retraction is additive", additive);

    bool functorial = true;
    for (int i = 0; i < 25 && functorial; ++i) {
        GroupPresentation g = gen.presentation(), h = gen.presentation(), k = gen.presentation();
        VarietyMorphism inner = gen.pointed_morphism(g, h);
        VarietyMorphism outer = gen.pointed_morphism(h, k);
        functorial = retract(compose(outer, inner)).morphism() ==
                     compose(retract(outer), retract(inner));
    }
    report("retraction is functorial", functorial);

    bool roundtrip = true;
    for (int i = 0; i < 25 && roundtrip; ++i) {
        GroupPresentation g = gen.presentation(0, 3, 2, 2);
        GroupPresentation h = gen.presentation();
        VarietyMorphism f = gen.morphism(g, h);
        roundtrip = recompose(decompose(f)) == f;
    }
    report("decomposition recomposes exactly", roundtrip);

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact symbolic engine for split commutative algebraic groups"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--input", opt.input, "input .cag or .json file");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for selftest");

    std::string arg_a, arg_b, arg_group, arg_at;

    auto *validate_cmd = app.add_subcommand("validate", "parse and validate an input file");
    auto *compose_cmd = app.add_subcommand("compose", "compose two morphisms A ∘ B");
    compose_cmd->add_option("A", arg_a)->required();
    compose_cmd->add_option("B", arg_b)->required();
    auto *add_cmd = app.add_subcommand("add", "pointwise sum of two morphisms");
    add_cmd->add_option("A", arg_a)->required();
    add_cmd->add_option("B", arg_b)->required();
    auto *retract_cmd = app.add_subcommand("retract", "homomorphism retraction of a morphism");
    retract_cmd->add_option("F", arg_a)->required();
    auto *decompose_cmd =
        app.add_subcommand("decompose", "translation/homomorphism/residue decomposition");
    decompose_cmd->add_option("F", arg_a)->required();
    auto *checkiso_cmd = app.add_subcommand(
        "check-iso", "variety-isomorphism test (one morphism) or mutual-inverse check (two)");
    checkiso_cmd->add_option("F", arg_a)->required();
    checkiso_cmd->add_option("G", arg_b);
    auto *classify_cmd = app.add_subcommand("classify", "rigidity classification of a group");
    classify_cmd->add_option("GROUP", arg_group)->required();
    auto *counter_cmd =
        app.add_subcommand("counterexample", "non-homomorphic pointed variety automorphism");
    counter_cmd->add_option("GROUP", arg_group)->required();
    auto *eval_cmd = app.add_subcommand("eval", "evaluate a morphism at a point");
    eval_cmd->add_option("F", arg_a)->required();
    eval_cmd->add_option("--at", arg_at, "point, e.g. \"x1=1/2, y1=3\"")->required();
    auto *selftest_cmd = app.add_subcommand("selftest", "randomized property check");

    // allow --input/--format/--seed to appear after the verb
    for (auto *sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (selftest_cmd->parsed()) return run_selftest(opt);

        if (classify_cmd->parsed()) {
            RigidityVerdict v = classify_rigidity(resolve_group(opt, arg_group));
            if (opt.format == "json") {
                std::cout << verdict_to_json(v).dump(2) << "\n";
            } else if (v.rigid) {
                std::cout << "rigid (" << rigidity_reason_name(v.reason) << ")\n";
            } else {
                std::cout << "not rigid; counterexample: "
                          << morphism_tuple_string(*v.counterexample) << "\n";
            }
            return 0;
        }
        if (counter_cmd->parsed()) {
            VarietyMorphism c = synthesize_counterexample(resolve_group(opt, arg_group));
            print_morphism(c, opt);
            return 0;
        }

        int exit_code = 0;
        SourceFile file = load_input(opt, exit_code);
        if (validate_cmd->parsed()) {
            if (exit_code == 0) std::cout << "ok\n";
            return exit_code;
        }
        if (exit_code != 0) return exit_code;

        if (compose_cmd->parsed()) {
            print_morphism(compose(need_morphism(file, arg_a), need_morphism(file, arg_b)), opt);
        } else if (add_cmd->parsed()) {
            print_morphism(add(need_morphism(file, arg_a), need_morphism(file, arg_b)), opt);
        } else if (retract_cmd->parsed()) {
            print_morphism(retract(need_morphism(file, arg_a)), opt);
        } else if (decompose_cmd->parsed()) {
            Decomposition d = decompose(need_morphism(file, arg_a));
            if (opt.format == "json") {
                std::cout << decomposition_to_json(d).dump(2) << "\n";
            } else {
                std::cout << "tau: " << morphism_tuple_string(d.tau) << "\n"
                          << "psi: " << morphism_tuple_string(d.psi) << "\n"
                          << "chi: " << morphism_tuple_string(d.chi) << "\n";
            }
        } else if (checkiso_cmd->parsed()) {
            if (!arg_b.empty()) {
                bool ok = check_mutual_inverse(need_morphism(file, arg_a),
                                               need_morphism(file, arg_b));
                if (opt.format == "json")
                    std::cout << Json{{"mutually_inverse", ok}}.dump(2) << "\n";
                else
                    std::cout << (ok ? "mutually inverse\n" : "not mutually inverse\n");
            } else {
                IsoResult r = is_variety_iso(need_morphism(file, arg_a));
                if (opt.format == "json") {
                    Json j{{"is_iso", r.is_iso}};
                    if (r.inverse) j["inverse"] = morphism_to_json(*r.inverse);
                    std::cout << j.dump(2) << "\n";
                } else if (r.is_iso) {
                    std::cout << "iso; inverse: " << morphism_tuple_string(*r.inverse) << "\n";
                } else {
                    std::cout << "not an isomorphism\n";
                }
            }
        } else if (eval_cmd->parsed()) {
            const VarietyMorphism &f = need_morphism(file, arg_a);
            GroupPoint at = parse_point_arg(arg_at, f.domain);
            GroupPoint value;
            for (const auto &g : f.u_coords) value.u.push_back(lp_evaluate(g, at.u, at.t));
            for (const auto &u : f.t_coords) {
                Rat v = u.coeff;
                for (std::size_t j = 0; j < u.y_exps.size(); ++j)
                    if (u.y_exps[j]) v *= at.t[j].pow(u.y_exps[j]);
                value.t.push_back(v);
            }
            for (const auto &[b, blk] : f.brick_blocks) {
                std::vector<PointCombo> out(blk.matrix.rows());
                auto it = at.bricks.find(b);
                for (std::size_t r = 0; r < blk.matrix.rows(); ++r) {
                    PointCombo acc = blk.translation[r];
                    if (it != at.bricks.end())
                        for (std::size_t c = 0; c < blk.matrix.cols(); ++c)
                            acc = combo_add(acc, combo_scale(blk.matrix.at(r, c), it->second[c]));
                    out[r] = std::move(acc);
                }
                value.bricks[b] = std::move(out);
            }
            if (opt.format == "json")
                std::cout << point_to_json(value).dump(2) << "\n";
            else
                std::cout << point_to_string(value) << "\n";
        }
        return 0;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
