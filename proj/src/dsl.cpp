#include "cag/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace cag {

const GroupPresentation *SourceFile::find_group(const std::string &name) const {
    for (const auto &g : groups)
        if (g.name == name) return &g.value;
    return nullptr;
}

const VarietyMorphism *SourceFile::find_morphism(const std::string &name) const {
    for (const auto &m : morphisms)
        if (m.name == name) return &m.value;
    return nullptr;
}

namespace {

struct Token {
    enum Kind { Ident, Int, Punct, End } kind = End;
    std::string text;
    Span span;
};

std::vector<Token> lex(const std::string &text, std::vector<Diagnostic> &diags) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') { ++line; col = 1; } else ++col;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') { bump(text[i]); ++i; }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { bump(c); ++i; continue; }
        Span sp{line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                word += text[i];
                bump(text[i]);
                ++i;
            }
            out.push_back({Token::Ident, word, sp});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                num += text[i];
                bump(text[i]);
                ++i;
            }
            out.push_back({Token::Int, num, sp});
            continue;
        }
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Token::Punct, "->", sp});
            bump(text[i]); bump(text[i + 1]);
            i += 2;
            continue;
        }
        static const std::string puncts = "=+-*^/(){}[];:,";
        if (puncts.find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c), sp});
            bump(c);
            ++i;
            continue;
        }
        diags.push_back({sp, std::string("unexpected character '") + c + "'"});
        bump(c);
        ++i;
    }
    out.push_back({Token::End, "", {line, col}});
    return out;
}

/// Thrown inside one declaration; the parser recovers at the next boundary.
struct LocalError {
    Diagnostic diag;
};

class Parser {
public:
    explicit Parser(const std::string &text) { tokens_ = lex(text, result_.diagnostics); }

    ParseResult run() {
        while (!at_end()) {
            try {
                if (accept_keyword("group")) parse_group_decl();
                else if (accept_keyword("point")) parse_point_decl();
                else if (accept_keyword("morphism")) parse_morphism_decl();
                else {
                    fail("expected 'group', 'point' or 'morphism'");
                }
            } catch (const LocalError &e) {
                result_.diagnostics.push_back(e.diag);
                synchronize();
            }
        }
        return std::move(result_);
    }

    // entry points reused by parse_group_expr / parse_poly
    GroupPresentation group_expr(bool allow_new_bricks) {
        GroupPresentation g;
        for (;;) {
            group_factor(g, allow_new_bricks);
            if (!accept_punct("*")) break;
        }
        return g;
    }

    LaurentPoly poly_expr(RingSig sig) {
        LaurentPoly r = LaurentPoly::zero(sig);
        bool negate_first = false;
        if (accept_punct("-")) negate_first = true;
        else accept_punct("+");
        LaurentPoly t = poly_term(sig);
        r = negate_first ? r - t : r + t;
        for (;;) {
            if (accept_punct("+")) r = r + poly_term(sig);
            else if (accept_punct("-")) r = r - poly_term(sig);
            else break;
        }
        return r;
    }

    bool at_end() const { return peek().kind == Token::End; }
    Span here() const { return peek().span; }

private:
    const Token &peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token &advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string &msg) { throw LocalError{{peek().span, msg}}; }

    bool accept_keyword(const std::string &kw) {
        if (peek().kind == Token::Ident && peek().text == kw) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_punct(const std::string &p) {
        if (peek().kind == Token::Punct && peek().text == p) {
            advance();
            return true;
        }
        return false;
    }
    void expect_punct(const std::string &p) {
        if (!accept_punct(p)) fail("expected '" + p + "'");
    }
    std::string expect_ident(const std::string &what) {
        if (peek().kind != Token::Ident) fail("expected " + what);
        return advance().text;
    }
    long expect_int() {
        if (peek().kind != Token::Int) fail("expected an integer");
        return std::stol(advance().text);
    }

    void synchronize() {
        while (!at_end()) {
            if (peek().kind == Token::Ident &&
                (peek().text == "group" || peek().text == "point" || peek().text == "morphism"))
                return;
            advance();
        }
    }

    // --- declarations -----------------------------------------------------

    void declare_name(const std::string &name, Span sp) {
        if (!names_.insert(name).second)
            throw LocalError{{sp, "duplicate declaration of '" + name + "'"}};
    }

    void parse_group_decl() {
        Span sp = here();
        std::string name = expect_ident("a group name");
        declare_name(name, sp);
        expect_punct("=");
        GroupPresentation g = group_expr(true);
        expect_punct(";");
        result_.file.groups.push_back({name, g});
    }

    void parse_point_decl() {
        Span sp = here();
        std::string name = expect_ident("a point name");
        declare_name(name, sp);
        expect_punct(":");
        Span bsp = here();
        std::string brick = expect_ident("a brick name");
        if (!bricks_.count(brick))
            throw LocalError{{bsp, "undeclared brick '" + brick + "'"}};
        expect_punct(";");
        points_[name] = brick;
        result_.file.points.push_back({name, brick});
    }

    void group_factor(GroupPresentation &g, bool allow_new_bricks) {
        if (peek().kind == Token::Int) {
            if (advance().text != "1") fail("only '1' (trivial group) may appear as a factor");
            return;
        }
        Span sp = here();
        std::string name = expect_ident("a group factor");
        long k = 1;
        if (accept_punct("^")) k = expect_int();
        if (k < 0) throw LocalError{{sp, "negative group power"}};
        if (name == "Ga") {
            g.n += static_cast<std::size_t>(k);
        } else if (name == "Gm") {
            g.m += static_cast<std::size_t>(k);
        } else if (const GroupPresentation *named = result_.file.find_group(name)) {
            for (long i = 0; i < k; ++i) g = product(g, *named);
        } else {
            if (!allow_new_bricks && !bricks_.count(name))
                throw LocalError{{sp, "undeclared identifier '" + name + "'"}};
            bricks_.insert(name);
            if (k > 0) g.bricks[name] += static_cast<std::size_t>(k);
        }
    }

    void parse_morphism_decl() {
        Span sp = here();
        std::string name = expect_ident("a morphism name");
        declare_name(name, sp);
        expect_punct(":");
        GroupPresentation dom = group_expr(true);
        expect_punct("->");
        GroupPresentation cod = group_expr(true);
        expect_punct("{");

        RawMorphism raw;
        raw.domain = dom;
        raw.codomain = cod;
        RingSig sig{dom.n, dom.m};
        raw.u_coords.assign(cod.n, LaurentPoly::zero(sig));
        raw.t_coords.assign(cod.m, LaurentPoly::constant(sig, Rat(1)));
        for (const auto &[b, k] : cod.bricks)
            raw.brick_blocks[b] =
                BrickBlock{IntMatrix(k, dom.brick_power(b)), std::vector<PointCombo>(k)};
        std::set<std::string> assigned;

        while (!accept_punct("}")) {
            if (at_end()) fail("unterminated morphism body");
            parse_coord_stmt(raw, sig, assigned);
        }

        try {
            VarietyMorphism f = validate(raw);
            result_.file.morphisms.push_back({name, f});
        } catch (const Error &e) {
            throw LocalError{{sp, e.what()}};
        }
    }

    static bool split_var(const std::string &s, char prefix, std::size_t &index) {
        if (s.size() < 2 || s[0] != prefix) return false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        index = std::stoul(s.substr(1));
        return index >= 1;
    }

    void parse_coord_stmt(RawMorphism &raw, RingSig sig, std::set<std::string> &assigned) {
        Span sp = here();
        std::string lhs = expect_ident("a coordinate");
        std::size_t idx;
        if (split_var(lhs, 'x', idx)) {
            if (idx > raw.codomain.n) throw LocalError{{sp, "no codomain coordinate " + lhs}};
            mark_assigned(lhs, sp, assigned);
            expect_punct("=");
            raw.u_coords[idx - 1] = poly_expr(sig);
            expect_punct(";");
            return;
        }
        if (split_var(lhs, 'y', idx)) {
            if (idx > raw.codomain.m) throw LocalError{{sp, "no codomain coordinate " + lhs}};
            mark_assigned(lhs, sp, assigned);
            expect_punct("=");
            Span psp = here();
            LaurentPoly g = poly_expr(sig);
            if (!lp_unit_decompose(g))
                throw LocalError{{psp, "torus coordinate " + lhs +
                                           " is not a unit: " + lp_to_string(g)}};
            raw.t_coords[idx - 1] = g;
            expect_punct(";");
            return;
        }
        // brick row: B[r] = <combo>;
        auto it = raw.codomain.bricks.find(lhs);
        if (it == raw.codomain.bricks.end())
            throw LocalError{{sp, "'" + lhs + "' is not a codomain coordinate"}};
        expect_punct("[");
        long row = expect_int();
        expect_punct("]");
        if (row < 1 || static_cast<std::size_t>(row) > it->second)
            throw LocalError{{sp, "brick row out of range"}};
        mark_assigned(lhs + "[" + std::to_string(row) + "]", sp, assigned);
        expect_punct("=");
        parse_brick_rhs(raw.brick_blocks[lhs], lhs, static_cast<std::size_t>(row - 1),
                        raw.domain.brick_power(lhs));
        expect_punct(";");
    }

    void mark_assigned(const std::string &key, Span sp, std::set<std::string> &assigned) {
        if (!assigned.insert(key).second)
            throw LocalError{{sp, "coordinate " + key + " assigned twice"}};
    }

    void parse_brick_rhs(BrickBlock &blk, const BrickId &brick, std::size_t row,
                         std::size_t width) {
        bool any = false;
        long sign = 1;
        if (accept_punct("-")) sign = -1;
        for (;;) {
            parse_brick_term(blk, brick, row, width, sign);
            any = true;
            if (accept_punct("+")) sign = 1;
            else if (accept_punct("-")) sign = -1;
            else break;
        }
        (void)any;
    }

    void parse_brick_term(BrickBlock &blk, const BrickId &brick, std::size_t row,
                          std::size_t width, long sign) {
        BigInt coeff = sign;
        if (peek().kind == Token::Int) {
            coeff = BigInt(advance().text) * sign;
            if (!accept_punct("*")) {
                if (peek().kind == Token::Ident) fail("expected '*' after coefficient");
                if (coeff != 0) fail("bare integer in brick row must be 0");
                return; // explicit zero term
            }
        }
        Span sp = here();
        std::string name = expect_ident("a brick coordinate or point symbol");
        if (name == brick) {
            expect_punct("[");
            long col = expect_int();
            expect_punct("]");
            if (col < 1 || static_cast<std::size_t>(col) > width)
                throw LocalError{{sp, "brick column out of range"}};
            blk.matrix.at(row, col - 1) += coeff;
            return;
        }
        auto pit = points_.find(name);
        if (pit == points_.end())
            throw LocalError{{sp, "undeclared identifier '" + name + "'"}};
        if (pit->second != brick)
            throw LocalError{{sp, "point '" + name + "' lives on brick " + pit->second +
                                      ", not " + brick}};
        blk.translation[row][name] += coeff;
        if (blk.translation[row][name] == 0) blk.translation[row].erase(name);
    }

    // --- polynomial expressions -------------------------------------------

    LaurentPoly poly_term(RingSig sig) {
        LaurentPoly r = poly_factor(sig);
        while (accept_punct("*")) r = r * poly_factor(sig);
        return r;
    }

    LaurentPoly poly_factor(RingSig sig) {
        LaurentPoly base = poly_atom(sig);
        if (accept_punct("^")) {
            long neg = accept_punct("-") ? -1 : 1;
            Span sp = here();
            long e = expect_int() * neg;
            if (e < 0 && !lp_unit_decompose(base))
                throw LocalError{{sp, "negative power of a non-unit"}};
            base = base.pow(e);
        }
        return base;
    }

    LaurentPoly poly_atom(RingSig sig) {
        if (accept_punct("(")) {
            LaurentPoly r = poly_expr(sig);
            expect_punct(")");
            return r;
        }
        if (peek().kind == Token::Int) {
            BigInt num(advance().text);
            if (accept_punct("/")) {
                Span sp = here();
                BigInt den(std::to_string(expect_int()));
                if (den == 0) throw LocalError{{sp, "zero denominator"}};
                return LaurentPoly::constant(sig, Rat(num, den));
            }
            return LaurentPoly::constant(sig, Rat(num));
        }
        Span sp = here();
        std::string name = expect_ident("a variable or number");
        std::size_t idx;
        if (split_var(name, 'x', idx)) {
            if (idx > sig.n) throw LocalError{{sp, "no variable " + name + " in this ring"}};
            return LaurentPoly::var_x(sig, idx - 1);
        }
        if (split_var(name, 'y', idx)) {
            if (idx > sig.m) throw LocalError{{sp, "no variable " + name + " in this ring"}};
            return LaurentPoly::var_y(sig, idx - 1);
        }
        throw LocalError{{sp, "unknown variable '" + name + "'"}};
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    ParseResult result_;
    std::set<std::string> names_;
    std::set<std::string> bricks_;
    std::map<std::string, BrickId> points_;
};

} // namespace

ParseResult parse_source(const std::string &text) { return Parser(text).run(); }

GroupPresentation parse_group_expr(const std::string &text) {
    Parser p(text);
    GroupPresentation g = p.group_expr(true);
    if (!p.at_end()) throw Error("trailing input in group expression");
    return g;
}

LaurentPoly parse_poly(const std::string &text, RingSig sig) {
    Parser p(text);
    try {
        LaurentPoly f = p.poly_expr(sig);
        if (!p.at_end()) throw Error("trailing input in polynomial");
        return f;
    } catch (const LocalError &e) {
        throw Error(e.diag.message);
    }
}

std::string unit_to_string(const Unit &u, std::size_t m) {
    return lp_to_string(LaurentPoly::from_unit(RingSig{0, m}, u));
}

std::string serialize_group_decl(const GroupDecl &g) {
    return "group " + g.name + " = " + group_to_string(g.value) + ";\n";
}

std::string serialize_point_decl(const PointDecl &p) {
    return "point " + p.name + " : " + p.brick + ";\n";
}

namespace {

std::string brick_row_string(const BrickId &b, const BrickBlock &blk, std::size_t row) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < blk.matrix.cols(); ++j) {
        const BigInt &c = blk.matrix.at(row, j);
        if (c == 0) continue;
        BigInt a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out << a.get_str() << "*";
        out << b << "[" << (j + 1) << "]";
    }
    for (const auto &[sym, c] : blk.translation[row]) {
        BigInt a = c;
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
    if (first) out << "0";
    return out.str();
}

} // namespace

std::string serialize_morphism_decl(const MorphismDecl &m) {
    const VarietyMorphism &f = m.value;
    std::ostringstream out;
    out << "morphism " << m.name << " : " << group_to_string(f.domain) << " -> "
        << group_to_string(f.codomain) << " {\n";
    for (std::size_t i = 0; i < f.u_coords.size(); ++i)
        out << "  x" << (i + 1) << " = " << lp_to_string(f.u_coords[i]) << ";\n";
    for (std::size_t j = 0; j < f.t_coords.size(); ++j)
        out << "  y" << (j + 1) << " = " << unit_to_string(f.t_coords[j], f.domain.m)
            << ";\n";
    for (const auto &[b, blk] : f.brick_blocks)
        for (std::size_t r = 0; r < blk.matrix.rows(); ++r)
            out << "  " << b << "[" << (r + 1) << "] = " << brick_row_string(b, blk, r)
                << ";\n";
    out << "}\n";
    return out.str();
}

std::string serialize_source(const SourceFile &file) {
    std::ostringstream out;
    for (const auto &g : file.groups) out << serialize_group_decl(g);
    for (const auto &p : file.points) out << serialize_point_decl(p);
    for (const auto &m : file.morphisms) out << serialize_morphism_decl(m);
    return out.str();
}

std::string morphism_tuple_string(const VarietyMorphism &f) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    auto sep = [&]() {
        if (!first) out << ", ";
        first = false;
    };
    for (const auto &g : f.u_coords) {
        sep();
        out << lp_to_string(g);
    }
    for (const auto &u : f.t_coords) {
        sep();
        out << unit_to_string(u, f.domain.m);
    }
    for (const auto &[b, blk] : f.brick_blocks)
        for (std::size_t r = 0; r < blk.matrix.rows(); ++r) {
            sep();
            out << b << "[" << (r + 1) << "]=" << brick_row_string(b, blk, r);
        }
    out << ")";
    return out.str();
}

} // namespace cag
