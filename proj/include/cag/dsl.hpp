#ifndef CAG_DSL_HPP
#define CAG_DSL_HPP

#include <string>
#include <vector>

#include "cag/morphisms.hpp"

namespace cag {

struct Span {
    int line = 0;
    int col = 0;
};

struct Diagnostic {
    Span span;
    std::string message;
};

struct GroupDecl {
    std::string name;
    GroupPresentation value;
    bool operator==(const GroupDecl &o) const {
        return name == o.name && value == o.value;
    }
};

struct PointDecl {
    std::string name;
    BrickId brick;
    bool operator==(const PointDecl &o) const = default;
};

struct MorphismDecl {
    std::string name;
    VarietyMorphism value;
    bool operator==(const MorphismDecl &o) const {
        return name == o.name && value == o.value;
    }
};

/// Parsed and validated source file.
struct SourceFile {
    std::vector<GroupDecl> groups;
    std::vector<PointDecl> points;
    std::vector<MorphismDecl> morphisms;

    const GroupPresentation *find_group(const std::string &name) const;
    const VarietyMorphism *find_morphism(const std::string &name) const;

    bool operator==(const SourceFile &o) const = default;
};

struct ParseResult {
    SourceFile file;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return diagnostics.empty(); }
};

/// Parses a .cag source text. Recovers at declaration boundaries, so a
/// single pass reports every error it can reach.
ParseResult parse_source(const std::string &text);

/// Canonical text; parse(serialize(f)) == f on the abstract syntax.
std::string serialize_source(const SourceFile &file);
std::string serialize_group_decl(const GroupDecl &g);
std::string serialize_point_decl(const PointDecl &p);
std::string serialize_morphism_decl(const MorphismDecl &m);

/// One-line tuple form used in CLI text output, e.g. "(x1+x2^2, x2)".
std::string morphism_tuple_string(const VarietyMorphism &f);

/// Inline group expression such as "Ga^2*Gm"; throws Error on bad syntax.
GroupPresentation parse_group_expr(const std::string &text);

/// Laurent polynomial in variables x1..xn, y1..ym over the given signature.
LaurentPoly parse_poly(const std::string &text, RingSig sig);

std::string unit_to_string(const Unit &u, std::size_t m);

} // namespace cag

#endif
