#ifndef CAG_LAURENT_HPP
#define CAG_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cag/rat.hpp"

namespace cag {

struct SignatureMismatch : Error {
    SignatureMismatch() : Error("ring signature mismatch") {}
};
struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("variable index out of range") {}
};
struct ZeroInTorusCoordinate : Error {
    ZeroInTorusCoordinate() : Error("torus coordinate evaluated at zero") {}
};

/// Signature (n, m) of the ring Q[x1..xn, y1^±..ym^±].
struct RingSig {
    std::size_t n = 0; // polynomial variables x
    std::size_t m = 0; // Laurent variables y
    bool operator==(const RingSig &o) const = default;
};

/// x-exponents are non-negative, y-exponents may be negative.
struct Monomial {
    std::vector<long> x_exps;
    std::vector<long> y_exps;

    bool operator==(const Monomial &o) const = default;
    // lexicographic on (x_exps, y_exps); term order of the whole module
    bool operator<(const Monomial &o) const {
        if (x_exps != o.x_exps) return x_exps < o.x_exps;
        return y_exps < o.y_exps;
    }
    bool is_constant() const {
        for (long e : x_exps) if (e) return false;
        for (long e : y_exps) if (e) return false;
        return true;
    }
};

/// Invertible element c * y^alpha of the Laurent ring, c != 0.
struct Unit {
    Rat coeff = Rat(1);
    std::vector<long> y_exps;

    bool operator==(const Unit &o) const = default;
    Unit inverse() const {
        Unit u;
        u.coeff = coeff.inverse();
        u.y_exps.reserve(y_exps.size());
        for (long e : y_exps) u.y_exps.push_back(-e);
        return u;
    }
    Unit pow(long k) const {
        Unit u;
        u.coeff = coeff.pow(k);
        u.y_exps.reserve(y_exps.size());
        for (long e : y_exps) u.y_exps.push_back(e * k);
        return u;
    }
    Unit operator*(const Unit &o) const {
        if (y_exps.size() != o.y_exps.size()) throw SignatureMismatch();
        Unit u;
        u.coeff = coeff * o.coeff;
        u.y_exps.resize(y_exps.size());
        for (std::size_t i = 0; i < y_exps.size(); ++i) u.y_exps[i] = y_exps[i] + o.y_exps[i];
        return u;
    }
};

/// Element of Q[x1..xn, y1^±..ym^±]; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(RingSig sig) : sig_(sig) {}

    static LaurentPoly zero(RingSig sig) { return LaurentPoly(sig); }
    static LaurentPoly constant(RingSig sig, const Rat &c);
    static LaurentPoly var_x(RingSig sig, std::size_t i); // 0-based
    static LaurentPoly var_y(RingSig sig, std::size_t j); // 0-based
    static LaurentPoly monomial(RingSig sig, const Rat &c, Monomial mono);
    static LaurentPoly from_unit(RingSig sig, const Unit &u);

    const RingSig &sig() const { return sig_; }
    const std::map<Monomial, Rat> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial &mono, const Rat &c);

    LaurentPoly operator+(const LaurentPoly &o) const;
    LaurentPoly operator-(const LaurentPoly &o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly &o) const;
    LaurentPoly operator*(const Rat &c) const;
    LaurentPoly pow(long k) const; // k < 0 only when the poly is a unit

    bool operator==(const LaurentPoly &o) const {
        return sig_ == o.sig_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

private:
    RingSig sig_;
    std::map<Monomial, Rat> terms_;
};

/// Ring map x_i -> x_images[i], y_j -> y_images[j] applied to f. The images
/// live over target_sig; negative y-powers substitute the unit's inverse.
LaurentPoly lp_substitute(const LaurentPoly &f, RingSig target_sig,
                          const std::vector<LaurentPoly> &x_images,
                          const std::vector<Unit> &y_images);

/// Formal partial derivative with respect to x_i (0-based).
LaurentPoly lp_partial(const LaurentPoly &f, std::size_t i);

/// Exact evaluation; every y value must be nonzero.
Rat lp_evaluate(const LaurentPoly &f, const std::vector<Rat> &x_vals,
                const std::vector<Rat> &y_vals);

/// Returns the unit (c, alpha) iff f is a single x-free term, else nullopt.
std::optional<Unit> lp_unit_decompose(const LaurentPoly &f);

/// Canonical text form: terms in descending term order, e.g. "3/2*x1^2*y1^-1+x2".
std::string lp_to_string(const LaurentPoly &f);

} // namespace cag

#endif
