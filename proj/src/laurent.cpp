#include "cag/laurent.hpp"

#include <sstream>

namespace cag {

LaurentPoly LaurentPoly::constant(RingSig sig, const Rat &c) {
    LaurentPoly f(sig);
    Monomial one{std::vector<long>(sig.n, 0), std::vector<long>(sig.m, 0)};
    f.add_term(one, c);
    return f;
}

LaurentPoly LaurentPoly::var_x(RingSig sig, std::size_t i) {
    if (i >= sig.n) throw IndexOutOfRange();
    Monomial mono{std::vector<long>(sig.n, 0), std::vector<long>(sig.m, 0)};
    mono.x_exps[i] = 1;
    return monomial(sig, Rat(1), mono);
}

LaurentPoly LaurentPoly::var_y(RingSig sig, std::size_t j) {
    if (j >= sig.m) throw IndexOutOfRange();
    Monomial mono{std::vector<long>(sig.n, 0), std::vector<long>(sig.m, 0)};
    mono.y_exps[j] = 1;
    return monomial(sig, Rat(1), mono);
}

LaurentPoly LaurentPoly::monomial(RingSig sig, const Rat &c, Monomial mono) {
    if (mono.x_exps.size() != sig.n || mono.y_exps.size() != sig.m)
        throw SignatureMismatch();
    for (long e : mono.x_exps)
        if (e < 0) throw Error("negative exponent on a polynomial variable");
    LaurentPoly f(sig);
    f.add_term(mono, c);
    return f;
}

LaurentPoly LaurentPoly::from_unit(RingSig sig, const Unit &u) {
    if (u.y_exps.size() != sig.m) throw SignatureMismatch();
    Monomial mono{std::vector<long>(sig.n, 0), u.y_exps};
    return monomial(sig, u.coeff, mono);
}

void LaurentPoly::add_term(const Monomial &mono, const Rat &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
    if (sig_ != o.sig_) throw SignatureMismatch();
    LaurentPoly r = *this;
    for (const auto &[mono, c] : o.terms_) r.add_term(mono, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(sig_);
    for (const auto &[mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
    if (sig_ != o.sig_) throw SignatureMismatch();
    LaurentPoly r(sig_);
    for (const auto &[ma, ca] : terms_)
        for (const auto &[mb, cb] : o.terms_) {
            Monomial mono;
            mono.x_exps.resize(sig_.n);
            mono.y_exps.resize(sig_.m);
            for (std::size_t i = 0; i < sig_.n; ++i) mono.x_exps[i] = ma.x_exps[i] + mb.x_exps[i];
            for (std::size_t j = 0; j < sig_.m; ++j) mono.y_exps[j] = ma.y_exps[j] + mb.y_exps[j];
            r.add_term(mono, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat &c) const {
    LaurentPoly r(sig_);
    if (c.is_zero()) return r;
    for (const auto &[mono, coef] : terms_) r.terms_.emplace(mono, coef * c);
    return r;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) {
        auto u = lp_unit_decompose(*this);
        if (!u) throw Error("negative power of a non-unit");
        return from_unit(sig_, u->pow(k));
    }
    LaurentPoly r = constant(sig_, Rat(1));
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

LaurentPoly lp_substitute(const LaurentPoly &f, RingSig target_sig,
                          const std::vector<LaurentPoly> &x_images,
                          const std::vector<Unit> &y_images) {
    if (x_images.size() != f.sig().n || y_images.size() != f.sig().m)
        throw SignatureMismatch();
    for (const auto &g : x_images)
        if (g.sig() != target_sig) throw SignatureMismatch();
    for (const auto &u : y_images)
        if (u.y_exps.size() != target_sig.m) throw SignatureMismatch();

    LaurentPoly result(target_sig);
    for (const auto &[mono, c] : f.terms()) {
        // fold the y-part into one unit, then expand the x-part
        Unit uy{Rat(1), std::vector<long>(target_sig.m, 0)};
        for (std::size_t j = 0; j < f.sig().m; ++j)
            if (mono.y_exps[j]) uy = uy * y_images[j].pow(mono.y_exps[j]);
        LaurentPoly term = LaurentPoly::from_unit(target_sig, uy) * c;
        for (std::size_t i = 0; i < f.sig().n; ++i)
            if (mono.x_exps[i]) term = term * x_images[i].pow(mono.x_exps[i]);
        result = result + term;
    }
    return result;
}

LaurentPoly lp_partial(const LaurentPoly &f, std::size_t i) {
    if (i >= f.sig().n) throw IndexOutOfRange();
    LaurentPoly r(f.sig());
    for (const auto &[mono, c] : f.terms()) {
        long e = mono.x_exps[i];
        if (e == 0) continue;
        Monomial d = mono;
        d.x_exps[i] = e - 1;
        r.add_term(d, c * Rat(e));
    }
    return r;
}

Rat lp_evaluate(const LaurentPoly &f, const std::vector<Rat> &x_vals,
                const std::vector<Rat> &y_vals) {
    if (x_vals.size() != f.sig().n || y_vals.size() != f.sig().m)
        throw SignatureMismatch();
    for (const Rat &y : y_vals)
        if (y.is_zero()) throw ZeroInTorusCoordinate();
    Rat total(0);
    for (const auto &[mono, c] : f.terms()) {
        Rat v = c;
        for (std::size_t i = 0; i < x_vals.size(); ++i)
            if (mono.x_exps[i]) v *= x_vals[i].pow(mono.x_exps[i]);
        for (std::size_t j = 0; j < y_vals.size(); ++j)
            if (mono.y_exps[j]) v *= y_vals[j].pow(mono.y_exps[j]);
        total += v;
    }
    return total;
}

std::optional<Unit> lp_unit_decompose(const LaurentPoly &f) {
    if (f.terms().size() != 1) return std::nullopt;
    const auto &[mono, c] = *f.terms().begin();
    for (long e : mono.x_exps)
        if (e) return std::nullopt;
    return Unit{c, mono.y_exps};
}

std::string lp_to_string(const LaurentPoly &f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending term order: highest monomial printed first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto &[mono, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { out << "-"; a = -a; }
        } else {
            out << (a.sign() < 0 ? "-" : "+");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (!a.is_one() || mono.is_constant()) {
            out << a.str();
            printed_coeff = true;
        }
        bool need_star = printed_coeff;
        auto emit = [&](const char *base, std::size_t idx, long e) {
            if (e == 0) return;
            if (need_star) out << "*";
            out << base << (idx + 1);
            if (e != 1) out << "^" << e;
            need_star = true;
        };
        for (std::size_t i = 0; i < mono.x_exps.size(); ++i) emit("x", i, mono.x_exps[i]);
        for (std::size_t j = 0; j < mono.y_exps.size(); ++j) emit("y", j, mono.y_exps[j]);
    }
    return out.str();
}

} // namespace cag
