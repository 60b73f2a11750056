#ifndef CAG_RAT_HPP
#define CAG_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cag {

using BigInt = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Exact rational number. Always reduced, denominator >= 1, zero is 0/1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long num) : v_(num) {}
    Rat(const BigInt &num) : v_(num) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    Rat(const BigInt &num, const BigInt &den) : v_(num, den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    const BigInt &num() const { return v_.get_num(); }
    const BigInt &den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat &o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat &o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat &o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat &o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
    Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
    Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }

    Rat inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rat(mpq_class(1 / v_));
    }

    /// Integer power, negative exponents invert.
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        Rat base = e < 0 ? inverse() : *this;
        unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
        mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
        return Rat(r);
    }

    bool operator==(const Rat &o) const { return v_ == o.v_; }
    bool operator!=(const Rat &o) const { return v_ != o.v_; }
    bool operator<(const Rat &o) const { return v_ < o.v_; }

    std::string str() const { return v_.get_str(); }

    /// Parses "p", "-p" or "p/q"; throws Error on malformed input.
    static Rat parse(const std::string &s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
        if (v.get_den() == 0) throw DivisionByZero();
        v.canonicalize();
        return Rat(v);
    }

private:
    explicit Rat(const mpq_class &v) : v_(v) {}
    mpq_class v_;
};

} // namespace cag

#endif
