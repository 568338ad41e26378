#ifndef SYMDES_RATIONAL_HPP
#define SYMDES_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "symdes/errors.hpp"

namespace symdes {

// Exact rational number. Always stored in canonical form: numerator and
// denominator coprime, denominator >= 1, zero represented as 0/1. Operators
// return plain values, so the type composes cleanly with Eigen expressions.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(make_int(n)) {}
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long long n, long long d);
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpz_class& n) : v_(n) {}

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p" when integral, "p/q" otherwise; always reduced, q > 0.
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }
    friend Rat operator+(const Rat& a) { return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend Rat abs(const Rat& a) { Rat r; r.v_ = ::abs(a.v_); return r; }

private:
    static mpq_class make_int(long long n);
    mpq_class v_;  // invariant: canonical
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Parses "p" or "p/q" with q > 0; input need not be reduced. Throws
// symdes::error with a reason on malformed tokens (callers add positions).
Rat rat_from_string(const std::string& token);

// True iff r is the square of a rational (nonnegative, numerator and
// denominator both perfect squares once reduced).
bool rat_is_square(const Rat& r);

// Exact nonnegative square root; requires rat_is_square(r).
Rat rat_sqrt(const Rat& r);

inline Rat square(const Rat& r) { return r * r; }

}  // namespace symdes

#endif
