#include "symdes/rational.hpp"

#include <cctype>
#include <ostream>

namespace symdes {

mpq_class Rat::make_int(long long n) {
    // mpq_class has no long long constructor; route through mpz_class text-free.
    mpz_class z;
    if (n >= 0) {
        z = static_cast<unsigned long>(n);
    } else {
        // Avoid overflow negating LLONG_MIN.
        z = static_cast<unsigned long>(~static_cast<unsigned long long>(n) + 1ull);
        z = -z;
    }
    return mpq_class(z);
}

Rat::Rat(long long n, long long d) {
    if (d == 0) throw error("rational with zero denominator");
    v_ = make_int(n) / make_int(d);  // mpq division canonicalizes
}

Rat::Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat rat_from_string(const std::string& token) {
    if (token.empty()) throw error("empty rational token");
    std::size_t i = 0;
    bool neg = false;
    if (token[i] == '-') {
        neg = true;
        ++i;
    }
    std::size_t num_begin = i;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
    if (i == num_begin) throw error("expected digits in rational token '" + token + "'");
    mpz_class num(token.substr(num_begin, i - num_begin), 10);
    if (neg) num = -num;
    if (i == token.size()) return Rat(num, mpz_class(1));
    if (token[i] != '/')
        throw error("unexpected character '" + std::string(1, token[i]) +
                    "' in rational token '" + token + "'");
    ++i;
    std::size_t den_begin = i;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
    if (i == den_begin || i != token.size())
        throw error("malformed denominator in rational token '" + token + "'");
    mpz_class den(token.substr(den_begin), 10);
    if (den == 0) throw error("denominator must be positive in '" + token + "'");
    return Rat(num, den);
}

bool rat_is_square(const Rat& r) {
    if (r.sign() < 0) return false;
    return mpz_perfect_square_p(r.num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(r.den().get_mpz_t()) != 0;
}

Rat rat_sqrt(const Rat& r) {
    if (!rat_is_square(r)) throw error("rational is not a perfect square: " + r.str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
    return Rat(n, d);
}

}  // namespace symdes
