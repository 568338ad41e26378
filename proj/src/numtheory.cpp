#include "symdes/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "symdes/errors.hpp"

namespace symdes {
namespace {

Int isqrt_ll(Int n) {
    if (n < 0) throw error("isqrt of negative value");
    if (n == 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime_ll(Int p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Int powmod(Int base, Int exp, Int mod) {
    __int128 result = 1;
    __int128 b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<Int>(result);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n == 0) throw error("factorize: argument must be nonzero");
    Int m = n < 0 ? -n : n;
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

Int square_free_part(Int m) {
    if (m == 0) throw error("square_free_part: argument must be nonzero");
    Int result = m < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(m))
        if (e % 2) result *= p;
    return result;
}

bool is_perfect_square(Int n) {
    if (n < 0) return false;
    Int r = isqrt_ll(n);
    return r * r == n;
}

int legendre_symbol(Int a, Int p) {
    if (p < 3 || !is_prime_ll(p))
        throw unsupported_error("legendre_symbol: modulus " + std::to_string(p) +
                                " is not an odd prime");
    Int r = ((a % p) + p) % p;
    if (r == 0) return 0;
    Int e = powmod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

std::optional<std::pair<Int, Int>> sum_two_squares(Int m) {
    if (m < 0) throw error("sum_two_squares: argument must be nonnegative");
    if (m == 0) return std::make_pair(0LL, 0LL);
    for (const auto& [p, e] : factorize(square_free_part(m)))
        if (p != 2 && p % 4 == 3) return std::nullopt;
    for (Int a = 0; 2 * a * a <= m; ++a) {
        Int rest = m - a * a;
        Int b = isqrt_ll(rest);
        if (b * b == rest) return std::make_pair(a, b);
    }
    throw error("sum_two_squares: decision and search disagree for " + std::to_string(m));
}

bool three_squares_predicate(Int n) {
    if (n < 0) throw error("three_squares_predicate: argument must be nonnegative");
    if (n == 0) return true;
    Int m = square_free_part(n) % 8;
    return m == 1 || m == 2 || m == 3 || m == 5 || m == 6;
}

std::array<Int, 4> four_squares(Int n) {
    if (n < 0) throw error("four_squares: argument must be nonnegative");
    // Maximize b4, then b3, then b2; report in nondecreasing order.
    for (Int b4 = isqrt_ll(n); b4 >= 0; --b4) {
        Int r3 = n - b4 * b4;
        for (Int b3 = std::min(b4, isqrt_ll(r3)); b3 >= 0; --b3) {
            Int r2 = r3 - b3 * b3;
            for (Int b2 = std::min(b3, isqrt_ll(r2)); b2 >= 0; --b2) {
                Int r1 = r2 - b2 * b2;
                Int b1 = isqrt_ll(r1);
                if (b1 * b1 == r1 && b1 <= b2) return {b1, b2, b3, b4};
            }
        }
    }
    throw error("four_squares: no decomposition found for " + std::to_string(n));
}

std::pair<Rat, Rat> two_square_identity(const Rat& b1, const Rat& b2, const Rat& x1,
                                        const Rat& x2) {
    return {b1 * x1 - b2 * x2, b2 * x1 + b1 * x2};
}

RatMatrix four_square_identity_matrix(const Rat& b1, const Rat& b2, const Rat& b3,
                                      const Rat& b4) {
    RatMatrix m(4, 4);
    m << b1, b2, b3, b4,
        -b2, b1, b4, -b3,
        -b3, -b4, b1, b2,
        -b4, b3, -b2, b1;
    return m;
}

TernaryForm ternary_normalize(Int a, Int b, Int c) {
    if (a == 0 || b == 0 || c == 0)
        throw inconsistent_input_error("ternary_normalize: coefficients must be nonzero");
    TernaryForm form{a, b, c, {}};
    Int* coeff[3] = {&form.a, &form.b, &form.c};
    bool changed = true;
    while (changed) {
        changed = false;
        // Replace each coefficient by its square-free part.
        for (int i = 0; i < 3; ++i) {
            Int s = 1;
            for (const auto& [p, e] : factorize(*coeff[i]))
                for (int t = 0; t < e / 2; ++t) s *= p;
            if (s > 1) {
                *coeff[i] /= s * s;
                form.trail.push_back({NormalizationStep::Kind::squarefree, i, -1, -1, s});
                changed = true;
            }
        }
        // Remove any factor common to all three.
        Int g = std::gcd(std::gcd(std::abs(form.a), std::abs(form.b)), std::abs(form.c));
        if (g > 1) {
            for (int i = 0; i < 3; ++i) *coeff[i] /= g;
            form.trail.push_back({NormalizationStep::Kind::divide, -1, -1, -1, g});
            changed = true;
        }
        // Move a prime shared by exactly two coefficients into the third:
        // (A, B, C) with p | A, p | B becomes (A/p, B/p, p*C).
        for (int i = 0; i < 3 && !changed; ++i) {
            for (int j = i + 1; j < 3 && !changed; ++j) {
                Int gij = std::gcd(std::abs(*coeff[i]), std::abs(*coeff[j]));
                if (gij <= 1) continue;
                Int p = factorize(gij).front().first;
                int k = 3 - i - j;
                *coeff[i] /= p;
                *coeff[j] /= p;
                *coeff[k] *= p;
                form.trail.push_back({NormalizationStep::Kind::transfer, k, i, j, p});
                changed = true;
            }
        }
    }
    return form;
}

TernaryWitness replay_witness(const TernaryForm& form, TernaryWitness w) {
    Int* comp[3] = {&w.x, &w.y, &w.z};
    for (auto it = form.trail.rbegin(); it != form.trail.rend(); ++it) {
        switch (it->kind) {
            case NormalizationStep::Kind::squarefree:
                for (int i = 0; i < 3; ++i)
                    if (i != it->index) *comp[i] *= it->factor;
                break;
            case NormalizationStep::Kind::divide:
                break;
            case NormalizationStep::Kind::transfer:
                *comp[it->index] *= it->factor;
                break;
        }
    }
    return w;
}

TernaryDecision ternary_decide(Int a, Int b, Int c) {
    TernaryDecision d{};
    d.normalized = ternary_normalize(a, b, c);
    const Int coeff[3] = {d.normalized.a, d.normalized.b, d.normalized.c};
    int pos = 0, neg = 0;
    for (Int v : coeff) (v > 0 ? pos : neg)++;
    d.mixed_signs = pos > 0 && neg > 0;
    d.solvable = d.mixed_signs;
    for (int i = 0; i < 3; ++i) {
        for (const auto& [p, e] : factorize(coeff[i])) {
            if (p == 2) continue;  // no condition imposed at 2
            Int base = -(coeff[(i + 1) % 3] * coeff[(i + 2) % 3]);
            int symbol = legendre_symbol(base, p);
            d.conditions.push_back({p, base, symbol, i});
            if (symbol != 1) d.solvable = false;
        }
    }
    return d;
}

bool ternary_solvable(Int a, Int b, Int c) { return ternary_decide(a, b, c).solvable; }

std::optional<TernaryWitness> ternary_witness_search(Int a, Int b, Int c, Int bound) {
    if (bound < 0) throw error("ternary_witness_search: bound must be nonnegative");
    for (Int x = 0; x <= bound; ++x) {
        const __int128 ax = static_cast<__int128>(a) * x * x;
        for (Int y = 0; y <= bound; ++y) {
            const __int128 axby = ax + static_cast<__int128>(b) * y * y;
            for (Int z = 0; z <= bound; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (axby + static_cast<__int128>(c) * z * z == 0)
                    return TernaryWitness{x, y, z};
            }
        }
    }
    return std::nullopt;
}

}  // namespace symdes
