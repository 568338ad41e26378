#ifndef SYMDES_NUMTHEORY_HPP
#define SYMDES_NUMTHEORY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symdes/ratmatrix.hpp"

namespace symdes {

using Int = long long;

// Trial-division factorization of |n|, n != 0; (prime, exponent) pairs in
// ascending prime order. The sign is not recorded.
std::vector<std::pair<Int, int>> factorize(Int n);

// Largest square divisor removed: m = square_free_part(m) * s^2 with the
// result square-free and carrying the sign of m. m must be nonzero.
Int square_free_part(Int m);

bool is_perfect_square(Int n);

// Euler's criterion: a^((p-1)/2) mod p mapped to {-1, 0, +1}. p must be an
// odd prime (unsupported_error otherwise). a may be any integer.
int legendre_symbol(Int a, Int p);

// Decision by factorization (every odd prime dividing the square-free part
// must be 1 mod 4); witness (a, b) with a <= b and a smallest, found by
// ascending search. m >= 0.
std::optional<std::pair<Int, Int>> sum_two_squares(Int m);

// True iff n is a sum of three integer squares, decided through the
// square-free part: expressible iff square_free_part(n) mod 8 lies in
// {1, 2, 3, 5, 6}. n >= 0 (0 counts as expressible).
bool three_squares_predicate(Int n);

// Four-square decomposition b1 <= b2 <= b3 <= b4 of n >= 0, choosing the
// representation that maximizes b4, then b3, then b2 (greedy descent with
// backtracking). Always exists.
std::array<Int, 4> four_squares(Int n);

// (y1, y2) = (b1*x1 - b2*x2, b2*x1 + b1*x2); then
// y1^2 + y2^2 = (b1^2 + b2^2) * (x1^2 + x2^2).
std::pair<Rat, Rat> two_square_identity(const Rat& b1, const Rat& b2, const Rat& x1,
                                        const Rat& x2);

// 4x4 matrix B with B * B^T = (b1^2+b2^2+b3^2+b4^2) * I_4, so that the row
// vector y = x * B realizes the four-square product identity.
RatMatrix four_square_identity_matrix(const Rat& b1, const Rat& b2, const Rat& b3,
                                      const Rat& b4);

// One reduction step applied while normalizing a ternary form. Replayed in
// reverse, these map a witness of the normalized form back to the original:
//   squarefree  coeff[index] /= factor^2; witness: other two components *= factor
//   divide      all coefficients /= factor; witness unchanged
//   transfer    coeff[from1] /= factor, coeff[from2] /= factor,
//               coeff[index] *= factor; witness: component index *= factor
struct NormalizationStep {
    enum class Kind { squarefree, divide, transfer };
    Kind kind;
    int index;
    int from1 = -1;
    int from2 = -1;
    Int factor;
};

// Diagonal ternary form A*x^2 + B*y^2 + C*z^2 with nonzero coefficients.
struct TernaryForm {
    Int a, b, c;
    std::vector<NormalizationStep> trail;  // reductions applied to reach this form
};

struct TernaryWitness {
    Int x, y, z;
};

// Reduces (A, B, C) to an equisolvable form with square-free, pairwise
// coprime coefficients, recording the trail. Coefficients must be nonzero.
TernaryForm ternary_normalize(Int a, Int b, Int c);

// Maps a witness of the normalized form back through the trail to a witness
// of the original form.
TernaryWitness replay_witness(const TernaryForm& form, TernaryWitness w);

// Evidence for one local condition at an odd prime dividing a normalized
// coefficient: symbol = legendre_symbol(base, p) where base is minus the
// product of the other two coefficients.
struct PrimeCondition {
    Int p;
    Int base;
    int symbol;
    int coeff_index;  // 0, 1, 2: which coefficient p divides
};

// Full decision data for solvability of A*x^2 + B*y^2 + C*z^2 = 0 in
// rationals, not all zero: signs must be mixed and every local condition
// must hold. Local solvability at 2 is not checked (the per-odd-prime
// conditions are the implemented criterion).
struct TernaryDecision {
    bool solvable;
    bool mixed_signs;
    TernaryForm normalized;
    std::vector<PrimeCondition> conditions;
};

TernaryDecision ternary_decide(Int a, Int b, Int c);
bool ternary_solvable(Int a, Int b, Int c);

// Exhaustive search over 0 <= x, y, z <= bound (not all zero) in
// lexicographic order; components of a zero are nonnegative without loss.
std::optional<TernaryWitness> ternary_witness_search(Int a, Int b, Int c, Int bound);

}  // namespace symdes

#endif
