#pragma once

#include <string>
#include <vector>

#include "symdes/errors.hpp"
#include "symdes/numtheory.hpp"
#include "symdes/ratmatrix.hpp"
#include "symdes/verdict.hpp"

namespace symdes {

// Symbolic execution of the elimination procedure that turns the identity
//
//   f f^t = alpha (x_1^2 + ... + x_w^2) + beta z^2,   f = x C,  z = sum x_i
//
// for a w x (w+d) matrix C with C C^t = alpha I + beta J into a single
// two-term Diophantine relation with an exact rational witness.
//
// The route depends on (w mod 4, d), numbered 1..8:
//
//   case 1  w=0 mod 4, d=1   bracket the x side in fours   ->  f^2 = beta z^2
//   case 2  w=0 mod 4, d=2   bracket the x side in fours   ->  f1^2 + f2^2 = beta z^2
//   case 3  w=2 mod 4, d=1   bracket the x side in twos    ->  f^2 = beta z^2
//   case 4  w=2 mod 4, d=2   bracket the x side in twos    ->  f1^2 + f2^2 = beta z^2
//   case 5  w=1 mod 4, d=1   bracket the f side in twos    ->  alpha y^2 = beta z^2
//   case 6  w=1 mod 4, d=2   bracket the f side in twos    ->  alpha y^2 + y'^2 = beta z^2
//   case 7  w=3 mod 4, d=1   bracket the f side in fours   ->  alpha y^2 = beta z^2
//   case 8  w=3 mod 4, d=2   bracket the f side in fours   ->  alpha y^2 + y'^2 = beta z^2
//
// Two-square brackets need alpha = a^2 + b^2 (cases 3-6); four-square
// brackets always exist. On the x side the kept variables are the f's and
// the bracketed forms are the y's; on the f side the f's are rotated into
// y coordinates first (blocks of the scaled-orthogonal bracket matrix), the
// kept variables are the y's, and the bracketed forms are the x's.
//
// Each of the w substitution steps equates one bracketed form E_i with one
// kept variable K_i up to a sign eps_i; the d left-out kept variables
// survive as the free tail of the final relation. Demanding all w rows at
// once pins the witness to the kernel of a square sign pencil, so the
// procedure searches a fixed schedule of exact certificates: every
// left-out choice on the canonical bracket, single-block replacements of
// the bracket matrix by unit-factor and rational-rotation images (which
// keep V V^t = alpha I), and finally per-row sign patterns, exhaustive for
// small w and seeded pseudorandom otherwise, filtered by modular
// determinants before any exact kernel work. The first kernel vector with
// a nonzero tail becomes the witness; the substitution triangle is rebuilt
// around it (dividing by eps_i - b at each pivot, or pinning through the
// witness when eps_i = b), so a forward replay reproduces every row and
// the final relation exactly. beta = 0 collapses the relation to a sum of
// squares equal to zero; the zero witness is then the whole story and is
// reported with degenerate_beta set.

enum class Bracketing { two_square, four_square };

struct EliminationStep {
    int sign = 1;             // E_i = sign * K_i after the step
    std::vector<Rat> coeffs;  // K_i = sum over j > i of coeffs[j] * K_j (position-indexed)
};

struct EliminationTrace {
    int case_id = 0;  // 1..8 per the table above
    Bracketing bracketing = Bracketing::four_square;
    Int w = 0;
    int d = 1;
    Rat alpha, beta;
    char kept_symbol = 'f';   // 'f' for cases 1-4, 'y' for cases 5-8
    char eform_symbol = 'y';  // 'y' for cases 1-4, 'x' for cases 5-8

    // eform_coeffs(i, j): coefficient of kept variable j (original
    // numbering) in bracketed form E_i. zform[j]: coefficient of kept
    // variable j in z. Both refer to pre-substitution forms, so a replay
    // can evaluate them directly at the witness.
    RatMatrix eform_coeffs;
    std::vector<Rat> zform;

    std::vector<Int> labels;  // position -> original kept-variable index
    std::vector<EliminationStep> steps;  // one per position 0..w-1

    std::vector<Rat> free_values;   // values given to positions w..w+d-1
    std::vector<Rat> kept_values;   // all w+d kept values, by position
    std::vector<Rat> eform_values;  // E_i at the witness, i = 0..w-1
    Rat z_value;

    std::string final_relation;    // e.g. "f33^2 = 9*z^2"
    bool degenerate_beta = false;  // beta = 0: the all-zero witness is the relation
};

// Thrown when the whole candidate schedule yields no nonzero witness.
// Carries the canonical-bracket trace with the zero witness for
// inspection.
class degenerate_elimination_error : public error {
  public:
    degenerate_elimination_error(const std::string& what, EliminationTrace trace);
    const EliminationTrace& trace() const { return trace_; }

  private:
    EliminationTrace trace_;
};

// Runs the procedure on C with C C^t = alpha I + beta J and cols = w + d.
// Throws inconsistent_input_error when the Gram identity fails,
// invalid_shape_error on a dimension mismatch, unsupported_error when a
// two-square bracket is required but alpha is not a sum of two squares (or
// alpha/beta are not nonnegative integers with alpha > 0), and
// degenerate_elimination_error when no scheduled witness works.
EliminationTrace eliminate(const RatMatrix& c, const Rat& alpha, const Rat& beta, int d);

// Recomputes the witness from the recorded triangle and free values, then
// checks E_i^2 = K_i^2 for every row and the final relation exactly.
Verdict replay(const EliminationTrace& trace);

// Key-value text rendering with the full substitution triangle, one line
// per quantity, suitable for checking the witness by hand.
std::string render_trace(const EliminationTrace& trace);

}  // namespace symdes
