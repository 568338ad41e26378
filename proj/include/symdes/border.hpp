#ifndef SYMDES_BORDER_HPP
#define SYMDES_BORDER_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symdes/designs.hpp"
#include "symdes/ratmatrix.hpp"
#include "symdes/verdict.hpp"

namespace symdes {

// Scalar description of a bordered matrix over a (v, k, lambda) design:
//
//   C = [ A    A12  A13 ]   A12[i][j] = a[j]   (v x p, constant columns)
//       [ A21  A22  A23 ]   A13 = 0            (v x z)
//                           A21[i][j] = c[i]   (s x v, constant rows)
//
// with p = a.size(), z = zero_cols, p + z = s + d, d in {1, 2}. The
// assembled C is w x (w+d) with w = v + s, and the target Gram identity is
// C*C^T = alpha*I + beta*J with alpha = k - lambda, beta = lambda + l.
struct BorderSpec {
    DesignParams params;
    Int l = 0;        // beta - lambda; equals sum a_j^2 when E1 holds
    int d = 1;        // column excess of the assembled matrix
    Int s = 1;        // border rows
    std::vector<Rat> a;
    Int zero_cols = 0;
    std::vector<Rat> c;
    RatMatrix a22;    // s x p
    RatMatrix a23;    // s x zero_cols

    Int w() const { return params.v + s; }
    Int alpha() const { return params.k - params.lambda; }
    Int beta() const { return params.lambda + l; }
};

// Structural sanity: d in {1,2}, s >= 1, l >= 1, p + z = s + d, vector and
// block dimensions agree. Throws inconsistent_input_error with the reason.
void validate_shape(const BorderSpec& spec);

// A named BorderSpec with its origin and the verdict it is recorded to
// demonstrate ("obstruction" or "consistent"; empty when unknown).
struct Certificate {
    std::string name;
    std::string provenance;
    std::string verdict;
    BorderSpec spec;
};

// Builds the w x (w+d) bordered matrix from a v x v 0/1 design matrix and
// the spec. Throws inconsistent_input_error on any shape mismatch.
RatMatrix assemble(const RatMatrix& design, const BorderSpec& spec);

// The five scalar identities that reduce the Gram condition on the border
// rows and columns, given that A is a (v, k, lambda) incidence matrix:
//   E1  lambda + sum_j a_j^2 == beta                     (design x design, off-diagonal)
//   E2  k + sum_j a_j^2 == alpha + beta                  (design x design, diagonal)
//   E3  k*c_i + sum_j a_j*A22[i][j] == beta              (design x border)
//   E4  v*c_i^2 + |A22 row i|^2 + |A23 row i|^2 == alpha + beta
//   E5  v*c_i*c_j + <A22 rows i,j> + <A23 rows i,j> == beta   (i < j)
// plus: no assembled border column is constant (a_j-column constant iff all
// A22[.][j] equal a_j; zero-column constant iff its A23 column is zero).
Verdict scalar_verify(const BorderSpec& spec);

// Certificate text format (line oriented, '#' comments):
//   params <v> <k> <lambda>
//   l <int>
//   d <int>
//   s <int>
//   a <rat> ...
//   zerocols <int>
//   c <rat> ...
//   A22
//   <s rows of p rationals>
//   A23
//   <s rows of zerocols rationals>     (section omitted when zerocols = 0)
BorderSpec read_border_spec(std::istream& in);
BorderSpec read_border_spec_file(const std::string& path);
void write_border_spec(std::ostream& out, const BorderSpec& spec);

// Searches for a border over the given parameters with sum of squares l,
// following the two-column pattern: a = (a, b) from sum_two_squares(l),
// zero_cols = s + d - 2. Candidate c_i range over reduced fractions with
// |numerator| <= bound and denominator <= bound, scanned by denominator then
// numerator; each A22 row is solved through the linear identity E3 and the
// circle condition E4 (rational root iff the discriminant is a rational
// square). Returns the first spec that passes scalar_verify, or nullopt.
// Throws error when l admits no two-square decomposition.
std::optional<BorderSpec> construct_search(const DesignParams& params, Int l, int d, Int s,
                                           Int bound);

// Built-in certificates: the obstruction borders for orders 10, 12, 15, 18,
// 20, 24, 26, 28 and for designs (49,16,5), (154,18,2), (115,19,3), plus
// demonstration borders over existing designs.
const std::vector<Certificate>& catalog();

// nullptr when no entry has that name.
const Certificate* catalog_entry(const std::string& name);

}  // namespace symdes

#endif
