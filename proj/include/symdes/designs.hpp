#ifndef SYMDES_DESIGNS_HPP
#define SYMDES_DESIGNS_HPP

#include "symdes/numtheory.hpp"
#include "symdes/ratmatrix.hpp"
#include "symdes/verdict.hpp"

namespace symdes {

// Parameters of a symmetric 2-(v, k, lambda) design.
struct DesignParams {
    Int v, k, lambda;
    Int order() const { return k - lambda; }
};

// Admissibility: 0 < lambda < k < v-1 and the counting identities
// lambda*(v-1) = k*(k-1), k^2 - v*lambda = k - lambda,
// (v-k)*lambda = (k-1)*(k-lambda). All three identities are checked even
// though they are mutually equivalent, so the report shows each.
Verdict validate_params(const DesignParams& p);

// Projective plane of order n as a symmetric design: (n^2+n+1, n+1, 1).
// Requires n >= 2.
DesignParams plane_params(Int n);

// Incidence matrices are 0/1 rational matrices.
using IncidenceMatrix = RatMatrix;

bool is_zero_one(const RatMatrix& m);

// Both A*A^T and A^T*A must equal lambda*J + (k-lambda)*I exactly.
Verdict incidence_check(const RatMatrix& a, const DesignParams& p);

// Incidence matrix of PG(2, q) for prime q: points and lines are the
// projective classes of nonzero triples over F_q, normalized so the first
// nonzero coordinate is 1 and ordered lexicographically; point i lies on
// line j iff their dot product is 0 mod q. Prime powers are not supported.
RatMatrix pg2(Int q);

// Classical bordered identity: with A* = [[A, 1], [1^T, k/lambda]],
// D = diag(1, ..., 1, -lambda) and E = diag(k-lambda, ..., -(k-lambda)/lambda),
// checks A* D A*^T == E exactly.
Verdict ryser_classical_border(const RatMatrix& a, const DesignParams& p);

}  // namespace symdes

#endif
