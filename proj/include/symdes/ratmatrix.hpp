#ifndef SYMDES_RATMATRIX_HPP
#define SYMDES_RATMATRIX_HPP

#include <Eigen/Core>

#include "symdes/rational.hpp"

namespace Eigen {

// Exact-scalar traits: no epsilon, no precision loss, nontrivial op costs.
template <>
struct NumTraits<symdes::Rat> : GenericNumTraits<symdes::Rat> {
    typedef symdes::Rat Real;
    typedef symdes::Rat NonInteger;
    typedef symdes::Rat Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace symdes {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatRowVector = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

// alpha*I_w + beta*J_w (J is the all-ones matrix).
RatMatrix jmat_form(const Rat& alpha, const Rat& beta, Eigen::Index w);

// True iff C * C^T == alpha*I + beta*J exactly. Computes the upper triangle
// of the Gram matrix only; the lower follows by symmetry. Requires
// cols >= rows (throws invalid_shape_error otherwise).
bool gram_check(const RatMatrix& C, const Rat& alpha, const Rat& beta);

// Closed-form inverse of alpha*I_w + beta*J_w:
//   (1/alpha) * (I - beta/(alpha + beta*w) * J).
// Throws singular_parameter_error when alpha == 0 or alpha + beta*w == 0.
RatMatrix jmat_inverse(const Rat& alpha, const Rat& beta, Eigen::Index w);

// M = C^T * (C C^T)^{-1}, so that (x*C)*M == x for every row vector x.
// Verifies gram_check(C, alpha, beta) first (inconsistent_input_error on
// failure) and uses the closed-form inverse above.
RatMatrix row_space_preimage(const RatMatrix& C, const Rat& alpha, const Rat& beta);

// Basis of the right kernel {v : M v = 0} as columns, one per free variable
// of the reduced echelon form (cols x nullity; zero columns when the kernel
// is trivial). Exact Gauss-Jordan with first-nonzero pivoting.
RatMatrix null_space(RatMatrix m);

}  // namespace symdes

#endif
