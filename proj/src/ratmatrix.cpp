#include "symdes/ratmatrix.hpp"

#include <string>
#include <vector>

namespace symdes {

RatMatrix jmat_form(const Rat& alpha, const Rat& beta, Eigen::Index w) {
    RatMatrix m(w, w);
    for (Eigen::Index i = 0; i < w; ++i)
        for (Eigen::Index j = 0; j < w; ++j) m(i, j) = (i == j) ? alpha + beta : beta;
    return m;
}

bool gram_check(const RatMatrix& C, const Rat& alpha, const Rat& beta) {
    const Eigen::Index w = C.rows();
    if (C.cols() < w)
        throw invalid_shape_error("gram_check: matrix has " + std::to_string(C.cols()) +
                                  " columns but " + std::to_string(w) + " rows");
    const Rat diag = alpha + beta;
    for (Eigen::Index i = 0; i < w; ++i) {
        for (Eigen::Index j = i; j < w; ++j) {
            Rat dot(0);
            for (Eigen::Index t = 0; t < C.cols(); ++t) dot += C(i, t) * C(j, t);
            if (dot != (i == j ? diag : beta)) return false;
        }
    }
    return true;
}

RatMatrix jmat_inverse(const Rat& alpha, const Rat& beta, Eigen::Index w) {
    if (w < 1) throw invalid_shape_error("jmat_inverse: order must be at least 1");
    if (alpha.is_zero())
        throw singular_parameter_error("jmat_inverse: alpha = 0 makes the form singular");
    const Rat trace_term = alpha + beta * Rat(static_cast<long long>(w));
    if (trace_term.is_zero())
        throw singular_parameter_error("jmat_inverse: alpha + beta*w = 0 makes the form singular");
    const Rat off = -(beta / trace_term) / alpha;
    const Rat diag = (Rat(1) - beta / trace_term) / alpha;
    RatMatrix m(w, w);
    for (Eigen::Index i = 0; i < w; ++i)
        for (Eigen::Index j = 0; j < w; ++j) m(i, j) = (i == j) ? diag : off;
    return m;
}

RatMatrix row_space_preimage(const RatMatrix& C, const Rat& alpha, const Rat& beta) {
    if (!gram_check(C, alpha, beta))
        throw inconsistent_input_error(
            "row_space_preimage: C*C^T does not equal alpha*I + beta*J");
    return C.transpose() * jmat_inverse(alpha, beta, C.rows());
}

RatMatrix null_space(RatMatrix m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index sel = -1;
        for (Eigen::Index i = rank; i < rows; ++i)
            if (!m(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != rank) m.row(sel).swap(m.row(rank));
        const Rat inv = Rat(1) / m(rank, col);
        for (Eigen::Index j = col; j < cols; ++j) m(rank, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            const Rat factor = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= factor * m(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (Eigen::Index c : pivot_col) is_pivot[c] = true;
    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix basis = RatMatrix::Constant(cols, static_cast<Eigen::Index>(free_cols.size()),
                                          Rat(0));
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        basis(free_cols[t], static_cast<Eigen::Index>(t)) = Rat(1);
        for (Eigen::Index i = 0; i < rank; ++i)
            basis(pivot_col[i], static_cast<Eigen::Index>(t)) = -m(i, free_cols[t]);
    }
    return basis;
}

}  // namespace symdes
