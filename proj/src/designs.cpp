#include "symdes/designs.hpp"

#include <array>
#include <string>
#include <vector>

#include "symdes/errors.hpp"

namespace symdes {
namespace {

bool is_prime(Int p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::string params_str(const DesignParams& p) {
    return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
           std::to_string(p.lambda) + ")";
}

}  // namespace

Verdict validate_params(const DesignParams& p) {
    Verdict v;
    v.condition = "parameter-relations";
    v.tag = "admissibility";
    v.note("v", std::to_string(p.v))
        .note("k", std::to_string(p.k))
        .note("lambda", std::to_string(p.lambda));

    auto fail = [&](const std::string& why) {
        v.status = Status::fail;
        v.detail = params_str(p) + " inadmissible: " + why;
        return v;
    };
    if (p.lambda <= 0) return fail("lambda must be positive");
    if (p.k <= p.lambda) return fail("k must exceed lambda");
    if (p.v - 1 <= p.k) return fail("v-1 must exceed k");

    const __int128 lhs1 = static_cast<__int128>(p.lambda) * (p.v - 1);
    const __int128 rhs1 = static_cast<__int128>(p.k) * (p.k - 1);
    if (lhs1 != rhs1) return fail("lambda*(v-1) != k*(k-1)");
    const __int128 lhs2 = static_cast<__int128>(p.k) * p.k - static_cast<__int128>(p.v) * p.lambda;
    if (lhs2 != p.k - p.lambda) return fail("k^2 - v*lambda != k - lambda");
    const __int128 lhs3 = static_cast<__int128>(p.v - p.k) * p.lambda;
    const __int128 rhs3 = static_cast<__int128>(p.k - 1) * (p.k - p.lambda);
    if (lhs3 != rhs3) return fail("(v-k)*lambda != (k-1)*(k-lambda)");

    v.status = Status::pass;
    v.detail = params_str(p) + " admissible, order " + std::to_string(p.order());
    v.note("order", std::to_string(p.order()));
    return v;
}

DesignParams plane_params(Int n) {
    if (n < 2) throw error("plane_params: order must be at least 2");
    return DesignParams{n * n + n + 1, n + 1, 1};
}

bool is_zero_one(const RatMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != Rat(0) && m(i, j) != Rat(1)) return false;
    return true;
}

Verdict incidence_check(const RatMatrix& a, const DesignParams& p) {
    Verdict v;
    v.condition = "incidence-gram";
    v.tag = "incidence";
    v.note("v", std::to_string(p.v)).note("k", std::to_string(p.k)).note("lambda",
        std::to_string(p.lambda));
    auto fail = [&](const std::string& why) {
        v.status = Status::fail;
        v.detail = "incidence check failed: " + why;
        return v;
    };
    if (a.rows() != p.v || a.cols() != p.v)
        return fail("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    ", expected " + std::to_string(p.v) + "x" + std::to_string(p.v));
    if (!is_zero_one(a)) return fail("entries are not all 0 or 1");

    // Entries are 0/1, so Gram entries are integer counts; compare in integers.
    const Int n = p.v;
    std::vector<std::vector<int>> bits(n, std::vector<int>(n));
    for (Int i = 0; i < n; ++i)
        for (Int j = 0; j < n; ++j) bits[i][j] = a(i, j) == Rat(1) ? 1 : 0;

    auto gram_matches = [&](bool rows) -> std::string {
        for (Int i = 0; i < n; ++i) {
            for (Int j = i; j < n; ++j) {
                Int dot = 0;
                for (Int t = 0; t < n; ++t)
                    dot += rows ? bits[i][t] * bits[j][t] : bits[t][i] * bits[t][j];
                const Int want = (i == j) ? p.k : p.lambda;
                if (dot != want)
                    return std::string(rows ? "A*A^T" : "A^T*A") + " entry (" +
                           std::to_string(i) + "," + std::to_string(j) + ") is " +
                           std::to_string(dot) + ", expected " + std::to_string(want);
            }
        }
        return "";
    };
    if (std::string why = gram_matches(true); !why.empty()) return fail(why);
    if (std::string why = gram_matches(false); !why.empty()) return fail(why);

    v.status = Status::pass;
    v.detail = "both Gram products equal lambda*J + (k-lambda)*I";
    return v;
}

RatMatrix pg2(Int q) {
    if (q < 2 || !is_prime(q))
        throw unsupported_error("pg2: field order " + std::to_string(q) +
                                " is not prime (prime powers are not supported)");
    // Normalized representatives of projective points over F_q in
    // lexicographic order; the same list serves as the lines.
    std::vector<std::array<Int, 3>> pts;
    for (Int x0 = 0; x0 < q; ++x0)
        for (Int x1 = 0; x1 < q; ++x1)
            for (Int x2 = 0; x2 < q; ++x2) {
                if (x0 == 0 && x1 == 0 && x2 == 0) continue;
                Int lead = x0 != 0 ? x0 : (x1 != 0 ? x1 : x2);
                if (lead != 1) continue;
                pts.push_back({x0, x1, x2});
            }
    const Int v = q * q + q + 1;
    if (static_cast<Int>(pts.size()) != v)
        throw error("pg2: internal point count mismatch");
    RatMatrix a(v, v);
    for (Int i = 0; i < v; ++i)
        for (Int j = 0; j < v; ++j) {
            Int dot = (pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2]) % q;
            a(i, j) = Rat(dot == 0 ? 1 : 0);
        }
    return a;
}

Verdict ryser_classical_border(const RatMatrix& a, const DesignParams& p) {
    Verdict v;
    v.condition = "classical-border-identity";
    v.tag = "classical-border";
    v.note("v", std::to_string(p.v)).note("k", std::to_string(p.k)).note("lambda",
        std::to_string(p.lambda));
    auto fail = [&](const std::string& why) {
        v.status = Status::fail;
        v.detail = "classical border identity failed: " + why;
        return v;
    };
    if (a.rows() != p.v || a.cols() != p.v)
        return fail("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    ", expected " + std::to_string(p.v) + "x" + std::to_string(p.v));

    const Int n = p.v + 1;
    const Rat lam(p.lambda), k(p.k), order(p.k - p.lambda);
    RatMatrix star(n, n);
    star.topLeftCorner(p.v, p.v) = a;
    for (Int i = 0; i < p.v; ++i) {
        star(i, p.v) = Rat(1);
        star(p.v, i) = Rat(1);
    }
    star(p.v, p.v) = k / lam;

    // D = diag(1, ..., 1, -lambda); E = diag(n, ..., n, -n/lambda) with
    // n = k - lambda. Check star * D * star^T == E entry by entry.
    for (Int i = 0; i < n; ++i) {
        for (Int j = i; j < n; ++j) {
            Rat dot(0);
            for (Int t = 0; t < n; ++t) {
                Rat term = star(i, t) * star(j, t);
                dot += (t == n - 1) ? -lam * term : term;
            }
            Rat want(0);
            if (i == j) want = (i == n - 1) ? -(order / lam) : order;
            if (dot != want)
                return fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                            dot.str() + ", expected " + want.str());
        }
    }
    v.status = Status::pass;
    v.detail = "bordered matrix satisfies the diagonal congruence identity";
    v.note("corner", (k / lam).str());
    return v;
}

}  // namespace symdes
