#include "symdes/elimination.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

namespace symdes {
namespace {

Int small_int(const Rat& r, const std::string& what) {
    if (!r.is_integer())
        throw unsupported_error("elimination needs an integer " + what + ", got " + r.str());
    if (!r.num().fits_slong_p())
        throw unsupported_error("elimination " + what + " out of range: " + r.str());
    return r.num().get_si();
}

int case_number(Int w, int d) {
    switch (w % 4) {
        case 0: return d == 1 ? 1 : 2;
        case 2: return d == 1 ? 3 : 4;
        case 1: return d == 1 ? 5 : 6;
        default: return d == 1 ? 7 : 8;
    }
}

// Scaled-orthogonal bracket block: B B^t = B^t B = (b1^2 + b2^2) I.
RatMatrix two_square_matrix(const Rat& b1, const Rat& b2) {
    RatMatrix b(2, 2);
    b(0, 0) = b1;
    b(0, 1) = b2;
    b(1, 0) = -b2;
    b(1, 1) = b1;
    return b;
}

std::string term(const Rat& value) {
    const std::string s = value.str();
    return value.sign() < 0 ? "(" + s + ")" : s;
}

std::string var_name(char symbol, Int original_index) {
    return std::string(1, symbol) + std::to_string(original_index + 1);
}

}  // namespace

degenerate_elimination_error::degenerate_elimination_error(const std::string& what,
                                                           EliminationTrace trace)
    : error(what), trace_(std::move(trace)) {}

namespace {

// Back-substitutes the triangle for the given tail assignment and fills the
// witness fields of the trace. Returns true when the final relation holds
// exactly and the witness is usable.
bool evaluate_attempt(EliminationTrace& t, const std::vector<Rat>& frees) {
    const Int w = t.w;
    const Int total = w + t.d;
    t.free_values = frees;
    t.kept_values.assign(total, Rat(0));
    for (int j = 0; j < t.d; ++j) t.kept_values[w + j] = frees[j];
    for (Int i = w - 1; i >= 0; --i) {
        Rat value(0);
        for (Int j = i + 1; j < total; ++j)
            value += t.steps[i].coeffs[j] * t.kept_values[j];
        t.kept_values[i] = value;
    }

    // Map back to original numbering to evaluate the recorded forms.
    std::vector<Rat> by_var(total, Rat(0));
    for (Int pos = 0; pos < total; ++pos) by_var[t.labels[pos]] = t.kept_values[pos];
    t.eform_values.assign(w, Rat(0));
    for (Int i = 0; i < w; ++i) {
        Rat value(0);
        for (Int j = 0; j < total; ++j) value += t.eform_coeffs(i, j) * by_var[j];
        t.eform_values[i] = value;
        if (value * value != t.kept_values[i] * t.kept_values[i])
            throw error("internal elimination error: step " + std::to_string(i + 1) +
                        " does not square-match its form");
    }
    t.z_value = Rat(0);
    for (Int j = 0; j < total; ++j) t.z_value += t.zform[j] * by_var[j];

    const bool fside = t.case_id >= 5;
    Rat lhs = t.kept_values[w] * t.kept_values[w];
    if (fside) lhs *= t.alpha;
    if (t.d == 2) lhs += t.kept_values[w + 1] * t.kept_values[w + 1];
    const Rat rhs = t.beta * t.z_value * t.z_value;
    if (lhs != rhs) return false;
    if (t.beta.is_zero()) return true;
    bool all_zero = t.z_value.is_zero();
    for (int j = 0; j < t.d && all_zero; ++j)
        if (!t.kept_values[w + j].is_zero()) all_zero = false;
    return !all_zero;
}

std::string relation_text(const EliminationTrace& t) {
    const Int w = t.w;
    const bool fside = t.case_id >= 5;
    std::ostringstream out;
    if (fside) out << term(t.alpha) << "*";
    out << var_name(t.kept_symbol, t.labels[w]) << "^2";
    if (t.d == 2) out << " + " << var_name(t.kept_symbol, t.labels[w + 1]) << "^2";
    out << " = " << term(t.beta) << "*z^2";
    return out.str();
}

// ---------------------------------------------------------------------------
// Witness search.
//
// A usable witness makes every substitution row hold simultaneously:
// bracketed form i equals its kept variable up to a sign eps_i, with d kept
// variables left out to survive as the free tail of the relation. Such
// witnesses are exactly the nonzero left kernel vectors of a square pencil
//
//   x side:  D = Bhat - C_sel * diag(eps)   (forms y = x*Bhat, kept f = x*C)
//   f side:  D = I    - G_sel * diag(eps)   (forms x,   kept y = x*C*Pext)
//
// where `sel` drops the left-out kept variables. Because every bracket
// block V keeps V V^t = alpha*I, the Gram identity turns any nonzero-tail
// kernel vector into an exact solution of the final relation; there is
// nothing left to check beyond the tail being nonzero.
//
// The search walks a fixed schedule of such pencils: every left-out choice
// on the canonical bracket, then single-block bracket replacements by
// unit-factor images (signed permutations of the block) over the same
// left-out schedule, then single-block rational rotations of the block
// tuple near the front of that schedule, and finally per-row sign patterns
// on the canonical pencil, exhaustive for small w and seeded pseudorandom
// otherwise. Candidates are filtered with a determinant modulo a fixed
// prime, confirmed modulo a second prime, and finished with an exact kernel
// computation, so the result is deterministic and exact.

constexpr long kFilterPrime = 1000003;
constexpr long kConfirmPrime = 998244353;
constexpr long kRandomTrials = 150000;
constexpr Int kExhaustiveBits = 16;
constexpr std::uint64_t kSignSeed = 20240817;

long mod_inverse(long a, long p) {
    long result = 1;
    long base = (a % p + p) % p;
    for (long e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

long to_mod(const Rat& r, long p) {
    const long num = static_cast<long>(mpz_fdiv_ui(r.num().get_mpz_t(), p));
    const long den = static_cast<long>(mpz_fdiv_ui(r.den().get_mpz_t(), p));
    return num * mod_inverse(den, p) % p;
}

// Zero-determinant test of the n x n matrix in m (entries reduced into
// [0, p)), destructive. Fraction-free row updates avoid inversions, since
// scaling a row by a nonzero constant never changes singularity. For small
// p the reduction runs through a double-precision Barrett quotient, exact
// because every product stays below 2^53.
bool is_singular_mod(std::vector<long>& m, Int n, long p) {
    const bool small = p < (1L << 26);
    const double pinv = 1.0 / static_cast<double>(p);
    auto reduce = [&](long x) -> long {
        if (small) {
            const long q = static_cast<long>(static_cast<double>(x) * pinv);
            long r = x - q * p;
            if (r < 0)
                r += p;
            else if (r >= p)
                r -= p;
            return r;
        }
        const long r = x % p;
        return r < 0 ? r + p : r;
    };
    for (Int c = 0; c < n; ++c) {
        Int sel = -1;
        for (Int r = c; r < n; ++r)
            if (m[r * n + c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return true;
        if (sel != c)
            for (Int j = c; j < n; ++j) std::swap(m[sel * n + j], m[c * n + j]);
        const long piv = m[c * n + c];
        for (Int r = c + 1; r < n; ++r) {
            const long factor = m[r * n + c];
            if (factor == 0) continue;
            const long* rowc = &m[c * n];
            long* rowr = &m[r * n];
            for (Int j = c + 1; j < n; ++j) rowr[j] = reduce(rowr[j] * piv - factor * rowc[j]);
            rowr[c] = 0;
        }
    }
    return false;
}

struct CaseSetup {
    bool fside = false;
    Int w = 0;
    Int total = 0;
    int d = 1;
    Rat alpha;
    Rat beta;
    const RatMatrix* c = nullptr;
    std::vector<Int> block_start;
    std::vector<std::vector<Rat>> tuples;  // 4-, 2-, or 1-wide generating tuples
};

RatMatrix tuple_matrix(const std::vector<Rat>& tuple) {
    if (tuple.size() == 4)
        return four_square_identity_matrix(tuple[0], tuple[1], tuple[2], tuple[3]);
    if (tuple.size() == 2) return two_square_matrix(tuple[0], tuple[1]);
    RatMatrix one(1, 1);
    one(0, 0) = Rat(1);
    return one;
}

// Moves the tuple along the rational circle through itself in coordinates
// (i, j); the squared norm is preserved for every rational parameter u.
std::vector<Rat> rotate_tuple(std::vector<Rat> tuple, std::size_t i, std::size_t j,
                              const Rat& u) {
    const Rat den = Rat(1) + u * u;
    const Rat a = tuple[i];
    const Rat b = tuple[j];
    tuple[i] = (a * (Rat(1) - u * u) + Rat(2) * b * u) / den;
    tuple[j] = (b * (Rat(1) - u * u) - Rat(2) * a * u) / den;
    return tuple;
}

struct Hit {
    std::vector<RatMatrix> blocks;
    std::vector<Int> lo;    // left-out kept indices, ascending
    std::vector<int> eps;   // one sign per substitution row
    RatRowVector x;         // primitive integer witness
};

class WitnessSearch {
  public:
    explicit WitnessSearch(const CaseSetup& s) : s_(s), c_(*s.c) {
        base_blocks_.reserve(s_.tuples.size());
        for (const auto& tuple : s_.tuples) base_blocks_.push_back(tuple_matrix(tuple));
        blocks_ = base_blocks_;
        kept_ = RatMatrix::Constant(s_.w, s_.total, Rat(0));
        if (!s_.fside) {
            kept_ = c_;
            bhat_ = RatMatrix::Constant(s_.w, s_.w, Rat(0));
        }
        nmod_.assign(static_cast<std::size_t>(s_.w * s_.total), 0);
        mmod_.assign(static_cast<std::size_t>(s_.w * s_.w), 0);
        dbuf_.resize(static_cast<std::size_t>(s_.w * s_.w));
        if (!s_.fside)
            for (Int i = 0; i < s_.w; ++i)
                for (Int j = 0; j < s_.total; ++j)
                    nmod_[i * s_.total + j] = to_mod(kept_(i, j), kFilterPrime);
        for (std::size_t g = 0; g < blocks_.size(); ++g) set_block(static_cast<Int>(g), blocks_[g]);
    }

    std::optional<Hit> run() {
        const auto lo_all = lo_schedule();
        const std::vector<int> plus(static_cast<std::size_t>(s_.w), 1);

        // Canonical bracket and unit-factor block replacements, every
        // left-out choice, all signs positive.
        for (const auto& lo : lo_all) {
            const auto sel = selection(lo);
            if (auto hit = attempt(lo, sel, plus)) return hit;
            for (std::size_t blk = 0; blk < s_.tuples.size(); ++blk) {
                for (const auto& v : unit_variants(blk)) {
                    set_block(static_cast<Int>(blk), v);
                    auto hit = attempt(lo, sel, plus);
                    set_block(static_cast<Int>(blk), base_blocks_[blk]);
                    if (hit) return hit;
                }
            }
        }

        // Single-block rational rotations near the front of the left-out
        // schedule.
        const std::size_t rot_lo = std::min<std::size_t>(3, lo_all.size());
        for (std::size_t li = 0; li < rot_lo; ++li) {
            const auto sel = selection(lo_all[li]);
            for (std::size_t blk = 0; blk < s_.tuples.size(); ++blk) {
                for (const auto& v : rotation_variants(blk)) {
                    set_block(static_cast<Int>(blk), v);
                    auto hit = attempt(lo_all[li], sel, plus);
                    set_block(static_cast<Int>(blk), base_blocks_[blk]);
                    if (hit) return hit;
                }
            }
        }

        // Per-row sign patterns on the canonical pencil at the default
        // left-out choice: exhaustive when the row count is small, seeded
        // pseudorandom words otherwise.
        const auto& lo = lo_all.front();
        const auto sel = selection(lo);
        std::vector<int> eps(static_cast<std::size_t>(s_.w), 1);
        if (s_.w <= kExhaustiveBits) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s_.w); ++mask) {
                for (Int j = 0; j < s_.w; ++j) eps[j] = (mask >> j) & 1 ? 1 : -1;
                if (auto hit = attempt(lo, sel, eps)) return hit;
            }
        } else {
            // The selection is fixed for the whole stage, so gather the
            // kept columns once.
            std::vector<long> nsel(static_cast<std::size_t>(s_.w * s_.w));
            for (Int i = 0; i < s_.w; ++i)
                for (Int pos = 0; pos < s_.w; ++pos)
                    nsel[i * s_.w + pos] = nmod_[i * s_.total + sel[pos]];
            std::mt19937_64 gen(kSignSeed);
            const Int words = std::max<Int>(2, (s_.w + 63) / 64);
            for (long trial = 0; trial < kRandomTrials; ++trial) {
                for (Int q = 0; q < words; ++q) {
                    const std::uint64_t word = gen();
                    const Int hi = std::min<Int>(s_.w, (q + 1) * 64);
                    for (Int j = q * 64; j < hi; ++j)
                        eps[j] = (word >> (j - q * 64)) & 1 ? 1 : -1;
                }
                if (!filter_gathered(nsel, eps)) continue;
                if (auto hit = confirm(lo, sel, eps)) return hit;
            }
        }
        return std::nullopt;
    }

  private:
    // Installs block blk and refreshes the exact and modular caches. The
    // kept-form columns of an f-side bracket block are C restricted to the
    // block times V/alpha; a singleton block keeps its C column unchanged.
    void set_block(Int blk, const RatMatrix& v) {
        blocks_[blk] = v;
        const Int st = s_.block_start[blk];
        const Int size = v.rows();
        if (s_.fside) {
            for (Int cc = 0; cc < size; ++cc)
                for (Int i = 0; i < s_.w; ++i) {
                    Rat acc(0);
                    for (Int u = 0; u < size; ++u) acc += c_(i, st + u) * v(u, cc);
                    if (size > 1) acc /= s_.alpha;
                    kept_(i, st + cc) = acc;
                    nmod_[i * s_.total + st + cc] = to_mod(acc, kFilterPrime);
                }
        } else {
            for (Int u = 0; u < size; ++u)
                for (Int j = 0; j < size; ++j) {
                    bhat_(st + u, st + j) = v(u, j);
                    mmod_[(st + u) * s_.w + st + j] = to_mod(v(u, j), kFilterPrime);
                }
        }
    }

    std::vector<std::vector<Int>> lo_schedule() const {
        std::vector<std::vector<Int>> out;
        if (s_.d == 1) {
            for (Int m = s_.total - 1; m >= 0; --m) out.push_back({m});
        } else if (s_.fside) {
            // The trailing singleton always stays free so the tail keeps
            // one alpha-weighted and one unit-weighted variable.
            for (Int m = s_.total - 2; m >= 0; --m) out.push_back({m, s_.total - 1});
        } else {
            for (Int m2 = s_.total - 1; m2 >= 1; --m2)
                for (Int m1 = m2 - 1; m1 >= 0; --m1) out.push_back({m1, m2});
        }
        return out;
    }

    std::vector<Int> selection(const std::vector<Int>& lo) const {
        std::vector<char> skip(static_cast<std::size_t>(s_.total), 0);
        for (Int m : lo) skip[m] = 1;
        std::vector<Int> sel;
        sel.reserve(static_cast<std::size_t>(s_.w));
        for (Int j = 0; j < s_.total; ++j)
            if (!skip[j]) sel.push_back(j);
        return sel;
    }

    std::vector<RatMatrix> unit_variants(std::size_t blk) const {
        const std::size_t size = s_.tuples[blk].size();
        std::vector<RatMatrix> out;
        if (size == 4) {
            static const int kUnits[7][4] = {{-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
                                             {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},
                                             {0, 0, 0, -1}};
            for (const auto& u : kUnits)
                out.push_back(
                    four_square_identity_matrix(Rat(u[0]), Rat(u[1]), Rat(u[2]), Rat(u[3])) *
                    base_blocks_[blk]);
        } else if (size == 2) {
            static const int kUnits[3][2] = {{-1, 0}, {0, 1}, {0, -1}};
            for (const auto& u : kUnits)
                out.push_back(two_square_matrix(Rat(u[0]), Rat(u[1])) * base_blocks_[blk]);
        }
        return out;
    }

    std::vector<RatMatrix> rotation_variants(std::size_t blk) const {
        const auto& tuple = s_.tuples[blk];
        std::vector<RatMatrix> out;
        static const Rat kRight[] = {Rat(1),    Rat(2), Rat(1, 2), Rat(3), Rat(1, 3),
                                     Rat(4), Rat(1, 4), Rat(5), Rat(1, 5)};
        static const Rat kLeft[] = {Rat(2), Rat(1, 2), Rat(3), Rat(1, 3),
                                    Rat(4), Rat(1, 4), Rat(5), Rat(1, 5)};
        if (tuple.size() == 4) {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    for (const Rat& u : kRight)
                        out.push_back(tuple_matrix(rotate_tuple(tuple, i, j, u)));
            const std::vector<Rat> id{Rat(1), Rat(0), Rat(0), Rat(0)};
            for (std::size_t j = 1; j < 4; ++j)
                for (const Rat& u : kLeft)
                    out.push_back(tuple_matrix(rotate_tuple(id, 0, j, u)) * base_blocks_[blk]);
        } else if (tuple.size() == 2) {
            // Left and right factors coincide for plane rotations, so one
            // family suffices.
            for (const Rat& u : kRight)
                out.push_back(tuple_matrix(rotate_tuple(tuple, 0, 1, u)));
        }
        return out;
    }

    std::optional<Hit> attempt(const std::vector<Int>& lo, const std::vector<Int>& sel,
                               const std::vector<int>& eps) {
        if (!filter_singular(sel, eps)) return std::nullopt;
        return confirm(lo, sel, eps);
    }

    bool filter_singular(const std::vector<Int>& sel, const std::vector<int>& eps) {
        const long p = kFilterPrime;
        for (Int i = 0; i < s_.w; ++i)
            for (Int pos = 0; pos < s_.w; ++pos) {
                long nv = nmod_[i * s_.total + sel[pos]];
                if (eps[pos] < 0 && nv != 0) nv = p - nv;
                const long mv = s_.fside ? (i == pos ? 1 : 0) : mmod_[i * s_.w + pos];
                long diff = mv - nv;
                if (diff < 0) diff += p;
                dbuf_[i * s_.w + pos] = diff;
            }
        return is_singular_mod(dbuf_, s_.w, p);
    }

    // filter_singular with the selection gather already done (stage 3 keeps
    // one selection across every trial).
    bool filter_gathered(const std::vector<long>& nsel, const std::vector<int>& eps) {
        const long p = kFilterPrime;
        for (Int i = 0; i < s_.w; ++i) {
            const long* nrow = &nsel[i * s_.w];
            long* drow = &dbuf_[i * s_.w];
            if (s_.fside) {
                for (Int pos = 0; pos < s_.w; ++pos) {
                    long nv = nrow[pos];
                    if (eps[pos] < 0 && nv != 0) nv = p - nv;
                    const long diff = (i == pos ? 1 : 0) - nv;
                    drow[pos] = diff < 0 ? diff + p : diff;
                }
            } else {
                const long* mrow = &mmod_[i * s_.w];
                for (Int pos = 0; pos < s_.w; ++pos) {
                    long nv = nrow[pos];
                    if (eps[pos] < 0 && nv != 0) nv = p - nv;
                    const long diff = mrow[pos] - nv;
                    drow[pos] = diff < 0 ? diff + p : diff;
                }
            }
        }
        return is_singular_mod(dbuf_, s_.w, p);
    }

    std::optional<Hit> confirm(const std::vector<Int>& lo, const std::vector<Int>& sel,
                               const std::vector<int>& eps) {
        RatMatrix dm(s_.w, s_.w);
        for (Int i = 0; i < s_.w; ++i)
            for (Int pos = 0; pos < s_.w; ++pos) {
                Rat mv = s_.fside ? (i == pos ? Rat(1) : Rat(0)) : bhat_(i, pos);
                dm(i, pos) = mv - Rat(eps[pos]) * kept_(i, sel[pos]);
            }
        for (Int i = 0; i < s_.w; ++i)
            for (Int pos = 0; pos < s_.w; ++pos)
                dbuf_[i * s_.w + pos] = to_mod(dm(i, pos), kConfirmPrime);
        if (!is_singular_mod(dbuf_, s_.w, kConfirmPrime)) return std::nullopt;

        const RatMatrix kernel = null_space(dm.transpose());
        for (Int col = 0; col < kernel.cols(); ++col) {
            RatRowVector x = kernel.col(col).transpose();
            std::vector<Rat> tail;
            bool nonzero_tail = false;
            for (Int m : lo) {
                Rat acc(0);
                for (Int i = 0; i < s_.w; ++i) acc += x(i) * kept_(i, m);
                if (!acc.is_zero()) nonzero_tail = true;
                tail.push_back(acc);
            }
            if (!nonzero_tail) continue;
            Rat z(0);
            for (Int i = 0; i < s_.w; ++i) z += x(i);
            Rat lhs(0);
            for (std::size_t j = 0; j < tail.size(); ++j)
                lhs += tail_weight(lo[j]) * tail[j] * tail[j];
            if (lhs != s_.beta * z * z) continue;
            normalize(x);
            return Hit{blocks_, lo, eps, std::move(x)};
        }
        return std::nullopt;
    }

    Rat tail_weight(Int kept_index) const {
        if (!s_.fside) return Rat(1);
        if (s_.d == 2 && kept_index == s_.total - 1) return Rat(1);
        return s_.alpha;
    }

    // Scales to a primitive integer vector whose first nonzero entry is
    // positive.
    static void normalize(RatRowVector& x) {
        mpz_class lcm(1);
        for (Int i = 0; i < x.cols(); ++i)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x(i).den().get_mpz_t());
        if (lcm != 1) {
            const Rat scale{lcm};
            for (Int i = 0; i < x.cols(); ++i) x(i) *= scale;
        }
        mpz_class gcd(0);
        for (Int i = 0; i < x.cols(); ++i)
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x(i).num().get_mpz_t());
        if (gcd > 1) {
            const Rat div{gcd};
            for (Int i = 0; i < x.cols(); ++i) x(i) /= div;
        }
        for (Int i = 0; i < x.cols(); ++i) {
            if (x(i).is_zero()) continue;
            if (x(i).sign() < 0)
                for (Int j = 0; j < x.cols(); ++j) x(j) = -x(j);
            break;
        }
    }

    const CaseSetup& s_;
    const RatMatrix& c_;
    std::vector<RatMatrix> base_blocks_;
    std::vector<RatMatrix> blocks_;
    RatMatrix kept_;  // w x total kept-form matrix for the current blocks
    RatMatrix bhat_;  // x side only: w x w block-diagonal bracket
    std::vector<long> nmod_;
    std::vector<long> mmod_;
    std::vector<long> dbuf_;
};

// Fills eform_coeffs and zform for the given bracket blocks: the bracketed
// forms and z expressed over the kept variables in original numbering.
void fill_forms(EliminationTrace& t, const CaseSetup& s, const RatMatrix& pre,
                const std::vector<RatMatrix>& blocks) {
    const Int w = s.w;
    const Int total = s.total;
    t.eform_coeffs = RatMatrix::Constant(w, total, Rat(0));
    t.zform.assign(static_cast<std::size_t>(total), Rat(0));
    if (!s.fside) {
        RatMatrix bhat = RatMatrix::Constant(w, w, Rat(0));
        for (std::size_t g = 0; g < blocks.size(); ++g) {
            const Int st = s.block_start[g];
            const Int size = blocks[g].rows();
            for (Int u = 0; u < size; ++u)
                for (Int j = 0; j < size; ++j) bhat(st + u, st + j) = blocks[g](u, j);
        }
        const RatMatrix mm = pre * bhat;  // total x w
        for (Int i = 0; i < w; ++i)
            for (Int j = 0; j < total; ++j) t.eform_coeffs(i, j) = mm(j, i);
        for (Int j = 0; j < total; ++j) {
            Rat sum(0);
            for (Int i = 0; i < w; ++i) sum += pre(j, i);
            t.zform[j] = sum;
        }
    } else {
        // Kept y with f = y * blockdiag(V^t) (identity on a singleton), so
        // the forms are x = f * pre = y * (blockdiag(V^t) * pre).
        RatMatrix binv = RatMatrix::Constant(total, total, Rat(0));
        for (std::size_t g = 0; g < blocks.size(); ++g) {
            const Int st = s.block_start[g];
            const Int size = blocks[g].rows();
            if (size == 1) {
                binv(st, st) = Rat(1);
                continue;
            }
            for (Int u = 0; u < size; ++u)
                for (Int j = 0; j < size; ++j) binv(st + u, st + j) = blocks[g](j, u);
        }
        const RatMatrix mm = binv * pre;  // total x w
        for (Int i = 0; i < w; ++i)
            for (Int j = 0; j < total; ++j) t.eform_coeffs(i, j) = mm(j, i);
        for (Int j = 0; j < total; ++j) {
            Rat sum(0);
            for (Int i = 0; i < w; ++i) sum += mm(j, i);
            t.zform[j] = sum;
        }
    }
}

// The default substitution loop used when there is no witness to follow:
// ascending pivots, sign -1 exactly when the pivot coefficient is 1, and a
// swap with the farthest unprocessed variable of the same weight when a
// form vanishes entirely. Produces the triangle behind the zero witness.
void symbolic_triangle(EliminationTrace& t) {
    const Int w = t.w;
    const Int total = w + t.d;
    const bool fside = t.case_id >= 5;
    RatMatrix work = t.eform_coeffs;
    t.steps.assign(static_cast<std::size_t>(w), EliminationStep{});
    auto swap_positions = [&](Int p1, Int p2) {
        if (p1 == p2) return;
        work.col(p1).swap(work.col(p2));
        std::swap(t.labels[p1], t.labels[p2]);
        for (auto& done : t.steps)
            if (!done.coeffs.empty()) std::swap(done.coeffs[p1], done.coeffs[p2]);
    };
    for (Int i = 0; i < w; ++i) {
        bool tail = false;
        for (Int j = i + 1; j < total && !tail; ++j)
            if (!work(i, j).is_zero()) tail = true;
        if (work(i, i).is_zero() && !tail) swap_positions(i, fside ? w : total - 1);
        const Rat b = work(i, i);
        EliminationStep step;
        step.coeffs.assign(static_cast<std::size_t>(total), Rat(0));
        if (b == Rat(1)) {
            step.sign = -1;
            for (Int j = i + 1; j < total; ++j) step.coeffs[j] = -work(i, j) / Rat(2);
        } else {
            step.sign = 1;
            const Rat scale = Rat(1) - b;
            for (Int j = i + 1; j < total; ++j) step.coeffs[j] = work(i, j) / scale;
        }
        t.steps[i] = step;
        for (Int r = i + 1; r < w; ++r) {
            const Rat factor = work(r, i);
            if (factor.is_zero()) continue;
            for (Int j = i + 1; j < total; ++j) work(r, j) += factor * step.coeffs[j];
            work(r, i) = Rat(0);
        }
    }
}

// Rebuilds the substitution triangle around the witness: each row divides
// by (sign - pivot coefficient) when that is nonzero, and otherwise pins
// the position against the last later position with a nonzero witness
// value. Returns false only if a nonzero value cannot be pinned, which a
// nonzero-tail witness rules out.
bool witness_triangle(EliminationTrace& t, const std::vector<Rat>& kept,
                      const std::vector<int>& eps) {
    const Int w = t.w;
    const Int total = w + t.d;
    RatMatrix work(w, total);
    for (Int i = 0; i < w; ++i)
        for (Int pos = 0; pos < total; ++pos) work(i, pos) = t.eform_coeffs(i, t.labels[pos]);
    t.steps.assign(static_cast<std::size_t>(w), EliminationStep{});
    for (Int i = 0; i < w; ++i) {
        const Rat b = work(i, i);
        const Rat sign(eps[i]);
        EliminationStep step;
        step.sign = eps[i];
        step.coeffs.assign(static_cast<std::size_t>(total), Rat(0));
        if (b != sign) {
            const Rat scale = sign - b;
            for (Int j = i + 1; j < total; ++j) step.coeffs[j] = work(i, j) / scale;
        } else {
            Int pin = -1;
            for (Int j = total - 1; j > i; --j)
                if (!kept[j].is_zero()) {
                    pin = j;
                    break;
                }
            if (pin >= 0)
                step.coeffs[pin] = kept[i] / kept[pin];
            else if (!kept[i].is_zero())
                return false;
        }
        t.steps[i] = step;
        for (Int r = i + 1; r < w; ++r) {
            const Rat factor = work(r, i);
            if (factor.is_zero()) continue;
            for (Int j = i + 1; j < total; ++j) work(r, j) += factor * step.coeffs[j];
            work(r, i) = Rat(0);
        }
    }
    return true;
}

std::optional<EliminationTrace> build_trace(EliminationTrace t, const CaseSetup& s,
                                            const RatMatrix& pre, const Hit& hit) {
    const Int w = s.w;
    const Int total = s.total;
    fill_forms(t, s, pre, hit.blocks);

    t.labels.resize(static_cast<std::size_t>(total));
    {
        std::vector<char> skip(static_cast<std::size_t>(total), 0);
        for (Int m : hit.lo) skip[m] = 1;
        Int pos = 0;
        for (Int j = 0; j < total; ++j)
            if (!skip[j]) t.labels[pos++] = j;
        for (std::size_t j = 0; j < hit.lo.size(); ++j) t.labels[w + j] = hit.lo[j];
    }

    // Kept values at the witness, by position.
    auto kept_value = [&](Int col) {
        Rat acc(0);
        if (!s.fside) {
            for (Int i = 0; i < w; ++i) acc += hit.x(i) * (*s.c)(i, col);
            return acc;
        }
        std::size_t g = 0;
        while (g + 1 < s.block_start.size() && s.block_start[g + 1] <= col) ++g;
        const Int st = s.block_start[g];
        const Int size = hit.blocks[g].rows();
        if (size == 1) {
            for (Int i = 0; i < w; ++i) acc += hit.x(i) * (*s.c)(i, col);
            return acc;
        }
        for (Int i = 0; i < w; ++i) {
            Rat row(0);
            for (Int u = 0; u < size; ++u) row += (*s.c)(i, st + u) * hit.blocks[g](u, col - st);
            acc += hit.x(i) * row;
        }
        return acc / s.alpha;
    };
    std::vector<Rat> kept(static_cast<std::size_t>(total));
    for (Int pos = 0; pos < total; ++pos) kept[pos] = kept_value(t.labels[pos]);

    if (!witness_triangle(t, kept, hit.eps)) return std::nullopt;
    const std::vector<Rat> frees(kept.begin() + w, kept.end());
    if (!evaluate_attempt(t, frees)) return std::nullopt;
    t.final_relation = relation_text(t);
    return t;
}

}  // namespace

EliminationTrace eliminate(const RatMatrix& c, const Rat& alpha, const Rat& beta, int d) {
    if (d != 1 && d != 2) throw inconsistent_input_error("elimination: d must be 1 or 2");
    const Int w = c.rows();
    if (c.cols() != w + d)
        throw invalid_shape_error("elimination: matrix is " + std::to_string(w) + "x" +
                                  std::to_string(c.cols()) + ", expected " + std::to_string(w) +
                                  "x" + std::to_string(w + d));
    if (!gram_check(c, alpha, beta))
        throw inconsistent_input_error(
            "elimination: C*C^t does not equal alpha*I + beta*J for alpha=" + alpha.str() +
            ", beta=" + beta.str());
    const Int ai = small_int(alpha, "alpha");
    const Int bi = small_int(beta, "beta");
    if (ai <= 0) throw unsupported_error("elimination needs alpha > 0");
    if (bi < 0) throw unsupported_error("elimination needs beta >= 0");

    EliminationTrace t;
    t.w = w;
    t.d = d;
    t.alpha = alpha;
    t.beta = beta;
    t.case_id = case_number(w, d);
    const bool fside = t.case_id >= 5;
    t.bracketing = (t.case_id == 1 || t.case_id == 2 || t.case_id == 7 || t.case_id == 8)
                       ? Bracketing::four_square
                       : Bracketing::two_square;
    t.kept_symbol = fside ? 'y' : 'f';
    t.eform_symbol = fside ? 'x' : 'y';

    CaseSetup s;
    s.fside = fside;
    s.w = w;
    s.total = w + d;
    s.d = d;
    s.alpha = alpha;
    s.beta = beta;
    s.c = &c;
    std::vector<Rat> tuple;
    if (t.bracketing == Bracketing::two_square) {
        const auto split = sum_two_squares(ai);
        if (!split)
            throw unsupported_error("two-square bracketing needs alpha = a^2 + b^2; alpha = " +
                                    alpha.str() + " is not a sum of two squares");
        tuple = {Rat(split->first), Rat(split->second)};
    } else {
        const auto q = four_squares(ai);
        tuple = {Rat(q[0]), Rat(q[1]), Rat(q[2]), Rat(q[3])};
    }
    const Int size = static_cast<Int>(tuple.size());
    const Int covered = fside ? w + 1 : w;
    for (Int st = 0; st < covered; st += size) {
        s.block_start.push_back(st);
        s.tuples.push_back(tuple);
    }
    if (fside && d == 2) {
        s.block_start.push_back(s.total - 1);
        s.tuples.push_back({Rat(1)});
    }
    const RatMatrix pre = row_space_preimage(c, alpha, beta);

    auto default_trace = [&]() {
        std::vector<RatMatrix> base;
        base.reserve(s.tuples.size());
        for (const auto& tu : s.tuples) base.push_back(tuple_matrix(tu));
        fill_forms(t, s, pre, base);
        t.labels.resize(static_cast<std::size_t>(s.total));
        for (Int j = 0; j < s.total; ++j) t.labels[j] = j;
        symbolic_triangle(t);
        evaluate_attempt(t, std::vector<Rat>(static_cast<std::size_t>(d), Rat(0)));
        t.final_relation = relation_text(t);
    };

    if (bi == 0) {
        // With beta = 0 the relation collapses to a sum of squares equal to
        // zero, so the zero witness is the whole story.
        default_trace();
        t.degenerate_beta = true;
        return t;
    }

    WitnessSearch search(s);
    if (auto hit = search.run()) {
        auto done = build_trace(t, s, pre, *hit);
        if (!done)
            throw error(
                "internal elimination error: the substitution triangle failed to reproduce a "
                "confirmed witness");
        return *done;
    }

    default_trace();
    throw degenerate_elimination_error(
        "elimination degenerate: no scheduled bracket variant or sign pattern yields a nonzero "
        "witness for " + t.final_relation,
        t);
}

Verdict replay(const EliminationTrace& t) {
    Verdict out;
    out.condition = "elimination-replay";
    out.tag = "gram-identity";
    const Int w = t.w;
    const Int total = w + t.d;
    out.note("case", std::to_string(t.case_id))
        .note("w", std::to_string(w))
        .note("d", std::to_string(t.d));
    auto fail = [&](const std::string& why) {
        out.status = Status::fail;
        out.detail = why;
        return out;
    };
    if (static_cast<Int>(t.steps.size()) != w ||
        static_cast<Int>(t.free_values.size()) != t.d ||
        t.eform_coeffs.rows() != w || t.eform_coeffs.cols() != total ||
        static_cast<Int>(t.zform.size()) != total ||
        static_cast<Int>(t.labels.size()) != total)
        return fail("trace is incomplete");

    std::vector<Rat> kept(total, Rat(0));
    for (int j = 0; j < t.d; ++j) kept[w + j] = t.free_values[j];
    for (Int i = w - 1; i >= 0; --i) {
        Rat value(0);
        for (Int j = i + 1; j < total; ++j) value += t.steps[i].coeffs[j] * kept[j];
        kept[i] = value;
    }
    for (Int pos = 0; pos < total; ++pos)
        if (kept[pos] != t.kept_values[pos])
            return fail("recomputed value " + std::to_string(pos + 1) +
                        " differs from the recorded witness");

    std::vector<Rat> by_var(total, Rat(0));
    for (Int pos = 0; pos < total; ++pos) by_var[t.labels[pos]] = kept[pos];
    for (Int i = 0; i < w; ++i) {
        Rat form(0);
        for (Int j = 0; j < total; ++j) form += t.eform_coeffs(i, j) * by_var[j];
        if (form * form != kept[i] * kept[i])
            return fail("row " + std::to_string(i + 1) + ": " +
                        std::string(1, t.eform_symbol) + "^2 != " +
                        std::string(1, t.kept_symbol) + "^2");
        if (form != Rat(t.steps[i].sign) * kept[i])
            return fail("row " + std::to_string(i + 1) + " sign record is wrong");
    }
    Rat z(0);
    for (Int j = 0; j < total; ++j) z += t.zform[j] * by_var[j];
    if (z != t.z_value) return fail("recomputed z differs from the recorded witness");

    Rat lhs = kept[w] * kept[w];
    if (t.case_id >= 5) lhs *= t.alpha;
    if (t.d == 2) lhs += kept[w + 1] * kept[w + 1];
    if (lhs != t.beta * z * z) return fail("final relation " + t.final_relation + " fails");
    out.status = Status::pass;
    out.detail = "triangle reproduces the witness; all row squares and " + t.final_relation +
                 " hold exactly";
    out.note("z", t.z_value.str());
    for (int j = 0; j < t.d; ++j)
        out.note(var_name(t.kept_symbol, t.labels[w + j]), kept[w + j].str());
    return out;
}

std::string render_trace(const EliminationTrace& t) {
    std::ostringstream out;
    const Int w = t.w;
    const Int total = w + t.d;
    out << "case=" << t.case_id << "\n";
    out << "bracketing="
        << (t.bracketing == Bracketing::four_square ? "four-square" : "two-square") << "\n";
    out << "w=" << w << "\n";
    out << "d=" << t.d << "\n";
    out << "alpha=" << t.alpha << "\n";
    out << "beta=" << t.beta << "\n";
    for (Int i = 0; i < w; ++i) {
        out << "step." << (i + 1) << "=" << var_name(t.kept_symbol, t.labels[i]);
        bool first = true;
        for (Int j = i + 1; j < total; ++j) {
            const Rat& cj = t.steps[i].coeffs[j];
            if (cj.is_zero()) continue;
            out << (first ? " = " : " + ") << term(cj) << "*"
                << var_name(t.kept_symbol, t.labels[j]);
            first = false;
        }
        if (first) out << " = 0";
        out << " ; " << var_name(t.eform_symbol, i) << " = "
            << (t.steps[i].sign < 0 ? "-" : "+") << var_name(t.kept_symbol, t.labels[i])
            << "\n";
    }
    for (Int pos = 0; pos < total; ++pos)
        out << "value." << var_name(t.kept_symbol, t.labels[pos]) << "="
            << t.kept_values[pos] << "\n";
    for (Int i = 0; i < w; ++i)
        out << "value." << var_name(t.eform_symbol, i) << "=" << t.eform_values[i] << "\n";
    out << "value.z=" << t.z_value << "\n";
    out << "relation=" << t.final_relation << "\n";
    out << "degenerate_beta=" << (t.degenerate_beta ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace symdes
