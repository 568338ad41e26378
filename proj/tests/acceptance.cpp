// Acceptance suite: one line per criterion, "[PRIMARY] <name>: pass|fail".
// Each criterion runs inside a wall-clock budget; exceeding it fails the
// criterion even when the checks themselves hold.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "symdes/border.hpp"
#include "symdes/designs.hpp"
#include "symdes/elimination.hpp"
#include "symdes/feasibility.hpp"
#include "symdes/numtheory.hpp"

using symdes::DesignParams;
using symdes::EliminationTrace;
using symdes::Int;
using symdes::Rat;
using symdes::RatMatrix;
using symdes::Status;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw check_failure(what);
}

int failures = 0;

template <typename Fn>
void criterion(const char* name, double budget_seconds, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        body();
    } catch (const std::exception& e) {
        problem = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > budget_seconds)
        problem = "exceeded " + std::to_string(budget_seconds) + "s budget";
    const bool ok = problem.empty();
    if (!ok) ++failures;
    std::printf("[PRIMARY] %s: %s (%.2fs)%s%s\n", name, ok ? "pass" : "fail", seconds,
                ok ? "" : " -- ", problem.c_str());
    std::fflush(stdout);
}

RatMatrix assembled_catalog_border(const std::string& name, const RatMatrix& design) {
    const symdes::Certificate* cert = symdes::catalog_entry(name);
    require(cert != nullptr, "catalog entry " + name + " missing");
    return symdes::assemble(design, cert->spec);
}

bool residue_is_square(Int base, Int p) {
    Int r = ((base % p) + p) % p;
    if (r == 0) return true;
    for (Int x = 1; x < p; ++x)
        if (x * x % p == r) return true;
    return false;
}

// Valid symmetric design parameter triples with v <= limit.
std::vector<DesignParams> admissible_params(Int limit) {
    std::vector<DesignParams> out;
    for (Int v = 4; v <= limit; ++v)
        for (Int k = 2; k < v - 1; ++k) {
            if ((k * (k - 1)) % (v - 1) != 0) continue;
            DesignParams p{v, k, k * (k - 1) / (v - 1)};
            if (symdes::validate_params(p).status == Status::pass) out.push_back(p);
        }
    return out;
}

std::string structured_snapshot() {
    std::string s;
    s += symdes::render_report(symdes::report_params({49, 16, 5}), true);
    s += symdes::render_report(symdes::report_params({31, 6, 1}), true);
    s += symdes::render_report(symdes::report_plane(10), true);
    s += symdes::render_verdict(symdes::bruck_ryser_plane(12), true);
    auto spec = symdes::construct_search({7, 3, 1}, 8, 1, 1, 24);
    require(spec.has_value(), "small border search came up empty");
    RatMatrix c = symdes::assemble(symdes::pg2(2), *spec);
    s += symdes::render_trace(symdes::eliminate(c, Rat(2), Rat(9), 1));
    return s;
}

}  // namespace

int main() {
    RatMatrix plane5, plane7;

    criterion("plane-5 32x33 border verifies end to end", 1.0, [&] {
        plane5 = symdes::pg2(5);
        require(symdes::incidence_check(plane5, symdes::plane_params(5)).status == Status::pass,
                "pg2(5) failed the incidence check");
        RatMatrix c = assembled_catalog_border("plane5-32x33", plane5);
        require(c.rows() == 32 && c.cols() == 33, "assembled border has the wrong shape");
        require(symdes::gram_check(c, Rat(5), Rat(9)), "Gram identity 5*I + 9*J failed");
        require(symdes::main_theorem_case(32, 1, 5, 9).status == Status::pass,
                "case condition rejected (32, 1, 5, 9)");
    });

    criterion("demonstration borders assemble and verify", 5.0, [&] {
        RatMatrix c = assembled_catalog_border("plane5-32x34", plane5);
        require(symdes::gram_check(c, Rat(5), Rat(2)), "32x34 Gram identity failed");
        plane7 = symdes::pg2(7);
        c = assembled_catalog_border("plane7-59x60", plane7);
        require(symdes::gram_check(c, Rat(7), Rat(7)), "59x60 Gram identity failed");
        c = assembled_catalog_border("plane7-59x61", plane7);
        require(symdes::gram_check(c, Rat(7), Rat(2)), "59x61 Gram identity failed");
        for (const char* name :
             {"(45,12,3)-46x47", "(45,12,3)-46x48", "(36,15,6)-37x38", "(36,15,6)-37x39"}) {
            const symdes::Certificate* cert = symdes::catalog_entry(name);
            require(cert != nullptr, std::string("catalog entry ") + name + " missing");
            require(symdes::scalar_verify(cert->spec).status == Status::pass,
                    std::string(name) + " failed the scalar identities");
        }
    });

    criterion("catalog obstructions certify with matching evidence", 2.0, [&] {
        const struct {
            const char* name;
            Int beta;
        } square_cases[] = {
            {"order-10", 101}, {"order-18", 37}, {"order-26", 10}, {"(115,19,3)", 12}};
        const struct {
            const char* name;
            Int base, p;
        } symbol_cases[] = {{"order-12", 5, 3},   {"order-15", 2, 5},  {"order-20", 13, 5},
                            {"order-24", 2, 3},   {"order-28", 6, 7},  {"(49,16,5)", 6, 11},
                            {"(154,18,2)", -1, 3}};

        auto outcome_for = [&](const char* name) {
            const symdes::Certificate* cert = symdes::catalog_entry(name);
            require(cert != nullptr, std::string("catalog entry ") + name + " missing");
            symdes::CertOutcome out = symdes::certificate_verdict(*cert);
            require(out.scalar.status == Status::pass,
                    std::string(name) + " failed the scalar identities");
            require(out.overall == "obstruction",
                    std::string(name) + " did not certify as an obstruction");
            return out;
        };

        for (const auto& sc : square_cases) {
            symdes::CertOutcome out = outcome_for(sc.name);
            bool beta_noted = false;
            for (const auto& [key, value] : out.condition.evidence)
                if (key == "beta" && value == std::to_string(sc.beta)) beta_noted = true;
            require(beta_noted, std::string(sc.name) + " evidence lacks beta = " +
                                    std::to_string(sc.beta));
            Int root = 0;
            while (root * root < sc.beta) ++root;
            require(root * root != sc.beta,
                    std::string(sc.name) + ": beta unexpectedly is a square");
        }
        for (const auto& sc : symbol_cases) {
            symdes::CertOutcome out = outcome_for(sc.name);
            const std::string expected =
                "(" + std::to_string(sc.base) + "/" + std::to_string(sc.p) + ")";
            bool symbol_noted = false;
            for (const auto& [key, value] : out.condition.evidence)
                if (key == "failing" && value.find(expected) != std::string::npos)
                    symbol_noted = true;
            require(symbol_noted,
                    std::string(sc.name) + " evidence lacks failing symbol " + expected);
            require(!residue_is_square(sc.base, sc.p),
                    expected + " is a residue after all; enumeration disagrees");
        }
    });

    criterion("plane sweep 2..33 fails exactly on the known orders", 1.0, [&] {
        const std::set<Int> expected = {6, 14, 21, 22, 30, 33};
        for (Int n = 2; n <= 33; ++n) {
            const bool failed = symdes::bruck_ryser_plane(n).status == Status::fail;
            require(failed == (expected.count(n) > 0),
                    "order " + std::to_string(n) + (failed ? " failed" : " passed") +
                        " unexpectedly");
        }
    });

    criterion("odd-v gate agrees with the witness oracle through v = 50", 60.0, [&] {
        int checked = 0;
        for (const DesignParams& p : admissible_params(50)) {
            if (p.v % 2 == 0) continue;
            const Int n = p.order();
            const Int sign = ((p.v - 1) / 2) % 2 == 0 ? 1 : -1;
            const auto witness =
                symdes::ternary_witness_search(1, -n, -sign * p.lambda, 500);
            const Status status = symdes::brc(p).status;
            const std::string where = "(" + std::to_string(p.v) + "," + std::to_string(p.k) +
                                      "," + std::to_string(p.lambda) + ")";
            if (status == Status::pass)
                require(witness.has_value(), where + ": gate passes but no witness in bound");
            if (witness) require(status == Status::pass, where + ": witness found yet gate fails");
            ++checked;
        }
        require(checked >= 20, "parameter enumeration looks too small");
    });

    criterion("elimination witnesses replay exactly on both demonstration borders", 10.0, [&] {
        RatMatrix c = assembled_catalog_border("plane5-32x33", plane5);
        EliminationTrace t = symdes::eliminate(c, Rat(5), Rat(9), 1);
        require(t.final_relation == "f33^2 = 9*z^2",
                "unexpected final relation " + t.final_relation);
        const Rat f = t.kept_values[t.w];
        require(!f.is_zero() && !t.z_value.is_zero(), "witness degenerated to zero");
        require(f == Rat(3) * t.z_value || f == Rat(-3) * t.z_value,
                "f/z is not 3 or -3: f = " + f.str() + ", z = " + t.z_value.str());
        require(static_cast<Int>(t.eform_values.size()) == 32, "row values missing");
        for (Int i = 0; i < 32; ++i)
            require(t.eform_values[i] * t.eform_values[i] ==
                        t.kept_values[i] * t.kept_values[i],
                    "row " + std::to_string(i + 1) + ": y^2 != f^2 at the witness");
        require(symdes::replay(t).status == Status::pass, "32x33 replay failed");

        c = assembled_catalog_border("plane7-59x60", plane7);
        t = symdes::eliminate(c, Rat(7), Rat(7), 1);
        require(t.final_relation == "7*y59^2 = 7*z^2",
                "unexpected final relation " + t.final_relation);
        const Rat y = t.kept_values[t.w];
        require(y * y == t.z_value * t.z_value && !y.is_zero(),
                "59x60 witness does not satisfy y^2 = z^2 != 0");
        require(symdes::replay(t).status == Status::pass, "59x60 replay failed");
    });

    criterion("number theory agrees with brute force up to 10^4", 60.0, [&] {
        for (Int m = 1; m <= 10000; ++m) {
            Int plain = m;
            for (Int s = 2; s * s <= plain; ++s)
                while (plain % (s * s) == 0) plain /= s * s;
            require(symdes::square_free_part(m) == plain,
                    "square_free_part(" + std::to_string(m) + ")");
            require(symdes::square_free_part(-m) == -plain,
                    "square_free_part(-" + std::to_string(m) + ")");
        }

        {
            std::set<Int> squares;
            for (Int r = 0; r * r <= 10000; ++r) squares.insert(r * r);
            for (Int n = 0; n <= 10000; ++n)
                require(symdes::is_perfect_square(n) == (squares.count(n) > 0),
                        "is_perfect_square(" + std::to_string(n) + ")");
        }

        for (Int m = 0; m <= 10000; ++m) {
            bool expected = false;
            Int ea = 0, eb = 0;
            for (Int a = 0; !expected && a * a * 2 <= m; ++a) {
                Int rest = m - a * a;
                Int b = 0;
                while (b * b < rest) ++b;
                if (b * b == rest) {
                    expected = true;
                    ea = a;
                    eb = b;
                }
            }
            auto got = symdes::sum_two_squares(m);
            require(got.has_value() == expected,
                    "sum_two_squares(" + std::to_string(m) + ") existence");
            if (got)
                require(got->first == ea && got->second == eb,
                        "sum_two_squares(" + std::to_string(m) + ") witness");
        }

        auto exact_root = [](Int rest) {
            Int c = static_cast<Int>(std::sqrt(static_cast<double>(rest)));
            while (c > 0 && c * c > rest) --c;
            while ((c + 1) * (c + 1) <= rest) ++c;
            return c * c == rest;
        };
        for (Int n = 0; n <= 10000; ++n) {
            bool expected = false;
            for (Int a = 0; !expected && a * a <= n; ++a)
                for (Int b = a; !expected && a * a + b * b <= n; ++b)
                    expected = exact_root(n - a * a - b * b);
            require(symdes::three_squares_predicate(n) == expected,
                    "three_squares_predicate(" + std::to_string(n) + ")");
        }

        for (Int n = 0; n <= 10000; ++n) {
            const auto q = symdes::four_squares(n);
            require(q[0] >= 0 && q[0] <= q[1] && q[1] <= q[2] && q[2] <= q[3],
                    "four_squares(" + std::to_string(n) + ") ordering");
            require(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3] == n,
                    "four_squares(" + std::to_string(n) + ") sum");
            // Maximality of the last component against the three-square test.
            for (Int b = q[3] + 1; b * b <= n; ++b)
                require(!symdes::three_squares_predicate(n - b * b),
                        "four_squares(" + std::to_string(n) + ") is not greedy-maximal");
        }

        for (Int p = 3; p <= 997; ++p) {
            bool prime = p > 1;
            for (Int q = 2; q * q <= p && prime; ++q)
                if (p % q == 0) prime = false;
            if (!prime) continue;
            std::set<Int> residues;
            for (Int x = 1; x < p; ++x) residues.insert(x * x % p);
            for (Int a = 0; a < p; ++a) {
                const int expected = a == 0 ? 0 : (residues.count(a) ? 1 : -1);
                require(symdes::legendre_symbol(a, p) == expected,
                        "legendre_symbol(" + std::to_string(a) + ", " + std::to_string(p) + ")");
            }
        }
    });

    criterion("classical bordered identity holds for the small planes", 5.0, [&] {
        for (Int q : {2, 3, 5, 7}) {
            RatMatrix a = symdes::pg2(q);
            require(symdes::ryser_classical_border(a, symdes::plane_params(q)).status ==
                        Status::pass,
                    "identity failed for the plane of order " + std::to_string(q));
        }
    });

    criterion("constructed border round-trips to an elimination witness", 60.0, [&] {
        auto spec = symdes::construct_search({7, 3, 1}, 8, 1, 1, 24);
        require(spec.has_value(), "search returned nothing at bound 24");
        require(symdes::scalar_verify(*spec).status == Status::pass,
                "constructed spec failed the scalar identities");
        RatMatrix c = symdes::assemble(symdes::pg2(2), *spec);
        require(symdes::gram_check(c, Rat(2), Rat(9)), "Gram identity 2*I + 9*J failed");
        EliminationTrace t = symdes::eliminate(c, Rat(2), Rat(9), 1);
        const Rat f = t.kept_values[t.w];
        require(f * f == Rat(9) * t.z_value * t.z_value && !f.is_zero(),
                "relation f^2 = 9*z^2 does not hold at the witness");
        require(symdes::replay(t).status == Status::pass, "replay failed");
    });

    criterion("structured reports are byte-identical across runs", 30.0, [&] {
        const std::string first = structured_snapshot();
        const std::string second = structured_snapshot();
        require(!first.empty(), "empty structured snapshot");
        require(first == second, "consecutive runs differ");
    });

    if (failures == 0) std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
