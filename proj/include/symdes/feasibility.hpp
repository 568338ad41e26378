#pragma once

#include <string>
#include <vector>

#include "symdes/border.hpp"
#include "symdes/designs.hpp"
#include "symdes/verdict.hpp"

namespace symdes {

// Classical parity gate: when v is even, the order k - lambda must be a
// perfect square. Inapplicable for odd v.
Verdict schutzenberger(const DesignParams& params);

// Classical gate for odd v: the ternary form
//   x^2 - (k-lambda) y^2 - (-1)^((v-1)/2) lambda z^2 = 0
// must have a nontrivial integer solution. Inapplicable for even v.
Verdict brc(const DesignParams& params);

// Plane specialization: order n with n = 1 or 2 (mod 4) requires n to be a
// sum of two squares; other residues impose nothing.
Verdict bruck_ryser_plane(Int n);

// The eight-case condition on (w mod 4, d) for a w x (w+d) bordered matrix
// with Gram form alpha*I + beta*J:
//   (0,1) beta is a perfect square          (2,1)* beta is a perfect square
//   (0,2) beta is a sum of two squares      (2,2)* beta is a sum of two squares
//   (1,1)* alpha and beta share square-free part
//   (1,2)* x^2 - beta y^2 + alpha z^2 = 0 solvable
//   (3,1)  alpha and beta share square-free part
//   (3,2)  x^2 - beta y^2 + alpha z^2 = 0 solvable
// Cases marked * presuppose alpha = a^2 + b^2; when alpha is not a sum of
// two squares they return inapplicable.
Verdict main_theorem_case(Int w, int d, Int alpha, Int beta);

// A certificate composed with the case condition its shape selects.
// overall: "certificate-consistent" (scalar identities and condition both
// hold), "obstruction" (identities hold, condition fails: no design with
// these parameters can carry the border), "condition-inapplicable", or
// "invalid-certificate" (identities fail).
struct CertOutcome {
    std::string overall;
    Verdict scalar;
    Verdict condition;
};
CertOutcome certificate_verdict(const Certificate& cert);

// Composite feasibility report: admissibility, then the parity-matched
// classical gate, then (only when the classical gates pass) the verdicts of
// every catalog certificate with matching parameters. Case verdicts are
// conditional on the border being realizable over a hypothetical design,
// so the conclusion says "obstruction", never "nonexistence".
struct Report {
    std::string subject;
    std::vector<Verdict> classical;
    bool certificates_consulted = false;
    struct CertLine {
        std::string name;
        CertOutcome outcome;
    };
    std::vector<CertLine> certificates;
    std::string conclusion;
    int exit_code = 0;  // 0 consistent, 1 failed gate or obstruction
};

Report report_params(const DesignParams& params);
Report report_plane(Int n);

// Text rendering for people; structured rendering as line-oriented
// key=value records (stable order, byte-identical across runs).
std::string render_report(const Report& report, bool structured);

// Single-verdict renderings for subcommands that expose one check.
std::string render_verdict(const Verdict& verdict, bool structured);

}  // namespace symdes
