#include "symdes/feasibility.hpp"

#include <string>
#include <utility>
#include <vector>

#include "symdes/errors.hpp"
#include "symdes/numtheory.hpp"

namespace symdes {
namespace {

std::string istr(Int n) { return std::to_string(n); }

std::string term(Int magnitude, const char* var) {
    std::string s;
    if (magnitude != 1) s += istr(magnitude);
    s += var;
    return s;
}

// a*x^2 + b*y^2 + c*z^2 = 0 with tidy signs, e.g. "x^2 - 5y^2 + 3z^2 = 0".
std::string form_str(Int a, Int b, Int c) {
    const Int coeffs[3] = {a, b, c};
    const char* vars[3] = {"x^2", "y^2", "z^2"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        Int cf = coeffs[i];
        if (cf == 0) continue;
        if (s.empty()) {
            if (cf < 0) s += "-";
        } else {
            s += cf < 0 ? " - " : " + ";
        }
        s += term(cf < 0 ? -cf : cf, vars[i]);
    }
    s += " = 0";
    return s;
}

std::string triple_str(Int a, Int b, Int c) {
    return "(" + istr(a) + ", " + istr(b) + ", " + istr(c) + ")";
}

std::string pair_str(Int a, Int b) { return "(" + istr(a) + ", " + istr(b) + ")"; }

std::string symbol_str(const PrimeCondition& pc) {
    return "(" + istr(pc.base) + "/" + istr(pc.p) + ")";
}

std::string failing_symbols(const TernaryDecision& dec) {
    std::string s;
    for (const auto& pc : dec.conditions) {
        if (pc.symbol != -1) continue;
        if (!s.empty()) s += ", ";
        s += symbol_str(pc);
    }
    return s;
}

// Smallest prime p = 3 (mod 4) dividing m to an odd power; 0 when none.
Int obstructing_prime(Int m) {
    for (const auto& [p, e] : factorize(m))
        if (p % 4 == 3 && e % 2 == 1) return p;
    return 0;
}

}  // namespace

Verdict schutzenberger(const DesignParams& params) {
    Verdict verdict;
    verdict.condition = "order must be a perfect square for even v";
    verdict.tag = "schutzenberger";
    verdict.note("v", istr(params.v));
    if (params.v % 2 != 0) {
        verdict.status = Status::inapplicable;
        verdict.detail = "v = " + istr(params.v) + " is odd; the even-v condition does not apply";
        return verdict;
    }
    Int n = params.order();
    if (n < 1) throw inconsistent_input_error("order k - lambda must be positive");
    verdict.note("order", istr(n));
    if (is_perfect_square(n)) {
        Rat root = rat_sqrt(Rat(n));
        verdict.status = Status::pass;
        verdict.detail = "order " + istr(n) + " = " + root.str() + "^2";
        verdict.note("root", root.str());
    } else {
        verdict.status = Status::fail;
        verdict.detail = "order " + istr(n) + " is not a perfect square";
        verdict.note("square_free_part", istr(square_free_part(n)));
    }
    return verdict;
}

Verdict brc(const DesignParams& params) {
    Verdict verdict;
    verdict.condition = "ternary condition for odd v";
    verdict.tag = "bruck-ryser-chowla";
    verdict.note("v", istr(params.v));
    if (params.v % 2 == 0) {
        verdict.status = Status::inapplicable;
        verdict.detail = "v = " + istr(params.v) + " is even; the odd-v condition does not apply";
        return verdict;
    }
    Int n = params.order();
    if (n < 1 || params.lambda < 1)
        throw inconsistent_input_error("ternary condition needs k > lambda > 0");
    Int sign = ((params.v - 1) / 2) % 2 == 0 ? 1 : -1;
    Int a = 1, b = -n, c = -sign * params.lambda;
    verdict.note("form", form_str(a, b, c));
    TernaryDecision dec = ternary_decide(a, b, c);
    verdict.note("normalized", triple_str(dec.normalized.a, dec.normalized.b, dec.normalized.c));
    if (dec.solvable) {
        verdict.status = Status::pass;
        verdict.detail = "the form has a nontrivial rational zero";
    } else {
        verdict.status = Status::fail;
        std::string symbols = failing_symbols(dec);
        if (!dec.mixed_signs) {
            verdict.detail = "the form is definite and has no nontrivial zero";
        } else {
            verdict.detail = "no nontrivial zero: failing symbols " + symbols;
            verdict.note("failing", symbols);
        }
    }
    return verdict;
}

Verdict bruck_ryser_plane(Int n) {
    if (n < 2) throw inconsistent_input_error("plane order must be at least 2");
    Verdict verdict;
    verdict.condition = "plane order sum-of-two-squares condition";
    verdict.tag = "bruck-ryser";
    verdict.note("n", istr(n));
    Int rem = n % 4;
    verdict.note("n_mod_4", istr(rem));
    if (rem == 0 || rem == 3) {
        verdict.status = Status::pass;
        verdict.detail = "n = " + istr(rem) + " (mod 4) imposes no condition";
        return verdict;
    }
    if (auto two = sum_two_squares(n)) {
        verdict.status = Status::pass;
        verdict.detail = "n = " + istr(n) + " = " + istr(two->first) + "^2 + " +
                         istr(two->second) + "^2";
        verdict.note("two_squares", pair_str(two->first, two->second));
    } else {
        verdict.status = Status::fail;
        verdict.detail = "n = " + istr(n) + " = " + istr(rem) +
                         " (mod 4) is not a sum of two squares";
        verdict.note("obstructing_prime", istr(obstructing_prime(n)));
    }
    return verdict;
}

Verdict main_theorem_case(Int w, int d, Int alpha, Int beta) {
    if (d != 1 && d != 2) throw inconsistent_input_error("d must be 1 or 2");
    if (w < 1) throw inconsistent_input_error("w must be positive");
    if (alpha < 1 || beta < 1)
        throw inconsistent_input_error("alpha >= 1 and beta >= 1 required");

    int rem = static_cast<int>(w % 4);
    int case_id = 0;
    switch (rem) {
        case 0: case_id = d == 1 ? 1 : 2; break;
        case 2: case_id = d == 1 ? 3 : 4; break;
        case 1: case_id = d == 1 ? 5 : 6; break;
        case 3: case_id = d == 1 ? 7 : 8; break;
    }

    Verdict verdict;
    verdict.tag = "case-" + std::to_string(case_id);
    switch (case_id) {
        case 1:
        case 3: verdict.condition = "beta must be a perfect square"; break;
        case 2:
        case 4: verdict.condition = "beta must be a sum of two squares"; break;
        case 5:
        case 7: verdict.condition = "alpha and beta must share their square-free part"; break;
        case 6:
        case 8: verdict.condition = "x^2 - beta y^2 + alpha z^2 = 0 must be solvable"; break;
    }
    verdict.note("w", istr(w));
    verdict.note("w_mod_4", istr(rem));
    verdict.note("d", istr(d));
    verdict.note("alpha", istr(alpha));
    verdict.note("beta", istr(beta));

    // Cases 3..6 presuppose alpha is a sum of two squares.
    if (case_id >= 3 && case_id <= 6) {
        auto two = sum_two_squares(alpha);
        if (!two) {
            verdict.status = Status::inapplicable;
            verdict.detail = "alpha = " + istr(alpha) +
                             " is not a sum of two squares; the case hypothesis fails";
            verdict.note("alpha_square_free", istr(square_free_part(alpha)));
            return verdict;
        }
        verdict.note("alpha_two_squares", pair_str(two->first, two->second));
    }

    switch (case_id) {
        case 1:
        case 3:
            if (is_perfect_square(beta)) {
                Rat root = rat_sqrt(Rat(beta));
                verdict.status = Status::pass;
                verdict.detail = "beta = " + istr(beta) + " = " + root.str() + "^2";
                verdict.note("beta_root", root.str());
            } else {
                verdict.status = Status::fail;
                verdict.detail = "beta = " + istr(beta) + " is not a perfect square";
                verdict.note("beta_square_free", istr(square_free_part(beta)));
            }
            break;
        case 2:
        case 4:
            if (auto two = sum_two_squares(beta)) {
                verdict.status = Status::pass;
                verdict.detail = "beta = " + istr(beta) + " = " + istr(two->first) + "^2 + " +
                                 istr(two->second) + "^2";
                verdict.note("beta_two_squares", pair_str(two->first, two->second));
            } else {
                verdict.status = Status::fail;
                verdict.detail = "beta = " + istr(beta) + " is not a sum of two squares";
                verdict.note("obstructing_prime", istr(obstructing_prime(beta)));
            }
            break;
        case 5:
        case 7: {
            Int astar = square_free_part(alpha);
            Int bstar = square_free_part(beta);
            verdict.note("alpha_star", istr(astar));
            verdict.note("beta_star", istr(bstar));
            if (astar == bstar) {
                verdict.status = Status::pass;
                verdict.detail = "alpha and beta share the square-free part " + istr(astar);
            } else {
                verdict.status = Status::fail;
                verdict.detail = "square-free parts differ: alpha* = " + istr(astar) +
                                 ", beta* = " + istr(bstar);
            }
            break;
        }
        case 6:
        case 8: {
            TernaryDecision dec = ternary_decide(1, -beta, alpha);
            verdict.note("form", form_str(1, -beta, alpha));
            verdict.note("normalized",
                         triple_str(dec.normalized.a, dec.normalized.b, dec.normalized.c));
            if (dec.solvable) {
                verdict.status = Status::pass;
                verdict.detail = "the ternary form has a nontrivial rational zero";
            } else {
                verdict.status = Status::fail;
                std::string symbols = failing_symbols(dec);
                verdict.detail = "no nontrivial zero: failing symbols " + symbols;
                verdict.note("failing", symbols);
            }
            break;
        }
    }
    return verdict;
}

CertOutcome certificate_verdict(const Certificate& cert) {
    CertOutcome out;
    out.scalar = scalar_verify(cert.spec);
    out.condition = main_theorem_case(cert.spec.w(), cert.spec.d, cert.spec.alpha(),
                                      cert.spec.beta());
    if (out.scalar.status != Status::pass) {
        out.overall = "invalid-certificate";
    } else if (out.condition.status == Status::pass) {
        out.overall = "certificate-consistent";
    } else if (out.condition.status == Status::fail) {
        out.overall = "obstruction";
    } else {
        out.overall = "condition-inapplicable";
    }
    return out;
}

namespace {

void finish_report(Report& rep, const DesignParams& params) {
    rep.certificates_consulted = true;
    for (const Certificate& cert : catalog()) {
        const DesignParams& p = cert.spec.params;
        if (p.v != params.v || p.k != params.k || p.lambda != params.lambda) continue;
        rep.certificates.push_back({cert.name, certificate_verdict(cert)});
    }
    bool obstructed = false;
    for (const auto& line : rep.certificates)
        if (line.outcome.overall == "obstruction") obstructed = true;
    if (obstructed) {
        rep.conclusion =
            "obstruction: a matching border satisfies the scalar identities but violates "
            "its case condition (conditional on border realizability)";
        rep.exit_code = 1;
    } else if (rep.certificates.empty()) {
        rep.conclusion = "no obstruction found; no matching certificate in the catalog";
        rep.exit_code = 0;
    } else {
        rep.conclusion = "no obstruction found; matching certificates are consistent";
        rep.exit_code = 0;
    }
}

}  // namespace

Report report_params(const DesignParams& params) {
    Report rep;
    rep.subject = "symmetric design " +
                  triple_str(params.v, params.k, params.lambda);
    Verdict adm = validate_params(params);
    rep.classical.push_back(adm);
    if (adm.status != Status::pass) {
        rep.conclusion = "parameters inadmissible; nothing further evaluated";
        rep.exit_code = 1;
        return rep;
    }
    Verdict gate = params.v % 2 == 0 ? schutzenberger(params) : brc(params);
    bool gate_ok = gate.status != Status::fail;
    rep.classical.push_back(std::move(gate));
    if (!gate_ok) {
        rep.conclusion = "classical condition fails; no certificate consulted";
        rep.exit_code = 1;
        return rep;
    }
    finish_report(rep, params);
    return rep;
}

Report report_plane(Int n) {
    DesignParams params = plane_params(n);
    Report rep;
    rep.subject = "projective plane of order " + istr(n);
    Verdict adm = validate_params(params);
    rep.classical.push_back(adm);
    if (adm.status != Status::pass) {
        rep.conclusion = "parameters inadmissible; nothing further evaluated";
        rep.exit_code = 1;
        return rep;
    }
    Verdict gate = bruck_ryser_plane(n);
    bool gate_ok = gate.status != Status::fail;
    rep.classical.push_back(std::move(gate));
    if (!gate_ok) {
        rep.conclusion = "classical condition fails; no certificate consulted";
        rep.exit_code = 1;
        return rep;
    }
    finish_report(rep, params);
    return rep;
}

namespace {

void append_verdict_text(std::string& out, const Verdict& v, const std::string& indent) {
    out += indent + "[" + status_str(v.status) + "] " + v.condition + " {" + v.tag + "}\n";
    out += indent + "    " + v.detail + "\n";
    for (const auto& [key, value] : v.evidence)
        out += indent + "    " + key + " = " + value + "\n";
}

void append_verdict_structured(std::string& out, const Verdict& v, const std::string& prefix) {
    out += prefix + "condition=" + v.condition + "\n";
    out += prefix + "status=" + status_str(v.status) + "\n";
    out += prefix + "detail=" + v.detail + "\n";
    for (const auto& [key, value] : v.evidence)
        out += prefix + "evidence." + key + "=" + value + "\n";
    out += prefix + "paper_tag=" + v.tag + "\n";
}

}  // namespace

std::string render_verdict(const Verdict& verdict, bool structured) {
    std::string out;
    if (structured) {
        append_verdict_structured(out, verdict, "");
    } else {
        append_verdict_text(out, verdict, "");
    }
    return out;
}

std::string render_report(const Report& report, bool structured) {
    std::string out;
    if (structured) {
        out += "subject=" + report.subject + "\n";
        for (const Verdict& v : report.classical) {
            out += "record=classical\n";
            append_verdict_structured(out, v, "");
        }
        out += "certificates_consulted=";
        out += report.certificates_consulted ? "yes" : "no";
        out += "\n";
        for (const auto& line : report.certificates) {
            out += "record=certificate\n";
            out += "name=" + line.name + "\n";
            out += "overall=" + line.outcome.overall + "\n";
            append_verdict_structured(out, line.outcome.scalar, "scalar.");
            append_verdict_structured(out, line.outcome.condition, "case.");
        }
        out += "record=conclusion\n";
        out += "conclusion=" + report.conclusion + "\n";
        out += "exit=" + std::to_string(report.exit_code) + "\n";
    } else {
        out += "feasibility report: " + report.subject + "\n";
        for (const Verdict& v : report.classical) append_verdict_text(out, v, "");
        if (!report.certificates_consulted) {
            out += "no certificate consulted\n";
        } else if (report.certificates.empty()) {
            out += "no matching certificate in the catalog\n";
        }
        for (const auto& line : report.certificates) {
            out += "certificate " + line.name + ": " + line.outcome.overall + "\n";
            append_verdict_text(out, line.outcome.scalar, "  ");
            append_verdict_text(out, line.outcome.condition, "  ");
        }
        out += "conclusion: " + report.conclusion + "\n";
    }
    return out;
}

}  // namespace symdes
