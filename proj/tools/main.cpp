#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "symdes/border.hpp"
#include "symdes/designs.hpp"
#include "symdes/elimination.hpp"
#include "symdes/errors.hpp"
#include "symdes/feasibility.hpp"
#include "symdes/matrix_io.hpp"
#include "symdes/numtheory.hpp"

namespace {

using namespace symdes;

int verdict_exit(const Verdict& v) { return v.status == Status::fail ? 1 : 0; }

int outcome_exit(const CertOutcome& out) {
    if (out.overall == "certificate-consistent") return 0;
    if (out.overall == "condition-inapplicable") return 0;
    return 1;
}

bool outcome_matches(const std::string& recorded, const std::string& computed) {
    if (recorded == "consistent") return computed == "certificate-consistent";
    return recorded == computed;
}

void print_outcome(const CertOutcome& out, bool structured) {
    if (structured) {
        std::cout << "overall=" << out.overall << "\n";
        std::istringstream scalar(render_verdict(out.scalar, true));
        for (std::string line; std::getline(scalar, line);)
            std::cout << "scalar." << line << "\n";
        std::istringstream cond(render_verdict(out.condition, true));
        for (std::string line; std::getline(cond, line);)
            std::cout << "case." << line << "\n";
    } else {
        std::cout << "overall: " << out.overall << "\n";
        std::cout << render_verdict(out.scalar, false);
        std::cout << render_verdict(out.condition, false);
    }
}

std::string form_text(Int a, Int b, Int c) {
    std::ostringstream s;
    s << a << "x^2";
    s << (b < 0 ? " - " : " + ") << (b < 0 ? -b : b) << "y^2";
    s << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << "z^2";
    s << " = 0";
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact feasibility checks and bordered-matrix certificates for "
                 "symmetric block designs"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };
    auto structured = [&] { return format == "structured"; };

    long long v = 0, k = 0, lambda = 0, n = 0, q = 0;
    long long alpha = 0, beta = 0, l = 0, s = 1, bound = 0;
    long long ta = 0, tb = 0, tc = 0;
    int d = 1;
    std::string in_path, design_path, cert_path, out_path, name;

    CLI::App* c_params = app.add_subcommand("params",
                                            "feasibility report for design parameters");
    c_params->add_option("v", v)->required();
    c_params->add_option("k", k)->required();
    c_params->add_option("lambda", lambda)->required();
    add_format(c_params);

    CLI::App* c_plane = app.add_subcommand("plane", "feasibility report for a plane order");
    c_plane->add_option("n", n)->required();
    add_format(c_plane);

    CLI::App* c_brc = app.add_subcommand("brc", "ternary condition for odd v");
    c_brc->add_option("v", v)->required();
    c_brc->add_option("k", k)->required();
    c_brc->add_option("lambda", lambda)->required();
    add_format(c_brc);

    CLI::App* c_schutz = app.add_subcommand("schutz", "square-order condition for even v");
    c_schutz->add_option("v", v)->required();
    c_schutz->add_option("k", k)->required();
    c_schutz->add_option("lambda", lambda)->required();
    add_format(c_schutz);

    CLI::App* c_pg2 = app.add_subcommand("pg2", "incidence matrix of PG(2, q), q prime");
    c_pg2->add_option("q", q)->required();
    c_pg2->add_option("--out", out_path, "write the matrix to this file");
    add_format(c_pg2);

    CLI::App* c_verify = app.add_subcommand("verify-incidence",
                                            "check a matrix for the design identities");
    c_verify->add_option("file", in_path)->required();
    c_verify->add_option("v", v)->required();
    c_verify->add_option("k", k)->required();
    c_verify->add_option("lambda", lambda)->required();
    add_format(c_verify);

    CLI::App* c_ryser = app.add_subcommand("ryser-border",
                                           "check the classical rational border identity");
    c_ryser->add_option("file", in_path)->required();
    c_ryser->add_option("v", v)->required();
    c_ryser->add_option("k", k)->required();
    c_ryser->add_option("lambda", lambda)->required();
    add_format(c_ryser);

    CLI::App* c_certv = app.add_subcommand("cert-verify",
                                           "verify a border certificate file");
    c_certv->add_option("file", cert_path)->required();
    add_format(c_certv);

    CLI::App* c_catalog = app.add_subcommand("cert-catalog",
                                             "list or inspect built-in certificates");
    c_catalog->add_option("name", name, "inspect one entry");
    add_format(c_catalog);

    CLI::App* c_assemble = app.add_subcommand("assemble",
                                              "build the bordered matrix of a certificate");
    c_assemble->add_option("design", design_path)->required();
    c_assemble->add_option("cert", cert_path)->required();
    c_assemble->add_option("--out", out_path)->required();
    add_format(c_assemble);

    CLI::App* c_elim = app.add_subcommand("eliminate",
                                          "run the symbolic elimination on a matrix");
    c_elim->add_option("file", in_path)->required();
    c_elim->add_option("--alpha", alpha)->required();
    c_elim->add_option("--beta", beta)->required();
    c_elim->add_option("--d", d)->required();
    add_format(c_elim);

    CLI::App* c_construct = app.add_subcommand("construct",
                                               "search for a border over given parameters");
    c_construct->add_option("v", v)->required();
    c_construct->add_option("k", k)->required();
    c_construct->add_option("lambda", lambda)->required();
    c_construct->add_option("--l", l)->required();
    c_construct->add_option("--d", d)->required();
    c_construct->add_option("--s", s)->required();
    c_construct->add_option("--bound", bound)->required();
    c_construct->add_option("--out", out_path, "write the found spec to this file");
    add_format(c_construct);

    CLI::App* c_oracle = app.add_subcommand("oracle-ternary",
                                            "brute-force witness search for a ternary form");
    c_oracle->add_option("a", ta)->required();
    c_oracle->add_option("b", tb)->required();
    c_oracle->add_option("c", tc)->required();
    c_oracle->add_option("--bound", bound)->required();
    add_format(c_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_params->parsed()) {
            Report rep = report_params({v, k, lambda});
            std::cout << render_report(rep, structured());
            return rep.exit_code;
        }
        if (c_plane->parsed()) {
            Report rep = report_plane(n);
            std::cout << render_report(rep, structured());
            return rep.exit_code;
        }
        if (c_brc->parsed()) {
            Verdict ver = brc({v, k, lambda});
            std::cout << render_verdict(ver, structured());
            return verdict_exit(ver);
        }
        if (c_schutz->parsed()) {
            Verdict ver = schutzenberger({v, k, lambda});
            std::cout << render_verdict(ver, structured());
            return verdict_exit(ver);
        }
        if (c_pg2->parsed()) {
            RatMatrix m = pg2(q);
            if (out_path.empty()) {
                write_matrix(std::cout, m);
            } else {
                write_matrix_file(out_path, m);
                if (structured()) {
                    std::cout << "status=ok\nrows=" << m.rows() << "\ncols=" << m.cols()
                              << "\npath=" << out_path << "\n";
                } else {
                    std::cout << "wrote " << m.rows() << "x" << m.cols() << " matrix to "
                              << out_path << "\n";
                }
            }
            return 0;
        }
        if (c_verify->parsed()) {
            RatMatrix m = read_matrix_file(in_path);
            Verdict ver = incidence_check(m, {v, k, lambda});
            std::cout << render_verdict(ver, structured());
            return verdict_exit(ver);
        }
        if (c_ryser->parsed()) {
            RatMatrix m = read_matrix_file(in_path);
            Verdict ver = ryser_classical_border(m, {v, k, lambda});
            std::cout << render_verdict(ver, structured());
            return verdict_exit(ver);
        }
        if (c_certv->parsed()) {
            Certificate cert;
            cert.name = cert_path;
            cert.provenance = "file";
            cert.spec = read_border_spec_file(cert_path);
            CertOutcome out = certificate_verdict(cert);
            print_outcome(out, structured());
            return outcome_exit(out);
        }
        if (c_catalog->parsed()) {
            if (!name.empty()) {
                const Certificate* cert = catalog_entry(name);
                if (!cert) {
                    std::cerr << "error: no catalog entry named " << name << "\n";
                    return 2;
                }
                CertOutcome out = certificate_verdict(*cert);
                if (structured()) {
                    std::cout << "name=" << cert->name << "\n"
                              << "provenance=" << cert->provenance << "\n"
                              << "recorded=" << cert->verdict << "\n";
                } else {
                    std::cout << "name: " << cert->name << "\n"
                              << "provenance: " << cert->provenance << "\n"
                              << "recorded: " << cert->verdict << "\n";
                }
                print_outcome(out, structured());
                return outcome_matches(cert->verdict, out.overall) ? outcome_exit(out) : 2;
            }
            bool all_match = true;
            for (const Certificate& cert : catalog()) {
                CertOutcome out = certificate_verdict(cert);
                bool match = outcome_matches(cert.verdict, out.overall);
                all_match = all_match && match;
                if (structured()) {
                    std::cout << "record=certificate\nname=" << cert.name
                              << "\nrecorded=" << cert.verdict << "\ncomputed=" << out.overall
                              << "\nmatch=" << (match ? "yes" : "no") << "\n";
                } else {
                    std::cout << cert.name << ": recorded=" << cert.verdict
                              << " computed=" << out.overall << (match ? "" : "  MISMATCH")
                              << "\n";
                }
            }
            return all_match ? 0 : 1;
        }
        if (c_assemble->parsed()) {
            RatMatrix design = read_matrix_file(design_path);
            BorderSpec spec = read_border_spec_file(cert_path);
            RatMatrix m = assemble(design, spec);
            write_matrix_file(out_path, m);
            bool gram = gram_check(m, Rat(spec.alpha()), Rat(spec.beta()));
            if (structured()) {
                std::cout << "status=" << (gram ? "pass" : "fail") << "\nrows=" << m.rows()
                          << "\ncols=" << m.cols() << "\nalpha=" << spec.alpha()
                          << "\nbeta=" << spec.beta() << "\npath=" << out_path << "\n";
            } else {
                std::cout << "assembled " << m.rows() << "x" << m.cols() << " matrix to "
                          << out_path << "; gram identity "
                          << (gram ? "holds" : "FAILS") << " (alpha=" << spec.alpha()
                          << ", beta=" << spec.beta() << ")\n";
            }
            return gram ? 0 : 1;
        }
        if (c_elim->parsed()) {
            RatMatrix m = read_matrix_file(in_path);
            try {
                EliminationTrace trace = eliminate(m, Rat(alpha), Rat(beta), d);
                std::cout << render_trace(trace);
                Verdict rv = replay(trace);
                std::cout << render_verdict(rv, structured());
                return verdict_exit(rv);
            } catch (const degenerate_elimination_error& e) {
                std::cout << "degenerate: " << e.what() << "\n";
                std::cout << render_trace(e.trace());
                return 1;
            }
        }
        if (c_construct->parsed()) {
            auto found = construct_search({v, k, lambda}, l, d, s, bound);
            if (!found) {
                if (structured())
                    std::cout << "status=none\nbound=" << bound << "\n";
                else
                    std::cout << "no border found within bound " << bound << "\n";
                return 1;
            }
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw error("cannot write " + out_path);
                write_border_spec(out, *found);
            } else {
                write_border_spec(std::cout, *found);
            }
            Verdict ver = scalar_verify(*found);
            std::cout << render_verdict(ver, structured());
            return verdict_exit(ver);
        }
        if (c_oracle->parsed()) {
            TernaryDecision dec = ternary_decide(ta, tb, tc);
            auto witness = ternary_witness_search(ta, tb, tc, bound);
            bool agree = dec.solvable == witness.has_value();
            if (structured()) {
                std::cout << "form=" << form_text(ta, tb, tc) << "\n";
                std::cout << "normalized=(" << dec.normalized.a << ", " << dec.normalized.b
                          << ", " << dec.normalized.c << ")\n";
                std::cout << "solvable=" << (dec.solvable ? "yes" : "no") << "\n";
                if (witness)
                    std::cout << "witness=(" << witness->x << ", " << witness->y << ", "
                              << witness->z << ")\n";
                else
                    std::cout << "witness=none\n";
                std::cout << "bound=" << bound << "\n";
                std::cout << "agreement=" << (agree ? "yes" : (dec.solvable ? "unknown" : "no"))
                          << "\n";
            } else {
                std::cout << "form: " << form_text(ta, tb, tc) << "\n";
                std::cout << "decision: " << (dec.solvable ? "solvable" : "insolvable") << "\n";
                if (witness)
                    std::cout << "witness: (" << witness->x << ", " << witness->y << ", "
                              << witness->z << ")\n";
                else
                    std::cout << "witness: none within bound " << bound << "\n";
                std::cout << "agreement: "
                          << (agree ? "yes" : (dec.solvable ? "unknown (bound too small?)" : "no"))
                          << "\n";
            }
            return witness ? 0 : 1;
        }
    } catch (const symdes::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
