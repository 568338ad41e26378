#include "symdes/border.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "symdes/errors.hpp"

namespace symdes {
namespace {

std::string params_str(const DesignParams& p) {
    return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
           std::to_string(p.lambda) + ")";
}

}  // namespace

void validate_shape(const BorderSpec& spec) {
    auto bad = [](const std::string& why) { throw inconsistent_input_error("border spec: " + why); };
    if (spec.d != 1 && spec.d != 2) bad("d must be 1 or 2");
    if (spec.s < 1) bad("s must be at least 1");
    if (spec.l < 1) bad("l must be at least 1");
    if (spec.zero_cols < 0) bad("zerocols must be nonnegative");
    const Int p = static_cast<Int>(spec.a.size());
    if (p < 1) bad("a must have at least one entry");
    if (p + spec.zero_cols != spec.s + spec.d)
        bad("column count a+zerocols = " + std::to_string(p + spec.zero_cols) +
            " must equal s+d = " + std::to_string(spec.s + spec.d));
    if (static_cast<Int>(spec.c.size()) != spec.s) bad("c must have s entries");
    if (spec.a22.rows() != spec.s || spec.a22.cols() != p)
        bad("A22 must be " + std::to_string(spec.s) + "x" + std::to_string(p));
    if (spec.a23.rows() != spec.s || spec.a23.cols() != spec.zero_cols)
        bad("A23 must be " + std::to_string(spec.s) + "x" + std::to_string(spec.zero_cols));
}

RatMatrix assemble(const RatMatrix& design, const BorderSpec& spec) {
    validate_shape(spec);
    const Int v = spec.params.v;
    if (design.rows() != v || design.cols() != v)
        throw inconsistent_input_error(
            "assemble: design matrix is " + std::to_string(design.rows()) + "x" +
            std::to_string(design.cols()) + ", expected " + std::to_string(v) + "x" +
            std::to_string(v) + " for params " + params_str(spec.params));
    if (!is_zero_one(design))
        throw inconsistent_input_error("assemble: design matrix entries must be 0 or 1");

    const Int p = static_cast<Int>(spec.a.size());
    const Int z = spec.zero_cols;
    const Int w = v + spec.s;
    RatMatrix c(w, w + spec.d);
    c.topLeftCorner(v, v) = design;
    for (Int i = 0; i < v; ++i) {
        for (Int j = 0; j < p; ++j) c(i, v + j) = spec.a[j];
        for (Int j = 0; j < z; ++j) c(i, v + p + j) = Rat(0);
    }
    for (Int r = 0; r < spec.s; ++r) {
        for (Int i = 0; i < v; ++i) c(v + r, i) = spec.c[r];
        for (Int j = 0; j < p; ++j) c(v + r, v + j) = spec.a22(r, j);
        for (Int j = 0; j < z; ++j) c(v + r, v + p + j) = spec.a23(r, j);
    }
    return c;
}

Verdict scalar_verify(const BorderSpec& spec) {
    validate_shape(spec);
    const Int p = static_cast<Int>(spec.a.size());
    const Rat v(spec.params.v), k(spec.params.k), lam(spec.params.lambda);
    const Rat alpha(spec.alpha()), beta(spec.beta());

    Verdict out;
    out.condition = "border-scalar-identities";
    out.tag = "scalar-identities";
    out.note("params", params_str(spec.params))
        .note("w", std::to_string(spec.w()))
        .note("d", std::to_string(spec.d))
        .note("alpha", std::to_string(spec.alpha()))
        .note("beta", std::to_string(spec.beta()));
    auto fail = [&](const std::string& which, const Rat& got, const Rat& want) {
        out.status = Status::fail;
        out.detail = which + " evaluates to " + got.str() + ", expected " + want.str();
        out.note("failed", which).note("got", got.str()).note("expected", want.str());
        return out;
    };

    Rat asq(0);
    for (const Rat& aj : spec.a) asq += aj * aj;
    if (lam + asq != beta) return fail("E1 (lambda + sum a^2)", lam + asq, beta);
    if (k + asq != alpha + beta) return fail("E2 (k + sum a^2)", k + asq, alpha + beta);

    for (Int i = 0; i < spec.s; ++i) {
        Rat e3 = k * spec.c[i];
        for (Int j = 0; j < p; ++j) e3 += spec.a[j] * spec.a22(i, j);
        if (e3 != beta) return fail("E3 (row " + std::to_string(i + 1) + ")", e3, beta);
    }
    for (Int i = 0; i < spec.s; ++i) {
        Rat e4 = v * spec.c[i] * spec.c[i];
        for (Int j = 0; j < p; ++j) e4 += spec.a22(i, j) * spec.a22(i, j);
        for (Int j = 0; j < spec.zero_cols; ++j) e4 += spec.a23(i, j) * spec.a23(i, j);
        if (e4 != alpha + beta)
            return fail("E4 (row " + std::to_string(i + 1) + ")", e4, alpha + beta);
    }
    for (Int i = 0; i < spec.s; ++i) {
        for (Int j = i + 1; j < spec.s; ++j) {
            Rat e5 = v * spec.c[i] * spec.c[j];
            for (Int t = 0; t < p; ++t) e5 += spec.a22(i, t) * spec.a22(j, t);
            for (Int t = 0; t < spec.zero_cols; ++t) e5 += spec.a23(i, t) * spec.a23(j, t);
            if (e5 != beta)
                return fail("E5 (rows " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                            e5, beta);
        }
    }

    // No assembled border column may be constant.
    for (Int j = 0; j < p; ++j) {
        bool constant = true;
        for (Int i = 0; i < spec.s && constant; ++i)
            if (spec.a22(i, j) != spec.a[j]) constant = false;
        if (constant) {
            out.status = Status::fail;
            out.detail = "assembled column for a[" + std::to_string(j + 1) + "] is constant";
            out.note("failed", "constant-column");
            return out;
        }
    }
    for (Int j = 0; j < spec.zero_cols; ++j) {
        bool constant = true;
        for (Int i = 0; i < spec.s && constant; ++i)
            if (!spec.a23(i, j).is_zero()) constant = false;
        if (constant) {
            out.status = Status::fail;
            out.detail = "assembled zero column " + std::to_string(j + 1) + " is constant";
            out.note("failed", "constant-column");
            return out;
        }
    }

    out.status = Status::pass;
    out.detail = "identities E1-E5 and the column conditions hold";
    return out;
}

namespace {

struct SpecLine {
    int number = 0;
    std::vector<std::string> tokens;
    std::vector<int> columns;
};

// Reads the next line carrying tokens; '#' comments and blank lines skip.
std::optional<SpecLine> next_line(std::istream& in, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        SpecLine out;
        out.number = line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == '#') break;
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
                   line[i] != '#')
                ++i;
            out.tokens.push_back(line.substr(start, i - start));
            out.columns.push_back(static_cast<int>(start) + 1);
        }
        if (!out.tokens.empty()) return out;
    }
    return std::nullopt;
}

SpecLine expect_line(std::istream& in, int& line_no, const std::string& what) {
    auto l = next_line(in, line_no);
    if (!l) throw parse_error("unexpected end of input, expected " + what, line_no + 1, 1);
    return *l;
}

SpecLine expect_keyword(std::istream& in, int& line_no, const std::string& key) {
    SpecLine l = expect_line(in, line_no, "'" + key + "'");
    if (l.tokens[0] != key)
        throw parse_error("expected '" + key + "', got '" + l.tokens[0] + "'", l.number,
                          l.columns[0]);
    return l;
}

Int parse_int_tok(const SpecLine& l, std::size_t idx, const std::string& what) {
    if (idx >= l.tokens.size())
        throw parse_error("missing " + what, l.number,
                          l.columns.empty() ? 1 : l.columns.back() + 1);
    try {
        std::size_t pos = 0;
        Int value = std::stoll(l.tokens[idx], &pos);
        if (pos != l.tokens[idx].size()) throw std::runtime_error("trailing");
        return value;
    } catch (const std::exception&) {
        throw parse_error(what + " must be an integer, got '" + l.tokens[idx] + "'", l.number,
                          l.columns[idx]);
    }
}

Rat parse_rat_tok(const SpecLine& l, std::size_t idx) {
    try {
        return rat_from_string(l.tokens[idx]);
    } catch (const error& e) {
        throw parse_error(e.what(), l.number, l.columns[idx]);
    }
}

RatMatrix parse_block(std::istream& in, int& line_no, const std::string& key, Int rows,
                      Int cols) {
    expect_keyword(in, line_no, key);
    RatMatrix m(rows, cols);
    for (Int r = 0; r < rows; ++r) {
        SpecLine l = expect_line(in, line_no, key + " row " + std::to_string(r + 1));
        if (static_cast<Int>(l.tokens.size()) != cols)
            throw parse_error(key + " row " + std::to_string(r + 1) + " has " +
                                  std::to_string(l.tokens.size()) + " entries, expected " +
                                  std::to_string(cols),
                              l.number, l.columns[0]);
        for (Int j = 0; j < cols; ++j) m(r, j) = parse_rat_tok(l, j);
    }
    return m;
}

}  // namespace

BorderSpec read_border_spec(std::istream& in) {
    int line_no = 0;
    BorderSpec spec;

    SpecLine l = expect_keyword(in, line_no, "params");
    if (l.tokens.size() != 4)
        throw parse_error("'params' takes exactly v k lambda", l.number, l.columns[0]);
    spec.params = {parse_int_tok(l, 1, "v"), parse_int_tok(l, 2, "k"),
                   parse_int_tok(l, 3, "lambda")};

    l = expect_keyword(in, line_no, "l");
    spec.l = parse_int_tok(l, 1, "l");
    l = expect_keyword(in, line_no, "d");
    spec.d = static_cast<int>(parse_int_tok(l, 1, "d"));
    l = expect_keyword(in, line_no, "s");
    spec.s = parse_int_tok(l, 1, "s");

    l = expect_keyword(in, line_no, "a");
    for (std::size_t i = 1; i < l.tokens.size(); ++i) spec.a.push_back(parse_rat_tok(l, i));
    if (spec.a.empty()) throw parse_error("'a' needs at least one entry", l.number, l.columns[0]);

    l = expect_keyword(in, line_no, "zerocols");
    spec.zero_cols = parse_int_tok(l, 1, "zerocols");

    l = expect_keyword(in, line_no, "c");
    for (std::size_t i = 1; i < l.tokens.size(); ++i) spec.c.push_back(parse_rat_tok(l, i));

    spec.a22 = parse_block(in, line_no, "A22", spec.s, static_cast<Int>(spec.a.size()));
    if (spec.zero_cols > 0)
        spec.a23 = parse_block(in, line_no, "A23", spec.s, spec.zero_cols);
    else
        spec.a23 = RatMatrix(spec.s, 0);

    if (auto extra = next_line(in, line_no))
        throw parse_error("unexpected trailing content '" + extra->tokens[0] + "'", extra->number,
                          extra->columns[0]);
    validate_shape(spec);
    return spec;
}

BorderSpec read_border_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open certificate file: " + path);
    return read_border_spec(in);
}

void write_border_spec(std::ostream& out, const BorderSpec& spec) {
    out << "params " << spec.params.v << " " << spec.params.k << " " << spec.params.lambda
        << "\n";
    out << "l " << spec.l << "\n";
    out << "d " << spec.d << "\n";
    out << "s " << spec.s << "\n";
    out << "a";
    for (const Rat& aj : spec.a) out << " " << aj.str();
    out << "\n";
    out << "zerocols " << spec.zero_cols << "\n";
    out << "c";
    for (const Rat& ci : spec.c) out << " " << ci.str();
    out << "\n";
    out << "A22\n";
    for (Int r = 0; r < spec.s; ++r) {
        for (Eigen::Index j = 0; j < spec.a22.cols(); ++j)
            out << (j ? " " : "") << spec.a22(r, j).str();
        out << "\n";
    }
    if (spec.zero_cols > 0) {
        out << "A23\n";
        for (Int r = 0; r < spec.s; ++r) {
            for (Eigen::Index j = 0; j < spec.a23.cols(); ++j)
                out << (j ? " " : "") << spec.a23(r, j).str();
            out << "\n";
        }
    }
}

namespace {

// Reduced fractions with |numerator| <= bound, denominator <= bound, ordered
// by denominator then numerator. Deterministic scan order for the search.
std::vector<Rat> rational_grid(Int bound) {
    std::vector<Rat> out;
    for (Int den = 1; den <= bound; ++den)
        for (Int num = -bound; num <= bound; ++num) {
            if (std::gcd(num < 0 ? -num : num, den) != 1) continue;
            out.emplace_back(num, den);
        }
    if (bound == 0) out.emplace_back(0);
    return out;
}

// Rational points on a*x + b*y = rhs, x^2 + y^2 = radius, in ascending y.
// a and b come from a two-square split of l = a^2 + b^2 with b >= 1.
std::vector<std::pair<Rat, Rat>> line_circle_points(const Rat& a, const Rat& b, const Rat& l,
                                                    const Rat& rhs, const Rat& radius) {
    std::vector<std::pair<Rat, Rat>> out;
    if (a.is_zero()) {
        const Rat y = rhs / b;
        const Rat xx = radius - y * y;
        if (!rat_is_square(xx)) return out;
        const Rat x = rat_sqrt(xx);
        if (!x.is_zero()) out.emplace_back(-x, y);
        out.emplace_back(x, y);
        return out;
    }
    // Substituting x = (rhs - b*y)/a gives l*y^2 - 2*b*rhs*y + rhs^2 - a^2*radius = 0
    // with discriminant/4 = a^2 * (l*radius - rhs^2).
    const Rat disc = l * radius - rhs * rhs;
    if (!rat_is_square(disc)) return out;
    const Rat root = rat_sqrt(disc);
    auto push = [&](const Rat& y) { out.emplace_back((rhs - b * y) / a, y); };
    if (root.is_zero()) {
        push(b * rhs / l);
    } else {
        push((b * rhs - a * root) / l);
        push((b * rhs + a * root) / l);
    }
    return out;
}

}  // namespace

std::optional<BorderSpec> construct_search(const DesignParams& params, Int l, int d, Int s,
                                           Int bound) {
    if (d != 1 && d != 2) throw inconsistent_input_error("construct_search: d must be 1 or 2");
    if (s != 1 && s != 2) throw inconsistent_input_error("construct_search: s must be 1 or 2");
    if (l < 1) throw inconsistent_input_error("construct_search: l must be positive");
    if (validate_params(params).status != Status::pass)
        throw inconsistent_input_error("construct_search: parameters are not admissible");
    const auto split = sum_two_squares(l);
    if (!split)
        throw error("construct_search: l = " + std::to_string(l) +
                    " is not a sum of two squares; the two-column pattern needs one");

    const Rat a(split->first), b(split->second), lr(l);
    const Int z = s + d - 2;
    const Rat v(params.v), k(params.k);
    const Rat alpha(params.k - params.lambda), beta(params.lambda + l);
    const std::vector<Rat> grid = rational_grid(bound);

    BorderSpec spec;
    spec.params = params;
    spec.l = l;
    spec.d = d;
    spec.s = s;
    spec.a = {a, b};
    spec.zero_cols = z;
    spec.a22 = RatMatrix(s, 2);
    spec.a23 = RatMatrix(s, z);

    // Row r of the border contributes unknowns (c_r, x_r, y_r, extras in A23).
    // E3 fixes a line for (x_r, y_r); E4 fixes a circle once c_r and the A23
    // extras are chosen from the grid; later rows also satisfy the E5 line.
    auto try_finish = [&]() -> bool { return scalar_verify(spec).status == Status::pass; };

    auto extras_for = [&](Int count) {
        // Cartesian scan over `count` grid values; count is 0 or 1 per row
        // when s = 1, up to 2 when s = 2 and d = 2.
        std::vector<std::vector<Rat>> tuples;
        if (count == 0) {
            tuples.push_back({});
            return tuples;
        }
        if (count == 1) {
            for (const Rat& g : grid) tuples.push_back({g});
            return tuples;
        }
        for (const Rat& g1 : grid)
            for (const Rat& g2 : grid) tuples.push_back({g1, g2});
        return tuples;
    };
    const auto extra_tuples = extras_for(z);

    for (const Rat& c1 : grid) {
        const Rat rhs1 = beta - k * c1;
        for (const auto& extras1 : extra_tuples) {
            Rat used(0);
            for (const Rat& e : extras1) used += e * e;
            const Rat radius1 = alpha + beta - v * c1 * c1 - used;
            for (const auto& [x1, y1] : line_circle_points(a, b, lr, rhs1, radius1)) {
                spec.c.assign(1, c1);
                spec.a22(0, 0) = x1;
                spec.a22(0, 1) = y1;
                for (Int j = 0; j < z; ++j) spec.a23(0, j) = extras1[j];
                if (s == 1) {
                    if (try_finish()) return spec;
                    continue;
                }
                for (const Rat& c2 : grid) {
                    const Rat rhs2 = beta - k * c2;
                    for (const auto& extras2 : extra_tuples) {
                        Rat used2(0), cross(0);
                        for (Int j = 0; j < z; ++j) {
                            used2 += extras2[j] * extras2[j];
                            cross += extras1[j] * extras2[j];
                        }
                        // E3 and E5 are two linear conditions on (x2, y2).
                        const Rat e5rhs = beta - v * c1 * c2 - cross;
                        const Rat det = a * y1 - b * x1;
                        if (det.is_zero()) continue;
                        const Rat x2 = (rhs2 * y1 - b * e5rhs) / det;
                        const Rat y2 = (a * e5rhs - rhs2 * x1) / det;
                        const Rat radius2 = alpha + beta - v * c2 * c2 - used2;
                        if (x2 * x2 + y2 * y2 != radius2) continue;
                        spec.c.assign({c1, c2});
                        spec.a22(1, 0) = x2;
                        spec.a22(1, 1) = y2;
                        for (Int j = 0; j < z; ++j) spec.a23(1, j) = extras2[j];
                        if (try_finish()) return spec;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace symdes
