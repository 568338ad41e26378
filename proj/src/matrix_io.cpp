#include "symdes/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "symdes/errors.hpp"

namespace symdes {
namespace {

struct Token {
    std::string text;
    int column;  // 1-based start position
};

// Splits one line into whitespace-separated tokens, dropping '#' comments.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
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
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long parse_count(const Token& tok, int line_no, const char* what) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(tok.text, &pos);
        if (pos != tok.text.size() || value < 1)
            throw error("bad");
        return value;
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + " must be a positive integer, got '" +
                              tok.text + "'",
                          line_no, tok.column);
    }
}

}  // namespace

RatMatrix read_matrix(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long rows = -1, cols = -1;
    RatMatrix m;
    long long next_row = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;
        if (rows < 0) {
            if (toks.size() != 2)
                throw parse_error("header must be '<rows> <cols>'", line_no, toks[0].column);
            rows = parse_count(toks[0], line_no, "row count");
            cols = parse_count(toks[1], line_no, "column count");
            m.resize(rows, cols);
            continue;
        }
        if (next_row >= rows)
            throw parse_error("extra data after " + std::to_string(rows) + " rows", line_no,
                              toks[0].column);
        if (static_cast<long long>(toks.size()) != cols)
            throw parse_error("row " + std::to_string(next_row + 1) + " has " +
                                  std::to_string(toks.size()) + " entries, expected " +
                                  std::to_string(cols),
                              line_no, toks[0].column);
        for (long long j = 0; j < cols; ++j) {
            try {
                m(next_row, j) = rat_from_string(toks[j].text);
            } catch (const error& e) {
                throw parse_error(e.what(), line_no, toks[j].column);
            }
        }
        ++next_row;
    }
    if (rows < 0) throw parse_error("empty input, expected '<rows> <cols>' header", 1, 1);
    if (next_row < rows)
        throw parse_error("expected " + std::to_string(rows) + " rows, found " +
                              std::to_string(next_row),
                          line_no + 1, 1);
    return m;
}

RatMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open matrix file: " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const RatMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m(i, j).str();
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const RatMatrix& m) {
    std::ofstream out(path);
    if (!out) throw error("cannot open file for writing: " + path);
    write_matrix(out, m);
    if (!out.good()) throw error("write failed: " + path);
}

}  // namespace symdes
