#include <initializer_list>

#include "symdes/border.hpp"
#include "symdes/rational.hpp"

namespace symdes {
namespace {

using Rows = std::initializer_list<std::initializer_list<const char*>>;

RatMatrix block_of(Int rows, Int cols, Rows data) {
    RatMatrix m(rows, cols);
    Int r = 0;
    for (const auto& row : data) {
        Int j = 0;
        for (const char* entry : row) m(r, j++) = rat_from_string(entry);
        ++r;
    }
    return m;
}

Certificate make(const char* name, const char* verdict, Int v, Int k, Int lambda, Int l, int d,
                 Int s, std::initializer_list<const char*> a, Int zero_cols,
                 std::initializer_list<const char*> c, Rows a22, Rows a23) {
    Certificate cert;
    cert.name = name;
    cert.provenance = "built-in";
    cert.verdict = verdict;
    BorderSpec& spec = cert.spec;
    spec.params = {v, k, lambda};
    spec.l = l;
    spec.d = d;
    spec.s = s;
    for (const char* entry : a) spec.a.push_back(rat_from_string(entry));
    spec.zero_cols = zero_cols;
    for (const char* entry : c) spec.c.push_back(rat_from_string(entry));
    spec.a22 = block_of(s, static_cast<Int>(spec.a.size()), a22);
    spec.a23 = block_of(s, zero_cols, a23);
    validate_shape(spec);
    return cert;
}

std::vector<Certificate> build_catalog() {
    std::vector<Certificate> out;
    // Projective-plane studies: border data whose Gram form alpha*I + beta*J
    // fails the matching necessary condition, so no such plane design can
    // carry the border.
    out.push_back(make("order-10", "obstruction", 111, 11, 1, 100, 1, 1, {"10", "0"}, 0,
                       {"-2129/11221"}, {{"115674/11221", "6/7"}}, {}));
    out.push_back(make("order-12", "obstruction", 157, 13, 1, 4, 2, 2, {"2", "0"}, 2,
                       {"285/2191", "-1/7"}, {{"3625/2191", "11/7"}, {"24/7", "10/7"}},
                       {{"669/313", "669/313"}, {"0", "0"}}));
    out.push_back(make("order-15", "obstruction", 241, 16, 1, 49, 2, 2, {"7", "0"}, 2,
                       {"1432/49911", "-23/381"},
                       {{"353234/49911", "-1/3"}, {"2774/381", "10/3"}},
                       {{"120/131", "486/131"}, {"0", "0"}}));
    out.push_back(make("order-18", "obstruction", 343, 19, 1, 36, 1, 1, {"6", "0"}, 0,
                       {"-23/355"}, {{"2262/355", "18/5"}}, {}));
    out.push_back(make("order-20", "obstruction", 421, 21, 1, 64, 2, 2, {"8", "0"}, 2,
                       {"-549047/30808125", "9231/257419"},
                       {{"83919088/10269375", "-2/25"}, {"2067298/257419", "210/47"}},
                       {{"3808/5625", "23614/5625"}, {"0", "0"}}));
    out.push_back(make("order-24", "obstruction", 601, 25, 1, 1, 2, 2, {"1", "0", "0", "0"}, 0,
                       {"3/25", "13/185"},
                       {{"-1", "46/25", "18/5", "0"}, {"9/37", "-284/185", "0", "168/37"}},
                       {}));
    out.push_back(make("order-26", "obstruction", 703, 27, 1, 9, 1, 1, {"3", "0"}, 0,
                       {"-4/147"}, {{"526/147", "100/21"}}, {}));
    out.push_back(make("order-28", "obstruction", 813, 29, 1, 5, 2, 2, {"1", "2", "0", "0"}, 0,
                       {"1/7", "291/2590"},
                       {{"-23/7", "18/7", "0", "0"}, {"5991/2590", "3/14", "336/185", "287/74"}},
                       {}));
    // Non-plane parameter studies with the same contradiction pattern.
    out.push_back(make("(49,16,5)", "obstruction", 49, 16, 5, 1, 2, 2, {"1", "0", "0", "0"}, 0,
                       {"1/3", "154/425"},
                       {{"2/3", "10/3", "0", "0"},
                        {"86/425", "-2/125", "242/425", "6787/2125"}},
                       {}));
    out.push_back(make("(154,18,2)", "obstruction", 154, 18, 2, 1, 2, 1, {"1", "0", "0"}, 0,
                       {"3/20"}, {{"3/10", "47/20", "63/20"}}, {}));
    out.push_back(make("(115,19,3)", "obstruction", 115, 19, 3, 9, 1, 1, {"3", "0"}, 0,
                       {"3/7"}, {{"9/7", "16/7"}}, {}));
    // Borders over designs that exist; assembling them over the real
    // incidence matrix satisfies the Gram identity, and the matching
    // condition holds.
    out.push_back(make("plane5-32x33", "consistent", 31, 6, 1, 8, 1, 1, {"2", "2"}, 0,
                       {"1/12"}, {{"7/12", "11/3"}}, {}));
    out.push_back(make("plane5-32x34", "consistent", 31, 6, 1, 1, 2, 1, {"1", "0", "0"}, 0,
                       {"1/3"}, {{"0", "4/3", "4/3"}}, {}));
    out.push_back(make("plane7-59x60", "consistent", 57, 8, 1, 6, 1, 2, {"2", "1", "1"}, 0,
                       {"0", "0"}, {{"1", "3", "2"}, {"11/5", "-2/5", "3"}}, {}));
    out.push_back(make("plane7-59x61", "consistent", 57, 8, 1, 1, 2, 2, {"1", "0", "0", "0"}, 0,
                       {"0", "0"}, {{"2", "2", "1", "0"}, {"2", "0", "-2", "1"}}, {}));
    // Scalar-level borders over known designs (no incidence matrix shipped).
    out.push_back(make("(45,12,3)-46x47", "consistent", 45, 12, 3, 1, 1, 1, {"1", "0"}, 0,
                       {"2/9"}, {{"4/3", "3"}}, {}));
    out.push_back(make("(45,12,3)-46x48", "consistent", 45, 12, 3, 2, 2, 1, {"1", "1", "0"}, 0,
                       {"0"}, {{"3", "2", "1"}}, {}));
    out.push_back(make("(36,15,6)-37x38", "consistent", 36, 15, 6, 10, 1, 1, {"3", "1"}, 0,
                       {"7/9"}, {{"14/15", "23/15"}}, {}));
    out.push_back(make("(36,15,6)-37x39", "consistent", 36, 15, 6, 4, 2, 1, {"2", "0", "0"}, 0,
                       {"8/15"}, {{"1", "1", "13/5"}}, {}));
    return out;
}

}  // namespace

const std::vector<Certificate>& catalog() {
    static const std::vector<Certificate> entries = build_catalog();
    return entries;
}

const Certificate* catalog_entry(const std::string& name) {
    for (const Certificate& cert : catalog())
        if (cert.name == name) return &cert;
    return nullptr;
}

}  // namespace symdes
