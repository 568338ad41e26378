#ifndef SYMDES_VERDICT_HPP
#define SYMDES_VERDICT_HPP

#include <string>
#include <utility>
#include <vector>

namespace symdes {

enum class Status { pass, fail, inapplicable };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inapplicable: return "inapplicable";
    }
    return "?";
}

// Outcome of one evaluated condition. `condition` names the criterion,
// `detail` is one human-readable sentence, `evidence` holds the numbers that
// justify the outcome in a fixed order, and `tag` is the stable identifier
// used as paper_tag in structured output.
struct Verdict {
    Status status = Status::inapplicable;
    std::string condition;
    std::string detail;
    std::vector<std::pair<std::string, std::string>> evidence;
    std::string tag;

    Verdict& note(std::string key, std::string value) {
        evidence.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

}  // namespace symdes

#endif
