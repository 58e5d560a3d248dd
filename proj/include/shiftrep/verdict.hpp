// Pass/fail/vacuous result of one identity check, with an optional
// counterexample payload that can be replayed in isolation.

#ifndef SHIFTREP_VERDICT_HPP
#define SHIFTREP_VERDICT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace shiftrep {

enum class Status { pass, fail, vacuous };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
    }
    return "?";
}

// Counterexample payload: rendered inputs plus both evaluated sides.  The
// keys lhs_expr / rhs_expr / vector / lhs_value / rhs_value are filled for
// operator identities and suffice to replay the failure through the CLI
// `apply` command; suites add further context entries (mu, nu, t, r, ...).
struct Witness {
    std::map<std::string, std::string> entries;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    Status status = Status::pass;
    std::int64_t checked_count = 0;  // instances examined; 0 iff vacuous
    std::optional<Witness> witness;  // present iff status == fail
    std::string note;                // optional context, e.g. vacuity reason

    static Verdict pass(std::int64_t checked) { return Verdict{Status::pass, checked, std::nullopt, ""}; }
    static Verdict vacuous(std::string why) { return Verdict{Status::vacuous, 0, std::nullopt, std::move(why)}; }
    static Verdict fail(std::int64_t checked, Witness w) {
        return Verdict{Status::fail, checked, std::move(w), ""};
    }
};

}  // namespace shiftrep

#endif  // SHIFTREP_VERDICT_HPP
