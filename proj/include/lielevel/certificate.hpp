#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lielevel/group.hpp"
#include "lielevel/integers.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

/// One evaluated exact-integer comparison inside a certificate step.
struct Check {
    std::string name;
    Int lhs;
    std::string op;  // "=", "<=", ">=", "<", ">"
    Int rhs;
    bool holds = false;
};

inline bool eval_check(const Int& lhs, const std::string& op, const Int& rhs) {
    if (op == "=") return lhs == rhs;
    if (op == "<=") return lhs <= rhs;
    if (op == ">=") return lhs >= rhs;
    if (op == "<") return lhs < rhs;
    if (op == ">") return lhs > rhs;
    throw Error("unknown comparison operator: " + op);
}

inline Check make_check(std::string name, Int lhs, std::string op, Int rhs) {
    bool h = eval_check(lhs, op, rhs);
    return Check{std::move(name), std::move(lhs), std::move(op), std::move(rhs), h};
}

/// Encodes a structural (non-numeric) verification as 1 = 1 / 0 = 1.
inline Check make_struct_check(std::string name, bool ok) {
    return Check{std::move(name), ok ? 1 : 0, "=", 1, ok};
}

struct Step {
    std::string rule;
    std::string citation;
    std::vector<Check> checks;
    std::optional<std::pair<GroupDesc, DominantWeight>> child;

    bool all_hold() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

struct LevelCertificate {
    GroupDesc group;
    DominantWeight weight;
    long level = 0;
    std::vector<Step> steps;

    bool all_checks_hold() const {
        for (const auto& s : steps)
            if (!s.all_hold()) return false;
        return true;
    }
};

/// Outcome of a verification replay (orbit bounds, harmonic kit); carries
/// the same step/check structure as a level certificate.
struct VerificationReport {
    std::string subject;
    std::vector<Step> steps;
    bool passed = false;

    bool all_checks_hold() const {
        for (const auto& s : steps)
            if (!s.all_hold()) return false;
        return true;
    }
};

}  // namespace lielevel
