#pragma once

#include <string>

#include <json.hpp>

#include "lielevel/branching.hpp"
#include "lielevel/certificate.hpp"
#include "lielevel/classify.hpp"
#include "lielevel/group.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

using OrderedJson = nlohmann::ordered_json;

inline std::string family_name(Family f) {
    switch (f) {
        case Family::SL: return "SL";
        case Family::Sp: return "Sp";
        case Family::SOodd: return "SO";
        case Family::SOeven: return "SO";
        case Family::Ofull: return "O";
        case Family::G2: return "G2";
    }
    return "?";
}

inline OrderedJson to_json(const GroupDesc& g) {
    OrderedJson j;
    j["family"] = family_name(g.family);
    j["size"] = g.size;
    return j;
}

inline OrderedJson to_json(const DominantWeight& w) {
    OrderedJson j;
    j["entries"] = w.entries;
    if (w.label != OLabel::None) j["label"] = label_name(w.label);
    return j;
}

inline OrderedJson to_json(const RepSum& s) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& [w, m] : s.terms) {
        OrderedJson t;
        t["weight"] = to_json(w);
        t["multiplicity"] = m;
        arr.push_back(std::move(t));
    }
    return arr;
}

inline OrderedJson to_json(const Filtration& f) {
    OrderedJson j;
    j["convention"] =
        f.convention == IndexConvention::sl_ascending ? "sl_ascending" : "sp_symmetric";
    j["levi"] = to_json(f.levi);
    OrderedJson levels = OrderedJson::array();
    for (int i = f.min_index(); i <= f.max_index(); ++i) {
        OrderedJson lv;
        lv["index"] = i;
        lv["terms"] = to_json(f.level(i));
        levels.push_back(std::move(lv));
    }
    j["levels"] = std::move(levels);
    return j;
}

/// Certificate schema: fixed field order, integers that may exceed 64 bits
/// serialized as decimal strings.
inline OrderedJson to_json(const Check& c) {
    OrderedJson j;
    j["name"] = c.name;
    j["lhs"] = to_string(c.lhs);
    j["op"] = c.op;
    j["rhs"] = to_string(c.rhs);
    j["holds"] = c.holds;
    return j;
}

inline OrderedJson to_json(const Step& s) {
    OrderedJson j;
    j["rule"] = s.rule;
    j["citation"] = s.citation;
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    j["checks"] = std::move(checks);
    if (s.child) {
        OrderedJson ch;
        ch["group"] = to_json(s.child->first);
        ch["weight"] = to_json(s.child->second);
        j["child"] = std::move(ch);
    }
    return j;
}

inline OrderedJson to_json(const LevelCertificate& c) {
    OrderedJson j;
    j["group"] = to_json(c.group);
    j["weight"] = c.weight.entries;
    j["label"] = label_name(c.weight.label);
    j["level"] = c.level;
    OrderedJson steps = OrderedJson::array();
    for (const auto& s : c.steps) steps.push_back(to_json(s));
    j["steps"] = std::move(steps);
    return j;
}

inline OrderedJson to_json(const VerificationReport& r) {
    OrderedJson j;
    j["subject"] = r.subject;
    j["passed"] = r.passed;
    OrderedJson steps = OrderedJson::array();
    for (const auto& s : r.steps) steps.push_back(to_json(s));
    j["steps"] = std::move(steps);
    return j;
}

}  // namespace lielevel
