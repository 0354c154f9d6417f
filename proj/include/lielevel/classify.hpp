#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lielevel/errors.hpp"
#include "lielevel/group.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

enum class RegStatus { R, E };

/// Outcome of the exceptional/regular test, with the table entry that
/// justified an E verdict (or the closure rule that produced it).
struct Classification {
    RegStatus status = RegStatus::R;
    std::string source;
};

/// Dual of an irreducible as a weight: SL reverses the complement and
/// re-canonicalizes; SO_{2n} with n odd negates the last entry; all other
/// families here are self-dual.
inline DominantWeight dual_weight(const GroupDesc& g, const DominantWeight& w) {
    validate_weight(g, w);
    switch (g.family) {
        case Family::SL: {
            DominantWeight c = canonical_sl(w);
            std::vector<int> d(c.entries.rbegin(), c.entries.rend());
            int top = c.entries.empty() ? 0 : c.entries.front();
            for (int& x : d) x = top - x;
            return canonical_sl(DominantWeight{d});
        }
        case Family::SOeven: {
            DominantWeight d = w;
            if (g.rank() % 2 == 1 && !d.entries.empty()) d.entries.back() = -d.entries.back();
            return d;
        }
        default: return w;
    }
}

struct ExteriorPowerInfo {
    bool is_exterior = false;
    int k = 0;
    bool degenerate = false;  // the zero weight, k = 0 by convention
};

/// True when the canonical form of an SL weight is (1,...,1,0,...,0).
inline ExteriorPowerInfo is_exterior_power(const DominantWeight& w) {
    DominantWeight c = canonical_sl(w);
    ExteriorPowerInfo info;
    int k = 0;
    for (int e : c.entries) {
        if (e != 0 && e != 1) return info;
        if (e == 1) ++k;
    }
    info.is_exterior = true;
    info.k = k;
    info.degenerate = (k == 0);
    return info;
}

namespace detail {

// Exceptional-representation table. Patterns match canonical weights;
// tokens: "k" literal entry, "k*" literal repeated zero or more times,
// "a"/"-a" one positive variable per record. Rank bounds are inclusive;
// max 0 means unbounded.
inline const char* e_table_json() {
    return R"TBL([
 {"family":"SL","min":1,"max":0,"pattern":["0*"],"source":"trivial representation"},
 {"family":"SL","min":2,"max":0,"pattern":["1","0*"],"source":"standard representation"},
 {"family":"SL","min":2,"max":0,"pattern":["1","1*","0"],"source":"dual of the standard representation"},
 {"family":"SL","min":2,"max":0,"pattern":["2","0*"],"source":"symmetric square"},
 {"family":"SL","min":2,"max":0,"pattern":["2","2*","0"],"source":"dual symmetric square"},
 {"family":"SL","min":3,"max":0,"pattern":["1","1","0","0*"],"source":"exterior square"},
 {"family":"SL","min":4,"max":0,"pattern":["1","1","1*","0","0"],"source":"dual exterior square"},
 {"family":"SL","min":2,"max":0,"pattern":["2","1*","0"],"source":"adjoint representation"},
 {"family":"SL","min":2,"max":2,"pattern":["3","0"],"source":"binary cubics"},
 {"family":"SL","min":2,"max":2,"pattern":["4","0"],"source":"binary quartics"},
 {"family":"SL","min":3,"max":3,"pattern":["3","0","0"],"source":"ternary cubics"},
 {"family":"SL","min":3,"max":3,"pattern":["3","3","0"],"source":"dual ternary cubics"},
 {"family":"SL","min":4,"max":4,"pattern":["2","2","0","0"],"source":"rank-4 plethysm (2,2)"},
 {"family":"SL","min":6,"max":9,"pattern":["1","1","1","0","0*"],"source":"low-rank third exterior power"},
 {"family":"SL","min":6,"max":9,"pattern":["1","1","1","1*","0","0","0"],"source":"dual low-rank third exterior power"},
 {"family":"SL","min":8,"max":8,"pattern":["1","1","1","1","0","0","0","0"],"source":"fourth exterior power in rank 8"},
 {"family":"Sp","min":2,"max":0,"pattern":["0*"],"source":"trivial representation"},
 {"family":"Sp","min":2,"max":0,"pattern":["1","0*"],"source":"standard representation"},
 {"family":"Sp","min":2,"max":0,"pattern":["2","0*"],"source":"symmetric square"},
 {"family":"Sp","min":2,"max":0,"pattern":["1","1","0*"],"source":"harmonic exterior square"},
 {"family":"Sp","min":3,"max":3,"pattern":["1","1","1"],"source":"harmonic third exterior power, rank 3"},
 {"family":"Sp","min":4,"max":4,"pattern":["1","1","1","1"],"source":"harmonic fourth exterior power, rank 4"},
 {"family":"Sp","min":2,"max":2,"pattern":["2","2"],"source":"rank translation of the harmonic symmetric square in dimension five"},
 {"family":"SO","min":5,"max":0,"pattern":["0*"],"source":"trivial representation"},
 {"family":"SO","min":5,"max":0,"pattern":["1","0*"],"source":"standard representation"},
 {"family":"SO","min":5,"max":0,"pattern":["2","0*"],"source":"harmonic symmetric square"},
 {"family":"SO","min":5,"max":0,"pattern":["1","1","0*"],"source":"adjoint (exterior square)"},
 {"family":"SO","min":6,"max":6,"pattern":["1","1","1"],"source":"dimension-six identification with a symmetric square"},
 {"family":"SO","min":6,"max":6,"pattern":["1","1","-1"],"source":"dimension-six identification with a dual symmetric square"},
 {"family":"SO","min":4,"max":4,"pattern":["0","0"],"source":"trivial representation"},
 {"family":"SO","min":4,"max":4,"pattern":["1","0"],"source":"standard representation"},
 {"family":"SO","min":4,"max":4,"pattern":["2","0"],"source":"harmonic symmetric square"},
 {"family":"SO","min":4,"max":4,"pattern":["2","1"],"source":"binary cubics times the standard factor"},
 {"family":"SO","min":4,"max":4,"pattern":["2","-1"],"source":"binary cubics times the other factor"},
 {"family":"SO","min":4,"max":4,"pattern":["a","a"],"source":"one-factor representations of the rank-two even group"},
 {"family":"SO","min":4,"max":4,"pattern":["a","-a"],"source":"one-factor representations of the rank-two even group"},
 {"family":"SO","min":3,"max":3,"pattern":["0"],"source":"trivial representation"},
 {"family":"SO","min":3,"max":3,"pattern":["1"],"source":"standard representation"},
 {"family":"SO","min":3,"max":3,"pattern":["2"],"source":"harmonic symmetric square"}
])TBL";
}

struct ETableEntry {
    std::string family;  // "SL" (size n), "Sp" (size n), "SO" (size N)
    int min = 0, max = 0;
    std::vector<std::string> pattern;
    std::string source;
};

inline const std::vector<ETableEntry>& e_table() {
    static const std::vector<ETableEntry> table = [] {
        std::vector<ETableEntry> t;
        auto j = nlohmann::json::parse(e_table_json());
        for (const auto& rec : j) {
            ETableEntry e;
            e.family = rec.at("family").get<std::string>();
            e.min = rec.at("min").get<int>();
            e.max = rec.at("max").get<int>();
            for (const auto& tok : rec.at("pattern")) e.pattern.push_back(tok.get<std::string>());
            e.source = rec.at("source").get<std::string>();
            t.push_back(std::move(e));
        }
        return t;
    }();
    return table;
}

inline bool pattern_matches(const std::vector<std::string>& tokens, const std::vector<int>& w) {
    // at most one star token; try every split of the middle run
    int star = -1;
    for (size_t i = 0; i < tokens.size(); ++i)
        if (tokens[i].back() == '*') star = static_cast<int>(i);
    auto match_at = [&](const std::string& tok, int value, int& var) {
        if (tok == "a") {
            if (value < 1) return false;
            if (var == 0) var = value;
            return var == value;
        }
        if (tok == "-a") {
            if (value > -1) return false;
            if (var == 0) var = -value;
            return var == -value;
        }
        return std::stoi(tok) == value;
    };
    const int n = static_cast<int>(w.size());
    if (star < 0) {
        if (static_cast<int>(tokens.size()) != n) return false;
        int var = 0;
        for (int i = 0; i < n; ++i)
            if (!match_at(tokens[i], w[i], var)) return false;
        return true;
    }
    const int fixed = static_cast<int>(tokens.size()) - 1;
    if (n < fixed) return false;
    const int rep = n - fixed;
    const int star_lit = std::stoi(tokens[static_cast<size_t>(star)]);
    int var = 0;
    int pos = 0;
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
        if (i == star) {
            for (int r = 0; r < rep; ++r)
                if (w[pos++] != star_lit) return false;
        } else if (!match_at(tokens[i], w[pos++], var)) {
            return false;
        }
    }
    return true;
}

inline std::optional<std::string> e_lookup(const std::string& fam, int size,
                                           const std::vector<int>& w) {
    for (const auto& e : e_table()) {
        if (e.family != fam) continue;
        if (size < e.min || (e.max != 0 && size > e.max)) continue;
        if (pattern_matches(e.pattern, w)) return e.source;
    }
    return std::nullopt;
}

inline std::optional<std::string> so_e_lookup(int N, const std::vector<int>& w) {
    return e_lookup("SO", N, w);
}

}  // namespace detail

/// Exceptional/regular status of an irreducible. The tables are fixed data;
/// SL status is closed under duality, the rank-two symplectic group is
/// classified through its five-dimensional orthogonal quotient, and O_N
/// status is the conjunction of the statuses of the SO_N constituents.
inline Classification classify(const GroupDesc& g, const DominantWeight& w0) {
    validate_weight(g, w0);
    switch (g.family) {
        case Family::G2: throw Unsupported("classify: G2 not covered by the tables");
        case Family::SL: {
            DominantWeight c = canonical_sl(w0);
            if (auto s = detail::e_lookup("SL", g.size, c.entries)) return {RegStatus::E, *s};
            DominantWeight d = dual_weight(g, c);
            if (auto s = detail::e_lookup("SL", g.size, d.entries))
                return {RegStatus::E, *s + " (dual)"};
            return {RegStatus::R, "not in the exceptional table"};
        }
        case Family::Sp: {
            if (g.size == 2) {
                const int a = w0.entries[0], b = w0.entries[1];
                if ((a + b) % 2 == 0) {
                    // rank translation onto SO_5
                    std::vector<int> so5{(a + b) / 2, (a - b) / 2};
                    if (auto s = detail::so_e_lookup(5, so5))
                        return {RegStatus::E, *s + " (rank translation)"};
                }
                if (auto s = detail::e_lookup("Sp", 2, w0.entries)) return {RegStatus::E, *s};
                return {RegStatus::R, "not in the exceptional table"};
            }
            if (auto s = detail::e_lookup("Sp", g.size, w0.entries)) return {RegStatus::E, *s};
            return {RegStatus::R, "not in the exceptional table"};
        }
        case Family::SOodd:
        case Family::SOeven: {
            if (g.size < 3) throw Unsupported("classify: SO_N requires N >= 3");
            if (auto s = detail::so_e_lookup(g.size, w0.entries)) return {RegStatus::E, *s};
            if (g.family == Family::SOeven) {
                DominantWeight d = w0;
                d.entries.back() = -d.entries.back();
                if (auto s = detail::so_e_lookup(g.size, d.entries))
                    return {RegStatus::E, *s + " (mirror)"};
            }
            return {RegStatus::R, "not in the exceptional table"};
        }
        case Family::Ofull: {
            if (g.size < 3) throw Unsupported("classify: O_N requires N >= 3");
            GroupDesc so = GroupDesc::so(g.size);
            Classification c = classify(so, DominantWeight{w0.entries});
            if (c.status == RegStatus::E)
                return {RegStatus::E, c.source + " (special orthogonal constituent)"};
            if (w0.label == OLabel::Empty) {
                DominantWeight flip{w0.entries};
                flip.entries.back() = -flip.entries.back();
                Classification c2 = classify(so, flip);
                if (c2.status == RegStatus::E)
                    return {RegStatus::E, c2.source + " (special orthogonal constituent)"};
            }
            return {RegStatus::R, "all special orthogonal constituents regular"};
        }
    }
    return {RegStatus::R, ""};
}

inline bool is_regular(const GroupDesc& g, const DominantWeight& w) {
    return classify(g, w).status == RegStatus::R;
}

}  // namespace lielevel
