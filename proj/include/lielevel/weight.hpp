#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lielevel/errors.hpp"
#include "lielevel/group.hpp"

namespace lielevel {

/// Extension label for representations of the full orthogonal group.
///
/// None      - group is not O_N (SL, Sp, SO, G2 carry no label)
/// Plus/Minus - the two extensions of an SO_N-irreducible fixed by the
///              outer involution (odd N: any weight; even N: last entry 0)
/// Empty     - the induced irreducible for even N with nonzero last entry
/// Unknown   - a +/- label whose sign the branching rules do not determine;
///             emitted by restrict_o, never accepted as input
enum class OLabel { None, Plus, Minus, Empty, Unknown };

inline std::string label_name(OLabel l) {
    switch (l) {
        case OLabel::None: return "none";
        case OLabel::Plus: return "plus";
        case OLabel::Minus: return "minus";
        case OLabel::Empty: return "empty";
        case OLabel::Unknown: return "unknown";
    }
    return "?";
}

struct DominantWeight {
    std::vector<int> entries;
    OLabel label = OLabel::None;

    DominantWeight() = default;
    explicit DominantWeight(std::vector<int> e, OLabel l = OLabel::None)
        : entries(std::move(e)), label(l) {}

    bool operator==(const DominantWeight& o) const = default;
    auto operator<=>(const DominantWeight& o) const {
        if (auto c = entries <=> o.entries; c != 0) return c;
        return static_cast<int>(label) <=> static_cast<int>(o.label);
    }

    long box_count() const {
        long s = 0;
        for (int e : entries) s += std::abs(e);
        return s;
    }

    int nonzero_count() const {
        return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                              [](int e) { return e != 0; }));
    }

    bool is_zero() const {
        return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[i]);
        }
        s += ")";
        if (label != OLabel::None) s += label == OLabel::Plus    ? "+"
                                        : label == OLabel::Minus ? "-"
                                        : label == OLabel::Empty ? "0"
                                                                 : "?";
        return s;
    }
};

/// Two SL_n weights differing by a constant vector name the same
/// representation; the canonical form has last entry 0.
inline DominantWeight canonical_sl(const DominantWeight& w) {
    DominantWeight r = w;
    if (!r.entries.empty()) {
        int c = r.entries.back();
        for (int& e : r.entries) e -= c;
    }
    return r;
}

inline void validate_weight(const GroupDesc& g, const DominantWeight& w) {
    validate_group(g);
    const int n = g.rank();
    if (static_cast<int>(w.entries.size()) != n)
        throw DomainError(g.name() + ": weight length must be " + std::to_string(n));
    auto dec = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i)
            if (w.entries[i] < w.entries[i + 1]) throw DomainError("weight is not dominant");
    };
    switch (g.family) {
        case Family::SL:
        case Family::Sp:
        case Family::SOodd:
            dec(n);
            if (n > 0 && w.entries.back() < 0) throw DomainError("weight is not dominant");
            if (w.label != OLabel::None) throw DomainError("label only valid for O_N");
            break;
        case Family::SOeven:
            dec(n);
            if (n >= 2 && w.entries[n - 2] < std::abs(w.entries[n - 1]))
                throw DomainError("weight is not dominant");
            if (w.label != OLabel::None) throw DomainError("label only valid for O_N");
            break;
        case Family::Ofull:
            dec(n);
            if (g.size % 2) {  // O_{2n+1}
                if (n > 0 && w.entries.back() < 0) throw DomainError("weight is not dominant");
                if (w.label != OLabel::Plus && w.label != OLabel::Minus)
                    throw DomainError("O_odd irreducibles carry a +/- label");
            } else {  // O_{2n}
                if (n >= 2 && w.entries[n - 2] < std::abs(w.entries[n - 1]))
                    throw DomainError("weight is not dominant");
                int last = n > 0 ? w.entries[n - 1] : 0;
                if (last > 0) {
                    if (w.label != OLabel::Empty)
                        throw DomainError("O_even with nonzero last entry requires the induced label");
                } else if (last == 0) {
                    if (w.label != OLabel::Plus && w.label != OLabel::Minus)
                        throw DomainError("O_even with last entry 0 requires a +/- label");
                } else {
                    throw DomainError("O_even weights use the representative with last entry >= 0");
                }
            }
            break;
        case Family::G2:
            if (w.entries[0] < 0 || w.entries[1] < 0)
                throw DomainError("G2 weights are (m1,m2) with m1,m2 >= 0");
            if (w.label != OLabel::None) throw DomainError("label only valid for O_N");
            break;
    }
}

/// Multiset of (weight, multiplicity) in a fixed reproducible order:
/// descending lexicographic on entries, then label. No repeated weight.
struct RepSum {
    std::vector<std::pair<DominantWeight, long>> terms;

    void add(const DominantWeight& w, long mult = 1) {
        if (mult <= 0) throw DomainError("RepSum multiplicities are positive");
        auto it = std::lower_bound(terms.begin(), terms.end(), w,
                                   [](const auto& t, const DominantWeight& x) { return t.first > x; });
        if (it != terms.end() && it->first == w)
            it->second += mult;
        else
            terms.insert(it, {w, mult});
    }

    long multiplicity_of(const DominantWeight& w) const {
        for (const auto& [x, m] : terms)
            if (x == w) return m;
        return 0;
    }

    long term_count() const { return static_cast<long>(terms.size()); }

    long total_multiplicity() const {
        long s = 0;
        for (const auto& [w, m] : terms) s += m;
        return s;
    }

    bool operator==(const RepSum& o) const = default;

    std::string str() const {
        std::string s;
        for (const auto& [w, m] : terms) {
            if (!s.empty()) s += " + ";
            if (m != 1) s += std::to_string(m) + "*";
            s += w.str();
        }
        return s.empty() ? "0" : s;
    }
};

/// All dominant weights of g with entries bounded by max_entry in absolute
/// value (SL weights in canonical form). Used by sweeps and property tests.
inline std::vector<DominantWeight> enumerate_dominant(const GroupDesc& g, int max_entry) {
    validate_group(g);
    std::vector<DominantWeight> out;
    const int n = g.rank();
    std::vector<int> cur(n);
    std::function<void(int, int)> rec = [&](int i, int hi) {
        if (i == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = hi; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    switch (g.family) {
        case Family::SL:
            rec(0, max_entry);
            // keep canonical representatives only
            std::erase_if(out, [](const DominantWeight& w) {
                return !w.entries.empty() && w.entries.back() != 0;
            });
            break;
        case Family::Sp:
        case Family::SOodd:
            rec(0, max_entry);
            break;
        case Family::SOeven: {
            rec(0, max_entry);
            size_t base = out.size();
            for (size_t i = 0; i < base; ++i) {
                if (n >= 1 && out[i].entries[n - 1] > 0) {
                    DominantWeight w = out[i];
                    w.entries[n - 1] = -w.entries[n - 1];
                    out.push_back(w);
                }
            }
            break;
        }
        case Family::Ofull: {
            rec(0, max_entry);
            std::vector<DominantWeight> labeled;
            for (auto& w : out) {
                if (g.size % 2 == 0 && n >= 1 && w.entries[n - 1] > 0) {
                    labeled.emplace_back(w.entries, OLabel::Empty);
                } else {
                    labeled.emplace_back(w.entries, OLabel::Plus);
                    labeled.emplace_back(w.entries, OLabel::Minus);
                }
            }
            out = std::move(labeled);
            break;
        }
        case Family::G2:
            for (int a = 0; a <= max_entry; ++a)
                for (int b = 0; b <= max_entry; ++b) out.push_back(DominantWeight{{a, b}});
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lielevel
