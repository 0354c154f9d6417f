#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "lielevel/dimension.hpp"
#include "lielevel/group.hpp"
#include "lielevel/rootsystem.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

namespace detail {

/// Multiplicity table of one irreducible, filled lazily by the Freudenthal
/// recursion over dominant weights. Shared through a global cache; the
/// per-table mutex makes concurrent queries safe (writes are idempotent).
struct FreudenthalTable {
    RootSystem rs;
    std::vector<int> lambda;  // coords, dominant
    long norm_lambda;         // <2(lambda+rho), 2(lambda+rho)>
    std::map<std::vector<int>, Int> mult;
    std::mutex mu;

    explicit FreudenthalTable(RootSystem r, std::vector<int> l) : rs(std::move(r)), lambda(std::move(l)) {
        std::vector<int> p(rs.dim);
        for (int i = 0; i < rs.dim; ++i) p[i] = 2 * lambda[i] + rs.two_rho[i];
        norm_lambda = RootSystem::dot(p, p);
    }

    // chi must be dominant.
    Int get(const std::vector<int>& chi) {
        if (auto it = mult.find(chi); it != mult.end()) return it->second;
        if (chi == lambda) return mult[chi] = 1;
        auto ht = rs.cone_height(lambda, chi);
        if (!ht) return mult[chi] = 0;
        Int num = 0;
        std::vector<int> nu(rs.dim);
        for (const auto& a : rs.positive) {
            for (long k = 1;; ++k) {
                for (int i = 0; i < rs.dim; ++i) nu[i] = chi[i] + static_cast<int>(k) * a[i];
                Int m = get(rs.dominantize(nu));
                if (m == 0) break;  // the root string through chi is unbroken
                num += m * RootSystem::dot(nu, a);
            }
        }
        std::vector<int> q(rs.dim);
        for (int i = 0; i < rs.dim; ++i) q[i] = 2 * chi[i] + rs.two_rho[i];
        long denom = norm_lambda - RootSystem::dot(q, q);
        if (denom <= 0) throw Error("Freudenthal recursion: nonpositive denominator");
        return mult[chi] = div_exact(8 * num, Int(denom), "Freudenthal recursion");
    }
};

inline std::shared_ptr<FreudenthalTable> freudenthal_table(const GroupDesc& g,
                                                           const std::vector<int>& lambda_coords) {
    using Key = std::tuple<int, int, std::vector<int>>;
    static std::mutex cache_mu;
    static std::map<Key, std::shared_ptr<FreudenthalTable>> cache;
    Key key{static_cast<int>(g.family), g.size, lambda_coords};
    std::lock_guard lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<FreudenthalTable>(RootSystem::make(g), lambda_coords);
    cache.emplace(key, t);
    return t;
}

}  // namespace detail

/// Multiplicity of the lattice weight chi in the irreducible with highest
/// weight lambda; 0 when chi is not a weight. For O_N the Empty label sums
/// the two SO_N constituents, the +/- labels delegate to the single one.
inline Int weight_multiplicity(const GroupDesc& g, const DominantWeight& lambda,
                               const std::vector<int>& chi) {
    validate_weight(g, lambda);
    if (static_cast<int>(chi.size()) != g.rank())
        throw DomainError("weight_multiplicity: chi length mismatch");
    if (g.family == Family::Ofull) {
        GroupDesc so = GroupDesc::so(g.size);
        DominantWeight base(lambda.entries);
        Int m = weight_multiplicity(so, base, chi);
        if (lambda.label == OLabel::Empty) {
            DominantWeight flip = base;
            flip.entries.back() = -flip.entries.back();
            m += weight_multiplicity(so, flip, chi);
        }
        return m;
    }
    RootSystem rs = RootSystem::make(g);
    std::vector<int> lc = rs.to_coords(lambda.entries);
    std::vector<int> cc = chi;
    if (g.family == Family::SL) {
        // shift both to the canonical lattice slice (last lambda entry 0)
        long sl = 0, sc = 0;
        for (int x : lc) sl += x;
        for (int x : cc) sc += x;
        if (sl != sc) return 0;
        int shift = lambda.entries.back();
        for (int& x : lc) x -= shift;
        for (int& x : cc) x -= shift;
    } else if (g.family == Family::G2) {
        cc = chi;  // G2 callers pass epsilon coordinates directly
        if (static_cast<int>(chi.size()) == 2) cc = rs.to_coords(chi);
    }
    auto table = detail::freudenthal_table(g, lc);
    std::lock_guard lock(table->mu);
    return table->get(rs.dominantize(cc));
}

/// True when chi is a weight of the irreducible (multiplicity > 0), decided
/// by the dominance-order criterion without running the recursion.
inline bool is_weight_of(const GroupDesc& g, const DominantWeight& lambda,
                         const std::vector<int>& chi) {
    validate_weight(g, lambda);
    GroupDesc h = g.family == Family::Ofull ? GroupDesc::so(g.size) : g;
    RootSystem rs = RootSystem::make(h);
    std::vector<int> lc = rs.to_coords(lambda.entries);
    std::vector<int> cc = chi;
    if (h.family == Family::SL) {
        long sl = 0, sc = 0;
        for (int x : lc) sl += x;
        for (int x : cc) sc += x;
        if (sl != sc) return false;
    } else if (h.family == Family::G2 && static_cast<int>(chi.size()) == 2) {
        cc = rs.to_coords(chi);
    }
    if (rs.cone_height(lc, rs.dominantize(cc))) return true;
    if (g.family == Family::Ofull && lambda.label == OLabel::Empty) {
        std::vector<int> flip = lc;
        flip.back() = -flip.back();
        return rs.cone_height(rs.dominantize(flip), rs.dominantize(cc)).has_value();
    }
    return false;
}

/// The full weight support of an irreducible, as dominant orbit
/// representatives with multiplicities. Every dominant weight below lambda
/// in the root order occurs, so a box enumeration plus the cone test is
/// exhaustive; all weight coordinates lie in the convex hull of the Weyl
/// orbit of lambda, which bounds them by max |lambda_i|.
inline std::map<std::vector<int>, Int> dominant_weight_support(const GroupDesc& g,
                                                               const DominantWeight& lambda) {
    validate_weight(g, lambda);
    if (g.family == Family::Ofull) throw Unsupported("weight support: use the SO constituents");
    RootSystem rs = RootSystem::make(g);
    std::vector<int> lc = rs.to_coords(lambda.entries);
    if (g.family == Family::SL) {
        int shift = lambda.entries.back();
        for (int& x : lc) x -= shift;
    }
    auto table = detail::freudenthal_table(g, lc);
    std::map<std::vector<int>, Int> out;
    auto try_add = [&](const std::vector<int>& d) {
        if (!rs.cone_height(lc, d)) return;
        Int m;
        {
            std::lock_guard lock(table->mu);
            m = table->get(d);
        }
        if (m > 0) out[d] = m;
    };
    if (g.family == Family::G2) {
        int hi = 3 * (lambda.entries[0] + lambda.entries[1] + 2);
        for (int a = 0; a <= hi; ++a)
            for (int b = 0; b <= hi; ++b) try_add(rs.to_coords({a, b}));
        return out;
    }
    int hi = 0;
    for (int x : lc) hi = std::max(hi, std::abs(x));
    const int n = rs.dim;
    std::vector<int> cur(n);
    std::function<void(int, int)> rec = [&](int i, int top) {
        if (i == n) {
            try_add(cur);
            if ((g.family == Family::SOeven || g.family == Family::Ofull) && n >= 2 &&
                cur[n - 1] > 0 && cur[n - 2] >= cur[n - 1]) {
                std::vector<int> alt = cur;
                alt[n - 1] = -alt[n - 1];
                try_add(alt);
            }
            return;
        }
        for (int v = top; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, hi);
    return out;
}

}  // namespace lielevel
