#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lielevel/errors.hpp"
#include "lielevel/freudenthal.hpp"
#include "lielevel/group.hpp"
#include "lielevel/integers.hpp"
#include "lielevel/rootsystem.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

/// Shape of a weight under the signed-permutation group: n0 zero entries
/// and blocks of equal absolute value among the nonzero ones (the values
/// themselves are abstracted away, only block sizes matter).
struct WeightShape {
    int n = 0;
    int zeros = 0;
    std::vector<int> blocks;

    static WeightShape of(const std::vector<int>& chi) {
        WeightShape s;
        s.n = static_cast<int>(chi.size());
        std::map<int, int> count;
        for (int x : chi) {
            if (x == 0)
                ++s.zeros;
            else
                ++count[std::abs(x)];
        }
        for (auto& [v, c] : count) s.blocks.push_back(c);
        std::sort(s.blocks.begin(), s.blocks.end(), std::greater<>());
        return s;
    }

    void validate() const {
        int total = zeros;
        for (int b : blocks) {
            if (b < 1) throw DomainError("weight shape: block sizes are positive");
            total += b;
        }
        if (total != n) throw DomainError("weight shape: sizes must sum to n");
    }

    /// A representative weight with distinct values 1, 2, ... per block.
    std::vector<int> representative() const {
        validate();
        std::vector<int> w;
        int v = static_cast<int>(blocks.size());
        for (int b : blocks) {
            for (int i = 0; i < b; ++i) w.push_back(v);
            --v;
        }
        w.resize(static_cast<size_t>(n), 0);
        return w;
    }
};

/// |orbit| = 2^(n-n0) * n! / (n0! * n1! * ... * nm!).
inline Int orbit_size(const WeightShape& s) {
    s.validate();
    Int r = pow2(s.n - s.zeros) * factorial(s.n);
    r = div_exact(r, factorial(s.zeros), "orbit size");
    for (int b : s.blocks) r = div_exact(r, factorial(b), "orbit size");
    return r;
}

/// Number of orbit elements fixed by sign flips in the first k coordinates,
/// i.e. with zeros there: 2^(n-n0) * (n-k)! / ((n0-k)! * n1! * ... * nm!),
/// and 0 when n0 < k. For k = 1 this is the printed closed form; for k > 1
/// it is the same count with k pinned zeros, cross-checked against the
/// enumeration oracle in the test suite.
inline Int fixed_count(const WeightShape& s, int k) {
    s.validate();
    if (k < 1 || k > s.n) throw DomainError("fixed_count: 1 <= k <= n required");
    if (s.zeros < k) return 0;
    Int r = pow2(s.n - s.zeros) * factorial(s.n - k);
    r = div_exact(r, factorial(s.zeros - k), "fixed count");
    for (int b : s.blocks) r = div_exact(r, factorial(b), "fixed count");
    return r;
}

inline Int regular_count(const WeightShape& s, int k) { return orbit_size(s) - fixed_count(s, k); }

/// F(n, a) = (1/2) * 2^a * (a/n) * binom(n, a): the minimum of half the
/// regular count over weights with exactly a nonzero entries and k = 1,
/// attained when all nonzero entries share one absolute value.
inline Rat min_orbit_F(int n, int a) {
    if (a < 1 || a > n) throw DomainError("min_orbit_F: 1 <= a <= n required");
    Rat r(pow2(a) * binomial(n, a) * a, 2 * Int(n));
    r.canonicalize();
    return r;
}

/// codim of the centralizer of an involution with k (-1)-eigenvalues:
/// (2n - k) * k.
inline Int centralizer_codim(int n, int k) { return Int(2 * n - k) * k; }

inline long orbit_bound_from_env(long fallback = 8) {
    if (const char* s = std::getenv("LIE_LEVEL_ORBIT_BOUND")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return fallback;
}

/// The exact orbit of chi under sign changes and permutations, as a sorted
/// deduplicated set. Guarded by a length cap (default 8, overridable via
/// LIE_LEVEL_ORBIT_BOUND) to keep 2^n * n! tractable.
inline std::set<std::vector<int>> enumerate_orbit(const std::vector<int>& chi, long bound = -1) {
    if (bound < 0) bound = orbit_bound_from_env();
    const int n = static_cast<int>(chi.size());
    if (n > bound) throw ResourceError("enumerate_orbit: length exceeds the configured bound");
    std::vector<int> base(chi);
    for (int& x : base) x = std::abs(x);
    std::sort(base.begin(), base.end());
    std::set<std::vector<int>> out;
    std::vector<int> nz;
    do {
        nz.clear();
        for (int i = 0; i < n; ++i)
            if (base[i] != 0) nz.push_back(i);
        const int m = static_cast<int>(nz.size());
        for (long mask = 0; mask < (1L << m); ++mask) {
            std::vector<int> w = base;
            for (int j = 0; j < m; ++j)
                if (mask & (1L << j)) w[static_cast<size_t>(nz[static_cast<size_t>(j)])] *= -1;
            out.insert(std::move(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

/// chi - k*alpha, for 0 <= k <= <chi, alpha^vee>; the result is guaranteed
/// to be a weight of the same irreducible and is asserted to be one.
inline std::vector<int> saturation_step(const GroupDesc& g, const DominantWeight& lambda,
                                        const std::vector<int>& chi, const std::vector<int>& alpha,
                                        long k) {
    validate_weight(g, lambda);
    RootSystem rs = RootSystem::make(g.family == Family::Ofull ? GroupDesc::so(g.size) : g);
    long na = RootSystem::dot(alpha, alpha);
    if (na == 0) throw DomainError("saturation_step: zero root");
    long pairing = 2 * RootSystem::dot(chi, alpha);
    if (pairing % na != 0) throw DomainError("saturation_step: chi not in the weight lattice");
    long cap = pairing / na;
    if (k < 0 || k > cap) throw DomainError("saturation_step: k outside [0, <chi, alpha^vee>]");
    if (!is_weight_of(g, lambda, chi)) throw DomainError("saturation_step: chi is not a weight");
    std::vector<int> out(chi);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= static_cast<int>(k) * alpha[i];
    if (!is_weight_of(g, lambda, out)) throw Error("saturation_step: result is not a weight");
    return out;
}

}  // namespace lielevel
