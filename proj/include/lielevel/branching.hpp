#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "lielevel/dimension.hpp"
#include "lielevel/group.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

enum class IndexConvention { sl_ascending, sp_symmetric };

/// Graded quotients of the restriction of an irreducible to the stabilizer
/// of a generic vector. For sl_ascending the levels are Q_1..Q_l with Q_l
/// the top quotient; for sp_symmetric they are Q_{-k}..Q_k and satisfy
/// Q_i = Q_{-i}.
struct Filtration {
    std::vector<RepSum> levels;
    GroupDesc levi;
    IndexConvention convention = IndexConvention::sl_ascending;

    int length() const { return static_cast<int>(levels.size()); }
    int min_index() const { return convention == IndexConvention::sl_ascending ? 1 : -(length() - 1) / 2; }
    int max_index() const { return convention == IndexConvention::sl_ascending ? length() : (length() - 1) / 2; }
    const RepSum& level(int i) const { return levels.at(static_cast<size_t>(i - min_index())); }
    RepSum& level(int i) { return levels.at(static_cast<size_t>(i - min_index())); }

    RepSum flattened() const {
        RepSum s;
        for (const auto& lv : levels)
            for (const auto& [w, m] : lv.terms) s.add(w, m);
        return s;
    }
};

namespace detail {

inline void enumerate_interlacing(const std::vector<int>& lambda,
                                  const std::function<void(const std::vector<int>&)>& emit) {
    const int n = static_cast<int>(lambda.size());
    std::vector<int> mu(n - 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            emit(mu);
            return;
        }
        for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

}  // namespace detail

/// Restriction of an SL_n irreducible to SL_{n-1}: one copy of each tuple
/// interlacing lambda. The emitted weights are the raw interlacing tuples
/// (their canonical forms may collide; the raw tuples carry the grading).
inline RepSum branch_sl(int n, const DominantWeight& lambda) {
    if (n < 2) throw DomainError("branch_sl: n >= 2 required");
    validate_weight(GroupDesc::sl(n), lambda);
    RepSum out;
    detail::enumerate_interlacing(lambda.entries,
                                  [&](const std::vector<int>& mu) { out.add(DominantWeight{mu}); });
    return out;
}

/// The filtration of an SL_n irreducible as a module over the stabilizer of
/// a basis vector. Level i collects the interlacing tuples whose box count
/// is (lambda_2+...+lambda_n) + i - 1; weights are stored in canonical
/// SL_{n-1} form (within a level this loses nothing: equal box count and
/// equal canonical form force equal tuples).
inline Filtration filtration_sl(int n, const DominantWeight& lambda) {
    if (n < 2) throw DomainError("filtration_sl: n >= 2 required");
    validate_weight(GroupDesc::sl(n), lambda);
    const auto& l = lambda.entries;
    long base = 0;
    for (int i = 1; i < n; ++i) base += l[i];
    const int len = l[0] - l[n - 1] + 1;
    Filtration f;
    f.levi = GroupDesc::sl(n - 1);
    f.convention = IndexConvention::sl_ascending;
    f.levels.assign(len, RepSum{});
    detail::enumerate_interlacing(l, [&](const std::vector<int>& mu) {
        long box = 0;
        for (int x : mu) box += x;
        f.level(static_cast<int>(box - base) + 1).add(canonical_sl(DominantWeight{mu}));
    });
    return f;
}

namespace detail {

/// Degrees x_i - y_i of the nonincreasing rearrangement
/// x_1 >= y_1 >= ... >= x_n >= y_n of {lambda, mu, 0}.
inline std::vector<int> sp_degrees(const std::vector<int>& lambda, const std::vector<int>& mu) {
    std::vector<int> all(lambda);
    all.insert(all.end(), mu.begin(), mu.end());
    all.push_back(0);
    std::sort(all.begin(), all.end(), std::greater<>());
    std::vector<int> d(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) d[i] = all[2 * i] - all[2 * i + 1];
    return d;
}

inline bool sp_double_interlaces(const std::vector<int>& lambda, const std::vector<int>& mu) {
    const int n = static_cast<int>(lambda.size());
    for (int j = 0; j + 1 < n; ++j) {
        int lo = j + 2 < n ? lambda[j + 2] : 0;
        if (!(lambda[j] >= mu[j] && mu[j] >= lo)) return false;
    }
    for (int j = 0; j + 2 < n; ++j)
        if (mu[j] < mu[j + 1]) return false;
    return !mu.empty() ? mu.back() >= 0 : true;
}

inline void enumerate_sp_mu(const std::vector<int>& lambda,
                            const std::function<void(const std::vector<int>&)>& emit) {
    const int n = static_cast<int>(lambda.size());
    std::vector<int> mu(n - 1);
    std::function<void(int)> rec = [&](int j) {
        if (j == n - 1) {
            emit(mu);
            return;
        }
        int lo = (j + 2 < n) ? lambda[j + 2] : 0;
        int hi = std::min(lambda[j], j > 0 ? mu[j - 1] : lambda[0]);
        for (int v = hi; v >= lo; --v) {
            mu[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
}

/// Iterated Clebsch-Gordan: decompose a tensor product of binary-form
/// modules of the given degrees into degree -> multiplicity.
inline std::map<int, long> clebsch_gordan(const std::vector<int>& degrees) {
    std::map<int, long> acc{{0, 1}};
    for (int d : degrees) {
        std::map<int, long> next;
        for (const auto& [e, m] : acc)
            for (int j = std::abs(e - d); j <= e + d; j += 2) next[j] += m;
        acc = std::move(next);
    }
    return acc;
}

}  // namespace detail

/// Restriction of an Sp_2n irreducible to Sp_{2n-2}: all mu satisfying the
/// double interlacing condition lambda_j >= mu_j >= lambda_{j+2}, with
/// multiplicity the product of (x_i - y_i + 1) over the nonincreasing
/// rearrangement of {lambda, mu, 0}.
inline RepSum branch_sp(int n, const DominantWeight& lambda) {
    if (n < 2) throw DomainError("branch_sp: n >= 2 required");
    validate_weight(GroupDesc::sp(n), lambda);
    RepSum out;
    detail::enumerate_sp_mu(lambda.entries, [&](const std::vector<int>& mu) {
        long mult = 1;
        for (int d : detail::sp_degrees(lambda.entries, mu)) mult *= d + 1;
        out.add(DominantWeight{mu}, mult);
    });
    return out;
}

/// The degrees of the binary-form modules whose tensor product is the
/// multiplicity space of mu in the restriction.
inline std::vector<int> sp_multiplicity_space(int n, const DominantWeight& lambda,
                                              const DominantWeight& mu) {
    if (n < 2) throw DomainError("sp_multiplicity_space: n >= 2 required");
    validate_weight(GroupDesc::sp(n), lambda);
    validate_weight(GroupDesc::sp(n - 1), mu);
    if (!detail::sp_double_interlaces(lambda.entries, mu.entries))
        throw DomainError("sp_multiplicity_space: mu does not doubly interlace lambda");
    return detail::sp_degrees(lambda.entries, mu.entries);
}

/// The symmetric filtration of an Sp_2n irreducible as a module over the
/// stabilizer of a generic vector. Each multiplicity space decomposes into
/// binary-form modules by iterated Clebsch-Gordan; a module of degree e
/// places one copy of mu at every level e, e-2, ..., -e. The grading agent
/// shifts levels by 2 and the central torus weight pins the placement, so
/// this is the unique layout compatible with the symmetry Q_i = Q_{-i}.
inline Filtration filtration_sp(int n, const DominantWeight& lambda) {
    if (n < 2) throw DomainError("filtration_sp: n >= 2 required");
    validate_weight(GroupDesc::sp(n), lambda);
    std::map<int, RepSum> by_level;
    int k = 0;
    detail::enumerate_sp_mu(lambda.entries, [&](const std::vector<int>& mu) {
        auto cg = detail::clebsch_gordan(detail::sp_degrees(lambda.entries, mu));
        for (const auto& [e, m] : cg) {
            k = std::max(k, e);
            for (int j = e; j >= -e; j -= 2) by_level[j].add(DominantWeight{mu}, m);
        }
    });
    Filtration f;
    f.levi = GroupDesc::sp(n - 1);
    f.convention = IndexConvention::sp_symmetric;
    f.levels.assign(2 * k + 1, RepSum{});
    for (auto& [j, s] : by_level) f.level(j) = std::move(s);
    return f;
}

/// SO_{2n+1} down to SO_{2n}; multiplicity-free, last entry of mu may be
/// negative.
inline RepSum branch_so_odd(int n, const DominantWeight& lambda) {
    validate_weight(GroupDesc::so(2 * n + 1), lambda);
    RepSum out;
    const auto& l = lambda.entries;
    std::vector<int> mu(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.add(DominantWeight{mu});
            return;
        }
        if (i + 1 < n) {
            for (int v = l[i]; v >= l[i + 1]; --v) {
                mu[i] = v;
                rec(i + 1);
            }
        } else {
            for (int v = l[n - 1]; v >= -l[n - 1]; --v) {
                mu[i] = v;
                rec(i + 1);
            }
        }
    };
    rec(0);
    return out;
}

/// SO_{2n} down to SO_{2n-1}; multiplicity-free.
inline RepSum branch_so_even(int n, const DominantWeight& lambda) {
    validate_weight(GroupDesc::so(2 * n), lambda);
    RepSum out;
    const auto& l = lambda.entries;
    std::vector<int> mu(n - 1);
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            out.add(DominantWeight{mu});
            return;
        }
        int lo = (i + 1 == n - 1) ? std::abs(l[n - 1]) : l[i + 1];
        for (int v = l[i]; v >= lo; --v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Restriction of an O_N irreducible to O_{N-1}, with labels.
///
/// Odd N: branches with mu_n > 0 pair with their mirror into one induced
/// (Empty) summand; mu_n = 0 keeps a +/- label whose sign the rules leave
/// undetermined, marked Unknown.
///
/// Even N: an induced input splits every branch weight into both labels; a
/// +/- input assigns each branch weight the input sign times the parity of
/// its box count.
inline RepSum restrict_o(int N, const DominantWeight& w) {
    GroupDesc g = GroupDesc::o(N);
    validate_weight(g, w);
    const int n = g.rank();
    RepSum out;
    if (N % 2) {  // O_{2n+1} -> O_{2n}
        RepSum so = branch_so_odd(n, DominantWeight{w.entries});
        for (const auto& [mu, m] : so.terms) {
            int last = mu.entries[n - 1];
            if (last < 0) continue;  // merged with the positive partner
            DominantWeight v = mu;
            v.label = last > 0 ? OLabel::Empty : OLabel::Unknown;
            out.add(v, m);
        }
    } else {  // O_{2n} -> O_{2n-1}
        RepSum so = branch_so_even(n, DominantWeight{w.entries});
        for (const auto& [mu, m] : so.terms) {
            if (w.label == OLabel::Empty) {
                DominantWeight plus = mu, minus = mu;
                plus.label = OLabel::Plus;
                minus.label = OLabel::Minus;
                out.add(plus, m);
                out.add(minus, m);
            } else {
                bool flip = mu.box_count() % 2;
                DominantWeight v = mu;
                bool positive = (w.label == OLabel::Plus) != flip;
                v.label = positive ? OLabel::Plus : OLabel::Minus;
                out.add(v, m);
            }
        }
    }
    return out;
}

/// Restriction of the G2 irreducible with highest weight m1*w1 + m2*w2 to
/// the subgroup fixing a generic traceless octonion, expressed as GL_3
/// partitions. One summand per interlacing pattern (a, b, c) with
/// m1+m2 >= a >= m2 >= b >= 0 and a >= c >= b; colliding partitions
/// accumulate multiplicity.
inline RepSum branch_g2_sl3(int m1, int m2) {
    if (m1 < 0 || m2 < 0) throw DomainError("branch_g2_sl3: m1, m2 >= 0 required");
    RepSum out;
    for (int a = m2; a <= m1 + m2; ++a)
        for (int b = 0; b <= m2; ++b)
            for (int c = b; c <= a; ++c)
                out.add(DominantWeight{{m1 + c, a - m2 + b, 0}});
    return out;
}

}  // namespace lielevel
