#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <vector>

#include "lielevel/errors.hpp"
#include "lielevel/group.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

/// Root data in epsilon coordinates, one instance per (family, rank).
///
/// Weights are integer coordinate vectors; the invariant form is the
/// standard dot product. two_rho holds twice the half-sum of positive roots
/// so that every pairing below stays integral (B_n and A_{n-1} have
/// half-integral rho).
///
/// G2 is realized inside the sum-zero hyperplane of Z^3: short roots are
/// e_i - e_j, long roots 2e_i - e_j - e_k. The fundamental weight of the
/// long simple root is the highest root (the 14-dimensional adjoint), the
/// one of the short simple root is the 7-dimensional representation.
struct RootSystem {
    Family family;
    int rank = 0;  // number of weight entries (G2: 2)
    int dim = 0;   // coordinate dimension (G2: 3, SL_n: n)
    std::vector<std::vector<int>> positive;
    std::vector<std::vector<int>> simple;
    std::vector<int> two_rho;

    static RootSystem make(const GroupDesc& g) {
        validate_group(g);
        RootSystem rs;
        rs.family = g.family;
        rs.rank = g.rank();
        auto unit = [&](int i, int j, int si, int sj) {
            std::vector<int> v(rs.dim, 0);
            v[i] += si;
            if (j >= 0) v[j] += sj;
            return v;
        };
        switch (g.family) {
            case Family::SL: {
                int n = g.size;
                rs.dim = n;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) rs.positive.push_back(unit(i, j, 1, -1));
                for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(unit(i, i + 1, 1, -1));
                rs.two_rho.resize(n);
                for (int i = 0; i < n; ++i) rs.two_rho[i] = n - 1 - 2 * i;
                break;
            }
            case Family::Sp: {
                int n = g.size;
                rs.dim = n;
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        rs.positive.push_back(unit(i, j, 1, -1));
                        rs.positive.push_back(unit(i, j, 1, 1));
                    }
                    rs.positive.push_back(unit(i, -1, 2, 0));
                }
                for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(unit(i, i + 1, 1, -1));
                rs.simple.push_back(unit(n - 1, -1, 2, 0));
                rs.two_rho.resize(n);
                for (int i = 0; i < n; ++i) rs.two_rho[i] = 2 * (n - i);
                break;
            }
            case Family::SOodd: {
                int n = g.rank();
                rs.dim = n;
                for (int i = 0; i < n; ++i) {
                    for (int j = i + 1; j < n; ++j) {
                        rs.positive.push_back(unit(i, j, 1, -1));
                        rs.positive.push_back(unit(i, j, 1, 1));
                    }
                    rs.positive.push_back(unit(i, -1, 1, 0));
                }
                for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(unit(i, i + 1, 1, -1));
                rs.simple.push_back(unit(n - 1, -1, 1, 0));
                rs.two_rho.resize(n);
                for (int i = 0; i < n; ++i) rs.two_rho[i] = 2 * (n - i) - 1;
                break;
            }
            case Family::SOeven:
            case Family::Ofull: {
                int n = g.rank();
                rs.dim = n;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        rs.positive.push_back(unit(i, j, 1, -1));
                        rs.positive.push_back(unit(i, j, 1, 1));
                    }
                for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(unit(i, i + 1, 1, -1));
                if (n >= 2) rs.simple.push_back(unit(n - 2, n - 1, 1, 1));
                rs.two_rho.resize(n);
                for (int i = 0; i < n; ++i) rs.two_rho[i] = 2 * (n - 1 - i);
                break;
            }
            case Family::G2: {
                rs.dim = 3;
                rs.simple = {{-2, 1, 1}, {1, -1, 0}};  // long, short
                rs.positive = {{1, -1, 0},  {-2, 1, 1}, {-1, 0, 1},
                               {0, -1, 1},  {1, -2, 1}, {-1, -1, 2}};
                rs.two_rho = {-2, -4, 6};
                break;
            }
        }
        return rs;
    }

    static long dot(const std::vector<int>& a, const std::vector<int>& b) {
        long s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
        return s;
    }

    /// Weight entries -> epsilon coordinates (identity except for G2).
    std::vector<int> to_coords(const std::vector<int>& entries) const {
        if (family != Family::G2) return entries;
        int m1 = entries[0], m2 = entries[1];
        return {-m1, -m1 - m2, 2 * m1 + m2};
    }

    /// Representative of the Weyl orbit in the dominant chamber.
    std::vector<int> dominantize(std::vector<int> v) const {
        switch (family) {
            case Family::SL:
                std::sort(v.begin(), v.end(), std::greater<>());
                return v;
            case Family::Sp:
            case Family::SOodd:
                for (int& x : v) x = std::abs(x);
                std::sort(v.begin(), v.end(), std::greater<>());
                return v;
            case Family::SOeven:
            case Family::Ofull: {
                int negs = 0;
                bool has_zero = false;
                for (int& x : v) {
                    if (x < 0) {
                        ++negs;
                        x = -x;
                    }
                    if (x == 0) has_zero = true;
                }
                std::sort(v.begin(), v.end(), std::greater<>());
                if ((negs % 2) && !has_zero && !v.empty()) v.back() = -v.back();
                return v;
            }
            case Family::G2: {
                // iterate simple reflections until dominant
                for (;;) {
                    bool moved = false;
                    for (const auto& a : simple) {
                        long na = dot(a, a);
                        long p = dot(v, a);
                        if (2 * p % na != 0) throw Error("G2 reflection: non-lattice vector");
                        long c = 2 * p / na;
                        if (c < 0) {
                            for (int i = 0; i < dim; ++i) v[i] -= static_cast<int>(c) * a[i];
                            moved = true;
                        }
                    }
                    if (!moved) return v;
                }
            }
        }
        return v;
    }

    /// Coefficients of delta in the nonnegative integer span of the simple
    /// roots, or nullopt. Used both as the "chi is below lambda" test and as
    /// the height function that drives the Freudenthal recursion.
    std::optional<std::vector<long>> cone_coefficients(const std::vector<int>& delta) const {
        std::vector<long> c;
        auto psum = [&](int upto) {
            long s = 0;
            for (int i = 0; i <= upto; ++i) s += delta[i];
            return s;
        };
        switch (family) {
            case Family::SL: {
                int n = dim;
                long tot = 0;
                for (int x : delta) tot += x;
                if (tot != 0) return std::nullopt;
                for (int j = 0; j + 1 < n; ++j) {
                    long p = psum(j);
                    if (p < 0) return std::nullopt;
                    c.push_back(p);
                }
                return c;
            }
            case Family::Sp: {
                int n = dim;
                for (int j = 0; j + 1 < n; ++j) {
                    long p = psum(j);
                    if (p < 0) return std::nullopt;
                    c.push_back(p);
                }
                long p = psum(n - 1);
                if (p < 0 || p % 2) return std::nullopt;
                c.push_back(p / 2);
                return c;
            }
            case Family::SOodd: {
                int n = dim;
                for (int j = 0; j < n; ++j) {
                    long p = psum(j);
                    if (p < 0) return std::nullopt;
                    c.push_back(p);
                }
                return c;
            }
            case Family::SOeven:
            case Family::Ofull: {
                int n = dim;
                if (n == 1) {
                    if (delta[0] != 0) return std::nullopt;
                    return std::vector<long>{};
                }
                for (int j = 0; j + 2 < n; ++j) {
                    long p = psum(j);
                    if (p < 0) return std::nullopt;
                    c.push_back(p);
                }
                long pn1 = psum(n - 2), pn = psum(n - 1);
                if (pn < 0 || pn % 2) return std::nullopt;
                if (2 * pn1 < pn) return std::nullopt;
                c.push_back(pn1 - pn / 2);
                c.push_back(pn / 2);
                return c;
            }
            case Family::G2: {
                long c1 = delta[2];                       // coefficient of the long simple root
                long c2 = delta[2] - delta[1];            // coefficient of the short simple root
                if (delta[0] + delta[1] + delta[2] != 0) return std::nullopt;
                if (c1 < 0 || c2 < 0) return std::nullopt;
                if (-2 * c1 + c2 != delta[0]) return std::nullopt;
                return std::vector<long>{c1, c2};
            }
        }
        return std::nullopt;
    }

    std::optional<long> cone_height(const std::vector<int>& lambda,
                                    const std::vector<int>& chi) const {
        std::vector<int> d(dim);
        for (int i = 0; i < dim; ++i) d[i] = lambda[i] - chi[i];
        auto c = cone_coefficients(d);
        if (!c) return std::nullopt;
        long h = 0;
        for (long x : *c) h += x;
        return h;
    }
};

}  // namespace lielevel
