#pragma once

#include <vector>

#include "lielevel/group.hpp"
#include "lielevel/integers.hpp"
#include "lielevel/partition.hpp"
#include "lielevel/rootsystem.hpp"
#include "lielevel/weight.hpp"

namespace lielevel {

namespace detail {

/// Weyl dimension formula: product over positive roots of
/// <lambda+rho, a> / <rho, a>, evaluated with doubled vectors to stay
/// integral. Exact arbitrary-precision arithmetic throughout.
inline Int weyl_dim(const RootSystem& rs, const std::vector<int>& coords) {
    std::vector<long> p(rs.dim);
    for (int i = 0; i < rs.dim; ++i) p[i] = 2L * coords[i] + rs.two_rho[i];
    Int num = 1, den = 1;
    for (const auto& a : rs.positive) {
        long s = 0, t = 0;
        for (int i = 0; i < rs.dim; ++i) {
            s += p[i] * a[i];
            t += static_cast<long>(rs.two_rho[i]) * a[i];
        }
        num *= s;
        den *= t;
    }
    return div_exact(num, den, "Weyl dimension formula");
}

}  // namespace detail

/// Exact dimension of the irreducible with highest weight w.
///
/// For O_N the induced representations (label Empty) restrict to two
/// SO_N-irreducibles, hence twice the SO dimension; the +/- extensions keep
/// the SO dimension.
inline Int irrep_dim(const GroupDesc& g, const DominantWeight& w) {
    validate_weight(g, w);
    if (g.family == Family::Ofull) {
        GroupDesc so = GroupDesc::so(g.size);
        DominantWeight base(w.entries);
        Int d = irrep_dim(so, base);
        return w.label == OLabel::Empty ? 2 * d : d;
    }
    RootSystem rs = RootSystem::make(g);
    return detail::weyl_dim(rs, rs.to_coords(w.entries));
}

inline Int repsum_dim(const GroupDesc& g, const RepSum& s) {
    Int d = 0;
    for (const auto& [w, m] : s.terms) d += m * irrep_dim(g, w);
    return d;
}

}  // namespace lielevel
