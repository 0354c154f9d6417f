#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lielevel/errors.hpp"
#include "lielevel/integers.hpp"

namespace lielevel {

/// Weakly decreasing list of nonnegative integers; trailing zeros stripped.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw DomainError("partition parts must be weakly decreasing");
        for (int x : parts)
            if (x < 0) throw DomainError("partition parts must be nonnegative");
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    int rows() const { return static_cast<int>(parts.size()); }
    int cols() const { return parts.empty() ? 0 : parts[0]; }
    long size() const {
        long s = 0;
        for (int x : parts) s += x;
        return s;
    }

    Partition conjugate() const {
        std::vector<int> c(cols(), 0);
        for (int x : parts)
            for (int j = 0; j < x; ++j) ++c[j];
        return Partition(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

/// dim of the Schur functor applied to C^m, by the hook content formula.
/// Returns 0 when the partition has more than m rows.
inline Int gl_partition_dim(const Partition& p, int m) {
    if (m < 0) throw DomainError("gl_partition_dim: m must be nonnegative");
    if (p.rows() > m) return 0;
    Int num = 1, den = 1;
    const auto conj = p.conjugate();
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.parts[i]; ++j) {
            num *= m + j - i;
            long hook = (p.parts[i] - j) + (conj.parts[j] - i) - 1;
            den *= hook;
        }
    }
    return div_exact(num, den, "hook content formula");
}

/// All partitions of c listed in descending lexicographic order, optionally
/// restricted to at most max_rows rows and max_cols columns.
inline std::vector<Partition> partitions_of(int c, int max_rows = -1, int max_cols = -1) {
    if (c < 0) throw DomainError("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int hi) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows) return;
        for (int v = std::min(rem, hi); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(c, max_cols >= 0 ? std::min(c, max_cols) : c);
    return out;
}

/// Decomposition of the c-th exterior power of a tensor product of spaces of
/// dimensions p and q into pairs (lambda, conjugate(lambda)), lambda running
/// over partitions of c with at most p rows and at most q columns, in
/// descending lexicographic order on lambda.
inline std::vector<std::pair<Partition, Partition>> cauchy_exterior(int c, int p, int q) {
    if (c < 1) throw DomainError("cauchy_exterior: c >= 1 required");
    std::vector<std::pair<Partition, Partition>> out;
    for (auto& lam : partitions_of(c, p, q)) out.emplace_back(lam, lam.conjugate());
    return out;
}

}  // namespace lielevel
