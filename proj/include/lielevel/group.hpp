#pragma once

#include <string>

#include "lielevel/errors.hpp"
#include "lielevel/integers.hpp"

namespace lielevel {

/// The classical families handled by the library, plus G2.
///
/// `size` is n for SL_n and Sp_2n, N for SO_N / O_N, and unused for G2.
enum class Family { SL, Sp, SOodd, SOeven, Ofull, G2 };

struct GroupDesc {
    Family family = Family::SL;
    int size = 0;

    static GroupDesc sl(int n) { return {Family::SL, n}; }
    static GroupDesc sp(int n) { return {Family::Sp, n}; }
    static GroupDesc so(int N) { return {N % 2 ? Family::SOodd : Family::SOeven, N}; }
    static GroupDesc o(int N) { return {Family::Ofull, N}; }
    static GroupDesc g2() { return {Family::G2, 0}; }

    bool operator==(const GroupDesc& other) const = default;

    /// Length of a dominant weight vector for this group.
    int rank() const {
        switch (family) {
            case Family::SL: return size;  // weight length n, entries defined up to a common shift
            case Family::Sp: return size;
            case Family::SOodd:
            case Family::SOeven:
            case Family::Ofull: return size / 2;
            case Family::G2: return 2;
        }
        return 0;
    }

    std::string name() const {
        switch (family) {
            case Family::SL: return "SL" + std::to_string(size);
            case Family::Sp: return "Sp" + std::to_string(2 * size);
            case Family::SOodd:
            case Family::SOeven: return "SO" + std::to_string(size);
            case Family::Ofull: return "O" + std::to_string(size);
            case Family::G2: return "G2";
        }
        return "?";
    }
};

inline void validate_group(const GroupDesc& g) {
    switch (g.family) {
        case Family::SL:
            if (g.size < 1) throw DomainError("SL_n requires n >= 1");
            break;
        case Family::Sp:
            if (g.size < 1) throw DomainError("Sp_2n requires n >= 1");
            break;
        case Family::SOodd:
            if (g.size < 2 || g.size % 2 == 0) throw DomainError("SOodd requires odd N >= 3");
            break;
        case Family::SOeven:
            if (g.size < 2 || g.size % 2 != 0) throw DomainError("SOeven requires even N >= 2");
            break;
        case Family::Ofull:
            if (g.size < 2) throw DomainError("O_N requires N >= 2");
            break;
        case Family::G2:
            break;
    }
}

/// Dimension of the group as an algebraic group (for O_N, of its identity
/// component, so SO_N and O_N share N(N-1)/2).
inline Int group_dim(const GroupDesc& g) {
    validate_group(g);
    const long s = g.size;
    switch (g.family) {
        case Family::SL: return Int(s) * s - 1;
        case Family::Sp: return 2 * Int(s) * s + s;
        case Family::SOodd:
        case Family::SOeven:
        case Family::Ofull: return Int(s) * (s - 1) / 2;
        case Family::G2: return 14;
    }
    return 0;
}

}  // namespace lielevel
