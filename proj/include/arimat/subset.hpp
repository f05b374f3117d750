#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace arimat {

// Subsets of the ground set {1..N} as bitmasks; bit i-1 stands for element i.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return std::popcount(s); }

inline bool subset_contains(Subset s, int e) { return (s >> (e - 1)) & 1u; }

inline Subset subset_with(Subset s, int e) { return s | (Subset{1} << (e - 1)); }

inline Subset subset_without(Subset s, int e) { return s & ~(Subset{1} << (e - 1)); }

inline std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int e = 1; s != 0; ++e, s >>= 1)
        if (s & 1u) out.push_back(e);
    return out;
}

inline Subset subset_from_elements(const std::vector<int>& elems) {
    Subset s = 0;
    for (int e : elems) s = subset_with(s, e);
    return s;
}

// Order used everywhere downstream: increasing cardinality, then
// lexicographic on the sorted element lists.
inline bool subset_less(Subset a, Subset b) {
    int ca = subset_size(a), cb = subset_size(b);
    if (ca != cb) return ca < cb;
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

inline std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace arimat
