#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bregman {

// A simplex is its strictly increasing list of point indices.
using Simplex = std::vector<int>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
        for (int v : s) {
            std::uint64_t x = static_cast<std::uint32_t>(v);
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Sorted insert of a vertex not already present.
inline Simplex simplex_with(const Simplex& s, int v) {
    Simplex out;
    out.reserve(s.size() + 1);
    std::size_t i = 0;
    while (i < s.size() && s[i] < v) out.push_back(s[i++]);
    out.push_back(v);
    while (i < s.size()) out.push_back(s[i++]);
    return out;
}

inline bool simplex_has_vertex(const Simplex& s, int v) {
    for (int u : s)
        if (u == v) return true;
    return false;
}

// Subset test for sorted vertex lists.
inline bool simplex_contains(const Simplex& outer, const Simplex& inner) {
    std::size_t i = 0;
    for (int v : inner) {
        while (i < outer.size() && outer[i] < v) ++i;
        if (i == outer.size() || outer[i] != v) return false;
        ++i;
    }
    return true;
}

inline std::vector<Simplex> simplex_facets(const Simplex& s) {
    std::vector<Simplex> out;
    if (s.size() < 2) return out;
    out.reserve(s.size());
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex f;
        f.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace bregman
