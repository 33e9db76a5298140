#ifndef SPINDEX_SIGN_VECTORS_HPP
#define SPINDEX_SIGN_VECTORS_HPP

#include <cstdint>
#include <vector>

namespace spindex {

// All sign vectors of length k in tensor order: bit j-1 of the counter gives
// eps_j, 0 -> +1. Negation reverses this list, so parity-filtered sublists
// have their halves interchanged by reflection when k is even.
inline std::vector<std::vector<int>> all_sign_vectors(int k) {
    std::vector<std::vector<int>> out;
    out.reserve(size_t{1} << k);
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << k); ++b) {
        std::vector<int> s(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) s[j] = (b & (std::uint32_t{1} << j)) ? -1 : 1;
        out.push_back(std::move(s));
    }
    return out;
}

inline int negative_count(const std::vector<int>& signs) {
    int c = 0;
    for (int s : signs) c += (s == -1);
    return c;
}

} // namespace spindex

#endif
