#include "pegging/combinations.hpp"

#include <algorithm>
#include <stdexcept>

namespace peg {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<VertexId> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    if (rank >= binomial(n, k)) throw std::out_of_range("combination rank out of range");
    std::vector<VertexId> out;
    out.reserve(k);
    VertexId x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        // Skip blocks of subsets whose i-th element is smaller than the answer.
        for (;; ++x) {
            const std::uint64_t block = binomial(n - x - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
        }
        out.push_back(x++);
    }
    return out;
}

std::uint64_t rank_combination(std::size_t n, std::span<const VertexId> combo) {
    const std::size_t k = combo.size();
    std::uint64_t rank = 0;
    VertexId x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (combo[i] >= n || (i > 0 && combo[i] <= combo[i - 1])) throw std::invalid_argument("not a sorted subset");
        for (; x < combo[i]; ++x) rank += binomial(n - x - 1, k - i - 1);
        ++x;
    }
    return rank;
}

bool next_combination(std::vector<VertexId>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace peg
