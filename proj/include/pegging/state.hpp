#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "pegging/graph.hpp"

namespace peg {

// Proper distribution: at most one peg per vertex, stored as a bit vector
// over vertex ids 0..universe-1. Storage is trimmed after the highest set
// bit, so a few pegs near the root of a huge tree stay cheap.
class Distribution {
public:
    Distribution() = default;
    explicit Distribution(std::size_t universe) : universe_(universe) {}

    static Distribution of(std::size_t universe, std::span<const VertexId> pegs);
    static Distribution full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    bool contains(VertexId v) const {
        const std::size_t w = v / 64;
        return w < words_.size() && ((words_[w] >> (v % 64)) & 1U);
    }
    void insert(VertexId v);
    void erase(VertexId v);

    std::size_t size() const;
    bool empty() const { return words_.empty(); }
    std::vector<VertexId> vertices() const;
    std::span<const std::uint64_t> words() const { return words_; }
    bool is_subset_of(const Distribution& other) const;

    friend bool operator==(const Distribution&, const Distribution&) = default;
    // Lexicographic in vertex-id order: the distribution whose smallest
    // differing vertex is present sorts first.
    friend std::strong_ordering operator<=>(const Distribution& x, const Distribution& y);

    std::string to_string() const;

private:
    void trim();

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Multiset of vertices. Counts are always positive.
class MultiDistribution {
public:
    MultiDistribution() = default;
    explicit MultiDistribution(std::size_t universe) : universe_(universe) {}
    explicit MultiDistribution(const Distribution& d);

    std::size_t universe() const { return universe_; }
    std::uint32_t count(VertexId v) const;
    void add(VertexId v, std::uint32_t k = 1);
    void remove(VertexId v, std::uint32_t k = 1);  // throws if not present
    std::size_t total() const;
    bool is_proper() const;
    const std::map<VertexId, std::uint32_t>& counts() const { return counts_; }
    Distribution support() const;

    friend bool operator==(const MultiDistribution&, const MultiDistribution&) = default;

private:
    std::size_t universe_ = 0;
    std::map<VertexId, std::uint32_t> counts_;
};

enum class MoveKind : std::uint8_t { pegging, stacking, pebbling };
enum class Mode : std::uint8_t { proper, stacking, peggling };

// The peg on `from` jumps over `over` and lands on `to`. Pebbling moves have
// from == over: two pegs leave that vertex and one lands on `to`.
struct Move {
    VertexId from = 0;
    VertexId over = 0;
    VertexId to = 0;
    MoveKind kind = MoveKind::pegging;

    friend bool operator==(const Move&, const Move&) = default;
    friend auto operator<=>(const Move& x, const Move& y) {
        return std::tie(x.from, x.over, x.to, x.kind) <=> std::tie(y.from, y.over, y.to, y.kind);
    }
};

std::string to_string(MoveKind kind);
std::string to_string(Mode mode);
std::string to_string(const Move& m);
MoveKind move_kind_from_string(const std::string& s);
Mode mode_from_string(const std::string& s);

}  // namespace peg
