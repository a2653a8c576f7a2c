#include "pegging/state.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace peg {

Distribution Distribution::of(std::size_t universe, std::span<const VertexId> pegs) {
    Distribution d(universe);
    for (VertexId v : pegs) d.insert(v);
    return d;
}

Distribution Distribution::full(std::size_t universe) {
    Distribution d(universe);
    d.words_.assign((universe + 63) / 64, ~std::uint64_t{0});
    if (universe % 64 != 0) d.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    d.trim();
    return d;
}

void Distribution::insert(VertexId v) {
    if (v >= universe_) {
        throw std::out_of_range("Distribution: vertex " + std::to_string(v) + " outside universe of " + std::to_string(universe_));
    }
    const std::size_t w = v / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v % 64);
}

void Distribution::erase(VertexId v) {
    const std::size_t w = v / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (v % 64));
    trim();
}

void Distribution::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::size_t Distribution::size() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<VertexId> Distribution::vertices() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
            w &= w - 1;
        }
    }
    return out;
}

bool Distribution::is_subset_of(const Distribution& other) const {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Distribution& x, const Distribution& y) {
    if (auto c = x.universe_ <=> y.universe_; c != 0) return c;
    const std::size_t n = std::max(x.words_.size(), y.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < x.words_.size() ? x.words_[i] : 0;
        const std::uint64_t b = i < y.words_.size() ? y.words_[i] : 0;
        if (a == b) continue;
        const std::uint64_t diff = a ^ b;
        const std::uint64_t lowest = diff & (~diff + 1);
        return (a & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Distribution::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (VertexId v : vertices()) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

MultiDistribution::MultiDistribution(const Distribution& d) : universe_(d.universe()) {
    for (VertexId v : d.vertices()) counts_[v] = 1;
}

std::uint32_t MultiDistribution::count(VertexId v) const {
    const auto it = counts_.find(v);
    return it == counts_.end() ? 0 : it->second;
}

void MultiDistribution::add(VertexId v, std::uint32_t k) {
    if (v >= universe_) throw std::out_of_range("MultiDistribution: vertex outside universe");
    if (k == 0) return;
    counts_[v] += k;
}

void MultiDistribution::remove(VertexId v, std::uint32_t k) {
    const auto it = counts_.find(v);
    if (it == counts_.end() || it->second < k) {
        throw std::invalid_argument("MultiDistribution: not enough pegs on vertex " + std::to_string(v));
    }
    it->second -= k;
    if (it->second == 0) counts_.erase(it);
}

std::size_t MultiDistribution::total() const {
    std::size_t t = 0;
    for (const auto& [v, c] : counts_) t += c;
    return t;
}

bool MultiDistribution::is_proper() const {
    for (const auto& [v, c] : counts_) {
        if (c != 1) return false;
    }
    return true;
}

Distribution MultiDistribution::support() const {
    Distribution d(universe_);
    for (const auto& [v, c] : counts_) d.insert(v);
    return d;
}

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::pegging: return "pegging";
        case MoveKind::stacking: return "stacking";
        case MoveKind::pebbling: return "pebbling";
    }
    return "?";
}

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::proper: return "proper";
        case Mode::stacking: return "stacking";
        case Mode::peggling: return "peggling";
    }
    return "?";
}

std::string to_string(const Move& m) {
    std::ostringstream out;
    out << '<' << m.from << ',' << m.over << "->" << m.to << '>';
    if (m.kind != MoveKind::pegging) out << '[' << to_string(m.kind) << ']';
    return out.str();
}

MoveKind move_kind_from_string(const std::string& s) {
    if (s == "pegging") return MoveKind::pegging;
    if (s == "stacking") return MoveKind::stacking;
    if (s == "pebbling") return MoveKind::pebbling;
    throw std::invalid_argument("unknown move kind '" + s + "'");
}

Mode mode_from_string(const std::string& s) {
    if (s == "proper") return Mode::proper;
    if (s == "stacking") return Mode::stacking;
    if (s == "peggling") return Mode::peggling;
    throw std::invalid_argument("unknown mode '" + s + "' (expected proper|stacking|peggling)");
}

}  // namespace peg
