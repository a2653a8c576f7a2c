#include "pegging/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace peg {

namespace {

// Exact sum over d of counts[d] * w^d, in GMP integers.
GoldenNumber fold_histogram(std::span<const std::uint64_t> counts) {
    mpz_class a = 0;
    mpz_class b = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        if (counts[d] == 0) continue;
        const GoldenNumber p = omega_pow(static_cast<unsigned>(d));
        const mpz_class c = static_cast<unsigned long>(counts[d]);
        a += c * p.rational_part().get_num();
        b += c * p.omega_part().get_num();
    }
    return {mpq_class(a), mpq_class(b)};
}

std::uint32_t max_finite(std::span<const std::uint32_t> dist) {
    std::uint32_t m = 0;
    for (std::uint32_t d : dist) {
        if (d != kUnreached) m = std::max(m, d);
    }
    return m;
}

// Flat histogram: row v holds counts of targets at each distance from v.
struct Histogram {
    std::size_t width = 0;
    std::vector<std::uint64_t> cells;

    std::span<const std::uint64_t> row(VertexId v) const { return {cells.data() + v * width, width}; }
};

void accumulate(const Graph& g, VertexId t, Histogram& h) {
    const auto dist = distances_from(g, t);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] != kUnreached) ++h.cells[v * h.width + dist[v]];
    }
}

std::size_t histogram_width(const Graph& g) {
    // Any BFS eccentricity bounds distances up to a factor 2; this only
    // sizes the table.
    return g.vertex_count() == 0 ? 1 : 2 * static_cast<std::size_t>(max_finite(distances_from(g, 0))) + 1;
}

std::vector<GoldenNumber> fold_rows(const Graph& g, const Histogram& h) {
    std::vector<GoldenNumber> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = fold_histogram(h.row(v));
    return out;
}

void check_targets(const Graph& g, std::span<const VertexId> targets) {
    for (VertexId t : targets) {
        if (t >= g.vertex_count()) throw std::out_of_range("target vertex out of range");
    }
}

}  // namespace

WeightReport make_weight_report(std::vector<VertexId> targets, GoldenNumber value) {
    WeightReport r{std::move(targets), std::move(value), 0.0};
    r.float_hint = r.value.to_double();
    return r;
}

GoldenNumber distribution_weight(std::span<const std::uint32_t> dist_to_t, const Distribution& d) {
    std::vector<std::uint64_t> counts;
    for (VertexId v : d.vertices()) {
        const std::uint32_t dv = dist_to_t[v];
        if (dv == kUnreached) continue;  // other component contributes nothing
        if (counts.size() <= dv) counts.resize(dv + 1, 0);
        ++counts[dv];
    }
    return fold_histogram(counts);
}

GoldenNumber distribution_weight(const Graph& g, VertexId t, const Distribution& d) {
    if (d.universe() != g.vertex_count()) throw std::invalid_argument("distribution does not match graph");
    return distribution_weight(distances_from(g, t), d);
}

GoldenNumber summed_weight(const Graph& g, std::span<const VertexId> targets, VertexId x) {
    check_targets(g, targets);
    const auto dist = distances_from(g, x);
    std::vector<std::uint64_t> counts(max_finite(dist) + 1, 0);
    for (VertexId t : targets) {
        if (dist[t] != kUnreached) ++counts[dist[t]];
    }
    return fold_histogram(counts);
}

GoldenNumber summed_weight(const Graph& g, std::span<const VertexId> targets, const Distribution& d) {
    check_targets(g, targets);
    GoldenNumber total;
    for (VertexId t : targets) total += distribution_weight(g, t, d);
    return total;
}

std::vector<GoldenNumber> summed_weights_all_serial(const Graph& g, std::span<const VertexId> targets) {
    check_targets(g, targets);
    Histogram h{histogram_width(g), {}};
    h.cells.assign(g.vertex_count() * h.width, 0);
    for (VertexId t : targets) accumulate(g, t, h);
    return fold_rows(g, h);
}

std::vector<GoldenNumber> summed_weights_all(const Graph& g, std::span<const VertexId> targets) {
    check_targets(g, targets);
    const std::size_t width = histogram_width(g);
    const std::size_t cells = g.vertex_count() * width;
    Histogram total{width, std::vector<std::uint64_t>(cells, 0)};
    const auto count = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel
    {
        Histogram local{width, std::vector<std::uint64_t>(cells, 0)};
#pragma omp for schedule(dynamic, 16) nowait
        for (std::ptrdiff_t i = 0; i < count; ++i) accumulate(g, targets[static_cast<std::size_t>(i)], local);
#pragma omp critical
        for (std::size_t c = 0; c < cells; ++c) total.cells[c] += local.cells[c];
    }
    std::vector<GoldenNumber> out(g.vertex_count());
    const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = fold_histogram(total.row(static_cast<VertexId>(v)));
    return out;
}

std::optional<WeightCertificate> weight_unreachability_certificate(const Graph& g, const Distribution& d, VertexId t) {
    GoldenNumber w = distribution_weight(g, t, d);
    if (cmp_rational(w, 1) == std::strong_ordering::less) return WeightCertificate{t, std::move(w)};
    return std::nullopt;
}

std::size_t optimal_lower_bound(const Graph& g, std::span<const VertexId> targets) {
    if (targets.empty()) throw std::invalid_argument("optimal_lower_bound: empty target set");
    auto weights = summed_weights_all(g, targets);
    std::sort(weights.begin(), weights.end(), [](const GoldenNumber& x, const GoldenNumber& y) { return x > y; });
    const mpq_class goal = static_cast<unsigned long>(targets.size());
    GoldenNumber partial;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        partial += weights[k];
        if (cmp_rational(partial, goal) != std::strong_ordering::less) return k + 1;
    }
    // w_L(V) >= |L| always holds since each target contributes 1 to itself.
    throw std::logic_error("optimal_lower_bound: total summed weight below |L|");
}

GoldenNumber binary_root_weight_closed(unsigned h) {
    const GoldenNumber two_omega = GoldenNumber(0, 2);
    GoldenNumber term = 1;
    GoldenNumber sum;
    for (unsigned l = 0; l <= h; ++l) {
        sum += term;
        term *= two_omega;
    }
    return sum;
}

namespace {

GoldenNumber power(const GoldenNumber& base, unsigned e) {
    GoldenNumber r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

GoldenNumber binary_summed_weight_closed(unsigned h, unsigned level) {
    if (level > h) throw std::invalid_argument("binary_summed_weight_closed: level exceeds height");
    // (2w)^{h-l} / w^2 * (1 - w (2 w^2)^l), with 1/w^2 = 2 + w.
    const GoldenNumber two_omega(0, 2);
    const GoldenNumber two_omega_sq = GoldenNumber(2) * omega_pow(2);
    const GoldenNumber inv_omega_sq(2, 1);
    return power(two_omega, h - level) * inv_omega_sq * (GoldenNumber(1) - GoldenNumber::omega() * power(two_omega_sq, level));
}

std::vector<unsigned> binary_level_ranking(unsigned h) {
    if (h < 6) throw std::invalid_argument("binary_level_ranking: need h >= 6");
    std::vector<GoldenNumber> value(h + 1);
    for (unsigned l = 0; l <= h; ++l) value[l] = binary_summed_weight_closed(h, l);
    std::vector<unsigned> order(h + 1);
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return value[a] > value[b]; });
    return order;
}

GoldenNumber binary_level_ratio(unsigned h, unsigned level_a, unsigned level_b) {
    return binary_summed_weight_closed(h, level_a) / binary_summed_weight_closed(h, level_b);
}

GoldenNumber binary_top_levels_summed_weight(unsigned h) {
    if (h < 4) throw std::invalid_argument("binary_top_levels_summed_weight: need h >= 4");
    GoldenNumber total;
    mpz_class vertices_on_level = 1;
    for (unsigned i = 0; i + 4 <= h; ++i) {
        total += GoldenNumber(mpq_class(vertices_on_level)) * binary_summed_weight_closed(h, i);
        vertices_on_level *= 2;
    }
    return total;
}

AdversarialCertificate binary_adversarial_distribution(unsigned h, const AdversarialOptions& options) {
    if (h < 14) throw std::invalid_argument("binary_adversarial_distribution: need h >= 14");
    if (options.excluded_height >= h) throw std::invalid_argument("binary_adversarial_distribution: excluded subtree too tall");
    const Family family = build_family(ArySpec{2, h});
    const Graph& g = family.graph;
    const std::size_t n = g.vertex_count();

    AdversarialCertificate cert;
    cert.height = h;
    cert.vertex_count = n;
    cert.target = static_cast<VertexId>((std::size_t{1} << h) - 1);  // first leaf

    VertexId apex = cert.target;
    for (unsigned i = 0; i < options.excluded_height; ++i) apex = (apex - 1) / 2;
    auto excluded = [&](VertexId v) {
        while (v > apex) v = (v - 1) / 2;
        return v == apex;
    };

    const auto dist = distances_from(g, cert.target);
    cert.base = Distribution(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!excluded(v)) cert.base.insert(v);
    }
    cert.base_weight = distribution_weight(dist, cert.base);
    if (cmp_rational(cert.base_weight, 1) != std::strong_ordering::less) {
        throw std::logic_error("binary_adversarial_distribution: base distribution weight " +
                               std::to_string(cert.base_weight.to_double()) + " is not below 1");
    }

    const std::uint32_t max_d = max_finite(dist);
    cert.census.resize(max_d + 1);
    for (std::uint32_t d = 0; d <= max_d; ++d) cert.census[d].distance = d;
    for (VertexId v = 0; v < n; ++v) {
        auto& row = cert.census[dist[v]];
        (cert.base.contains(v) ? row.pegged : row.empty) += 1;
    }

    for (const auto& row : cert.census) {
        if (cert.stripped_distances.size() == options.stripped_classes) break;
        if (row.pegged > 0) cert.stripped_distances.push_back(row.distance);
    }

    cert.refined = cert.base;
    GoldenNumber weight = cert.base_weight;
    for (VertexId v = 0; v < n; ++v) {
        if (cert.base.contains(v) &&
            std::find(cert.stripped_distances.begin(), cert.stripped_distances.end(), dist[v]) != cert.stripped_distances.end()) {
            cert.refined.erase(v);
            weight -= omega_pow(dist[v]);
            ++cert.removed_pegs;
        }
    }

    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < n; ++v) {
        if (!cert.base.contains(v)) candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) { return dist[a] > dist[b]; });
    for (VertexId v : candidates) {
        GoldenNumber next = weight + omega_pow(dist[v]);
        // Candidates only get heavier from here on.
        if (cmp_rational(next, 1) != std::strong_ordering::less) break;
        weight = std::move(next);
        cert.refined.insert(v);
        ++cert.added_pegs;
    }
    cert.refined_weight = weight;
    cert.empty_vertices = n - cert.refined.size();
    return cert;
}

}  // namespace peg
