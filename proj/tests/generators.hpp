#pragma once
// Seeded random generators for property-style tests.

#include "dq/analytics.hpp"
#include "dq/quad_store.hpp"
#include "dq/term.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gen {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
    bool chance(double p) {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53 < p;
    }
};

// Terms drawn from small pools so random patterns actually collide.
inline dq::Term pooled_term(Rng& rng, std::size_t pool = 6) {
    switch (rng.below(4)) {
    case 0: return dq::Term::iri("urn:t:r" + std::to_string(rng.below(pool)));
    case 1: return dq::Term::blank("b" + std::to_string(rng.below(pool)));
    case 2: return dq::Term::literal("v" + std::to_string(rng.below(pool)));
    default: return dq::Term::from_double(static_cast<double>(rng.below(pool)));
    }
}

inline dq::Term pooled_iri(Rng& rng, const char* prefix, std::size_t pool = 6) {
    return dq::Term::iri(std::string("urn:t:") + prefix + std::to_string(rng.below(pool)));
}

inline dq::Quad random_quad(Rng& rng, std::size_t pool = 6) {
    dq::Term subject = rng.chance(0.8) ? pooled_iri(rng, "s", pool)
                                       : dq::Term::blank("b" + std::to_string(rng.below(pool)));
    return dq::Quad(std::move(subject), pooled_iri(rng, "p", pool), pooled_term(rng, pool),
                    pooled_iri(rng, "g", pool));
}

inline dq::QuadStore random_store(Rng& rng, std::size_t quads, std::size_t pool = 6) {
    dq::QuadStore store;
    for (std::size_t i = 0; i < quads; ++i) store.insert(random_quad(rng, pool));
    return store;
}

// Random digraph on up to max_vertices; optionally guarantees an edge.
inline dq::AnalyticsGraph random_graph(Rng& rng, std::size_t max_vertices, double edge_prob,
                                       bool ensure_edge = false) {
    const std::size_t min_vertices = ensure_edge ? 2 : 1;
    const std::size_t n = min_vertices + rng.below(max_vertices - min_vertices + 1);
    dq::AnalyticsGraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex("urn:v:" + std::to_string(v));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && rng.chance(edge_prob)) g.add_edge(g.vertex(u), g.vertex(v));
    if (ensure_edge && g.edge_count() == 0 && n >= 2) {
        const std::size_t u = rng.below(n);
        std::size_t v = rng.below(n);
        if (v == u) v = (v + 1) % n;
        g.add_edge(g.vertex(u), g.vertex(v));
    }
    return g;
}

} // namespace gen
