#pragma once
// Directed analytics graph projected from named-graph interlinks, plus the
// link-analysis algorithms that run over it.
//
// All operations are pure over an immutable snapshot and fully deterministic:
// vertices keep insertion order, adjacency lists are kept sorted, and every
// accumulation walks ascending vertex indexes, so equal inputs produce
// bit-comparable outputs.

#include "dq/quad_store.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dq {

class AnalyticsGraph {
public:
    // Idempotent; returns the vertex index.
    std::size_t add_vertex(std::string_view iri);

    // Adds endpoints as needed. Self-loops and duplicate edges are dropped;
    // returns true if a new edge was stored.
    bool add_edge(std::string_view from, std::string_view to);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(std::size_t index) const { return vertices_[index]; }
    std::optional<std::size_t> index_of(std::string_view iri) const;

    // Ascending target indexes.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    // Ascending source indexes.
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

    // All edges as (from, to) index pairs, ascending.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::size_t edge_count_ = 0;
};

// Vertex scores with run metadata. Scores are kept in graph vertex order.
struct ScoreMap {
    std::string algorithm; // IRI
    std::vector<std::pair<std::string, double>> scores;
    int iterations = 0;
    bool converged = false;

    std::optional<double> find(std::string_view vertex) const;
    double at(std::string_view vertex) const; // throws if absent
};

struct HitsResult {
    ScoreMap hubs;
    ScoreMap authorities;
};

struct VsmScore {
    double raw = 0;    // un-normalized dot product
    double cosine = 0; // in [0, 1]
};

// Projects the store onto the analytics graph: one vertex per named graph
// (the analytics, state, and default graphs are excluded), and an edge
// g1 -> g2 whenever a quad in g1 has an object equal to g2's graph IRI or to
// g2's information URI. Self-references are dropped.
AnalyticsGraph project(const QuadStore& snapshot);

// Power iteration with uniform teleport; dangling vertices redistribute their
// mass uniformly. Stops when the L1 change drops below epsilon or after
// max_iter rounds. Scores sum to 1.
ScoreMap pagerank(const AnalyticsGraph& g, double damping = 0.85, double epsilon = 1e-10,
                  int max_iter = 200);

// Mutually reinforcing hub/authority iteration; both vectors L2-normalized
// each round, simultaneous update from the previous pair so that reversing
// every edge swaps hubs and authorities exactly.
HitsResult hits(const AnalyticsGraph& g, double epsilon = 1e-10, int max_iter = 200);

// Directed, unweighted shortest-path betweenness (Brandes accumulation),
// endpoints excluded, un-normalized.
ScoreMap betweenness(const AnalyticsGraph& g);

// Cosine similarity of two term-frequency vectors, plus the raw dot product.
// Counts must be non-negative; an all-zero vector has no defined cosine.
VsmScore vsm_similarity(const std::map<std::string, double>& doc_a,
                        const std::map<std::string, double>& doc_b);

// Same scores multiplied by a constant factor (e.g. vertex count, for
// reporting alongside the probability-normalized view).
ScoreMap scale_scores(const ScoreMap& m, double factor);

} // namespace dq
