#include "dq/analytics.hpp"

#include "dq/error.hpp"
#include "dq/vocab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace dq {

namespace {

bool insert_sorted(std::vector<std::size_t>& list, std::size_t value) {
    auto it = std::lower_bound(list.begin(), list.end(), value);
    if (it != list.end() && *it == value) return false;
    list.insert(it, value);
    return true;
}

void check_scores_valid(const ScoreMap& m) {
    for (const auto& [vertex, score] : m.scores) {
        if (!std::isfinite(score) || score < 0.0)
            throw Error("score map: non-finite or negative score for " + vertex);
    }
}

} // namespace

std::size_t AnalyticsGraph::add_vertex(std::string_view iri) {
    auto it = index_.find(iri);
    if (it != index_.end()) return it->second;
    const std::size_t id = vertices_.size();
    vertices_.emplace_back(iri);
    index_.emplace(std::string(iri), id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

bool AnalyticsGraph::add_edge(std::string_view from, std::string_view to) {
    if (from == to) return false;
    const std::size_t f = add_vertex(from);
    const std::size_t t = add_vertex(to);
    if (!insert_sorted(out_[f], t)) return false;
    insert_sorted(in_[t], f);
    ++edge_count_;
    return true;
}

std::optional<std::size_t> AnalyticsGraph::index_of(std::string_view iri) const {
    auto it = index_.find(iri);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> AnalyticsGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t v = 0; v < out_.size(); ++v)
        for (std::size_t t : out_[v]) out.emplace_back(v, t);
    return out;
}

std::optional<double> ScoreMap::find(std::string_view vertex) const {
    for (const auto& [name, score] : scores)
        if (name == vertex) return score;
    return std::nullopt;
}

double ScoreMap::at(std::string_view vertex) const {
    auto v = find(vertex);
    if (!v) throw Error("score map: no score for " + std::string(vertex));
    return *v;
}

AnalyticsGraph project(const QuadStore& snapshot) {
    const auto excluded = [](std::string_view iri) {
        return iri == vocab::analytics_graph || iri == vocab::state_graph ||
               iri == vocab::default_graph;
    };

    AnalyticsGraph g;
    std::vector<std::string> graph_iris;
    for (const Term& t : snapshot.graphs()) {
        if (excluded(t.value())) continue;
        graph_iris.push_back(t.value());
        g.add_vertex(t.value()); // graphs() is sorted, so vertex order is too
    }

    // information URI -> owning graphs (normally one)
    const Term info_pred = Term::iri(vocab::env_information_uri);
    std::map<std::string, std::vector<std::string>> info_owner;
    for (const std::string& iri : graph_iris) {
        QuadPattern p;
        p.subject = Term::iri(iri);
        p.predicate = info_pred;
        p.graph = Term::iri(iri);
        for (const Quad& q : snapshot.match(p)) {
            if (q.object.is_iri()) info_owner[q.object.value()].push_back(iri);
        }
    }

    for (const std::string& iri : graph_iris) {
        QuadPattern p;
        p.graph = Term::iri(iri);
        for (const Quad& q : snapshot.match(p)) {
            if (!q.object.is_iri()) continue;
            const std::string& o = q.object.value();
            if (o != iri && g.index_of(o)) g.add_edge(iri, o);
            auto it = info_owner.find(o);
            if (it != info_owner.end()) {
                for (const std::string& owner : it->second)
                    if (owner != iri) g.add_edge(iri, owner);
            }
        }
    }
    return g;
}

ScoreMap pagerank(const AnalyticsGraph& g, double damping, double epsilon, int max_iter) {
    if (g.vertex_count() == 0) throw Error("empty analytics graph");
    if (!(damping > 0.0 && damping < 1.0)) throw Error("pagerank: damping must be in (0,1)");
    if (!(epsilon > 0.0)) throw Error("pagerank: epsilon must be positive");
    if (max_iter < 1) throw Error("pagerank: max_iter must be at least 1");

    const std::size_t n = g.vertex_count();
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> rank(n, inv_n);
    std::vector<double> next(n, 0.0);

    int iterations = 0;
    bool converged = false;
    while (iterations < max_iter) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.out_edges(v).empty()) dangling += rank[v];

        for (std::size_t v = 0; v < n; ++v) {
            double incoming = 0.0;
            for (std::size_t u : g.in_edges(v))
                incoming += rank[u] / static_cast<double>(g.out_edges(u).size());
            next[v] = (1.0 - damping) * inv_n + damping * (incoming + dangling * inv_n);
        }

        double l1 = 0.0;
        for (std::size_t v = 0; v < n; ++v) l1 += std::abs(next[v] - rank[v]);
        std::swap(rank, next);
        ++iterations;
        if (l1 < epsilon) {
            converged = true;
            break;
        }
    }

    double sum = 0.0;
    for (double r : rank) sum += r;
    ScoreMap out;
    out.algorithm = std::string(vocab::alg_pagerank);
    out.iterations = iterations;
    out.converged = converged;
    out.scores.reserve(n);
    for (std::size_t v = 0; v < n; ++v) out.scores.emplace_back(g.vertex(v), rank[v] / sum);
    check_scores_valid(out);
    return out;
}

HitsResult hits(const AnalyticsGraph& g, double epsilon, int max_iter) {
    if (g.vertex_count() == 0 || g.edge_count() == 0)
        throw Error("HITS undefined without edges");
    if (!(epsilon > 0.0)) throw Error("hits: epsilon must be positive");
    if (max_iter < 1) throw Error("hits: max_iter must be at least 1");

    const std::size_t n = g.vertex_count();
    const double init = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> hub(n, init), auth(n, init);
    std::vector<double> hub_next(n), auth_next(n);

    auto l2_normalize = [n](std::vector<double>& v) {
        double sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) sq += v[i] * v[i];
        const double norm = std::sqrt(sq);
        if (norm > 0.0)
            for (std::size_t i = 0; i < n; ++i) v[i] /= norm;
    };

    int iterations = 0;
    bool converged = false;
    while (iterations < max_iter) {
        // simultaneous update from the previous pair keeps the hub/authority
        // roles exactly symmetric under edge reversal
        for (std::size_t v = 0; v < n; ++v) {
            double a = 0.0;
            for (std::size_t u : g.in_edges(v)) a += hub[u];
            auth_next[v] = a;
        }
        for (std::size_t v = 0; v < n; ++v) {
            double h = 0.0;
            for (std::size_t u : g.out_edges(v)) h += auth[u];
            hub_next[v] = h;
        }
        l2_normalize(auth_next);
        l2_normalize(hub_next);

        double delta = 0.0;
        for (std::size_t v = 0; v < n; ++v) delta += std::abs(auth_next[v] - auth[v]);
        for (std::size_t v = 0; v < n; ++v) delta += std::abs(hub_next[v] - hub[v]);
        std::swap(auth, auth_next);
        std::swap(hub, hub_next);
        ++iterations;
        if (delta < epsilon) {
            converged = true;
            break;
        }
    }

    HitsResult out;
    out.hubs.algorithm = std::string(vocab::alg_hits);
    out.authorities.algorithm = std::string(vocab::alg_hits);
    out.hubs.iterations = out.authorities.iterations = iterations;
    out.hubs.converged = out.authorities.converged = converged;
    for (std::size_t v = 0; v < n; ++v) {
        out.hubs.scores.emplace_back(g.vertex(v), hub[v]);
        out.authorities.scores.emplace_back(g.vertex(v), auth[v]);
    }
    check_scores_valid(out.hubs);
    check_scores_valid(out.authorities);
    return out;
}

ScoreMap betweenness(const AnalyticsGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> bc(n, 0.0);

    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> preds(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<long> dist(n);

    for (std::size_t s = 0; s < n; ++s) {
        stack.clear();
        for (std::size_t v = 0; v < n; ++v) {
            preds[v].clear();
            sigma[v] = 0.0;
            dist[v] = -1;
        }
        sigma[s] = 1.0;
        dist[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            stack.push_back(v);
            for (std::size_t w : g.out_edges(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) delta[v] = 0.0;
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const std::size_t w = *it;
            for (std::size_t v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) bc[w] += delta[w];
        }
    }

    ScoreMap out;
    out.algorithm = std::string(vocab::alg_betweenness);
    out.converged = true;
    for (std::size_t v = 0; v < n; ++v) out.scores.emplace_back(g.vertex(v), bc[v]);
    check_scores_valid(out);
    return out;
}

VsmScore vsm_similarity(const std::map<std::string, double>& doc_a,
                        const std::map<std::string, double>& doc_b) {
    double norm_a = 0.0, norm_b = 0.0, dot = 0.0;
    for (const auto& [token, count] : doc_a) {
        if (count < 0.0) throw Error("vsm: negative count for token " + token);
        norm_a += count * count;
        auto it = doc_b.find(token);
        if (it != doc_b.end()) dot += count * it->second;
    }
    for (const auto& [token, count] : doc_b) {
        if (count < 0.0) throw Error("vsm: negative count for token " + token);
        norm_b += count * count;
    }
    if (norm_a == 0.0 || norm_b == 0.0) throw Error("undefined cosine");
    return VsmScore{dot, dot / (std::sqrt(norm_a) * std::sqrt(norm_b))};
}

ScoreMap scale_scores(const ScoreMap& m, double factor) {
    ScoreMap out = m;
    for (auto& [vertex, score] : out.scores) score *= factor;
    return out;
}

} // namespace dq
