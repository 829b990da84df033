#pragma once
// Independent oracles for the test suites. These deliberately use different
// formulations from the implementation (dense matrices, exhaustive path
// enumeration, nested-loop joins) so they can catch algorithmic drift.

#include "dq/analytics.hpp"
#include "dq/nquads.hpp"
#include "dq/quad_store.hpp"
#include "dq/query.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

// Dense adjacency matrix of an analytics graph, A[u][v] = 1 for edge u->v.
inline std::vector<std::vector<double>> dense_adjacency(const dq::AnalyticsGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& [from, to] : g.edges()) a[from][to] = 1.0;
    return a;
}

// PageRank via the explicit Google matrix: G[u][v] = (1-d)/n + d * P[u][v]
// where P rows are out-degree normalized and dangling rows are uniform.
inline std::map<std::string, double> dense_pagerank(const dq::AnalyticsGraph& g, double damping,
                                                    double epsilon = 1e-15,
                                                    int max_iter = 100000) {
    const std::size_t n = g.vertex_count();
    const auto a = dense_adjacency(g);
    std::vector<std::vector<double>> google(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        double outdeg = 0.0;
        for (std::size_t v = 0; v < n; ++v) outdeg += a[u][v];
        for (std::size_t v = 0; v < n; ++v) {
            const double p = outdeg > 0.0 ? a[u][v] / outdeg : 1.0 / static_cast<double>(n);
            google[u][v] = (1.0 - damping) / static_cast<double>(n) + damping * p;
        }
    }

    std::vector<double> r(n, 1.0 / static_cast<double>(n)), next(n);
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t v = 0; v < n; ++v) {
            double sum = 0.0;
            for (std::size_t u = 0; u < n; ++u) sum += r[u] * google[u][v];
            next[v] = sum;
        }
        double l1 = 0.0;
        for (std::size_t v = 0; v < n; ++v) l1 += std::abs(next[v] - r[v]);
        r.swap(next);
        if (l1 < epsilon) break;
    }
    double sum = 0.0;
    for (double x : r) sum += x;
    std::map<std::string, double> out;
    for (std::size_t v = 0; v < n; ++v) out[g.vertex(v)] = r[v] / sum;
    return out;
}

// Principal eigenvector of M (symmetric non-negative) by plain power
// iteration from a uniform start, L2-normalized.
inline std::vector<double> principal_eigenvector(const std::vector<std::vector<double>>& m,
                                                 double epsilon = 1e-16,
                                                 int max_iter = 100000) {
    const std::size_t n = m.size();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), next(n);
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) sum += m[i][j] * x[j];
            next[i] = sum;
        }
        double norm = 0.0;
        for (double v : next) norm += v * v;
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (double& v : next) v /= norm;
        double l1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) l1 += std::abs(next[i] - x[i]);
        x.swap(next);
        if (l1 < epsilon) break;
    }
    return x;
}

struct DenseHits {
    std::map<std::string, double> hubs;
    std::map<std::string, double> authorities;
};

// HITS as eigenvectors: authorities from A^T A, hubs from A A^T.
inline DenseHits dense_hits(const dq::AnalyticsGraph& g) {
    const std::size_t n = g.vertex_count();
    const auto a = dense_adjacency(g);
    std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> aat(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double sa = 0.0, sh = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sa += a[k][i] * a[k][j];
                sh += a[i][k] * a[j][k];
            }
            ata[i][j] = sa;
            aat[i][j] = sh;
        }
    }
    const auto auth = principal_eigenvector(ata);
    const auto hub = principal_eigenvector(aat);
    DenseHits out;
    for (std::size_t v = 0; v < n; ++v) {
        out.authorities[g.vertex(v)] = auth[v];
        out.hubs[g.vertex(v)] = hub[v];
    }
    return out;
}

// Betweenness by exhaustively enumerating every shortest path between every
// ordered pair and crediting interior vertices fractionally.
inline std::map<std::string, double> exhaustive_betweenness(const dq::AnalyticsGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> bc(n, 0.0);

    for (std::size_t s = 0; s < n; ++s) {
        // BFS distances from s
        std::vector<long> dist(n, -1);
        dist[s] = 0;
        std::vector<std::size_t> frontier{s};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t u : frontier) {
                for (std::size_t v : g.out_edges(u)) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }

        for (std::size_t t = 0; t < n; ++t) {
            if (t == s || dist[t] < 0) continue;
            std::size_t total_paths = 0;
            std::vector<std::size_t> through(n, 0);
            std::vector<std::size_t> path{s};
            std::function<void(std::size_t)> walk = [&](std::size_t u) {
                if (u == t) {
                    ++total_paths;
                    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
                    return;
                }
                for (std::size_t v : g.out_edges(u)) {
                    if (dist[v] != dist[u] + 1 || dist[v] > dist[t]) continue;
                    path.push_back(v);
                    walk(v);
                    path.pop_back();
                }
            };
            walk(s);
            for (std::size_t v = 0; v < n; ++v) {
                if (through[v] > 0)
                    bc[v] += static_cast<double>(through[v]) / static_cast<double>(total_paths);
            }
        }
    }

    std::map<std::string, double> out;
    for (std::size_t v = 0; v < n; ++v) out[g.vertex(v)] = bc[v];
    return out;
}

// Linear scan over every quad.
inline std::vector<dq::Quad> scan_match(const dq::QuadStore& store, const dq::QuadPattern& p) {
    std::vector<dq::Quad> out;
    for (const dq::Quad& q : store.all())
        if (p.matches(q)) out.push_back(q);
    return out;
}

// Nested-loop join over every combination of quads, one per clause, checking
// variable-binding consistency. Filters/order/limit applied declaratively.
inline std::vector<dq::BindingRow> nested_loop_join(const dq::QuadStore& store,
                                                    const dq::QueryPattern& pattern) {
    const std::vector<dq::Quad> quads = store.all();
    std::vector<dq::BindingRow> rows;

    std::function<void(std::size_t, dq::BindingRow)> descend = [&](std::size_t clause_index,
                                                                   dq::BindingRow row) {
        if (clause_index == pattern.clauses.size()) {
            rows.push_back(std::move(row));
            return;
        }
        const dq::QueryClause& clause = pattern.clauses[clause_index];
        for (const dq::Quad& q : quads) {
            dq::BindingRow extended = row;
            bool ok = true;
            auto unify = [&](const dq::TermOrVar& p, const dq::Term& value) {
                if (!ok) return;
                if (!p.is_variable()) {
                    if (p.term() != value) ok = false;
                    return;
                }
                auto [it, inserted] = extended.emplace(p.var(), value);
                if (!inserted && it->second != value) ok = false;
            };
            unify(clause.subject, q.subject);
            unify(clause.predicate, q.predicate);
            unify(clause.object, q.object);
            unify(clause.graph, q.graph);
            if (ok) descend(clause_index + 1, std::move(extended));
        }
    };
    descend(0, {});

    std::vector<dq::BindingRow> kept;
    for (const dq::BindingRow& row : rows) {
        bool pass = true;
        for (const dq::QueryFilter& f : pattern.filters) {
            const auto numeric = row.at(f.var).numeric();
            if (!numeric) {
                pass = false;
                break;
            }
            const double lhs = *numeric;
            switch (f.cmp) {
            case dq::Comparator::Lt: pass = lhs < f.value; break;
            case dq::Comparator::Le: pass = lhs <= f.value; break;
            case dq::Comparator::Eq: pass = lhs == f.value; break;
            case dq::Comparator::Ge: pass = lhs >= f.value; break;
            case dq::Comparator::Gt: pass = lhs > f.value; break;
            case dq::Comparator::Ne: pass = lhs != f.value; break;
            }
            if (!pass) break;
        }
        if (pass) kept.push_back(row);
    }
    return kept;
}

// Canonical text form of a binding row, for multiset comparison.
inline std::string row_key(const dq::BindingRow& row) {
    std::string key;
    for (const auto& [var, term] : row) key += var + "=" + dq::serialize_term(term) + ";";
    return key;
}

inline std::vector<std::string> sorted_row_keys(const std::vector<dq::BindingRow>& rows) {
    std::vector<std::string> keys;
    keys.reserve(rows.size());
    for (const dq::BindingRow& row : rows) keys.push_back(row_key(row));
    std::sort(keys.begin(), keys.end());
    return keys;
}

} // namespace oracle
