#include "dq/query.hpp"

#include "dq/dq_writer.hpp"
#include "dq/error.hpp"
#include "dq/nquads.hpp"
#include "dq/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace dq {

namespace {

void collect_vars(const TermOrVar& position, std::vector<std::string>& vars) {
    if (!position.is_variable()) return;
    if (std::find(vars.begin(), vars.end(), position.var()) == vars.end())
        vars.push_back(position.var());
}

// Clause variables in (s, p, o, g) order.
std::vector<const TermOrVar*> positions(const QueryClause& c) {
    return {&c.subject, &c.predicate, &c.object, &c.graph};
}

std::vector<std::string> pattern_vars(const QueryPattern& pattern) {
    if (pattern.clauses.empty()) throw Error("query: no clauses");
    std::vector<std::string> vars;
    for (const QueryClause& c : pattern.clauses)
        for (const TermOrVar* p : positions(c)) collect_vars(*p, vars);
    auto known = [&vars](const std::string& v) {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
    };
    for (const QueryFilter& f : pattern.filters)
        if (!known(f.var)) throw Error("query: filter variable ?" + f.var + " not in any clause");
    if (pattern.order_by && !known(pattern.order_by->var))
        throw Error("query: order-by variable ?" + pattern.order_by->var + " not in any clause");
    return vars;
}

bool apply_comparator(double lhs, Comparator cmp, double rhs) {
    switch (cmp) {
    case Comparator::Lt: return lhs < rhs;
    case Comparator::Le: return lhs <= rhs;
    case Comparator::Eq: return lhs == rhs;
    case Comparator::Ge: return lhs >= rhs;
    case Comparator::Gt: return lhs > rhs;
    case Comparator::Ne: return lhs != rhs;
    }
    return false;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

TermOrVar scan_position(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw Error("clause: expected a term or ?variable");
    if (text[pos] == '?') {
        ++pos;
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw Error("clause: empty variable name");
        return TermOrVar::variable(text.substr(start, pos - start));
    }
    return TermOrVar::bound(scan_term(text, pos));
}

} // namespace

TermOrVar TermOrVar::variable(std::string_view name) {
    if (name.empty()) throw Error("query: empty variable name");
    return TermOrVar(std::nullopt, std::string(name));
}

void validate_pattern(const QueryPattern& pattern) { pattern_vars(pattern); }

QueryResult execute(const QuadStore& store, const QueryPattern& pattern) {
    QueryResult result;
    result.variables = pattern_vars(pattern);

    std::vector<BindingRow> rows{BindingRow{}};
    for (const QueryClause& clause : pattern.clauses) {
        std::vector<BindingRow> next;
        for (const BindingRow& row : rows) {
            QuadPattern probe;
            auto instantiate = [&row](const TermOrVar& p) -> std::optional<Term> {
                if (!p.is_variable()) return p.term();
                auto it = row.find(p.var());
                if (it != row.end()) return it->second;
                return std::nullopt;
            };
            probe.subject = instantiate(clause.subject);
            probe.predicate = instantiate(clause.predicate);
            probe.object = instantiate(clause.object);
            probe.graph = instantiate(clause.graph);

            for (const Quad& quad : store.match(probe)) {
                BindingRow extended = row;
                bool ok = true;
                auto bind = [&](const TermOrVar& p, const Term& value) {
                    if (!p.is_variable()) return;
                    auto [it, inserted] = extended.emplace(p.var(), value);
                    if (!inserted && it->second != value) ok = false;
                };
                bind(clause.subject, quad.subject);
                bind(clause.predicate, quad.predicate);
                bind(clause.object, quad.object);
                bind(clause.graph, quad.graph);
                if (ok) next.push_back(std::move(extended));
            }
        }
        rows = std::move(next);
        if (rows.empty()) break;
    }

    for (const QueryFilter& f : pattern.filters) {
        std::vector<BindingRow> kept;
        kept.reserve(rows.size());
        for (BindingRow& row : rows) {
            const auto numeric = row.at(f.var).numeric();
            if (!numeric) {
                ++result.rows_dropped_non_numeric;
                continue;
            }
            if (apply_comparator(*numeric, f.cmp, f.value)) kept.push_back(std::move(row));
        }
        rows = std::move(kept);
    }

    if (pattern.order_by) {
        const OrderBy& order = *pattern.order_by;
        const bool asc = order.direction == SortDirection::Asc;
        std::stable_sort(rows.begin(), rows.end(), [&](const BindingRow& a, const BindingRow& b) {
            const Term& ta = a.at(order.var);
            const Term& tb = b.at(order.var);
            const auto na = ta.numeric();
            const auto nb = tb.numeric();
            if (na && nb) {
                if (*na == *nb) return false;
                return asc ? *na < *nb : *na > *nb;
            }
            if (na != nb) return na.has_value(); // numeric before non-numeric
            const std::string sa = serialize_term(ta);
            const std::string sb = serialize_term(tb);
            if (sa == sb) return false;
            return asc ? sa < sb : sa > sb;
        });
    }

    if (pattern.limit && rows.size() > *pattern.limit) rows.resize(*pattern.limit);
    result.rows = std::move(rows);
    return result;
}

std::vector<std::pair<std::string, double>> rank_documents(const QuadStore& store,
                                                           std::string_view algorithm,
                                                           bool descending,
                                                           std::optional<std::size_t> limit) {
    QuadPattern links;
    links.predicate = Term::iri(vocab::has_relevance_score);
    links.graph = Term::iri(vocab::analytics_graph);

    std::set<std::string> targets;
    for (const Quad& q : store.match(links)) targets.insert(q.subject.value());

    std::vector<std::pair<std::string, double>> ranked;
    for (const std::string& target : targets) {
        if (auto record = latest_score(store, target, algorithm))
            ranked.emplace_back(target, record->normalized_score);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [descending](const auto& a, const auto& b) {
        if (a.second == b.second) return false;
        return descending ? a.second > b.second : a.second < b.second;
    });
    if (limit && ranked.size() > *limit) ranked.resize(*limit);
    return ranked;
}

QueryClause parse_clause(std::string_view text) {
    std::size_t pos = 0;
    TermOrVar s = scan_position(text, pos);
    TermOrVar p = scan_position(text, pos);
    TermOrVar o = scan_position(text, pos);
    TermOrVar g = scan_position(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw Error("clause: trailing content: " + std::string(text));
    return QueryClause{std::move(s), std::move(p), std::move(o), std::move(g)};
}

QueryFilter parse_filter(std::string_view text) {
    text = trim(text);
    if (text.empty() || text.front() != '?') throw Error("filter: expected ?variable");
    std::size_t pos = 1;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    QueryFilter f;
    f.var = std::string(text.substr(1, pos - 1));
    if (f.var.empty()) throw Error("filter: empty variable name");

    std::string_view rest = trim(text.substr(pos));
    static constexpr std::pair<std::string_view, Comparator> ops[] = {
        {"<=", Comparator::Le}, {">=", Comparator::Ge}, {"!=", Comparator::Ne},
        {"<", Comparator::Lt},  {">", Comparator::Gt},  {"=", Comparator::Eq},
    };
    bool matched = false;
    for (const auto& [token, cmp] : ops) {
        if (rest.rfind(token, 0) == 0) {
            f.cmp = cmp;
            rest = trim(rest.substr(token.size()));
            matched = true;
            break;
        }
    }
    if (!matched) throw Error("filter: expected a comparator in: " + std::string(text));
    const auto res = std::from_chars(rest.data(), rest.data() + rest.size(), f.value);
    if (res.ec != std::errc() || res.ptr != rest.data() + rest.size())
        throw Error("filter: malformed number in: " + std::string(text));
    return f;
}

OrderBy parse_order_by(std::string_view text) {
    text = trim(text);
    if (text.empty() || text.front() != '?') throw Error("order-by: expected ?variable");
    std::size_t pos = 1;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    OrderBy order;
    order.var = std::string(text.substr(1, pos - 1));
    if (order.var.empty()) throw Error("order-by: empty variable name");
    std::string_view rest = trim(text.substr(pos));
    if (rest.empty() || rest == "asc") {
        order.direction = SortDirection::Asc;
    } else if (rest == "desc") {
        order.direction = SortDirection::Desc;
    } else {
        throw Error("order-by: direction must be asc or desc: " + std::string(text));
    }
    return order;
}

} // namespace dq
