#pragma once
// Conjunctive quad-pattern queries with variable bindings, numeric FILTER,
// ORDER BY, and LIMIT.
//
// Clauses are evaluated in the order given, with index lookups on the
// positions already bound; there is no optimizer. Results are deterministic
// for a fixed store state.

#include "dq/quad_store.hpp"
#include "dq/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dq {

// One clause position: a bound term or a named variable.
class TermOrVar {
public:
    static TermOrVar bound(Term t) { return TermOrVar(std::move(t), {}); }
    static TermOrVar variable(std::string_view name);

    bool is_variable() const { return !var_.empty(); }
    const std::string& var() const { return var_; }
    const Term& term() const { return *term_; }

private:
    TermOrVar(std::optional<Term> t, std::string v) : term_(std::move(t)), var_(std::move(v)) {}
    std::optional<Term> term_;
    std::string var_;
};

struct QueryClause {
    TermOrVar subject;
    TermOrVar predicate;
    TermOrVar object;
    TermOrVar graph;
};

enum class Comparator { Lt, Le, Eq, Ge, Gt, Ne };

struct QueryFilter {
    std::string var;
    Comparator cmp = Comparator::Eq;
    double value = 0;
};

enum class SortDirection { Asc, Desc };

struct OrderBy {
    std::string var;
    SortDirection direction = SortDirection::Asc;
};

struct QueryPattern {
    std::vector<QueryClause> clauses; // non-empty
    std::vector<QueryFilter> filters; // variables must appear in a clause
    std::optional<OrderBy> order_by;  // likewise
    std::optional<std::size_t> limit;
};

using BindingRow = std::map<std::string, Term>;

struct QueryResult {
    std::vector<std::string> variables; // first-appearance order
    std::vector<BindingRow> rows;
    std::size_t rows_dropped_non_numeric = 0; // filter diagnostics
};

// Throws unless clauses are non-empty and every filter/order-by variable
// appears in at least one clause.
void validate_pattern(const QueryPattern& pattern);

// Natural join of the clause matches, then filter, order, limit. Rows whose
// filter variable is bound to a non-numeric term are dropped (and tallied),
// not an error. Under ORDER BY, numeric bindings sort before non-numeric
// ones; non-numeric bindings compare by serialized form.
QueryResult execute(const QuadStore& store, const QueryPattern& pattern);

// Convenience wrapper: each target's latest normalized score for the
// algorithm, sorted by score. Equivalent to composing execute over the DQ
// pattern and taking the newest record per target.
std::vector<std::pair<std::string, double>> rank_documents(const QuadStore& store,
                                                           std::string_view algorithm,
                                                           bool descending = true,
                                                           std::optional<std::size_t> limit = {});

// --- CLI clause syntax ---------------------------------------------------
// "?g <urn:p> ?o <urn:g>"      four positions, each ?var or an N-Quads term
QueryClause parse_clause(std::string_view text);
// "?s >= 0.5"
QueryFilter parse_filter(std::string_view text);
// "?s desc" (direction optional, default asc)
OrderBy parse_order_by(std::string_view text);

} // namespace dq
