#pragma once
// N-Quads subset: IRIs, blank nodes, plain/typed/language-tagged literals.
//
// Triple-form statements (no graph term) land in the default graph so the
// store stays homogeneous. Serialization is canonical: statements sorted by
// the serialized (graph, subject, predicate, object) tuple, byte-identical
// across runs for equal stores.

#include "dq/quad_store.hpp"
#include "dq/term.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dq {

struct ParseOptions {
    // Strict mode (default) throws ParseFailure at the first malformed line;
    // lenient mode skips the line and records an issue.
    bool lenient = false;
    // Prepended to every blank node label from this parse call. Imports that
    // merge several files pass a call-unique prefix so labels never collide
    // across files. Empty keeps labels verbatim.
    std::string blank_prefix;
    // Graph assigned to triple-form statements.
    std::string default_graph;

    ParseOptions();
};

struct ParseIssue {
    std::size_t line = 0; // 1-based
    std::string reason;
};

struct ParseResult {
    std::vector<Quad> quads;
    std::vector<ParseIssue> issues; // lenient mode only
};

ParseResult parse_nquads(std::string_view text, const ParseOptions& options = {});

// Term in its N-Quads surface form.
std::string serialize_term(const Term& t);

// One terminated statement line, graph term always written.
std::string serialize_quad(const Quad& q);

std::string serialize_nquads(const QuadStore& store);
std::string serialize_nquads(std::vector<Quad> quads);

// Scans one term starting at text[pos]; advances pos past it. Shared with
// the query clause syntax. Throws Error on malformed input.
Term scan_term(std::string_view text, std::size_t& pos);

} // namespace dq
