#pragma once
// RDF terms: IRIs, blank nodes, and typed literals.
//
// Terms are immutable values. Invariants are enforced at construction so
// that everything downstream (store, serializer, query engine) can assume
// well-formed terms.

#include "dq/error.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace dq {

namespace xsd {
inline constexpr std::string_view ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view string_type = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view boolean_type = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view integer_type = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view decimal_type = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view double_type = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view datetime_type = "http://www.w3.org/2001/XMLSchema#dateTime";
} // namespace xsd

namespace rdf {
inline constexpr std::string_view type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view lang_string = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
} // namespace rdf

// UTC instant with millisecond precision.
struct Timestamp {
    std::int64_t ms = 0; // milliseconds since the Unix epoch

    auto operator<=>(const Timestamp&) const = default;
};

// Formats as xsd:dateTime, e.g. "2015-03-23T10:00:00Z" (fractional part only
// when the millisecond component is non-zero).
std::string format_datetime(Timestamp t);

// Parses "YYYY-MM-DDThh:mm:ss(.fff)?Z". Throws Error on anything else;
// offsets other than Z are rejected.
Timestamp parse_datetime(std::string_view text);

// Shortest round-trip decimal form of a double (via std::to_chars).
std::string format_double(double v);

enum class TermKind { Iri, Blank, Literal };

class Term {
public:
    static Term iri(std::string_view value);
    static Term blank(std::string_view label);
    // Plain literal, datatype defaults to xsd:string.
    static Term literal(std::string_view lexical);
    static Term literal(std::string_view lexical, std::string_view datatype);
    static Term lang_literal(std::string_view lexical, std::string_view lang);

    static Term from_double(double v);
    static Term from_integer(std::int64_t v);
    static Term from_boolean(bool v);
    static Term from_datetime(Timestamp t);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_blank() const { return kind_ == TermKind::Blank; }
    bool is_literal() const { return kind_ == TermKind::Literal; }

    // IRI string, blank label, or literal lexical form.
    const std::string& value() const { return value_; }
    // Datatype IRI; empty for non-literals.
    const std::string& datatype() const { return datatype_; }
    // Language tag; empty unless an rdf:langString literal.
    const std::string& language() const { return lang_; }

    // Parsed value for numeric-datatype literals (xsd:double, xsd:decimal,
    // xsd:integer; xsd:dateTime as epoch seconds). Empty otherwise.
    std::optional<double> numeric() const { return numeric_; }

    // Parsed timestamp for xsd:dateTime literals.
    Timestamp datetime() const;

    bool operator==(const Term& other) const {
        return kind_ == other.kind_ && value_ == other.value_ && datatype_ == other.datatype_ &&
               lang_ == other.lang_;
    }
    bool operator!=(const Term& other) const { return !(*this == other); }

    std::size_t hash() const;

private:
    Term(TermKind kind, std::string value, std::string datatype, std::string lang);

    TermKind kind_;
    std::string value_;
    std::string datatype_;
    std::string lang_;
    std::optional<double> numeric_; // derived, excluded from equality
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Subject-predicate-object-graph statement. Predicate and graph are always
// IRIs, the subject is an IRI or blank node.
struct Quad {
    Term subject;
    Term predicate;
    Term object;
    Term graph;

    Quad(Term s, Term p, Term o, Term g);

    bool operator==(const Quad& other) const {
        return subject == other.subject && predicate == other.predicate &&
               object == other.object && graph == other.graph;
    }
    bool operator!=(const Quad& other) const { return !(*this == other); }
};

struct QuadHash {
    std::size_t operator()(const Quad& q) const;
};

} // namespace dq
