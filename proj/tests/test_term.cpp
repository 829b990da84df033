#include "dq/term.hpp"

#include <doctest.h>

#include <cmath>

using namespace dq;

TEST_CASE("iri terms require an absolute IRI") {
    const Term t = Term::iri("urn:dq:thing");
    CHECK(t.is_iri());
    CHECK(t.value() == "urn:dq:thing");

    CHECK_THROWS_AS(Term::iri(""), Error);
    CHECK_THROWS_AS(Term::iri("no-scheme-separator"), Error);
    CHECK_THROWS_AS(Term::iri("urn:has space"), Error);
    CHECK_THROWS_AS(Term::iri("urn:angle<bracket"), Error);
}

TEST_CASE("blank node labels are validated") {
    CHECK(Term::blank("b1").is_blank());
    CHECK(Term::blank("p0_label").value() == "p0_label");
    CHECK_THROWS_AS(Term::blank(""), Error);
    CHECK_THROWS_AS(Term::blank("-leading"), Error);
    CHECK_THROWS_AS(Term::blank("trailing."), Error);
    CHECK_THROWS_AS(Term::blank("sp ace"), Error);
}

TEST_CASE("plain literals default to xsd:string") {
    const Term t = Term::literal("hello");
    CHECK(t.is_literal());
    CHECK(t.datatype() == xsd::string_type);
    CHECK(t.language().empty());
    CHECK_FALSE(t.numeric());
}

TEST_CASE("language-tagged literals get rdf:langString") {
    const Term t = Term::lang_literal("bonjour", "fr");
    CHECK(t.datatype() == rdf::lang_string);
    CHECK(t.language() == "fr");
    CHECK_THROWS_AS(Term::lang_literal("x", ""), Error);
    CHECK_THROWS_AS(Term::lang_literal("x", "not a tag"), Error);
    // langString without a tag is malformed
    CHECK_THROWS_AS(Term::literal("x", rdf::lang_string), Error);
}

TEST_CASE("numeric literals parse at construction") {
    CHECK(*Term::literal("42", xsd::integer_type).numeric() == 42.0);
    CHECK(*Term::literal("-7", xsd::integer_type).numeric() == -7.0);
    CHECK(*Term::literal("3.25", xsd::decimal_type).numeric() == 3.25);
    CHECK(*Term::literal("1.5e3", xsd::double_type).numeric() == 1500.0);
    CHECK(*Term::literal("-INF", xsd::double_type).numeric() == -HUGE_VAL);

    CHECK_THROWS_AS(Term::literal("4.5", xsd::integer_type), Error);
    CHECK_THROWS_AS(Term::literal("abc", xsd::decimal_type), Error);
    CHECK_THROWS_AS(Term::literal("1e", xsd::double_type), Error);
    CHECK_THROWS_AS(Term::literal("1.5e3", xsd::decimal_type), Error);
    CHECK_THROWS_AS(Term::literal("not-a-time", xsd::datetime_type), Error);
}

TEST_CASE("datetime literals expose epoch seconds") {
    const Term t = Term::literal("1970-01-01T00:01:00Z", xsd::datetime_type);
    CHECK(*t.numeric() == 60.0);
    CHECK(t.datetime().ms == 60000);
}

TEST_CASE("datetime formatting round-trips") {
    const Timestamp a = parse_datetime("2015-03-23T10:00:00Z");
    CHECK(format_datetime(a) == "2015-03-23T10:00:00Z");

    const Timestamp b = parse_datetime("2015-03-23T10:00:02.608Z");
    CHECK(format_datetime(b) == "2015-03-23T10:00:02.608Z");
    CHECK(b.ms - a.ms == 2608);

    CHECK(parse_datetime("1969-12-31T23:59:59Z").ms == -1000);
    CHECK(format_datetime(Timestamp{-1000}) == "1969-12-31T23:59:59Z");

    CHECK_THROWS_AS(parse_datetime("2015-02-29T00:00:00Z"), Error);
    CHECK_THROWS_AS(parse_datetime("2015-03-23T24:00:00Z"), Error);
    CHECK_THROWS_AS(parse_datetime("2015-03-23T10:00:00+02:00"), Error);
    CHECK_THROWS_AS(parse_datetime("2015-03-23 10:00:00Z"), Error);
}

TEST_CASE("double literals round-trip exactly") {
    for (double v : {0.0, 1.0, 0.1, 1.0 / 3.0, 2.5017105, 1e-300, -42.25}) {
        const Term t = Term::from_double(v);
        CHECK(*t.numeric() == v);
    }
}

TEST_CASE("term equality ignores nothing") {
    CHECK(Term::iri("urn:a") == Term::iri("urn:a"));
    CHECK(Term::iri("urn:a") != Term::blank("a"));
    CHECK(Term::literal("1", xsd::integer_type) != Term::literal("1", xsd::double_type));
    // numerically equal but lexically distinct stays distinct
    CHECK(Term::literal("1.0", xsd::double_type) != Term::literal("1", xsd::double_type));
    CHECK(Term::lang_literal("x", "en") != Term::lang_literal("x", "de"));
}

TEST_CASE("quads enforce positional invariants") {
    const Term s = Term::iri("urn:s");
    const Term p = Term::iri("urn:p");
    const Term o = Term::literal("o");
    const Term g = Term::iri("urn:g");
    CHECK_NOTHROW(Quad(s, p, o, g));
    CHECK_NOTHROW(Quad(Term::blank("b"), p, o, g));
    CHECK_THROWS_AS(Quad(o, p, o, g), Error);                  // literal subject
    CHECK_THROWS_AS(Quad(s, Term::blank("b"), o, g), Error);   // blank predicate
    CHECK_THROWS_AS(Quad(s, p, o, Term::blank("b")), Error);   // blank graph
}
