#include "dq/nquads.hpp"

#include "dq/vocab.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dq;

namespace {

std::set<std::string> quad_keys(const std::vector<Quad>& quads) {
    std::set<std::string> keys;
    for (const Quad& q : quads) keys.insert(serialize_quad(q));
    return keys;
}

} // namespace

TEST_CASE("basic statement with explicit graph") {
    const auto result = parse_nquads("<a:s> <a:p> \"x\" <a:g> .\n");
    REQUIRE(result.quads.size() == 1);
    const Quad& q = result.quads.front();
    CHECK(q.subject == Term::iri("a:s"));
    CHECK(q.predicate == Term::iri("a:p"));
    CHECK(q.object == Term::literal("x"));
    CHECK(q.object.datatype() == xsd::string_type);
    CHECK(q.graph == Term::iri("a:g"));
}

TEST_CASE("empty input parses to nothing") {
    CHECK(parse_nquads("").quads.empty());
    CHECK(parse_nquads("\n\n").quads.empty());
}

TEST_CASE("comments and blank lines are skipped") {
    const auto result = parse_nquads("# a comment\n\n<a:s> <a:p> <a:o> <a:g> . # trailing\n");
    CHECK(result.quads.size() == 1);
}

TEST_CASE("triple-form statements land in the default graph") {
    const auto result = parse_nquads("<a:s> <a:p> <a:o> .\n");
    REQUIRE(result.quads.size() == 1);
    CHECK(result.quads.front().graph.value() == vocab::default_graph);
}

TEST_CASE("typed and language-tagged literals") {
    const auto result = parse_nquads(
        "<a:s> <a:p> \"3.5\"^^<http://www.w3.org/2001/XMLSchema#double> <a:g> .\n"
        "<a:s> <a:p> \"hi\"@en <a:g> .\n");
    REQUIRE(result.quads.size() == 2);
    CHECK(*result.quads[0].object.numeric() == 3.5);
    CHECK(result.quads[1].object.language() == "en");
}

TEST_CASE("escape sequences unescape") {
    const auto result = parse_nquads("<a:s> <a:p> \"a\\tb\\nc\\\"d\\u0041\\U00000042\" <a:g> .\n");
    REQUIRE(result.quads.size() == 1);
    CHECK(result.quads.front().object.value() == "a\tb\nc\"dAB");
}

TEST_CASE("blank node labels take the call prefix") {
    ParseOptions options;
    options.blank_prefix = "i7_";
    const auto result = parse_nquads("_:x <a:p> _:y <a:g> .\n", options);
    REQUIRE(result.quads.size() == 1);
    CHECK(result.quads.front().subject == Term::blank("i7_x"));
    CHECK(result.quads.front().object == Term::blank("i7_y"));
}

TEST_CASE("strict mode aborts with the line number") {
    const char* text = "<a:s> <a:p> <a:o> <a:g> .\nthis is not a statement\n";
    try {
        parse_nquads(text);
        FAIL("expected ParseFailure");
    } catch (const ParseFailure& e) {
        CHECK(e.line() == 2);
        CHECK_FALSE(e.reason().empty());
    }
}

TEST_CASE("lenient mode skips and reports") {
    ParseOptions options;
    options.lenient = true;
    const auto result = parse_nquads(
        "<a:s> <a:p> <a:o> <a:g> .\nbroken line\n<a:s2> <a:p> <a:o> <a:g> .\n", options);
    CHECK(result.quads.size() == 2);
    REQUIRE(result.issues.size() == 1);
    CHECK(result.issues.front().line == 2);
}

TEST_CASE("malformed statements are rejected") {
    for (const char* bad : {
             "<a:s> <a:p> <a:o> <a:g>",            // missing dot
             "<a:s> <a:p> .",                       // too few terms
             "<a:s> \"lit\" <a:o> <a:g> .",        // literal predicate
             "\"lit\" <a:p> <a:o> <a:g> .",        // literal subject
             "<a:s> <a:p> <a:o> _:g .",             // blank graph label
             "<a:s> <a:p> <a:o> \"g\" .",          // literal graph
             "<a:s> <a:p> <a:o> <a:g> . extra",     // trailing content
             "<a:s> <a:p> \"unterminated <a:g> .", // unterminated literal
             "<no-scheme> <a:p> <a:o> <a:g> .",     // relative IRI
         }) {
        CHECK_THROWS_AS(parse_nquads(bad), ParseFailure);
    }
}

TEST_CASE("serialization of an empty store is empty") {
    CHECK(serialize_nquads(QuadStore{}).empty());
}

TEST_CASE("single quad serializes to one terminated line") {
    QuadStore store;
    store.insert(Quad(Term::iri("a:s"), Term::iri("a:p"), Term::literal("x"), Term::iri("a:g")));
    const std::string text = serialize_nquads(store);
    CHECK(text == "<a:s> <a:p> \"x\" <a:g> .\n");
}

TEST_CASE("canonical output is sorted and insertion-order independent") {
    gen::Rng rng(7);
    std::vector<Quad> quads;
    for (int i = 0; i < 40; ++i) quads.push_back(gen::random_quad(rng));

    QuadStore forward, backward;
    for (const Quad& q : quads) forward.insert(q);
    for (auto it = quads.rbegin(); it != quads.rend(); ++it) backward.insert(*it);

    const std::string a = serialize_nquads(forward);
    CHECK(a == serialize_nquads(backward));
    CHECK(a == serialize_nquads(forward)); // stable across calls

    // statements come out ordered by their (graph, subject, predicate,
    // object) serialized forms
    std::vector<std::string> keys;
    for (const Quad& q : parse_nquads(a).quads)
        keys.push_back(serialize_term(q.graph) + " " + serialize_term(q.subject) + " " +
                       serialize_term(q.predicate) + " " + serialize_term(q.object));
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("round trip: parse then serialize is the identity on quad sets") {
    gen::Rng rng(8);
    QuadStore store;
    while (store.size() < 100) store.insert(gen::random_quad(rng, 12));

    const std::string first = serialize_nquads(store);
    const auto reparsed = parse_nquads(first);
    CHECK(quad_keys(reparsed.quads) == quad_keys(store.all()));
    CHECK(reparsed.quads.size() == store.size());

    QuadStore second_store;
    for (const Quad& q : reparsed.quads) second_store.insert(q);
    CHECK(serialize_nquads(second_store) == first);
}
