#pragma once
// In-memory quad store with named graphs and four positional indexes.
//
// Single-writer, multi-reader discipline: mutation goes through one writer,
// readers take value snapshots (snapshot()) identified by the revision
// counter. Analytics always run on a snapshot, never on the live store.

#include "dq/term.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace dq {

// Match pattern; unset positions are wildcards.
struct QuadPattern {
    std::optional<Term> subject;
    std::optional<Term> predicate;
    std::optional<Term> object;
    std::optional<Term> graph;

    bool matches(const Quad& q) const {
        return (!subject || *subject == q.subject) && (!predicate || *predicate == q.predicate) &&
               (!object || *object == q.object) && (!graph || *graph == q.graph);
    }
};

class QuadStore {
public:
    // Returns true if the quad was newly inserted. Duplicates are a no-op
    // and leave the revision counter untouched.
    bool insert(Quad q);

    // Returns true if the quad was present and removed.
    bool remove(const Quad& q);

    bool contains(const Quad& q) const { return ids_.count(q) != 0; }

    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    // Increases by one per successful mutation.
    std::uint64_t revision() const { return revision_; }

    // All quads matching the pattern, in insertion order. Every index lookup
    // returns exactly what a full scan would.
    std::vector<Quad> match(const QuadPattern& pattern) const;

    // All quads in insertion order.
    std::vector<Quad> all() const;

    // Distinct named-graph terms, sorted by IRI.
    std::vector<Term> graphs() const;

    // Consistent point-in-time copy for readers.
    QuadStore snapshot() const { return *this; }

private:
    using IdList = std::vector<std::size_t>;
    using Index = std::unordered_map<Term, IdList, TermHash>;

    static void erase_id(Index& index, const Term& key, std::size_t id);

    std::vector<std::optional<Quad>> slots_;
    std::unordered_map<Quad, std::size_t, QuadHash> ids_;
    Index by_subject_;
    Index by_predicate_;
    Index by_object_;
    Index by_graph_;
    std::uint64_t revision_ = 0;
    std::size_t count_ = 0;
};

} // namespace dq
