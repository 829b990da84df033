#pragma once
// Directory-backed persistence for the CLI: a store directory holds the
// canonical N-Quads export plus one raw-document file per named graph.
//
//   <dir>/quads.nq
//   <dir>/raw/<percent-encoded graph IRI>

#include "dq/broker.hpp"
#include "dq/quad_store.hpp"

#include <filesystem>

namespace dq {

struct PersistedStore {
    QuadStore store;
    RawDocumentStore documents;
};

// Missing directory loads as an empty store.
PersistedStore load_store(const std::filesystem::path& dir);

void save_store(const std::filesystem::path& dir, const QuadStore& store,
                const RawDocumentStore& documents);

} // namespace dq
