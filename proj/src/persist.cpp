#include "dq/persist.hpp"

#include "dq/error.hpp"
#include "dq/nquads.hpp"

#include <fstream>

namespace dq {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

} // namespace

PersistedStore load_store(const fs::path& dir) {
    PersistedStore out;
    const fs::path quads = dir / "quads.nq";
    if (fs::exists(quads)) {
        // labels were namespaced when first imported; keep them verbatim
        for (Quad& q : parse_nquads(read_file(quads)).quads) out.store.insert(std::move(q));
    }
    out.documents.load(dir / "raw");
    return out;
}

void save_store(const fs::path& dir, const QuadStore& store, const RawDocumentStore& documents) {
    fs::create_directories(dir);
    const std::string serialized = serialize_nquads(store);
    std::ofstream out(dir / "quads.nq", std::ios::binary);
    if (!out) throw Error("cannot write " + (dir / "quads.nq").string());
    out.write(serialized.data(), static_cast<std::streamsize>(serialized.size()));
    out.close();
    documents.save(dir / "raw");
}

} // namespace dq
