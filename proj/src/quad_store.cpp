#include "dq/quad_store.hpp"

#include <algorithm>

namespace dq {

bool QuadStore::insert(Quad q) {
    if (ids_.count(q) != 0) return false;
    const std::size_t id = slots_.size();
    by_subject_[q.subject].push_back(id);
    by_predicate_[q.predicate].push_back(id);
    by_object_[q.object].push_back(id);
    by_graph_[q.graph].push_back(id);
    ids_.emplace(q, id);
    slots_.push_back(std::move(q));
    ++count_;
    ++revision_;
    return true;
}

void QuadStore::erase_id(Index& index, const Term& key, std::size_t id) {
    auto it = index.find(key);
    auto& list = it->second;
    list.erase(std::find(list.begin(), list.end(), id));
    if (list.empty()) index.erase(it);
}

bool QuadStore::remove(const Quad& q) {
    auto it = ids_.find(q);
    if (it == ids_.end()) return false;
    const std::size_t id = it->second;
    erase_id(by_subject_, q.subject, id);
    erase_id(by_predicate_, q.predicate, id);
    erase_id(by_object_, q.object, id);
    erase_id(by_graph_, q.graph, id);
    ids_.erase(it);
    slots_[id].reset();
    --count_;
    ++revision_;
    return true;
}

std::vector<Quad> QuadStore::match(const QuadPattern& pattern) const {
    // Narrowest index wins; candidate lists are in ascending id order, so the
    // result order is independent of which index was chosen.
    const IdList* candidates = nullptr;
    auto consider = [&](const Index& index, const std::optional<Term>& key) {
        if (!key) return true;
        auto it = index.find(*key);
        if (it == index.end()) return false;
        if (candidates == nullptr || it->second.size() < candidates->size())
            candidates = &it->second;
        return true;
    };
    if (!consider(by_subject_, pattern.subject) || !consider(by_predicate_, pattern.predicate) ||
        !consider(by_object_, pattern.object) || !consider(by_graph_, pattern.graph))
        return {};

    std::vector<Quad> out;
    if (candidates == nullptr) {
        for (const auto& slot : slots_)
            if (slot && pattern.matches(*slot)) out.push_back(*slot);
        return out;
    }
    for (std::size_t id : *candidates)
        if (pattern.matches(*slots_[id])) out.push_back(*slots_[id]);
    return out;
}

std::vector<Quad> QuadStore::all() const {
    std::vector<Quad> out;
    out.reserve(count_);
    for (const auto& slot : slots_)
        if (slot) out.push_back(*slot);
    return out;
}

std::vector<Term> QuadStore::graphs() const {
    std::vector<Term> out;
    out.reserve(by_graph_.size());
    for (const auto& [term, ids] : by_graph_) out.push_back(term);
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.value() < b.value(); });
    return out;
}

} // namespace dq
