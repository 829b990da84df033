#include "dq/dq_writer.hpp"

#include "dq/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace dq {

namespace {

const Term& analytics_graph_term() {
    static const Term t = Term::iri(vocab::analytics_graph);
    return t;
}

std::string zero_padded(std::size_t value, int width) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%0*zu", width, value);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::vector<std::string> sorted_unique(std::vector<std::string> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void validate_record(const AnalyticExecution& exec, const ScoreRecord& rec) {
    if (rec.execution != exec.run_id)
        throw Error("emit_dq: record execution does not match run id " + exec.run_id);
    if (rec.target.empty()) throw Error("emit_dq: record with empty target");
    if (!std::isfinite(rec.raw_score) || !std::isfinite(rec.normalized_score))
        throw Error("emit_dq: non-finite score for " + rec.target);
    const auto norm = exec.descriptor.normalization;
    if (norm == vocab::Normalization::Probability || norm == vocab::Normalization::L2) {
        if (rec.normalized_score < -1e-12 || rec.normalized_score > 1.0 + 1e-12)
            throw Error("emit_dq: normalized score out of [0,1] for " + rec.target);
    }
    if (exec.descriptor.monotonic && !rec.sources.empty())
        throw Error("emit_dq: monotonic analytic with sources for " + rec.target);
    if (!exec.descriptor.monotonic && rec.sources.empty())
        throw Error("emit_dq: multi-source analytic without sources for " + rec.target);
    const bool boolean = exec.descriptor.analytic_class == vocab::AnalyticClass::Boolean;
    if (boolean && !rec.above_threshold)
        throw Error("emit_dq: Boolean analytic without aboveThreshold for " + rec.target);
    if (!boolean && rec.above_threshold)
        throw Error("emit_dq: aboveThreshold on a non-Boolean analytic for " + rec.target);
}

struct StoredRecord {
    ScoreRecord record;
    Timestamp executed_at;
    std::string score_entity;
};

Term single_object(const QuadStore& store, const Term& subject, std::string_view predicate,
                   const std::string& entity_name) {
    QuadPattern p;
    p.subject = subject;
    p.predicate = Term::iri(predicate);
    p.graph = analytics_graph_term();
    auto quads = store.match(p);
    if (quads.empty())
        throw Error("malformed DQ pattern for score entity " + entity_name + ": missing " +
                    std::string(predicate));
    return quads.front().object;
}

// All stored records for (target, algorithm), sorted ascending by
// (executedAt, run id, score entity).
std::vector<StoredRecord> collect_records(const QuadStore& store, std::string_view target,
                                          std::string_view algorithm) {
    const Term target_term = Term::iri(target);
    const Term algorithm_term = Term::iri(algorithm);

    QuadPattern score_links;
    score_links.subject = target_term;
    score_links.predicate = Term::iri(vocab::has_relevance_score);
    score_links.graph = analytics_graph_term();

    std::vector<StoredRecord> out;
    for (const Quad& link : store.match(score_links)) {
        if (!link.object.is_iri()) continue;
        const Term& entity = link.object;
        const std::string& entity_name = entity.value();

        const Term run = single_object(store, entity, vocab::was_generated_by, entity_name);
        QuadPattern run_algorithm;
        run_algorithm.subject = run;
        run_algorithm.predicate = Term::iri(vocab::algorithm);
        run_algorithm.graph = analytics_graph_term();
        auto algo_quads = store.match(run_algorithm);
        if (algo_quads.empty())
            throw Error("malformed DQ pattern for score entity " + entity_name +
                        ": execution missing algorithm");
        if (algo_quads.front().object != algorithm_term) continue;

        StoredRecord stored;
        stored.score_entity = entity_name;
        stored.record.target = std::string(target);
        stored.record.execution = run.value();

        const Term raw = single_object(store, entity, vocab::raw_score, entity_name);
        const Term norm = single_object(store, entity, vocab::normalized_score, entity_name);
        if (!raw.numeric() || !norm.numeric())
            throw Error("malformed DQ pattern for score entity " + entity_name +
                        ": non-numeric score literal");
        stored.record.raw_score = *raw.numeric();
        stored.record.normalized_score = *norm.numeric();

        const Term at = single_object(store, run, vocab::generated_at_time, entity_name);
        stored.executed_at = at.datetime();

        QuadPattern sources;
        sources.subject = entity;
        sources.predicate = Term::iri(vocab::used);
        sources.graph = analytics_graph_term();
        for (const Quad& q : store.match(sources)) stored.record.sources.push_back(q.object.value());
        stored.record.sources = sorted_unique(std::move(stored.record.sources));

        QuadPattern threshold;
        threshold.subject = entity;
        threshold.predicate = Term::iri(vocab::above_threshold);
        threshold.graph = analytics_graph_term();
        auto flag_quads = store.match(threshold);
        if (!flag_quads.empty()) stored.record.above_threshold = flag_quads.front().object.value() == "true";

        out.push_back(std::move(stored));
    }

    std::sort(out.begin(), out.end(), [](const StoredRecord& a, const StoredRecord& b) {
        if (a.executed_at != b.executed_at) return a.executed_at < b.executed_at;
        if (a.record.execution != b.record.execution) return a.record.execution < b.record.execution;
        return a.score_entity < b.score_entity;
    });
    return out;
}

} // namespace

std::string mint_run_id(const QuadStore& store, std::string_view algorithm_iri) {
    const std::string prefix =
        std::string(vocab::run_prefix) + vocab::local_name(algorithm_iri) + "/";

    QuadPattern runs;
    runs.predicate = Term::iri(vocab::algorithm);
    runs.object = Term::iri(algorithm_iri);
    runs.graph = analytics_graph_term();

    std::size_t max_seq = 0;
    for (const Quad& q : store.match(runs)) {
        const std::string& id = q.subject.value();
        if (id.rfind(prefix, 0) != 0) continue;
        std::size_t seq = 0;
        const char* begin = id.data() + prefix.size();
        const char* end = id.data() + id.size();
        if (std::from_chars(begin, end, seq).ec == std::errc()) max_seq = std::max(max_seq, seq);
    }
    return prefix + zero_padded(max_seq + 1, 6);
}

std::size_t emit_dq(QuadStore& store, const AnalyticExecution& exec,
                    const std::vector<ScoreRecord>& records) {
    exec.descriptor.validate();
    const auto strategy = vocab::decide_strategy(exec.relationship_kind, exec.state_kind);
    if (strategy != vocab::ModelingStrategy::DirectQualification &&
        strategy != vocab::ModelingStrategy::SpecializationAndDQ)
        throw Error("DQ not applicable (decision matrix)");
    if (exec.run_id.empty()) throw Error("emit_dq: empty run id");
    if (exec.inputs.empty()) throw Error("emit_dq: execution with no inputs");

    const Term run = Term::iri(exec.run_id);
    QuadPattern existing;
    existing.subject = run;
    existing.graph = analytics_graph_term();
    if (!store.match(existing).empty()) throw Error("emit_dq: duplicate run id " + exec.run_id);

    for (const ScoreRecord& rec : records) validate_record(exec, rec);

    const Term graph = analytics_graph_term();
    std::size_t inserted = 0;
    auto put = [&](const Term& s, std::string_view p, Term o) {
        if (store.insert(Quad(s, Term::iri(p), std::move(o), graph))) ++inserted;
    };

    put(run, rdf::type, Term::iri(vocab::analytic_execution));
    put(run, rdf::type, Term::iri(vocab::analytic_class_iri(exec.descriptor.analytic_class)));
    put(run, vocab::algorithm, Term::iri(exec.descriptor.algorithm));
    for (const std::string& input : sorted_unique(exec.inputs))
        put(run, vocab::used, Term::iri(input));
    put(run, vocab::generated_at_time, Term::from_datetime(exec.executed_at));

    std::size_t index = 0;
    for (const ScoreRecord& rec : records) {
        const Term entity = Term::iri(exec.run_id + "#score-" + zero_padded(index++, 4));
        const std::size_t before = inserted;

        put(entity, rdf::type, Term::iri(vocab::score_entity));
        put(entity, vocab::was_generated_by, run);
        put(entity, vocab::raw_score, Term::from_double(rec.raw_score));
        put(entity, vocab::normalized_score, Term::from_double(rec.normalized_score));
        put(Term::iri(rec.target), vocab::has_relevance_score, entity);
        const auto sources = sorted_unique(rec.sources);
        for (const std::string& source : sources) put(entity, vocab::used, Term::iri(source));
        if (rec.above_threshold) put(entity, vocab::above_threshold, Term::from_boolean(*rec.above_threshold));

        // reification-avoidance bound: constant in store size
        const std::size_t bound = 5 + sources.size() + (rec.above_threshold ? 1 : 0);
        if (inserted - before > bound)
            throw Error("emit_dq: record quad bound exceeded for " + rec.target);
    }
    return inserted;
}

std::optional<ScoreRecord> latest_score(const QuadStore& store, std::string_view target,
                                        std::string_view algorithm) {
    auto records = collect_records(store, target, algorithm);
    if (records.empty()) return std::nullopt;
    return records.back().record;
}

std::vector<ScoreRecord> score_history(const QuadStore& store, std::string_view target,
                                       std::string_view algorithm) {
    std::vector<ScoreRecord> out;
    for (auto& stored : collect_records(store, target, algorithm))
        out.push_back(std::move(stored.record));
    return out;
}

std::vector<std::pair<std::string, std::size_t>> record_quad_counts(const QuadStore& store,
                                                                    std::string_view run_id) {
    const Term run = Term::iri(run_id);
    QuadPattern generated;
    generated.predicate = Term::iri(vocab::was_generated_by);
    generated.object = run;
    generated.graph = analytics_graph_term();

    std::vector<std::pair<std::string, std::size_t>> out;
    for (const Quad& q : store.match(generated)) {
        const Term& entity = q.subject;
        QuadPattern own;
        own.subject = entity;
        own.graph = analytics_graph_term();
        // quads with the entity as subject, plus the hasRelevanceScore link
        QuadPattern link;
        link.predicate = Term::iri(vocab::has_relevance_score);
        link.object = entity;
        link.graph = analytics_graph_term();
        out.emplace_back(entity.value(), store.match(own).size() + store.match(link).size());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dq
