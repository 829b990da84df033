#include "dq/vocab.hpp"

namespace dq::vocab {

std::string local_name(std::string_view iri) {
    const auto pos = iri.find_last_of("#/");
    if (pos == std::string_view::npos || pos + 1 >= iri.size()) return std::string(iri);
    return std::string(iri.substr(pos + 1));
}

std::string algorithm_display_name(std::string_view algorithm_iri) {
    if (algorithm_iri == alg_pagerank) return "PageRank";
    if (algorithm_iri == alg_hits) return "HITS";
    if (algorithm_iri == alg_betweenness) return "Betweenness";
    if (algorithm_iri == alg_vsm) return "VSM";
    return local_name(algorithm_iri);
}

ModelingStrategy decide_strategy(RelationshipKind rk, StateKind sk) {
    if (rk == RelationshipKind::Relationship) {
        return sk == StateKind::Continuant ? ModelingStrategy::SpecializationAndDQ
                                           : ModelingStrategy::DirectQualification;
    }
    return sk == StateKind::Continuant ? ModelingStrategy::Specialization
                                       : ModelingStrategy::BasicInference;
}

std::string_view analytic_class_iri(AnalyticClass c) {
    switch (c) {
    case AnalyticClass::Idempotent:
        return idempotent_analytic;
    case AnalyticClass::Stochastic:
        return stochastic_analytic;
    case AnalyticClass::Boolean:
        return boolean_analytic;
    }
    throw Error("unknown analytic class");
}

void AnalyticDescriptor::validate() const {
    if (algorithm.empty()) throw Error("analytic descriptor: empty algorithm IRI");
    if (analytic_class == AnalyticClass::Boolean && !threshold)
        throw Error("analytic descriptor: Boolean class requires a threshold");
    if (analytic_class != AnalyticClass::Boolean && threshold)
        throw Error("analytic descriptor: threshold is only valid for the Boolean class");
}

AnalyticDescriptor pagerank_descriptor() {
    AnalyticDescriptor d;
    d.algorithm = std::string(alg_pagerank);
    d.analytic_class = AnalyticClass::Stochastic;
    d.monotonic = true;
    d.normalization = Normalization::Probability;
    return d;
}

AnalyticDescriptor hits_descriptor() {
    AnalyticDescriptor d;
    d.algorithm = std::string(alg_hits);
    d.analytic_class = AnalyticClass::Stochastic;
    d.monotonic = true;
    d.normalization = Normalization::L2;
    return d;
}

AnalyticDescriptor betweenness_descriptor() {
    AnalyticDescriptor d;
    d.algorithm = std::string(alg_betweenness);
    d.analytic_class = AnalyticClass::Stochastic;
    d.monotonic = true;
    d.normalization = Normalization::None;
    return d;
}

AnalyticDescriptor vsm_descriptor() {
    AnalyticDescriptor d;
    d.algorithm = std::string(alg_vsm);
    d.analytic_class = AnalyticClass::Idempotent;
    d.monotonic = false;
    d.normalization = Normalization::L2;
    return d;
}

} // namespace dq::vocab
