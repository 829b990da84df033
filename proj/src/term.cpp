#include "dq/term.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dq {

namespace {

bool is_forbidden_iri_char(unsigned char c) {
    if (c <= 0x20) return true; // control characters and space
    switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
        return true;
    default:
        return false;
    }
}

void check_iri(std::string_view value, std::string_view role) {
    if (value.empty()) throw Error(std::string(role) + ": empty IRI");
    if (value.find(':') == std::string_view::npos)
        throw Error(std::string(role) + ": IRI is not absolute (no scheme separator): " +
                    std::string(value));
    for (unsigned char c : value) {
        if (is_forbidden_iri_char(c))
            throw Error(std::string(role) + ": forbidden character in IRI: " + std::string(value));
    }
}

bool is_label_start(unsigned char c) { return std::isalnum(c) || c == '_'; }
bool is_label_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '-' || c == '.'; }

void check_blank_label(std::string_view label) {
    if (label.empty()) throw Error("blank node: empty label");
    if (!is_label_start(label.front()))
        throw Error("blank node: label must start with a letter, digit or '_': " +
                    std::string(label));
    for (unsigned char c : label) {
        if (!is_label_char(c))
            throw Error("blank node: forbidden character in label: " + std::string(label));
    }
    if (label.back() == '.') throw Error("blank node: label may not end with '.'");
}

bool is_lang_tag(std::string_view lang) {
    // BCP47 shape: alpha head, alphanumeric subtags separated by '-'.
    if (lang.empty()) return false;
    bool head = true;
    std::size_t run = 0;
    for (unsigned char c : lang) {
        if (c == '-') {
            if (run == 0) return false;
            run = 0;
            head = false;
            continue;
        }
        if (head ? !std::isalpha(c) : !std::isalnum(c)) return false;
        ++run;
        if (run > 8) return false;
    }
    return run > 0;
}

double parse_integer_literal(const std::string& lexical) {
    std::string_view sv = lexical;
    if (!sv.empty() && (sv.front() == '+' || sv.front() == '-')) sv.remove_prefix(1);
    if (sv.empty()) throw Error("literal: malformed xsd:integer: " + lexical);
    for (unsigned char c : sv)
        if (!std::isdigit(c)) throw Error("literal: malformed xsd:integer: " + lexical);
    double out = 0;
    auto res = std::from_chars(lexical.data(), lexical.data() + lexical.size(), out);
    if (res.ec != std::errc() || res.ptr != lexical.data() + lexical.size())
        throw Error("literal: malformed xsd:integer: " + lexical);
    return out;
}

double parse_decimal_literal(const std::string& lexical) {
    std::string_view sv = lexical;
    if (!sv.empty() && (sv.front() == '+' || sv.front() == '-')) sv.remove_prefix(1);
    bool digits = false, dot = false;
    for (unsigned char c : sv) {
        if (c == '.') {
            if (dot) throw Error("literal: malformed xsd:decimal: " + lexical);
            dot = true;
        } else if (std::isdigit(c)) {
            digits = true;
        } else {
            throw Error("literal: malformed xsd:decimal: " + lexical);
        }
    }
    if (!digits) throw Error("literal: malformed xsd:decimal: " + lexical);
    double out = 0;
    auto res = std::from_chars(lexical.data(), lexical.data() + lexical.size(), out);
    if (res.ec != std::errc() || res.ptr != lexical.data() + lexical.size())
        throw Error("literal: malformed xsd:decimal: " + lexical);
    return out;
}

double parse_double_literal(const std::string& lexical) {
    if (lexical == "INF" || lexical == "+INF") return HUGE_VAL;
    if (lexical == "-INF") return -HUGE_VAL;
    if (lexical == "NaN") return std::nan("");
    double out = 0;
    auto res = std::from_chars(lexical.data(), lexical.data() + lexical.size(), out);
    if (res.ec != std::errc() || res.ptr != lexical.data() + lexical.size())
        throw Error("literal: malformed xsd:double: " + lexical);
    return out;
}

// Civil-calendar day arithmetic (proleptic Gregorian).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

bool days_in_month_ok(std::int64_t y, unsigned m, unsigned d) {
    static constexpr std::array<unsigned, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                         31, 31, 30, 31, 30, 31};
    if (m < 1 || m > 12 || d < 1) return false;
    unsigned max = lengths[m - 1];
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) max = 29;
    return d <= max;
}

} // namespace

std::string format_datetime(Timestamp t) {
    std::int64_t ms = t.ms;
    std::int64_t rem = ((ms % 86400000) + 86400000) % 86400000;
    std::int64_t days = (ms - rem) / 86400000;
    std::int64_t y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    const unsigned h = static_cast<unsigned>(rem / 3600000);
    const unsigned mi = static_cast<unsigned>(rem / 60000 % 60);
    const unsigned s = static_cast<unsigned>(rem / 1000 % 60);
    const unsigned frac = static_cast<unsigned>(rem % 1000);
    char buf[40];
    int n;
    if (frac != 0) {
        n = std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02u:%02u:%02u.%03uZ",
                          static_cast<long long>(y), mo, d, h, mi, s, frac);
    } else {
        n = std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02u:%02u:%02uZ",
                          static_cast<long long>(y), mo, d, h, mi, s);
    }
    return std::string(buf, static_cast<std::size_t>(n));
}

Timestamp parse_datetime(std::string_view text) {
    const auto fail = [&] { throw Error("malformed xsd:dateTime: " + std::string(text)); };
    auto digits = [&](std::size_t pos, std::size_t count) -> std::int64_t {
        if (pos + count > text.size()) fail();
        std::int64_t v = 0;
        for (std::size_t i = 0; i < count; ++i) {
            unsigned char c = static_cast<unsigned char>(text[pos + i]);
            if (!std::isdigit(c)) fail();
            v = v * 10 + (c - '0');
        }
        return v;
    };

    std::size_t pos = 0;
    std::int64_t sign = 1;
    if (!text.empty() && text[0] == '-') {
        sign = -1;
        pos = 1;
    }
    const std::int64_t year = sign * digits(pos, 4);
    pos += 4;
    if (pos >= text.size() || text[pos] != '-') fail();
    const auto month = static_cast<unsigned>(digits(pos + 1, 2));
    pos += 3;
    if (pos >= text.size() || text[pos] != '-') fail();
    const auto day = static_cast<unsigned>(digits(pos + 1, 2));
    pos += 3;
    if (pos >= text.size() || text[pos] != 'T') fail();
    const auto hour = digits(pos + 1, 2);
    pos += 3;
    if (pos >= text.size() || text[pos] != ':') fail();
    const auto minute = digits(pos + 1, 2);
    pos += 3;
    if (pos >= text.size() || text[pos] != ':') fail();
    const auto second = digits(pos + 1, 2);
    pos += 3;

    std::int64_t millis = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t nd = 0;
        std::int64_t frac = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (nd < 3) frac = frac * 10 + (text[pos] - '0');
            ++nd;
            ++pos;
        }
        if (nd == 0 || nd > 9) fail();
        while (nd < 3) {
            frac *= 10;
            ++nd;
        }
        millis = frac;
    }
    if (pos + 1 != text.size() || text[pos] != 'Z') fail();
    if (!days_in_month_ok(year, month, day)) fail();
    if (hour > 23 || minute > 59 || second > 59) fail();

    const std::int64_t days = days_from_civil(year, month, day);
    return Timestamp{((days * 24 + hour) * 60 + minute) * 60000 + second * 1000 + millis};
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Term::Term(TermKind kind, std::string value, std::string datatype, std::string lang)
    : kind_(kind), value_(std::move(value)), datatype_(std::move(datatype)),
      lang_(std::move(lang)) {
    if (kind_ != TermKind::Literal) return;
    if (datatype_ == xsd::integer_type) {
        numeric_ = parse_integer_literal(value_);
    } else if (datatype_ == xsd::decimal_type) {
        numeric_ = parse_decimal_literal(value_);
    } else if (datatype_ == xsd::double_type) {
        numeric_ = parse_double_literal(value_);
    } else if (datatype_ == xsd::datetime_type) {
        numeric_ = static_cast<double>(parse_datetime(value_).ms) / 1000.0;
    }
}

Term Term::iri(std::string_view value) {
    check_iri(value, "term");
    return Term(TermKind::Iri, std::string(value), {}, {});
}

Term Term::blank(std::string_view label) {
    check_blank_label(label);
    return Term(TermKind::Blank, std::string(label), {}, {});
}

Term Term::literal(std::string_view lexical) {
    return Term(TermKind::Literal, std::string(lexical), std::string(xsd::string_type), {});
}

Term Term::literal(std::string_view lexical, std::string_view datatype) {
    check_iri(datatype, "literal datatype");
    if (datatype == rdf::lang_string)
        throw Error("literal: rdf:langString requires a language tag");
    return Term(TermKind::Literal, std::string(lexical), std::string(datatype), {});
}

Term Term::lang_literal(std::string_view lexical, std::string_view lang) {
    if (!is_lang_tag(lang)) throw Error("literal: malformed language tag: " + std::string(lang));
    return Term(TermKind::Literal, std::string(lexical), std::string(rdf::lang_string),
                std::string(lang));
}

Term Term::from_double(double v) { return literal(format_double(v), xsd::double_type); }

Term Term::from_integer(std::int64_t v) { return literal(std::to_string(v), xsd::integer_type); }

Term Term::from_boolean(bool v) { return literal(v ? "true" : "false", xsd::boolean_type); }

Term Term::from_datetime(Timestamp t) { return literal(format_datetime(t), xsd::datetime_type); }

Timestamp Term::datetime() const {
    if (!is_literal() || datatype_ != xsd::datetime_type)
        throw Error("term is not an xsd:dateTime literal");
    return parse_datetime(value_);
}

std::size_t Term::hash() const {
    std::size_t h = std::hash<int>()(static_cast<int>(kind_));
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(std::hash<std::string>()(value_));
    mix(std::hash<std::string>()(datatype_));
    mix(std::hash<std::string>()(lang_));
    return h;
}

Quad::Quad(Term s, Term p, Term o, Term g)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)), graph(std::move(g)) {
    if (subject.is_literal()) throw Error("quad: subject must be an IRI or blank node");
    if (!predicate.is_iri()) throw Error("quad: predicate must be an IRI");
    if (!graph.is_iri()) throw Error("quad: graph must be an IRI");
}

std::size_t QuadHash::operator()(const Quad& q) const {
    std::size_t h = q.subject.hash();
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(q.predicate.hash());
    mix(q.object.hash());
    mix(q.graph.hash());
    return h;
}

} // namespace dq
