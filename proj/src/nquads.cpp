#include "dq/nquads.hpp"

#include "dq/error.hpp"
#include "dq/vocab.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dq {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && is_ws(text[pos])) ++pos;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) throw Error("invalid unicode escape");
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::uint32_t hex_digits(std::string_view text, std::size_t& pos, unsigned count) {
    std::uint32_t v = 0;
    for (unsigned i = 0; i < count; ++i) {
        if (pos >= text.size()) throw Error("truncated unicode escape");
        const char c = text[pos++];
        v <<= 4;
        if (c >= '0' && c <= '9')
            v |= static_cast<std::uint32_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v |= static_cast<std::uint32_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v |= static_cast<std::uint32_t>(c - 'A' + 10);
        else
            throw Error("invalid hex digit in unicode escape");
    }
    return v;
}

// Unescapes \uXXXX and \UXXXXXXXX only (IRI context).
std::string scan_iriref(std::string_view text, std::size_t& pos) {
    // caller consumed '<'
    std::string out;
    while (true) {
        if (pos >= text.size()) throw Error("unterminated IRI");
        const char c = text[pos++];
        if (c == '>') return out;
        if (c == '\\') {
            if (pos >= text.size()) throw Error("truncated escape in IRI");
            const char e = text[pos++];
            if (e == 'u')
                append_utf8(out, hex_digits(text, pos, 4));
            else if (e == 'U')
                append_utf8(out, hex_digits(text, pos, 8));
            else
                throw Error("invalid escape in IRI");
            continue;
        }
        out.push_back(c);
    }
}

std::string scan_quoted(std::string_view text, std::size_t& pos) {
    // caller consumed '"'
    std::string out;
    while (true) {
        if (pos >= text.size()) throw Error("unterminated literal");
        const char c = text[pos++];
        if (c == '"') return out;
        if (c == '\n') throw Error("newline inside literal");
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        if (pos >= text.size()) throw Error("truncated escape in literal");
        const char e = text[pos++];
        switch (e) {
        case 't': out.push_back('\t'); break;
        case 'b': out.push_back('\b'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 'f': out.push_back('\f'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case '\\': out.push_back('\\'); break;
        case 'u': append_utf8(out, hex_digits(text, pos, 4)); break;
        case 'U': append_utf8(out, hex_digits(text, pos, 8)); break;
        default: throw Error("invalid escape in literal");
        }
    }
}

std::string scan_blank_label(std::string_view text, std::size_t& pos) {
    // caller consumed "_:"
    const std::size_t start = pos;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos == start) throw Error("empty blank node label");
    return std::string(text.substr(start, pos - start));
}

std::string scan_lang_tag(std::string_view text, std::size_t& pos) {
    // caller consumed '@'
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
        ++pos;
    if (pos == start) throw Error("empty language tag");
    return std::string(text.substr(start, pos - start));
}

struct LineParser {
    std::string_view text;
    std::size_t pos = 0;
    const ParseOptions& options;

    Term term() {
        skip_ws(text, pos);
        if (pos >= text.size()) throw Error("unexpected end of statement");
        const char c = text[pos];
        if (c == '<') {
            ++pos;
            return Term::iri(scan_iriref(text, pos));
        }
        if (c == '_') {
            if (pos + 1 >= text.size() || text[pos + 1] != ':')
                throw Error("expected ':' after '_'");
            pos += 2;
            return Term::blank(options.blank_prefix + scan_blank_label(text, pos));
        }
        if (c == '"') {
            ++pos;
            std::string lexical = scan_quoted(text, pos);
            if (pos < text.size() && text[pos] == '@') {
                ++pos;
                return Term::lang_literal(lexical, scan_lang_tag(text, pos));
            }
            if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '^') {
                pos += 2;
                if (pos >= text.size() || text[pos] != '<')
                    throw Error("expected '<' after '^^'");
                ++pos;
                return Term::literal(lexical, scan_iriref(text, pos));
            }
            return Term::literal(lexical);
        }
        throw Error(std::string("unexpected character '") + c + "'");
    }

    bool at_end() {
        skip_ws(text, pos);
        return pos >= text.size() || text[pos] == '#';
    }
};

// One statement line: subject predicate object [graph] '.' [# comment]
Quad parse_statement(std::string_view line, const ParseOptions& options) {
    LineParser p{line, 0, options};
    Term subject = p.term();
    if (subject.is_literal()) throw Error("subject must be an IRI or blank node");
    Term predicate = p.term();
    if (!predicate.is_iri()) throw Error("predicate must be an IRI");
    Term object = p.term();

    skip_ws(line, p.pos);
    Term graph = Term::iri(options.default_graph);
    if (p.pos < line.size() && line[p.pos] != '.') {
        Term g = p.term();
        if (!g.is_iri()) throw Error("graph term must be an IRI");
        graph = std::move(g);
        skip_ws(line, p.pos);
    }
    if (p.pos >= line.size() || line[p.pos] != '.') throw Error("expected '.' at end of statement");
    ++p.pos;
    if (!p.at_end()) throw Error("trailing content after '.'");
    return Quad(std::move(subject), std::move(predicate), std::move(object), std::move(graph));
}

std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                static constexpr char hex[] = "0123456789ABCDEF";
                out += "\\u00";
                out.push_back(hex[c >> 4]);
                out.push_back(hex[c & 0xF]);
            } else {
                out.push_back(static_cast<char>(c));
            }
        }
    }
    return out;
}

} // namespace

ParseOptions::ParseOptions() : default_graph(vocab::default_graph) {}

ParseResult parse_nquads(std::string_view text, const ParseOptions& options) {
    ParseResult result;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        if (start == text.size()) break;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;

        std::size_t cursor = 0;
        skip_ws(line, cursor);
        if (cursor >= line.size() || line[cursor] == '#') continue;

        try {
            result.quads.push_back(parse_statement(line.substr(cursor), options));
        } catch (const Error& e) {
            if (!options.lenient) throw ParseFailure(line_number, e.what());
            result.issues.push_back({line_number, e.what()});
        }
    }
    return result;
}

std::string serialize_term(const Term& t) {
    switch (t.kind()) {
    case TermKind::Iri:
        return "<" + t.value() + ">";
    case TermKind::Blank:
        return "_:" + t.value();
    case TermKind::Literal:
        break;
    }
    std::string out = "\"" + escape_literal(t.value()) + "\"";
    if (!t.language().empty()) {
        out += "@" + t.language();
    } else if (t.datatype() != xsd::string_type) {
        out += "^^<" + t.datatype() + ">";
    }
    return out;
}

std::string serialize_quad(const Quad& q) {
    return serialize_term(q.subject) + " " + serialize_term(q.predicate) + " " +
           serialize_term(q.object) + " " + serialize_term(q.graph) + " .\n";
}

std::string serialize_nquads(std::vector<Quad> quads) {
    std::vector<std::string> lines;
    lines.reserve(quads.size());
    for (const Quad& q : quads) {
        // Sort key (graph, subject, predicate, object) over serialized forms.
        lines.push_back(serialize_term(q.graph) + " " + serialize_term(q.subject) + " " +
                        serialize_term(q.predicate) + " " + serialize_term(q.object));
    }
    std::vector<std::size_t> order(quads.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&lines](std::size_t a, std::size_t b) { return lines[a] < lines[b]; });

    std::string out;
    for (std::size_t i : order) out += serialize_quad(quads[i]);
    return out;
}

std::string serialize_nquads(const QuadStore& store) { return serialize_nquads(store.all()); }

Term scan_term(std::string_view text, std::size_t& pos) {
    static const ParseOptions defaults;
    LineParser p{text, pos, defaults};
    Term t = p.term();
    pos = p.pos;
    return t;
}

} // namespace dq
