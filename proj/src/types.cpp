#include "suspension/types.hpp"

#include <cctype>
#include <sstream>

#include "suspension/errors.hpp"

namespace susp {

TypePtr tybase(std::string name) {
    return std::make_shared<SimpleType>(SimpleType{SimpleType::Base{std::move(name)}});
}

TypePtr tyarrow(TypePtr dom, TypePtr cod) {
    return std::make_shared<SimpleType>(
        SimpleType{SimpleType::Arrow{std::move(dom), std::move(cod)}});
}

bool type_eq(const TypePtr& a, const TypePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (auto* ba = std::get_if<SimpleType::Base>(&a->node)) {
        auto* bb = std::get_if<SimpleType::Base>(&b->node);
        return bb && ba->name == bb->name;
    }
    const auto& aa = std::get<SimpleType::Arrow>(a->node);
    auto* ab = std::get_if<SimpleType::Arrow>(&b->node);
    return ab && type_eq(aa.dom, ab->dom) && type_eq(aa.cod, ab->cod);
}

std::string show_type(const TypePtr& t) {
    if (auto* b = std::get_if<SimpleType::Base>(&t->node)) return b->name;
    const auto& a = std::get<SimpleType::Arrow>(t->node);
    std::string dom = show_type(a.dom);
    if (std::holds_alternative<SimpleType::Arrow>(a.dom->node))
        dom = "(" + dom + ")";
    return dom + " -> " + show_type(a.cod);
}

namespace {

struct TypeParser {
    const std::string& s;
    std::size_t i = 0;

    explicit TypeParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    [[noreturn]] void fail(const std::string& msg) {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < i && k < s.size(); ++k) {
            if (s[k] == '\n') { ++line; col = 1; } else ++col;
        }
        throw ParseError(msg, line, col);
    }

    TypePtr parse() {
        TypePtr t = parse_arrow();
        skip_ws();
        if (i != s.size()) fail("trailing input in type");
        return t;
    }

    TypePtr parse_arrow() {
        TypePtr lhs = parse_atom();
        skip_ws();
        if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
            i += 2;
            return tyarrow(lhs, parse_arrow());
        }
        return lhs;
    }

    TypePtr parse_atom() {
        skip_ws();
        if (i >= s.size()) fail("expected type");
        if (s[i] == '(') {
            ++i;
            TypePtr t = parse_arrow();
            skip_ws();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            return t;
        }
        if (!std::isalpha(static_cast<unsigned char>(s[i])) && s[i] != '_')
            fail("expected type identifier");
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
            ++i;
        return tybase(s.substr(start, i - start));
    }
};

} // namespace

TypePtr parse_type(const std::string& text) {
    TypeParser p(text);
    return p.parse();
}

Signature parse_signature(const std::string& text) {
    Signature sig;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("signature line missing ':'", lineno, 1);
        std::string name = line.substr(0, colon);
        std::size_t end = name.find_last_not_of(" \t");
        name = name.substr(first, end == std::string::npos ? 0 : end - first + 1);
        if (name.empty()) throw ParseError("signature line missing name", lineno, 1);
        sig[name] = parse_type(line.substr(colon + 1));
    }
    return sig;
}

} // namespace susp
