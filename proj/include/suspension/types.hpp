#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace susp {

struct SimpleType;
using TypePtr = std::shared_ptr<const SimpleType>;

struct SimpleType {
    struct Base {
        std::string name;
    };
    struct Arrow {
        TypePtr dom;
        TypePtr cod;
    };
    std::variant<Base, Arrow> node;
};

TypePtr tybase(std::string name);
TypePtr tyarrow(TypePtr dom, TypePtr cod);
bool type_eq(const TypePtr& a, const TypePtr& b);
std::string show_type(const TypePtr& t);

// `IDENT` or `TYPE -> TYPE`, right-associative, parentheses allowed.
TypePtr parse_type(const std::string& text);

// Innermost binder first; stack[k-1] types Index k.
using Context = std::vector<TypePtr>;
using Signature = std::map<std::string, TypePtr>;

// One declaration per line, `name : TYPE`; blank lines and `#` comments skipped.
Signature parse_signature(const std::string& text);

} // namespace susp
