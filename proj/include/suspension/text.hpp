#pragma once

// Concrete text grammars for every calculus; printers emit exactly what the
// parsers accept so print/parse is the identity on trees.

#include <string>

#include "suspension/alt.hpp"
#include "suspension/lambda.hpp"
#include "suspension/syntax.hpp"

namespace susp {

std::string print_named(const NamedPtr& t);
NamedPtr parse_named(const std::string& text);

std::string print_db(const DbPtr& t);
DbPtr parse_db(const std::string& text);

std::string print_susp(const TermPtr& t);
std::string print_susp_env(const EnvPtr& e);
std::string print_expr(const Expr& x);
TermPtr parse_susp(const std::string& text);
EnvPtr parse_susp_env(const std::string& text);

std::string print_ups(const ups::TermPtr& t);
ups::TermPtr parse_ups(const std::string& text);

std::string print_ls(const ls::TermPtr& t);
ls::TermPtr parse_ls(const std::string& text);

std::string print_sigma(const sig::TermPtr& t);
std::string print_sigma_sub(const sig::SubPtr& s);
sig::TermPtr parse_sigma(const std::string& text);

std::string print_position(const Position& pos); // "-" for the root
Position parse_position(const std::string& text);

} // namespace susp
