#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "suspension/errors.hpp"
#include "suspension/measures.hpp"
#include "suspension/rewrite.hpp"
#include "suspension/text.hpp"
#include "suspension/typing.hpp"

namespace {

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

void emit_trace(const std::vector<susp::TraceStep>& trace) {
    for (const auto& step : trace) {
        std::cout << step.step_index << '\t' << susp::rule_name(step.rule) << '\t'
                  << susp::print_position(step.pos) << '\t'
                  << susp::print_expr(step.after) << '\n';
    }
}

int cmd_parse(const std::string& calculus, const std::string& text) {
    if (calculus == "susp") {
        std::cout << susp::print_susp(susp::parse_susp(text)) << '\n';
    } else if (calculus == "db") {
        std::cout << susp::print_db(susp::parse_db(text)) << '\n';
    } else if (calculus == "named") {
        std::cout << susp::print_named(susp::parse_named(text)) << '\n';
    } else if (calculus == "sigma") {
        std::cout << susp::print_sigma(susp::parse_sigma(text)) << '\n';
    } else if (calculus == "upsilon") {
        std::cout << susp::print_ups(susp::parse_ups(text)) << '\n';
    } else { // s, se
        std::cout << susp::print_ls(susp::parse_ls(text)) << '\n';
    }
    return 0;
}

int cmd_normalize(const std::string& calculus, const std::string& strategy,
                  std::size_t max_steps, bool trace, bool logical,
                  bool subst_only, const std::string& text) {
    using namespace susp;
    MetaMode mode = logical ? MetaMode::Logical : MetaMode::Graftable;
    if (calculus == "susp") {
        Expr x{parse_susp(text)};
        if (strategy == "rm") {
            std::vector<TraceStep> steps;
            Expr result = rm_normalize_traced(x, trace ? &steps : nullptr,
                                              rm_rules(), mode);
            if (trace) emit_trace(steps);
            std::cout << print_expr(result) << '\n';
            return 0;
        }
        NormResult r = strategy == "full" ? full_normalize(x, max_steps, mode)
                                          : head_normalize(x, max_steps);
        if (trace) emit_trace(r.trace);
        std::cout << print_expr(r.expr) << '\n';
        if (r.exhausted) {
            std::cerr << "budget exhausted after " << r.beta_steps
                      << " beta_s steps\n";
            return 3;
        }
        return 0;
    }
    if (calculus == "db") {
        DbPtr t = parse_db(text);
        DbNormResult r = strategy == "head" ? db_head_normalize(t, max_steps)
                                            : beta_normalize(t, max_steps);
        std::cout << print_db(r.term) << '\n';
        if (r.exhausted) {
            std::cerr << "budget exhausted after " << r.steps << " beta steps\n";
            return 3;
        }
        return 0;
    }
    if (calculus == "sigma") {
        sig::NormResult r =
            sig::normalize(sig::Expr{parse_sigma(text)}, max_steps, !subst_only);
        std::cout << print_sigma(std::get<sig::TermPtr>(r.expr)) << '\n';
        if (r.exhausted) {
            std::cerr << "budget exhausted after " << r.steps << " steps\n";
            return 3;
        }
        return 0;
    }
    if (calculus == "upsilon") {
        ups::NormResult r =
            ups::normalize(ups::Expr{parse_ups(text)}, max_steps, !subst_only);
        std::cout << print_ups(std::get<ups::TermPtr>(r.expr)) << '\n';
        if (r.exhausted) {
            std::cerr << "budget exhausted after " << r.steps << " steps\n";
            return 3;
        }
        return 0;
    }
    ls::RuleSet rs = calculus == "se"
                         ? (subst_only ? ls::RuleSet::SeOnly : ls::RuleSet::SeFull)
                         : (subst_only ? ls::RuleSet::SOnly : ls::RuleSet::Full);
    ls::NormResult r = ls::normalize(parse_ls(text), max_steps, rs);
    std::cout << print_ls(r.term) << '\n';
    if (r.exhausted) {
        std::cerr << "budget exhausted after " << r.steps << " steps\n";
        return 3;
    }
    return 0;
}

int cmd_translate(const std::string& from, const std::string& to,
                  const std::string& text) {
    using namespace susp;
    if (from == "named" && to == "db") {
        NamedPtr t = parse_named(text);
        std::vector<std::string> free_order(free_vars(t).begin(),
                                            free_vars(t).end());
        std::cout << print_db(to_debruijn(t, free_order)) << '\n';
        return 0;
    }
    if (from == "db" && to == "named") {
        std::cout << print_named(from_debruijn(parse_db(text), {})) << '\n';
        return 0;
    }
    if (from == "upsilon" && to == "susp") {
        std::cout << print_susp(ups_to_susp(parse_ups(text))) << '\n';
        return 0;
    }
    if ((from == "s" || from == "se") && to == "susp") {
        std::cout << print_susp(ls_to_susp(parse_ls(text))) << '\n';
        return 0;
    }
    if (from == "sigma" && to == "susp") {
        std::cout << print_susp(sigma_to_susp(parse_sigma(text))) << '\n';
        return 0;
    }
    if (from == "susp" && to == "sigma") {
        std::cout << print_sigma(susp_to_sigma(parse_susp(text))) << '\n';
        return 0;
    }
    std::cerr << "unsupported translation " << from << " -> " << to << '\n';
    return 1;
}

std::vector<std::string> split_commas(const std::string& spec) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) {
            if (start < spec.size()) out.push_back(spec.substr(start));
            break;
        }
        out.push_back(spec.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

int cmd_typecheck(const std::string& calculus, const std::string& sig_path,
                  const std::vector<std::string>& context_types,
                  const std::string& text) {
    using namespace susp;
    Signature sig;
    if (!sig_path.empty()) {
        std::ifstream in(sig_path);
        if (!in) {
            std::cerr << "cannot read signature file " << sig_path << '\n';
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        sig = parse_signature(buf.str());
    }
    Context ctx;
    for (const std::string& ty : context_types) ctx.push_back(parse_type(ty));
    TypePtr result = calculus == "db"
                         ? typecheck_db(ctx, sig, parse_db(text))
                         : typecheck_susp(ctx, sig, parse_susp(text));
    std::cout << show_type(result) << '\n';
    return 0;
}

int cmd_measure(const std::string& text) {
    using namespace susp;
    Expr x{parse_susp(text)};
    std::cout << "nodes: " << expr_nodes(x) << '\n';
    std::cout << "mu: " << mu(x) << '\n';
    for (std::uint64_t i = 0; i <= 8; ++i)
        std::cout << "eta_" << i << ": " << eta(i, x) << '\n';
    std::cout << "essence: " << show_fo(essence(x)) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for the simplified suspension calculus"};
    app.require_subcommand(1);

    std::string calculus = "susp";
    std::string strategy = "full";
    std::string from, to, sig_path, input, context_spec;
    std::size_t max_steps = 10000;
    bool trace = false, logical = false, subst_only = false;

    auto* parse = app.add_subcommand("parse", "parse and reprint an expression");
    parse->add_option("--calculus", calculus)
        ->check(CLI::IsMember({"susp", "db", "named", "sigma", "upsilon", "s", "se"}));
    parse->add_option("input", input);

    auto* normalize = app.add_subcommand("normalize", "rewrite to a normal form");
    normalize->add_option("--calculus", calculus)
        ->check(CLI::IsMember({"susp", "db", "sigma", "upsilon", "s", "se"}));
    normalize->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"rm", "full", "head", "ghead"}));
    normalize->add_option("--max-steps", max_steps);
    normalize->add_flag("--trace", trace);
    normalize->add_flag("--logical-meta", logical);
    normalize->add_flag("--subst-only", subst_only);
    normalize->add_option("input", input);

    auto* translate = app.add_subcommand("translate", "translate between calculi");
    translate->add_option("--from", from)->required();
    translate->add_option("--to", to)->required();
    translate->add_option("input", input);

    auto* typecheck = app.add_subcommand("typecheck", "infer a simple type");
    typecheck->add_option("--calculus", calculus)
        ->check(CLI::IsMember({"susp", "db"}));
    typecheck->add_option("--sig", sig_path);
    typecheck->add_option("--context", context_spec,
                          "comma-separated types, innermost binder first");
    typecheck->add_option("input", input);

    auto* measure = app.add_subcommand("measure", "report termination measures");
    measure->add_option("input", input);

    CLI11_PARSE(app, argc, argv);

    try {
        std::string text = read_input(input);
        if (parse->parsed()) return cmd_parse(calculus, text);
        if (normalize->parsed())
            return cmd_normalize(calculus, strategy, max_steps, trace, logical,
                                 subst_only, text);
        if (translate->parsed()) return cmd_translate(from, to, text);
        if (typecheck->parsed())
            return cmd_typecheck(calculus, sig_path, split_commas(context_spec),
                                 text);
        if (measure->parsed()) return cmd_measure(text);
    } catch (const susp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const susp::Error& e) {
        if (typecheck->parsed()) {
            std::cerr << "type error: " << e.what() << '\n';
            return 4;
        }
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
