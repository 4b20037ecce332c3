// Command line front end: expression parsing, normal ordering, oracle
// products, relation listings, and the verification suites.

#include "reducta/format.hpp"
#include "reducta/parser.hpp"
#include "reducta/verify.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace reducta;

namespace {

struct OutputMode {
    bool latex = false;
    bool json = false;
};

void add_output_flags(CLI::App* cmd, OutputMode& mode) {
    cmd->add_flag("--latex", mode.latex, "LaTeX output");
    cmd->add_flag("--json", mode.json, "structured JSON output");
}

void print_element(const ZElement& x, const OutputMode& mode, bool hat = false) {
    if (mode.json)
        std::cout << json_zelement(x, hat) << "\n";
    else if (mode.latex)
        std::cout << latex_zelement(x, hat) << "\n";
    else
        std::cout << print_zelement(x) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reducta: the diagonal reduction algebra of gl_n, exactly"};
    app.require_subcommand(1);

    // --- normalize ---------------------------------------------------------
    auto* cmd_norm = app.add_subcommand("normalize", "rewrite an expression into ordered form");
    int norm_n = 2;
    std::string norm_order = "not4", norm_strategy = "leftmost", norm_expr;
    OutputMode norm_mode;
    cmd_norm->add_option("--n", norm_n, "rank of gl_n")->required();
    cmd_norm->add_option("--order", norm_order, "generator order: not4 | not4p")
        ->check(CLI::IsMember({"not4", "not4p"}));
    cmd_norm->add_option("--strategy", norm_strategy, "rewriting strategy")
        ->check(CLI::IsMember({"leftmost", "rightmost"}));
    add_output_flags(cmd_norm, norm_mode);
    cmd_norm->add_option("expr", norm_expr, "expression")->required();

    // --- multiply ----------------------------------------------------------
    auto* cmd_mult = app.add_subcommand("multiply", "star product of two expressions");
    int mult_n = 2;
    std::string mult_engine = "oracle", mult_a, mult_b;
    OutputMode mult_mode;
    cmd_mult->add_option("--n", mult_n, "rank of gl_n")->required();
    cmd_mult->add_option("--engine", mult_engine, "oracle | rewrite")
        ->check(CLI::IsMember({"oracle", "rewrite"}));
    add_output_flags(cmd_mult, mult_mode);
    cmd_mult->add_option("a", mult_a, "left factor")->required();
    cmd_mult->add_option("b", mult_b, "right factor")->required();

    // --- relations ---------------------------------------------------------
    auto* cmd_rel = app.add_subcommand("relations", "print the defining relation system");
    int rel_n = 2;
    std::string rel_family;
    OutputMode rel_mode;
    cmd_rel->add_option("--n", rel_n, "rank of gl_n")->required();
    cmd_rel->add_option("--family", rel_family, "1 | 2 | 3a | 3b | 4a | 4b")
        ->check(CLI::IsMember({"1", "2", "3a", "3b", "4a", "4b"}));
    add_output_flags(cmd_rel, rel_mode);

    // --- rules -------------------------------------------------------------
    auto* cmd_rules = app.add_subcommand("rules", "derive the ordering rules from the oracle");
    int rules_n = 2;
    bool rules_reversed = false;
    std::string rules_order = "not4";
    OutputMode rules_mode;
    cmd_rules->add_option("--n", rules_n, "rank of gl_n")->required();
    cmd_rules->add_flag("--reversed", rules_reversed, "rules for the reversed order");
    cmd_rules->add_option("--order", rules_order, "generator order: not4 | not4p")
        ->check(CLI::IsMember({"not4", "not4p"}));
    add_output_flags(cmd_rules, rules_mode);

    // --- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    int verify_n = 2, verify_jobs = 1;
    uint64_t verify_seed = 1;
    std::string suite;
    cmd_verify->add_option("--n", verify_n, "rank of gl_n")->required();
    cmd_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"relations", "pbw", "zhelobenko", "central", "cauchy", "stability",
                               "weight-blocks", "rules"}));
    cmd_verify->add_option("--seed", verify_seed, "random seed");
    cmd_verify->add_option("--jobs", verify_jobs, "parallel jobs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_norm) {
            ZElement x = parse_zelement(norm_expr, norm_n);
            Oracle oracle(norm_n);
            GeneratorBasis basis{.n = norm_n,
                                 .order = norm_order == "not4p" ? GenOrder::not4p : GenOrder::not4};
            RuleSet rules = derive_ordering_rules(oracle, basis);
            RewriteStrategy strat = norm_strategy == "rightmost" ? RewriteStrategy::rightmost
                                                                 : RewriteStrategy::leftmost;
            print_element(normal_order(x, rules, strat), norm_mode);
            return 0;
        }
        if (*cmd_mult) {
            ZElement a = parse_zelement(mult_a, mult_n);
            ZElement b = parse_zelement(mult_b, mult_n);
            Oracle oracle(mult_n);
            RuleSet rules = derive_ordering_rules(oracle, GeneratorBasis{.n = mult_n});
            ZElement result(mult_n);
            if (mult_engine == "rewrite") {
                result = star_rewrite(a, b, rules);
            } else {
                ZElement tilde = oracle.mult(oracle.eval_free(a), oracle.eval_free(b));
                result = tilde_to_star(tilde, oracle, rules);
            }
            print_element(result, mult_mode);
            return 0;
        }
        if (*cmd_rel) {
            auto rels = rel_family.empty()
                            ? build_relations(rel_n)
                            : build_relations(rel_n, Relation::family_from_code(rel_family));
            for (const auto& r : rels) {
                if (rel_mode.json)
                    std::cout << json_relation(r) << "\n";
                else if (rel_mode.latex)
                    std::cout << latex_relation(r) << "\n";
                else
                    std::cout << text_relation(r) << "\n";
            }
            return 0;
        }
        if (*cmd_rules) {
            Oracle oracle(rules_n);
            GeneratorBasis basis{.n = rules_n,
                                 .order = rules_order == "not4p" ? GenOrder::not4p : GenOrder::not4,
                                 .reversed = rules_reversed};
            RuleSet rules = derive_ordering_rules(oracle, basis);
            for (const auto& [lhs, rule] : rules.rules()) {
                if (rules_mode.json)
                    std::cout << json_rule(rule) << "\n";
                else
                    std::cout << text_rule(rule) << "\n";
            }
            return 0;
        }
        if (*cmd_verify) {
            SuiteResult res;
            if (suite == "relations") res = verify_relations(verify_n, verify_jobs);
            if (suite == "pbw") res = verify_pbw(verify_n, verify_seed, verify_jobs);
            if (suite == "zhelobenko") res = verify_zhelobenko(verify_n);
            if (suite == "central") res = verify_central(verify_n);
            if (suite == "cauchy") res = verify_cauchy(verify_n, verify_seed);
            if (suite == "stability") res = verify_stability(verify_n);
            if (suite == "weight-blocks") res = verify_weight_blocks(verify_n, verify_jobs);
            if (suite == "rules") res = verify_rules(verify_n, verify_seed);
            std::cout << res.summary << "\n";
            for (const auto& f : res.failures) std::cout << "  " << f << "\n";
            return res.ok ? 0 : 1;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
