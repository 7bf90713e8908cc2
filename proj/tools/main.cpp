// Command line front end: evaluate expressions, compare games, enumerate
// tiers and run the law-verification suites. Every invocation uses one
// fresh store; handles are store-local and runs are cheap.
//
// Exit codes: 0 success (and "equal" for eq, "no failures" for verify),
// 1 for eq-unequal or verification failures, 2 for usage and syntax errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shortgames/shortgames.hpp"

namespace {

using namespace shortgames;

int run_eval(const std::string& text, bool fold, bool as_json) {
    GameStore store;
    const GameId g = evaluate(store, parse(text));
    const std::string printed = print_game(store, g, fold);
    const std::uint64_t b = store.birthday(g);
    if (as_json) {
        std::cout << nlohmann::json{{"game", printed}, {"birthday", b}}.dump() << "\n";
    } else {
        std::cout << printed << "  birthday=" << b << "\n";
    }
    return 0;
}

int run_eq(const std::string& lhs, const std::string& rhs, bool as_json) {
    GameStore store;
    const GameId a = evaluate(store, parse(lhs));
    const GameId b = evaluate(store, parse(rhs));
    const bool equal = store.set_equal(a, b);
    if (as_json) {
        std::cout << nlohmann::json{{"equal_as_sets", equal}}.dump() << "\n";
    } else {
        std::cout << "equal-as-sets: " << (equal ? "true" : "false") << "\n";
    }
    return equal ? 0 : 1;
}

int run_birthday(const std::string& text, bool as_json) {
    GameStore store;
    const std::uint64_t b = store.birthday(evaluate(store, parse(text)));
    if (as_json) {
        std::cout << nlohmann::json{{"birthday", b}}.dump() << "\n";
    } else {
        std::cout << b << "\n";
    }
    return 0;
}

int run_enumerate(int n, bool as_json) {
    GameStore store;
    const Tier tier = enumerate_tier(store, n);
    if (as_json) {
        std::cout << games_to_json(store, tier.members).dump() << "\n";
    } else {
        for (const GameId g : tier.members) std::cout << print_game(store, g) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int tier, std::uint64_t samples, std::uint64_t seed,
               bool as_json, bool parallel) {
    const auto parsed = suite_from_name(suite);
    if (!parsed) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    SuiteConfig cfg;
    cfg.suite = *parsed;
    cfg.exhaustive_tier = tier;
    cfg.sample_triples = samples;
    cfg.seed = seed;
    if (parallel) cfg.workers = std::max(1u, std::thread::hardware_concurrency());

    GameStore store;
    const std::vector<VerificationReport> reports = run_suites(store, cfg);

    std::uint64_t failures = 0;
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const VerificationReport& r : reports) {
            arr.push_back(to_json(r));
            failures += r.failures;
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const VerificationReport& r : reports) {
            std::cout << render_text(r) << "\n";
            failures += r.failures;
        }
        std::cout << (failures == 0 ? "all suites passed" : "FAILURES detected") << "\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Short combinatorial games under set equality"};
    app.require_subcommand(1);

    std::string eval_expr;
    bool eval_no_fold = false, eval_json = false;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an expression; print its canonical form and birthday");
    eval_cmd->add_option("expr", eval_expr, "game expression, e.g. \"1+*\"")->required();
    eval_cmd->add_flag("--no-fold", eval_no_fold, "print fully expanded braces instead of 0/1/-1/*");
    eval_cmd->add_flag("--json", eval_json, "JSON output");

    std::string eq_lhs, eq_rhs;
    bool eq_json = false;
    CLI::App* eq_cmd = app.add_subcommand("eq", "Decide set equality of two expressions");
    eq_cmd->add_option("lhs", eq_lhs, "left expression")->required();
    eq_cmd->add_option("rhs", eq_rhs, "right expression")->required();
    eq_cmd->add_flag("--json", eq_json, "JSON output");

    std::string birthday_expr;
    bool birthday_json = false;
    CLI::App* birthday_cmd = app.add_subcommand("birthday", "Print the formal birthday of an expression");
    birthday_cmd->add_option("expr", birthday_expr, "game expression")->required();
    birthday_cmd->add_flag("--json", birthday_json, "JSON output");

    int enum_n = 0;
    bool enum_json = false;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "List every game of birthday <= n (n <= 2)");
    enum_cmd->add_option("n", enum_n, "tier index")->required();
    enum_cmd->add_flag("--json", enum_json, "JSON array output");

    std::string verify_suite = "all";
    int verify_tier = 2;
    std::uint64_t verify_samples = 10'000;
    std::uint64_t verify_seed = 0;
    bool verify_json = false, verify_parallel = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the law-verification suites");
    verify_cmd->add_option("--suite", verify_suite,
                           "neg-involution|zero-identity|commutativity|associativity|"
                           "birthday-additivity|tier-membership|all");
    verify_cmd->add_option("--tier", verify_tier, "exhaustive tier (0..2, default 2)");
    verify_cmd->add_option("--samples", verify_samples, "sampled associativity triples (default 10000)");
    verify_cmd->add_option("--seed", verify_seed, "seed for sampled triples");
    verify_cmd->add_flag("--json", verify_json, "JSON array of reports");
    verify_cmd->add_flag("--parallel", verify_parallel, "shard checks across worker stores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_expr, !eval_no_fold, eval_json);
        if (eq_cmd->parsed()) return run_eq(eq_lhs, eq_rhs, eq_json);
        if (birthday_cmd->parsed()) return run_birthday(birthday_expr, birthday_json);
        if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_json);
        if (verify_cmd->parsed())
            return run_verify(verify_suite, verify_tier, verify_samples, verify_seed, verify_json,
                              verify_parallel);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
