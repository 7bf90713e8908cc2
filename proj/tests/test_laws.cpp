#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "shortgames/laws.hpp"
#include "shortgames/notation.hpp"
#include "shortgames/store.hpp"

using namespace shortgames;

namespace {

SuiteConfig config(int tier, std::uint64_t samples = 500, std::uint64_t seed = 0) {
    SuiteConfig cfg;
    cfg.exhaustive_tier = tier;
    cfg.sample_triples = samples;
    cfg.seed = seed;
    return cfg;
}

void check_report_invariants(const VerificationReport& r) {
    CHECK(r.checks_run > 0);
    CHECK((r.failures == 0) == !r.first_counterexample.has_value());
}

nlohmann::json without_elapsed(const VerificationReport& r) {
    nlohmann::json j = to_json(r);
    j.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::neg_involution, Suite::zero_identity, Suite::commutativity,
                    Suite::associativity, Suite::birthday_additivity, Suite::tier_membership,
                    Suite::all})
        CHECK(suite_from_name(suite_name(s)) == s);
    CHECK(!suite_from_name("no-such-suite").has_value());
}

TEST_CASE("negation involution suite counts one check per game") {
    GameStore s;
    const VerificationReport t0 = check_neg_involution(s, config(0));
    CHECK(t0.checks_run == 1);
    CHECK(t0.failures == 0);

    const VerificationReport t1 = check_neg_involution(s, config(1));
    CHECK(t1.checks_run == 4);
    CHECK(t1.failures == 0);

    const VerificationReport t2 = check_neg_involution(s, config(2));
    CHECK(t2.checks_run == 256);
    CHECK(t2.failures == 0);
    check_report_invariants(t2);
}

TEST_CASE("zero identity suite passes exhaustively") {
    GameStore s;
    const VerificationReport r = check_zero_identity(s, config(2));
    CHECK(r.checks_run == 256);
    CHECK(r.failures == 0);
    check_report_invariants(r);
}

TEST_CASE("commutativity covers all ordered pairs") {
    GameStore s;
    const VerificationReport t1 = check_commutativity(s, config(1));
    CHECK(t1.checks_run == 16);
    CHECK(t1.failures == 0);

    const VerificationReport t2 = check_commutativity(s, config(2));
    CHECK(t2.checks_run == 65'536);
    CHECK(t2.failures == 0);
}

TEST_CASE("associativity runs 64 exhaustive triples plus the sampled ones") {
    GameStore s;
    const VerificationReport r = check_associativity(s, config(2, 750, 42));
    CHECK(r.checks_run == 64 + 750);
    CHECK(r.failures == 0);

    // The exhaustive part is capped at tier 1 even when the config says 2,
    // and shrinks with smaller configs.
    const VerificationReport t0 = check_associativity(s, config(0, 10));
    CHECK(t0.checks_run == 1 + 10);
    CHECK(t0.failures == 0);
}

TEST_CASE("birthday additivity holds over all ordered pairs") {
    GameStore s;
    const VerificationReport r = check_birthday_additivity(s, config(1));
    CHECK(r.checks_run == 16);
    CHECK(r.failures == 0);

    const VerificationReport full = check_birthday_additivity(s, config(2));
    CHECK(full.checks_run == 65'536);
    CHECK(full.failures == 0);
}

TEST_CASE("tier membership pits the formula against enumeration") {
    GameStore s;
    const VerificationReport r = check_tier_membership(s, config(2));
    CHECK(r.checks_run == 256);
    CHECK(r.failures == 0);
}

TEST_CASE("run_all returns six passing reports in a fixed order") {
    GameStore s;
    const auto reports = run_all(s, config(1, 200));
    REQUIRE(reports.size() == 6);
    const std::vector<std::string> names{"neg-involution", "zero-identity", "commutativity",
                                         "associativity", "birthday-additivity",
                                         "tier-membership"};
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].suite == names[i]);
        CHECK(reports[i].failures == 0);
        check_report_invariants(reports[i]);
    }
}

TEST_CASE("run_suites dispatches on the configured suite") {
    GameStore s;
    SuiteConfig cfg = config(1);
    cfg.suite = Suite::commutativity;
    const auto one = run_suites(s, cfg);
    REQUIRE(one.size() == 1);
    CHECK(one[0].suite == "commutativity");

    cfg.suite = Suite::all;
    CHECK(run_suites(s, cfg).size() == 6);
}

TEST_CASE("suites are deterministic given a config") {
    GameStore a, b;
    const SuiteConfig cfg = config(1, 300, 1234);
    const auto first = run_all(a, cfg);
    const auto second = run_all(b, cfg);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(without_elapsed(first[i]) == without_elapsed(second[i]));
}

TEST_CASE("reports echo their configuration") {
    GameStore s;
    const VerificationReport r = check_associativity(s, config(2, 123, 999));
    CHECK(r.config.suite == Suite::associativity);
    CHECK(r.config.exhaustive_tier == 2);
    CHECK(r.config.sample_triples == 123);
    CHECK(r.config.seed == 999);

    const nlohmann::json j = to_json(r);
    CHECK(j["suite"] == "associativity");
    CHECK(j["checks_run"] == 64 + 123);
    CHECK(j["failures"] == 0);
    CHECK(j.contains("elapsed_ms"));
    CHECK(!j.contains("counterexample"));
    CHECK(j["config"]["suite"] == "associativity");
    CHECK(j["config"]["exhaustive_tier"] == 2);
    CHECK(j["config"]["sample_triples"] == 123);
    CHECK(j["config"]["seed"] == 999);
}

TEST_CASE("a broken sum is caught, reported and reproducible") {
    GameStore s;
    s.set_sum_fault_injection(true);

    const VerificationReport zero_id = check_zero_identity(s, config(2));
    const VerificationReport comm = check_commutativity(s, config(2));
    CHECK(zero_id.failures > 0);
    CHECK(comm.failures > 0);
    check_report_invariants(zero_id);
    check_report_invariants(comm);

    REQUIRE(zero_id.first_counterexample.has_value());
    const Counterexample& cex = *zero_id.first_counterexample;
    REQUIRE(cex.inputs.size() == 1);
    CHECK(cex.lhs != cex.rhs);  // 0+g lost options, g+0 did not

    // The counterexample plus the config echo reproduce the failure.
    GameStore fresh;
    fresh.set_sum_fault_injection(true);
    const GameId g = evaluate(fresh, parse(cex.inputs[0]));
    CHECK(fresh.sum(fresh.zero(), g) != g);
    CHECK(print_game(fresh, fresh.sum(fresh.zero(), g)) == cex.lhs);
    CHECK(print_game(fresh, fresh.sum(g, fresh.zero())) == cex.rhs);

    const nlohmann::json j = to_json(zero_id);
    REQUIRE(j.contains("counterexample"));
    CHECK(j["counterexample"]["inputs"].size() == 1);

    const std::string text = render_text(zero_id);
    CHECK(text.find("zero-identity") != std::string::npos);
    CHECK(text.find("first counterexample") != std::string::npos);
}

TEST_CASE("sharded runs report exactly what serial runs report") {
    GameStore serial_store;
    SuiteConfig serial_cfg = config(2, 400, 77);
    const auto serial = run_all(serial_store, serial_cfg);

    GameStore parallel_store;
    SuiteConfig parallel_cfg = serial_cfg;
    parallel_cfg.workers = 4;
    const auto parallel = run_all(parallel_store, parallel_cfg);

    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].checks_run == parallel[i].checks_run);
        CHECK(serial[i].failures == parallel[i].failures);
    }

    // Same story when the sum is broken: shards inherit the fault and find
    // the same first counterexample.
    GameStore faulted_serial;
    faulted_serial.set_sum_fault_injection(true);
    const VerificationReport want = check_commutativity(faulted_serial, serial_cfg);

    GameStore faulted_parallel;
    faulted_parallel.set_sum_fault_injection(true);
    const VerificationReport got = check_commutativity(faulted_parallel, parallel_cfg);

    CHECK(want.failures > 0);
    CHECK(got.failures == want.failures);
    REQUIRE(want.first_counterexample.has_value());
    REQUIRE(got.first_counterexample.has_value());
    CHECK(got.first_counterexample->inputs == want.first_counterexample->inputs);
    CHECK(got.first_counterexample->lhs == want.first_counterexample->lhs);
    CHECK(got.first_counterexample->rhs == want.first_counterexample->rhs);
}

TEST_CASE("render_text is one line per passing suite") {
    GameStore s;
    const std::string text = render_text(check_neg_involution(s, config(1)));
    CHECK(text.find("neg-involution") != std::string::npos);
    CHECK(text.find("4 checks") != std::string::npos);
    CHECK(text.find("0 failures") != std::string::npos);
    CHECK(text.find('\n') == std::string::npos);
}
