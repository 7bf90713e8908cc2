// Acceptance suite: end-to-end checks of the library's contract, one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <vector>

#include "shortgames/shortgames.hpp"

using namespace shortgames;

namespace {

int failed = 0;

void criterion(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failed;
}

bool golden(GameStore& s, const std::string& expr, const std::string& want, std::string& log) {
    const std::string got = print_game(s, evaluate(s, parse(expr)));
    if (got == want) return true;
    log += " " + expr + " printed " + got + " (want " + want + ");";
    return false;
}

void worked_example_goldens() {
    GameStore s;
    std::string log;
    bool ok = true;
    ok &= golden(s, "0+0", "0", log);
    ok &= golden(s, "1+0", "1", log);
    ok &= golden(s, "1+1", "{1|}", log);
    ok &= golden(s, "1+*", "{1,*|1}", log);
    ok &= golden(s, "*+1", "{1,*|1}", log);
    ok &= golden(s, "*+-1", "{-1|-1,*}", log);
    if (evaluate(s, parse("(1+*)+-1")) != evaluate(s, parse("1+(*+-1)"))) {
        ok = false;
        log += " (1+*)+-1 and 1+(*+-1) differ;";
    }
    criterion(1, "worked-example goldens are bit-exact", ok, log);
}

void tier_counts() {
    GameStore s;
    const std::size_t n0 = enumerate_tier(s, 0).members.size();
    const std::size_t n1 = enumerate_tier(s, 1).members.size();
    const std::size_t n2 = enumerate_tier(s, 2).members.size();
    criterion(2, "tier sizes are 1 / 4 / 256", n0 == 1 && n1 == 4 && n2 == 256,
              std::to_string(n0) + " / " + std::to_string(n1) + " / " + std::to_string(n2));
}

void law_suites() {
    GameStore s;
    SuiteConfig cfg;  // tier 2, 10,000 sampled triples, seed 0
    const auto start = std::chrono::steady_clock::now();
    const std::vector<VerificationReport> reports = run_all(s, cfg);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::unordered_map<std::string, std::uint64_t> expected{
        {"neg-involution", 256},         {"zero-identity", 256},
        {"commutativity", 65'536},       {"associativity", 64 + 10'000},
        {"birthday-additivity", 65'536}, {"tier-membership", 256},
    };
    bool ok = reports.size() == expected.size() && seconds < 60.0;
    std::string log;
    for (const VerificationReport& r : reports) {
        const auto want = expected.find(r.suite);
        if (want == expected.end() || r.checks_run != want->second || r.failures != 0) {
            ok = false;
            log += " " + r.suite + ": " + std::to_string(r.checks_run) + " checks, " +
                   std::to_string(r.failures) + " failures;";
        }
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "all six suites clean in %.2f s", seconds);
    criterion(3, "law suites pass exhaustively at full scale", ok, ok ? timing : log);
}

void birthday_oracle() {
    GameStore s;
    std::unordered_map<std::uint64_t, std::uint64_t> least;
    for (int n = 0; n <= 2; ++n)
        for (const GameId g : enumerate_tier(s, n).members) least.try_emplace(g.value, n);

    std::size_t checked = 0, agree = 0;
    for (const GameId g : enumerate_tier(s, 2).members) {
        ++checked;
        if (s.birthday(g) == least.at(g.value)) ++agree;
    }
    criterion(4, "recursive birthday equals least-tier membership", checked == 256 && agree == checked,
              std::to_string(agree) + "/" + std::to_string(checked) + " agree");
}

void notation_round_trip() {
    GameStore s;
    std::size_t checked = 0, good = 0;
    auto round_trips = [&](GameId g) {
        ++checked;
        if (evaluate(s, parse(print_game(s, g, true))) == g &&
            evaluate(s, parse(print_game(s, g, false))) == g)
            ++good;
    };
    for (const GameId g : enumerate_tier(s, 2).members) round_trips(g);
    for (const GameId g : sample_games(s, {.max_birthday = 3, .max_options_per_side = 3,
                                           .count = 1'000, .seed = 0x5eed}))
        round_trips(g);
    criterion(5, "parse-evaluate-print is the identity on 256 + 1000 games",
              checked == 1'256 && good == checked,
              std::to_string(good) + "/" + std::to_string(checked) + " round-trip");
}

void mutation_sensitivity() {
    GameStore s;
    s.set_sum_fault_injection(true);
    SuiteConfig cfg;
    const VerificationReport zero_id = check_zero_identity(s, cfg);
    const VerificationReport comm = check_commutativity(s, cfg);
    const std::uint64_t caught = zero_id.failures + comm.failures;
    criterion(6, "suites detect a sum with a dropped branch", caught > 0,
              "zero-identity failures=" + std::to_string(zero_id.failures) +
                  ", commutativity failures=" + std::to_string(comm.failures));
}

}  // namespace

int main() {
    worked_example_goldens();
    tier_counts();
    law_suites();
    birthday_oracle();
    notation_round_trip();
    mutation_sensitivity();
    if (failed) std::printf("%d criterion(s) FAILED\n", failed);
    return failed ? 1 : 0;
}
