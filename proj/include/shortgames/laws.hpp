// Executable verification of the algebraic laws of short games under set
// equality: negation is an involution, 0 is a two-sided identity, sum is
// commutative and associative, birthdays are additive, and the recursive
// birthday formula agrees with least-tier membership.
//
// Suites walk an exhaustive tier (associativity adds seeded random triples
// from tier 2), count every failure without aborting, and keep the first
// counterexample, printed in brace notation with constant folding. A report
// echoes its config, so any counterexample can be reproduced exactly.
//
// With workers > 1 a suite shards its index range across threads, one fresh
// store per worker (handles are store-local). Random draws are indexed by
// check number, member sequences are store-independent and the merge keeps
// the lowest-index counterexample, so a sharded run reports exactly what a
// serial run would.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shortgames/notation.hpp"
#include "shortgames/rng.hpp"
#include "shortgames/store.hpp"
#include "shortgames/universe.hpp"

namespace shortgames {

enum class Suite {
    neg_involution,
    zero_identity,
    commutativity,
    associativity,
    birthday_additivity,
    tier_membership,
    all,
};

inline std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::neg_involution: return "neg-involution";
        case Suite::zero_identity: return "zero-identity";
        case Suite::commutativity: return "commutativity";
        case Suite::associativity: return "associativity";
        case Suite::birthday_additivity: return "birthday-additivity";
        case Suite::tier_membership: return "tier-membership";
        default: return "all";
    }
}

inline std::optional<Suite> suite_from_name(std::string_view name) {
    for (Suite s : {Suite::neg_involution, Suite::zero_identity, Suite::commutativity,
                    Suite::associativity, Suite::birthday_additivity, Suite::tier_membership,
                    Suite::all})
        if (name == suite_name(s)) return s;
    return std::nullopt;
}

struct SuiteConfig {
    Suite suite = Suite::all;
    int exhaustive_tier = 2;             // associativity caps its exhaustive part at tier 1
    std::uint64_t sample_triples = 10'000;  // associativity only
    std::uint64_t seed = 0;
    unsigned workers = 1;                // >1 shards across per-worker stores
};

struct Counterexample {
    std::vector<std::string> inputs;  // printed notation of the inputs
    std::string lhs;                  // the two computed sides
    std::string rhs;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t checks_run = 0;
    std::uint64_t failures = 0;
    std::optional<Counterexample> first_counterexample;
    double elapsed_ms = 0.0;
    SuiteConfig config;
};

namespace detail {

struct SliceOutcome {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::uint64_t first_index = 0;
    std::optional<Counterexample> first;

    void fail(std::uint64_t index, Counterexample cex) {
        ++failures;
        if (!first) {
            first = std::move(cex);
            first_index = index;
        }
    }
};

// Runs fn(store, lo, hi) over [0, total), either on the caller's store or
// sharded over fresh per-thread stores.
template <typename SliceFn>
SliceOutcome run_sliced(GameStore& store, std::uint64_t total, unsigned workers, SliceFn&& fn) {
    if (workers <= 1 || total < 2 * workers) return fn(store, 0, total);

    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    std::vector<SliceOutcome> parts(n);
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        const std::uint64_t lo = total * i / n;
        const std::uint64_t hi = total * (i + 1) / n;
        threads.emplace_back([&, i, lo, hi] {
            try {
                GameStore local;
                local.set_sum_fault_injection(store.sum_fault_injection());
                parts[i] = fn(local, lo, hi);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    SliceOutcome merged;
    for (const SliceOutcome& part : parts) {
        merged.checks += part.checks;
        merged.failures += part.failures;
        if (part.first && (!merged.first || part.first_index < merged.first_index)) {
            merged.first = part.first;
            merged.first_index = part.first_index;
        }
    }
    return merged;
}

template <typename SliceFn>
VerificationReport run_suite(GameStore& store, const SuiteConfig& cfg, Suite which,
                             std::uint64_t total, SliceFn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    SliceOutcome outcome = run_sliced(store, total, cfg.workers, std::forward<SliceFn>(fn));
    const auto stop = std::chrono::steady_clock::now();

    VerificationReport report;
    report.suite = suite_name(which);
    report.checks_run = outcome.checks;
    report.failures = outcome.failures;
    report.first_counterexample = std::move(outcome.first);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.config = cfg;
    report.config.suite = which;
    return report;
}

}  // namespace detail

// -(-g) == g over the exhaustive tier.
inline VerificationReport check_neg_involution(GameStore& store, const SuiteConfig& cfg) {
    const std::uint64_t total = tier_size(cfg.exhaustive_tier);
    auto slice = [&cfg](GameStore& s, std::uint64_t lo, std::uint64_t hi) {
        const Tier tier = enumerate_tier(s, cfg.exhaustive_tier);
        detail::SliceOutcome out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const GameId g = tier.members[i];
            const GameId back = s.negate(s.negate(g));
            ++out.checks;
            if (back != g)
                out.fail(i, {{print_game(s, g)}, print_game(s, back), print_game(s, g)});
        }
        return out;
    };
    return detail::run_suite(store, cfg, Suite::neg_involution, total, slice);
}

// 0+g == g == g+0 over the exhaustive tier; one check per game.
inline VerificationReport check_zero_identity(GameStore& store, const SuiteConfig& cfg) {
    const std::uint64_t total = tier_size(cfg.exhaustive_tier);
    auto slice = [&cfg](GameStore& s, std::uint64_t lo, std::uint64_t hi) {
        const Tier tier = enumerate_tier(s, cfg.exhaustive_tier);
        detail::SliceOutcome out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const GameId g = tier.members[i];
            const GameId left = s.sum(s.zero(), g);
            const GameId right = s.sum(g, s.zero());
            ++out.checks;
            if (left != g || right != g)
                out.fail(i, {{print_game(s, g)}, print_game(s, left), print_game(s, right)});
        }
        return out;
    };
    return detail::run_suite(store, cfg, Suite::zero_identity, total, slice);
}

// g+h == h+g over all ordered pairs of the exhaustive tier.
inline VerificationReport check_commutativity(GameStore& store, const SuiteConfig& cfg) {
    const std::uint64_t m = tier_size(cfg.exhaustive_tier);
    auto slice = [&cfg, m](GameStore& s, std::uint64_t lo, std::uint64_t hi) {
        const Tier tier = enumerate_tier(s, cfg.exhaustive_tier);
        detail::SliceOutcome out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const GameId g = tier.members[i / m];
            const GameId h = tier.members[i % m];
            const GameId gh = s.sum(g, h);
            const GameId hg = s.sum(h, g);
            ++out.checks;
            if (gh != hg)
                out.fail(i, {{print_game(s, g), print_game(s, h)}, print_game(s, gh),
                             print_game(s, hg)});
        }
        return out;
    };
    return detail::run_suite(store, cfg, Suite::commutativity, m * m, slice);
}

// (g+h)+k == g+(h+k): exhaustive over tier min(exhaustive_tier, 1), then
// sample_triples seeded triples drawn from tier 2.
inline VerificationReport check_associativity(GameStore& store, const SuiteConfig& cfg) {
    const int exhaustive_tier = std::min(cfg.exhaustive_tier, 1);
    const std::uint64_t e = tier_size(exhaustive_tier);
    const std::uint64_t exhaustive_total = e * e * e;
    const std::uint64_t total = exhaustive_total + cfg.sample_triples;
    auto slice = [&cfg, exhaustive_tier, e, exhaustive_total](GameStore& s, std::uint64_t lo,
                                                              std::uint64_t hi) {
        const Tier small = enumerate_tier(s, exhaustive_tier);
        std::vector<GameId> pool;
        if (hi > exhaustive_total) pool = enumerate_tier(s, 2).members;
        detail::SliceOutcome out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            GameId g, h, k;
            if (i < exhaustive_total) {
                g = small.members[i / (e * e)];
                h = small.members[(i / e) % e];
                k = small.members[i % e];
            } else {
                // Draws are indexed by triple, so any slice sees the same
                // triple a serial run would.
                SplitMix64 rng(cfg.seed);
                rng.skip(3 * (i - exhaustive_total));
                g = pool[rng.below(pool.size())];
                h = pool[rng.below(pool.size())];
                k = pool[rng.below(pool.size())];
            }
            const GameId lhs = s.sum(s.sum(g, h), k);
            const GameId rhs = s.sum(g, s.sum(h, k));
            ++out.checks;
            if (lhs != rhs)
                out.fail(i, {{print_game(s, g), print_game(s, h), print_game(s, k)},
                             print_game(s, lhs), print_game(s, rhs)});
        }
        return out;
    };
    return detail::run_suite(store, cfg, Suite::associativity, total, slice);
}

// birthday(g+h) == birthday(g) + birthday(h) over all ordered pairs of the
// exhaustive tier. Equality subsumes the containment bound
// birthday(g+h) <= birthday(g) + birthday(h).
inline VerificationReport check_birthday_additivity(GameStore& store, const SuiteConfig& cfg) {
    const std::uint64_t m = tier_size(cfg.exhaustive_tier);
    auto slice = [&cfg, m](GameStore& s, std::uint64_t lo, std::uint64_t hi) {
        const Tier tier = enumerate_tier(s, cfg.exhaustive_tier);
        detail::SliceOutcome out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const GameId g = tier.members[i / m];
            const GameId h = tier.members[i % m];
            const std::uint64_t got = s.birthday(s.sum(g, h));
            const std::uint64_t want = s.birthday(g) + s.birthday(h);
            ++out.checks;
            if (got != want)
                out.fail(i, {{print_game(s, g), print_game(s, h)}, std::to_string(got),
                             std::to_string(want)});
        }
        return out;
    };
    return detail::run_suite(store, cfg, Suite::birthday_additivity, m * m, slice);
}

// The recursive birthday equals the least enumerated tier containing the
// game; this pits the 1+max formula against the least-n definition.
inline VerificationReport check_tier_membership(GameStore& store, const SuiteConfig& cfg) {
    const std::uint64_t total = tier_size(cfg.exhaustive_tier);
    auto slice = [&cfg](GameStore& s, std::uint64_t lo, std::uint64_t hi) {
        std::unordered_map<std::uint64_t, std::uint64_t> least;
        std::vector<GameId> members;
        for (int t = 0; t <= cfg.exhaustive_tier; ++t) {
            members = enumerate_tier(s, t).members;
            for (const GameId g : members) least.try_emplace(g.value, t);
        }
        detail::SliceOutcome out;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const GameId g = members[i];
            const std::uint64_t got = s.birthday(g);
            const std::uint64_t want = least.at(g.value);
            ++out.checks;
            if (got != want)
                out.fail(i, {{print_game(s, g)}, std::to_string(got), std::to_string(want)});
        }
        return out;
    };
    return detail::run_suite(store, cfg, Suite::tier_membership, total, slice);
}

// Every suite, in a fixed order, sharing one store and one config.
inline std::vector<VerificationReport> run_all(GameStore& store, const SuiteConfig& cfg) {
    std::vector<VerificationReport> reports;
    reports.reserve(6);
    reports.push_back(check_neg_involution(store, cfg));
    reports.push_back(check_zero_identity(store, cfg));
    reports.push_back(check_commutativity(store, cfg));
    reports.push_back(check_associativity(store, cfg));
    reports.push_back(check_birthday_additivity(store, cfg));
    reports.push_back(check_tier_membership(store, cfg));
    return reports;
}

// Dispatch on cfg.suite; Suite::all runs everything.
inline std::vector<VerificationReport> run_suites(GameStore& store, const SuiteConfig& cfg) {
    switch (cfg.suite) {
        case Suite::neg_involution: return {check_neg_involution(store, cfg)};
        case Suite::zero_identity: return {check_zero_identity(store, cfg)};
        case Suite::commutativity: return {check_commutativity(store, cfg)};
        case Suite::associativity: return {check_associativity(store, cfg)};
        case Suite::birthday_additivity: return {check_birthday_additivity(store, cfg)};
        case Suite::tier_membership: return {check_tier_membership(store, cfg)};
        default: return run_all(store, cfg);
    }
}

inline nlohmann::json to_json(const SuiteConfig& cfg) {
    return {
        {"suite", suite_name(cfg.suite)},
        {"exhaustive_tier", cfg.exhaustive_tier},
        {"sample_triples", cfg.sample_triples},
        {"seed", cfg.seed},
    };
}

inline nlohmann::json to_json(const Counterexample& cex) {
    return {{"inputs", cex.inputs}, {"lhs", cex.lhs}, {"rhs", cex.rhs}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j{
        {"suite", r.suite},
        {"checks_run", r.checks_run},
        {"failures", r.failures},
        {"elapsed_ms", r.elapsed_ms},
        {"config", to_json(r.config)},
    };
    if (r.first_counterexample) j["counterexample"] = to_json(*r.first_counterexample);
    return j;
}

inline std::string render_text(const VerificationReport& r) {
    char timing[48];
    std::snprintf(timing, sizeof timing, "%.2f ms", r.elapsed_ms);
    std::string out = r.suite + ": " + std::to_string(r.checks_run) + " checks, " +
                      std::to_string(r.failures) + " failures (" + timing + ")";
    if (r.first_counterexample) {
        const Counterexample& cex = *r.first_counterexample;
        out += "\n  first counterexample: inputs =";
        for (const std::string& in : cex.inputs) out += " " + in;
        out += "; lhs = " + cex.lhs + "; rhs = " + cex.rhs;
    }
    return out;
}

}  // namespace shortgames
