// Bottom-up enumeration of the finite tiers of short games, and seeded
// random generation of deeper games for sampled checks.
//
// Tier n is cumulative: it holds every game buildable in at most n steps
// from 0, i.e. all ordered pairs of subsets of tier n-1. Sizes are 1, 4 and
// 256 for n = 0, 1, 2; tier 3 already has 2^257 subset pairs, so
// enumeration is hard-capped at n = 2 and sampling takes over beyond.
//
// Enumeration interns into the store, so the single-writer contract of
// GameStore applies.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "shortgames/rng.hpp"
#include "shortgames/store.hpp"

namespace shortgames {

struct Tier {
    int n = 0;
    // Insertion-ordered, duplicate-free; exactly the games of birthday <= n.
    std::vector<GameId> members;
};

struct SampleSpec {
    std::uint64_t max_birthday = 0;
    std::uint64_t max_options_per_side = 0;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
};

// |tier n| without enumerating: squares of powers of two, 1 / 4 / 256.
inline std::uint64_t tier_size(int n) {
    if (n < 0) throw std::invalid_argument("tier index must be non-negative");
    if (n > 2) throw TierTooLargeError{};
    std::uint64_t size = 1;
    for (int level = 1; level <= n; ++level) {
        const std::uint64_t subsets = std::uint64_t{1} << size;
        size = subsets * subsets;
    }
    return size;
}

// All games of birthday <= n, for n <= 2. Member order is deterministic:
// level by level, option subsets of the previous level's member list are
// walked in binary-counter order (bit i of a mask selects member i), with
// the left mask in the low half of the counter. Tier 1 therefore always
// lists 0, 1, -1, * in that order.
inline Tier enumerate_tier(GameStore& store, int n) {
    if (n < 0) throw std::invalid_argument("tier index must be non-negative");
    if (n > 2) throw TierTooLargeError{};

    std::vector<GameId> members{store.zero()};
    for (int level = 1; level <= n; ++level) {
        const std::vector<GameId> prev = std::move(members);
        members.clear();
        const std::uint64_t subsets = std::uint64_t{1} << prev.size();
        std::vector<GameId> left, right;
        for (std::uint64_t rmask = 0; rmask < subsets; ++rmask) {
            right.clear();
            for (std::size_t i = 0; i < prev.size(); ++i)
                if (rmask >> i & 1) right.push_back(prev[i]);
            for (std::uint64_t lmask = 0; lmask < subsets; ++lmask) {
                left.clear();
                for (std::size_t i = 0; i < prev.size(); ++i)
                    if (lmask >> i & 1) left.push_back(prev[i]);
                // Distinct subset pairs intern to distinct handles, and every
                // pair of subsets of the previous level appears, so the list
                // is duplicate-free and cumulative by construction.
                members.push_back(store.intern(left, right));
            }
        }
    }
    return Tier{n, std::move(members)};
}

// spec.count games drawn from one SplitMix64 stream seeded with spec.seed.
// Each game is built as the recursion "draw a left option count and a right
// option count in [0, max_options_per_side], then generate the left options
// in order, then the right options, each with the birthday budget reduced
// by one; a budget of zero is the game 0 and consumes no draws". The result
// list may repeat handles; duplicates intern to equal ids.
inline std::vector<GameId> sample_games(GameStore& store, const SampleSpec& spec) {
    if (spec.count == 0) throw std::invalid_argument("sample count must be at least 1");

    SplitMix64 rng(spec.seed);

    struct Frame {
        std::uint64_t budget;
        std::uint64_t want_left, want_right;
        std::vector<GameId> left, right;
    };

    auto open = [&](std::uint64_t budget) {
        Frame f;
        f.budget = budget;
        f.want_left = rng.below(spec.max_options_per_side + 1);
        f.want_right = rng.below(spec.max_options_per_side + 1);
        return f;
    };

    std::vector<GameId> out;
    out.reserve(spec.count);
    std::vector<Frame> stack;
    for (std::uint64_t i = 0; i < spec.count; ++i) {
        if (spec.max_birthday == 0) {
            out.push_back(store.zero());
            continue;
        }
        stack.clear();
        stack.push_back(open(spec.max_birthday));
        while (true) {
            Frame& top = stack.back();
            const bool left_full = top.left.size() == top.want_left;
            if (!left_full || top.right.size() != top.want_right) {
                if (top.budget == 1) {
                    (left_full ? top.right : top.left).push_back(store.zero());
                } else {
                    stack.push_back(open(top.budget - 1));
                }
                continue;
            }
            const GameId done = store.intern(top.left, top.right);
            stack.pop_back();
            if (stack.empty()) {
                out.push_back(done);
                break;
            }
            Frame& parent = stack.back();
            (parent.left.size() < parent.want_left ? parent.left : parent.right).push_back(done);
        }
    }
    return out;
}

}  // namespace shortgames
