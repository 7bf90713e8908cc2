// Interned short games and the recursive operations on them.
//
// A short game is an ordered pair (left options, right options) of finite
// sets of previously built games. The store keeps every structurally
// distinct game exactly once, so equality of games *as sets* is equality of
// integer handles. Throughout this library "equal" means equal as sets, not
// the usual game equivalence of play theory.
//
// Design notes:
// - Option sets are stored as strictly increasing lists of handles; that
//   canonical form is what makes interning sound.
// - Handles are indices into an append-only table. Id 0 is the game 0 with
//   no options, interned at construction. Nothing is ever evicted: memoized
//   identities depend on stable handles.
// - negate, sum and birthday run on explicit work stacks, so games of any
//   depth cannot exhaust the call stack.
// - The sum memo is keyed on the *ordered* pair (g, h). Commutativity is a
//   theorem the verification suites check; the memo must not assume it.
//   For the same reason the negation memo never records the inverse entry.
//
// Concurrency: single writer. intern, negate, sum and birthday may extend
// the table and need exclusive access; options and set_equal on existing
// handles are safe concurrently between mutations.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shortgames/errors.hpp"
#include "shortgames/rng.hpp"

namespace shortgames {

// Opaque handle to an interned game. Two handles issued by the same store
// compare equal iff the games they denote are equal as sets. A handle is
// meaningless in any store other than the one that issued it.
struct GameId {
    std::uint64_t value = 0;

    friend constexpr bool operator==(GameId, GameId) = default;
    friend constexpr auto operator<=>(GameId, GameId) = default;
};

// The ordered pair (left options, right options), both strictly increasing
// in handle value.
struct GameData {
    std::vector<GameId> left;
    std::vector<GameId> right;

    friend bool operator==(const GameData&, const GameData&) = default;
};

class GameStore {
public:
    GameStore() : index_(16, NodeHash{&nodes_}, NodeEq{&nodes_}) {
        nodes_.push_back(GameData{});  // id 0 is the game with no options
        index_.insert(0);
    }

    // Handles embed indices into this store; moving or copying it would
    // silently orphan them (and the index functors point back into nodes_).
    GameStore(const GameStore&) = delete;
    GameStore& operator=(const GameStore&) = delete;

    // Number of games interned so far.
    std::uint64_t size() const { return nodes_.size(); }

    bool contains(GameId g) const { return g.value < nodes_.size(); }

    // The four games born by day one.
    GameId zero() const { return GameId{0}; }
    GameId one() { return intern({zero()}, {}); }
    GameId neg_one() { return intern({}, {zero()}); }
    GameId star() { return intern({zero()}, {zero()}); }

    // Returns the unique handle for the game whose option sets are the two
    // given lists (order and duplicates in the input are irrelevant; the
    // canonical form is sorted and duplicate-free). Inserts only if absent.
    GameId intern(std::span<const GameId> left, std::span<const GameId> right) {
        GameData data{canonical(left), canonical(right)};
        if (auto it = index_.find(data); it != index_.end()) return GameId{*it};
        const GameId id{nodes_.size()};
        nodes_.push_back(std::move(data));
        index_.insert(id.value);
        return id;
    }

    GameId intern(std::initializer_list<GameId> left, std::initializer_list<GameId> right) {
        return intern(std::span<const GameId>(left.begin(), left.size()),
                      std::span<const GameId>(right.begin(), right.size()));
    }

    // Read-only probe: the handle of (left, right) if that game has been
    // interned, otherwise nullopt.
    std::optional<GameId> find(std::span<const GameId> left,
                               std::span<const GameId> right) const {
        GameData data{canonical(left), canonical(right)};
        if (auto it = index_.find(data); it != index_.end()) return GameId{*it};
        return std::nullopt;
    }

    std::optional<GameId> find(std::initializer_list<GameId> left,
                               std::initializer_list<GameId> right) const {
        return find(std::span<const GameId>(left.begin(), left.size()),
                    std::span<const GameId>(right.begin(), right.size()));
    }

    // Canonical option lists of g. The spans stay valid for the life of the
    // store (growth never moves a game's option buffers).
    std::span<const GameId> left_options(GameId g) const {
        check(g);
        return nodes_[g.value].left;
    }

    std::span<const GameId> right_options(GameId g) const {
        check(g);
        return nodes_[g.value].right;
    }

    std::pair<std::span<const GameId>, std::span<const GameId>> options(GameId g) const {
        check(g);
        return {nodes_[g.value].left, nodes_[g.value].right};
    }

    // Set equality, decidable as handle equality by the interning invariant.
    bool set_equal(GameId g, GameId h) const {
        check(g);
        check(h);
        return g == h;
    }

    // -G = (-right(G), -left(G)), recursively; the image of an empty option
    // set is empty. Memoized per handle.
    GameId negate(GameId g) {
        check(g);
        grow(neg_memo_);
        if (neg_memo_[g.value] != kUnset) return GameId{neg_memo_[g.value]};

        std::vector<std::uint64_t> work{g.value};
        while (!work.empty()) {
            const std::uint64_t id = work.back();
            if (neg_memo_[id] != kUnset) {
                work.pop_back();
                continue;
            }
            bool ready = true;
            for (const GameId c : nodes_[id].left)
                if (neg_memo_[c.value] == kUnset) { work.push_back(c.value); ready = false; }
            for (const GameId c : nodes_[id].right)
                if (neg_memo_[c.value] == kUnset) { work.push_back(c.value); ready = false; }
            if (!ready) continue;

            std::vector<GameId> nl, nr;
            nl.reserve(nodes_[id].right.size());
            nr.reserve(nodes_[id].left.size());
            for (const GameId c : nodes_[id].right) nl.push_back(GameId{neg_memo_[c.value]});
            for (const GameId c : nodes_[id].left) nr.push_back(GameId{neg_memo_[c.value]});
            neg_memo_[id] = intern(nl, nr).value;  // may grow nodes_; id predates the call
            work.pop_back();
        }
        return GameId{neg_memo_[g.value]};
    }

    // G+H = ((left(G)+H) u (G+left(H)), (right(G)+H) u (G+right(H))),
    // recursively, with empty-set images empty. Memoized on the ordered
    // pair (g, h).
    GameId sum(GameId g, GameId h) {
        check(g);
        check(h);
        const PairKey root{g.value, h.value};
        if (auto it = sum_memo_.find(root); it != sum_memo_.end()) return it->second;

        std::vector<PairKey> work{root};
        while (!work.empty()) {
            const PairKey k = work.back();
            if (sum_memo_.contains(k)) {
                work.pop_back();
                continue;
            }
            bool ready = true;
            auto require = [&](std::uint64_t a, std::uint64_t b) {
                if (!sum_memo_.contains(PairKey{a, b})) {
                    work.push_back(PairKey{a, b});
                    ready = false;
                }
            };
            for (const GameId c : nodes_[k.a].left) require(c.value, k.b);
            for (const GameId c : nodes_[k.a].right) require(c.value, k.b);
            if (!sum_fault_)
                for (const GameId c : nodes_[k.b].left) require(k.a, c.value);
            for (const GameId c : nodes_[k.b].right) require(k.a, c.value);
            if (!ready) continue;

            std::vector<GameId> left, right;
            left.reserve(nodes_[k.a].left.size() + nodes_[k.b].left.size());
            right.reserve(nodes_[k.a].right.size() + nodes_[k.b].right.size());
            for (const GameId c : nodes_[k.a].left) left.push_back(sum_memo_.at(PairKey{c.value, k.b}));
            for (const GameId c : nodes_[k.a].right) right.push_back(sum_memo_.at(PairKey{c.value, k.b}));
            if (!sum_fault_)
                for (const GameId c : nodes_[k.b].left) left.push_back(sum_memo_.at(PairKey{k.a, c.value}));
            for (const GameId c : nodes_[k.b].right) right.push_back(sum_memo_.at(PairKey{k.a, c.value}));
            sum_memo_.emplace(k, intern(left, right));  // intern's dedup is the set union
            work.pop_back();
        }
        return sum_memo_.at(root);
    }

    // Formal birthday: 0 for the game 0, otherwise 1 + the largest option
    // birthday. Memoized per handle.
    std::uint64_t birthday(GameId g) {
        check(g);
        grow(birthday_memo_);
        if (birthday_memo_[g.value] != kUnset) return birthday_memo_[g.value];

        std::vector<std::uint64_t> work{g.value};
        while (!work.empty()) {
            const std::uint64_t id = work.back();
            if (birthday_memo_[id] != kUnset) {
                work.pop_back();
                continue;
            }
            const GameData& d = nodes_[id];
            bool ready = true;
            std::uint64_t best = 0;
            for (const GameId c : d.left) {
                if (birthday_memo_[c.value] == kUnset) { work.push_back(c.value); ready = false; }
                else best = std::max(best, birthday_memo_[c.value] + 1);
            }
            for (const GameId c : d.right) {
                if (birthday_memo_[c.value] == kUnset) { work.push_back(c.value); ready = false; }
                else best = std::max(best, birthday_memo_[c.value] + 1);
            }
            if (!ready) continue;
            birthday_memo_[id] = best;  // both sides empty leaves 0, the game 0
            work.pop_back();
        }
        return birthday_memo_[g.value];
    }

    // Drops every memo entry. Results of negate/sum/birthday after a clear
    // must be identical to before; tests rely on that.
    void clear_memos() {
        neg_memo_.clear();
        birthday_memo_.clear();
        sum_memo_.clear();
    }

    // Self-test hook: while enabled, sum() omits the {G + h | h in left
    // options of H} contribution. The verification suites use this to prove
    // they would catch a mis-transcribed sum. Toggling clears the sum memo;
    // never enable this in normal operation.
    void set_sum_fault_injection(bool on) {
        if (on == sum_fault_) return;
        sum_fault_ = on;
        sum_memo_.clear();
    }

    bool sum_fault_injection() const { return sum_fault_; }

private:
    struct PairKey {
        std::uint64_t a = 0;
        std::uint64_t b = 0;

        friend bool operator==(PairKey, PairKey) = default;
    };

    struct PairKeyHash {
        std::size_t operator()(PairKey k) const {
            return SplitMix64::mix(k.a * 0x9e3779b97f4a7c15ull ^ k.b);
        }
    };

    static std::uint64_t hash_data(const GameData& d) {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (d.left.size() + (d.right.size() << 32));
        for (const GameId c : d.left) h = SplitMix64::mix(h ^ SplitMix64::mix(c.value));
        h = SplitMix64::mix(h ^ 0xd1b54a32d192ed03ull);  // side separator
        for (const GameId c : d.right) h = SplitMix64::mix(h ^ SplitMix64::mix(c.value));
        return h;
    }

    struct NodeHash {
        using is_transparent = void;
        const std::vector<GameData>* nodes;
        std::size_t operator()(std::uint64_t id) const { return hash_data((*nodes)[id]); }
        std::size_t operator()(const GameData& d) const { return hash_data(d); }
    };

    struct NodeEq {
        using is_transparent = void;
        const std::vector<GameData>* nodes;
        bool operator()(std::uint64_t a, std::uint64_t b) const {
            return a == b || (*nodes)[a] == (*nodes)[b];
        }
        bool operator()(std::uint64_t a, const GameData& d) const { return (*nodes)[a] == d; }
        bool operator()(const GameData& d, std::uint64_t a) const { return (*nodes)[a] == d; }
    };

    void check(GameId g) const {
        if (g.value >= nodes_.size()) throw UnknownHandleError{};
    }

    std::vector<GameId> canonical(std::span<const GameId> ids) const {
        for (const GameId g : ids) check(g);
        std::vector<GameId> out(ids.begin(), ids.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void grow(std::vector<std::uint64_t>& memo) const {
        if (memo.size() < nodes_.size()) memo.resize(nodes_.size(), kUnset);
    }

    static constexpr std::uint64_t kUnset = ~std::uint64_t{0};

    std::vector<GameData> nodes_;  // id -> data; append-only
    std::unordered_set<std::uint64_t, NodeHash, NodeEq> index_;
    std::vector<std::uint64_t> neg_memo_;
    std::vector<std::uint64_t> birthday_memo_;
    std::unordered_map<PairKey, GameId, PairKeyHash> sum_memo_;
    bool sum_fault_ = false;
};

}  // namespace shortgames

template <>
struct std::hash<shortgames::GameId> {
    std::size_t operator()(shortgames::GameId g) const noexcept {
        return std::hash<std::uint64_t>{}(g.value);
    }
};
