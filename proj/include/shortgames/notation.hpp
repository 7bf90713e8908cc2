// Surface syntax for games: brace literals, the four named constants,
// unary minus and binary plus.
//
//   expr := term ('+' term)*
//   term := '-' term | atom
//   atom := '0' | '1' | '-1' | '*' | '{' list '|' list '}' | '(' expr ')'
//   list := empty | expr (',' expr)*
//
// Whitespace is insignificant and '+' associates left. '-1' lexes as a
// single constant token when it cannot continue an expression; after a
// complete atom a '-' is rejected with a hint, since the grammar has no
// binary minus. Input is UTF-8, output pure ASCII.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "shortgames/errors.hpp"
#include "shortgames/store.hpp"

namespace shortgames {

enum class ConstName { zero, one, neg_one, star };

// Expression tree. Move-only; Braces lists may be empty.
struct Expr {
    struct Const {
        ConstName name;
    };
    struct Braces {
        std::vector<Expr> left;
        std::vector<Expr> right;
    };
    struct Neg {
        std::unique_ptr<Expr> operand;
    };
    struct Sum {
        std::unique_ptr<Expr> lhs;
        std::unique_ptr<Expr> rhs;
    };

    std::variant<Const, Braces, Neg, Sum> node;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message,
               std::vector<std::string> expected = {})
        : Error(format(position, message, expected)),
          position_(position),
          expected_(std::move(expected)) {}

    // 1-based character position of the offending token.
    std::size_t position() const { return position_; }

    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(std::size_t position, const std::string& message,
                              const std::vector<std::string>& expected) {
        std::string out = "syntax error at position " + std::to_string(position) + ": " + message;
        if (!expected.empty()) {
            out += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) out += ", ";
                out += expected[i];
            }
            out += ")";
        }
        return out;
    }

    std::size_t position_;
    std::vector<std::string> expected_;
};

namespace detail {

enum class Tok { Begin, LBrace, RBrace, LParen, RParen, Bar, Comma, Plus, Minus, Zero, One, NegOne, Star, End };

inline const char* tok_name(Tok t) {
    switch (t) {
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Bar: return "'|'";
        case Tok::Comma: return "','";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Zero: return "'0'";
        case Tok::One: return "'1'";
        case Tok::NegOne: return "'-1'";
        case Tok::Star: return "'*'";
        case Tok::End: return "end of input";
        default: return "begin";
    }
}

// Tokens that a complete expression can end with. A '-' after one of these
// would have to be binary minus, which the grammar does not have.
inline bool ends_expr(Tok t) {
    return t == Tok::RBrace || t == Tok::RParen || t == Tok::Zero || t == Tok::One ||
           t == Tok::NegOne || t == Tok::Star;
}

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;       // byte offset of the next unread character
    Tok kind = Tok::Begin;     // current token
    std::size_t tok_pos = 1;   // 1-based position of the current token

    explicit Scanner(std::string_view t) : text(t) { advance(); }

    void advance() {
        const Tok prev = kind;
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                     text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
        tok_pos = pos + 1;
        if (pos == text.size()) {
            kind = Tok::End;
            return;
        }
        const char c = text[pos++];
        switch (c) {
            case '{': kind = Tok::LBrace; return;
            case '}': kind = Tok::RBrace; return;
            case '(': kind = Tok::LParen; return;
            case ')': kind = Tok::RParen; return;
            case '|': kind = Tok::Bar; return;
            case ',': kind = Tok::Comma; return;
            case '+': kind = Tok::Plus; return;
            case '0': kind = Tok::Zero; return;
            case '1': kind = Tok::One; return;
            case '*': kind = Tok::Star; return;
            case '-':
                if (pos < text.size() && text[pos] == '1' && !ends_expr(prev)) {
                    ++pos;
                    kind = Tok::NegOne;
                } else {
                    kind = Tok::Minus;
                }
                return;
            default:
                throw ParseError(tok_pos, std::string("unexpected character '") + c + "'");
        }
    }
};

struct Parser {
    Scanner sc;
    int depth = 0;
    static constexpr int kMaxDepth = 10'000;

    explicit Parser(std::string_view text) : sc(text) {}

    static std::vector<std::string> atom_expected() {
        return {"'0'", "'1'", "'-1'", "'*'", "'{'", "'('"};
    }

    Expr parse_expr() {
        if (++depth > kMaxDepth) throw ParseError(sc.tok_pos, "expression nests too deeply");
        Expr lhs = parse_term();
        while (true) {
            if (sc.kind == Tok::Plus) {
                sc.advance();
                Expr rhs = parse_term();
                Expr::Sum s{std::make_unique<Expr>(std::move(lhs)), std::make_unique<Expr>(std::move(rhs))};
                lhs = Expr{std::move(s)};
            } else if (sc.kind == Tok::Minus) {
                throw ParseError(sc.tok_pos, "subtraction is not defined; write +-", {"'+'"});
            } else {
                break;
            }
        }
        --depth;
        return lhs;
    }

    Expr parse_term() {
        if (sc.kind == Tok::Minus) {
            sc.advance();
            if (++depth > kMaxDepth) throw ParseError(sc.tok_pos, "expression nests too deeply");
            Expr operand = parse_term();
            --depth;
            return Expr{Expr::Neg{std::make_unique<Expr>(std::move(operand))}};
        }
        return parse_atom();
    }

    Expr parse_atom() {
        switch (sc.kind) {
            case Tok::Zero: sc.advance(); return Expr{Expr::Const{ConstName::zero}};
            case Tok::One: sc.advance(); return Expr{Expr::Const{ConstName::one}};
            case Tok::NegOne: sc.advance(); return Expr{Expr::Const{ConstName::neg_one}};
            case Tok::Star: sc.advance(); return Expr{Expr::Const{ConstName::star}};
            case Tok::LBrace: {
                sc.advance();
                Expr::Braces b;
                b.left = parse_list();
                expect_in_braces(Tok::Bar);
                b.right = parse_list();
                expect_in_braces(Tok::RBrace);
                return Expr{std::move(b)};
            }
            case Tok::LParen: {
                sc.advance();
                Expr inner = parse_expr();
                if (sc.kind == Tok::End)
                    throw ParseError(sc.tok_pos, "unbalanced parentheses", {"')'"});
                if (sc.kind != Tok::RParen)
                    throw ParseError(sc.tok_pos,
                                     std::string("unexpected ") + tok_name(sc.kind), {"')'", "'+'"});
                sc.advance();
                return inner;
            }
            default:
                throw ParseError(sc.tok_pos, std::string("unexpected ") + tok_name(sc.kind),
                                 atom_expected());
        }
    }

    std::vector<Expr> parse_list() {
        std::vector<Expr> out;
        // End of input also ends the list, so a missing '}' or '|' is
        // reported as unbalanced braces rather than a missing atom.
        if (sc.kind == Tok::Bar || sc.kind == Tok::RBrace || sc.kind == Tok::End) return out;
        out.push_back(parse_expr());
        while (sc.kind == Tok::Comma) {
            sc.advance();
            out.push_back(parse_expr());
        }
        return out;
    }

    void expect_in_braces(Tok want) {
        if (sc.kind == want) {
            sc.advance();
            return;
        }
        if (sc.kind == Tok::End)
            throw ParseError(sc.tok_pos, "unbalanced braces", {tok_name(want)});
        std::vector<std::string> expected{tok_name(want)};
        if (want == Tok::Bar) expected.emplace_back("','");
        throw ParseError(sc.tok_pos, std::string("unexpected ") + tok_name(sc.kind),
                         std::move(expected));
    }
};

}  // namespace detail

inline Expr parse(std::string_view text) {
    detail::Parser parser(text);
    if (parser.sc.kind == detail::Tok::End)
        throw ParseError(1, "empty input", detail::Parser::atom_expected());
    Expr e = parser.parse_expr();
    if (parser.sc.kind != detail::Tok::End)
        throw ParseError(parser.sc.tok_pos,
                         std::string("unexpected ") + detail::tok_name(parser.sc.kind),
                         {"'+'", "end of input"});
    return e;
}

// Folds an expression through the store. Iterative, so caller-built trees of
// any depth are fine.
inline GameId evaluate(GameStore& store, const Expr& e) {
    std::vector<const Expr*> order;
    std::vector<const Expr*> work{&e};
    while (!work.empty()) {
        const Expr* cur = work.back();
        work.pop_back();
        order.push_back(cur);
        if (const auto* b = std::get_if<Expr::Braces>(&cur->node)) {
            for (const Expr& c : b->left) work.push_back(&c);
            for (const Expr& c : b->right) work.push_back(&c);
        } else if (const auto* n = std::get_if<Expr::Neg>(&cur->node)) {
            work.push_back(n->operand.get());
        } else if (const auto* s = std::get_if<Expr::Sum>(&cur->node)) {
            work.push_back(s->lhs.get());
            work.push_back(s->rhs.get());
        }
    }

    // Every node follows its parent in pre-order, so a reverse sweep sees
    // children before parents.
    std::unordered_map<const Expr*, GameId> value;
    value.reserve(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Expr* cur = *it;
        if (const auto* k = std::get_if<Expr::Const>(&cur->node)) {
            switch (k->name) {
                case ConstName::zero: value[cur] = store.zero(); break;
                case ConstName::one: value[cur] = store.one(); break;
                case ConstName::neg_one: value[cur] = store.neg_one(); break;
                case ConstName::star: value[cur] = store.star(); break;
            }
        } else if (const auto* b = std::get_if<Expr::Braces>(&cur->node)) {
            std::vector<GameId> left, right;
            left.reserve(b->left.size());
            right.reserve(b->right.size());
            for (const Expr& c : b->left) left.push_back(value.at(&c));
            for (const Expr& c : b->right) right.push_back(value.at(&c));
            value[cur] = store.intern(left, right);
        } else if (const auto* n = std::get_if<Expr::Neg>(&cur->node)) {
            value[cur] = store.negate(value.at(n->operand.get()));
        } else {
            const auto& s = std::get<Expr::Sum>(cur->node);
            value[cur] = store.sum(value.at(s.lhs.get()), value.at(s.rhs.get()));
        }
    }
    return value.at(&e);
}

namespace detail {

// Ordering key for printed option lists: shorter fully-expanded form first,
// then lexicographic. The fully-expanded form is a pure function of game
// structure, so the order (and hence all printing) is identical across
// stores regardless of interning history.
inline bool print_before(const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

inline std::string join_options(std::span<const GameId> side,
                                const std::unordered_map<std::uint64_t, std::string>& ordering,
                                const std::unordered_map<std::uint64_t, std::string>& rendering) {
    std::vector<GameId> ids(side.begin(), side.end());
    std::sort(ids.begin(), ids.end(), [&](GameId x, GameId y) {
        return print_before(ordering.at(x.value), ordering.at(y.value));
    });
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += rendering.at(ids[i].value);
    }
    return out;
}

}  // namespace detail

// Canonical rendering of a game. With fold_constants the games 0, 1, -1 and
// * print as their names; otherwise everything is expanded braces.
inline std::string print_game(const GameStore& store, GameId g, bool fold_constants = true) {
    // Expanded forms double as the option ordering key, so they are computed
    // even when folding.
    if (!store.contains(g)) throw UnknownHandleError{};
    std::unordered_map<std::uint64_t, std::string> expanded;
    std::vector<std::uint64_t> work{g.value};
    while (!work.empty()) {
        const std::uint64_t id = work.back();
        if (expanded.contains(id)) {
            work.pop_back();
            continue;
        }
        const auto [left, right] = store.options(GameId{id});
        bool ready = true;
        for (const GameId c : left)
            if (!expanded.contains(c.value)) { work.push_back(c.value); ready = false; }
        for (const GameId c : right)
            if (!expanded.contains(c.value)) { work.push_back(c.value); ready = false; }
        if (!ready) continue;
        expanded[id] = "{" + detail::join_options(left, expanded, expanded) + "|" +
                       detail::join_options(right, expanded, expanded) + "}";
        work.pop_back();
    }
    if (!fold_constants) return expanded.at(g.value);

    std::unordered_map<std::uint64_t, std::string> named;
    named[store.zero().value] = "0";
    if (auto id = store.find({store.zero()}, {})) named[id->value] = "1";
    if (auto id = store.find({}, {store.zero()})) named[id->value] = "-1";
    if (auto id = store.find({store.zero()}, {store.zero()})) named[id->value] = "*";

    std::unordered_map<std::uint64_t, std::string> folded;
    work.push_back(g.value);
    while (!work.empty()) {
        const std::uint64_t id = work.back();
        if (folded.contains(id)) {
            work.pop_back();
            continue;
        }
        if (auto it = named.find(id); it != named.end()) {
            folded[id] = it->second;
            work.pop_back();
            continue;
        }
        const auto [left, right] = store.options(GameId{id});
        bool ready = true;
        for (const GameId c : left)
            if (!folded.contains(c.value)) { work.push_back(c.value); ready = false; }
        for (const GameId c : right)
            if (!folded.contains(c.value)) { work.push_back(c.value); ready = false; }
        if (!ready) continue;
        folded[id] = "{" + detail::join_options(left, expanded, folded) + "|" +
                     detail::join_options(right, expanded, folded) + "}";
        work.pop_back();
    }
    return folded.at(g.value);
}

// Listings (tier members, samples) as a JSON array of printed notation.
inline nlohmann::json games_to_json(const GameStore& store, std::span<const GameId> games,
                                    bool fold_constants = true) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GameId g : games) arr.push_back(print_game(store, g, fold_constants));
    return arr;
}

}  // namespace shortgames
