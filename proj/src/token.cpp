#include "bh/token.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bh/errors.hpp"
#include "parse_util.hpp"

namespace bh {

Token Token::top() { return Token{}; }

Token Token::var(std::size_t i) {
    Token t;
    t.kind_ = TokenKind::Var;
    t.nums_ = {i};
    return t;
}

Token Token::constant(std::size_t k) {
    Token t;
    t.kind_ = TokenKind::Const;
    t.nums_ = {k};
    return t;
}

Token Token::seq(std::vector<std::size_t> entries) {
    Token t;
    t.kind_ = TokenKind::Seq;
    t.nums_ = std::move(entries);
    return t;
}

Token Token::left(Token inner) {
    Token t;
    t.kind_ = TokenKind::Left;
    t.kids_.push_back(std::move(inner));
    return t;
}

Token Token::right(Token inner) {
    Token t;
    t.kind_ = TokenKind::Right;
    t.kids_.push_back(std::move(inner));
    return t;
}

Token Token::pair(Token a, Token b) {
    Token t;
    t.kind_ = TokenKind::Pair;
    t.kids_.push_back(std::move(a));
    t.kids_.push_back(std::move(b));
    return t;
}

std::size_t Token::hash() const {
    std::size_t h = static_cast<std::size_t>(kind_) * 0x9E3779B97F4A7C15ULL;
    auto mix = [&](std::size_t v) { h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2); };
    mix(nums_.size());
    for (std::size_t n : nums_) mix(n);
    for (const Token& k : kids_) mix(k.hash());
    return h;
}

Token Token::relabel(const std::function<std::size_t(std::size_t)>& f) const {
    Token t = *this;
    if (kind_ == TokenKind::Var || kind_ == TokenKind::Seq)
        for (std::size_t& n : t.nums_) n = f(n);
    for (Token& k : t.kids_) k = k.relabel(f);
    return t;
}

std::vector<std::size_t> Token::indices() const {
    std::vector<std::size_t> out;
    if (kind_ == TokenKind::Var || kind_ == TokenKind::Seq) out = nums_;
    for (const Token& k : kids_) {
        auto sub = k.indices();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_token(const Token& t) {
    std::ostringstream os;
    switch (t.kind()) {
        case TokenKind::Top: os << "top"; break;
        case TokenKind::Var: os << 'v' << t.value(); break;
        case TokenKind::Const: os << 'c' << t.value(); break;
        case TokenKind::Seq:
            os << "w[";
            for (std::size_t i = 0; i < t.entries().size(); ++i) os << (i ? "," : "") << t.entries()[i];
            os << ']';
            break;
        case TokenKind::Left: os << "L(" << format_token(t.child()) << ')'; break;
        case TokenKind::Right: os << "R(" << format_token(t.child()) << ')'; break;
        case TokenKind::Pair:
            os << "P(" << format_token(t.child(0)) << ',' << format_token(t.child(1)) << ')';
            break;
    }
    return os.str();
}

Token parse_token(std::string_view text, std::size_t& pos) {
    detail::Cursor cur{text, pos};
    cur.skip_ws();
    if (cur.consume_word("top")) {
        pos = cur.pos;
        return Token::top();
    }
    char c = cur.peek();
    Token result;
    switch (c) {
        case 'v':
            ++cur.pos;
            result = Token::var(cur.nat());
            break;
        case 'c':
            ++cur.pos;
            result = Token::constant(cur.nat());
            break;
        case 'w': {
            ++cur.pos;
            cur.expect('[');
            std::vector<std::size_t> entries;
            if (!cur.try_consume(']')) {
                do entries.push_back(cur.nat());
                while (cur.try_consume(','));
                cur.expect(']');
            }
            result = Token::seq(std::move(entries));
            break;
        }
        case 'L':
        case 'R': {
            ++cur.pos;
            cur.expect('(');
            Token inner = parse_token(text, cur.pos);
            cur.expect(')');
            result = c == 'L' ? Token::left(std::move(inner)) : Token::right(std::move(inner));
            break;
        }
        case 'P': {
            ++cur.pos;
            cur.expect('(');
            Token a = parse_token(text, cur.pos);
            cur.expect(',');
            Token b = parse_token(text, cur.pos);
            cur.expect(')');
            result = Token::pair(std::move(a), std::move(b));
            break;
        }
        default:
            cur.fail("expected token");
    }
    pos = cur.pos;
    return result;
}

Token parse_token(std::string_view text) {
    std::size_t pos = 0;
    Token t = parse_token(text, pos);
    detail::Cursor cur{text, pos};
    cur.expect_end();
    return t;
}

}  // namespace bh
