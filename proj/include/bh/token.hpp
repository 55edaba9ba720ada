#ifndef BH_TOKEN_HPP
#define BH_TOKEN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace bh {

enum class TokenKind : std::uint8_t { Top, Var, Const, Seq, Left, Right, Pair };

// Element of T applied to a finite order {0..n-1}. A small immutable tree;
// which shapes are legal at which arity is decided by the owning dilator.
//
//   top          Top
//   v<i>         Var   (index i)
//   c<k>         Const (label k)
//   w[i,...]     Seq   (weakly descending indices)
//   L(t) R(t)    Left / Right summand
//   P(a,b)       Pair
class Token {
public:
    Token() = default;

    static Token top();
    static Token var(std::size_t i);
    static Token constant(std::size_t k);
    static Token seq(std::vector<std::size_t> entries);
    static Token left(Token t);
    static Token right(Token t);
    static Token pair(Token a, Token b);

    TokenKind kind() const { return kind_; }
    // Var index or Const label.
    std::size_t value() const { return nums_.at(0); }
    const std::vector<std::size_t>& entries() const { return nums_; }
    const Token& child(std::size_t i = 0) const { return kids_.at(i); }

    friend bool operator==(const Token&, const Token&) = default;

    std::size_t hash() const;

    // Applies `f` to every index position (Var, Seq entries); labels are untouched.
    Token relabel(const std::function<std::size_t(std::size_t)>& f) const;

    // Every index position occurring in the token, sorted without duplicates.
    std::vector<std::size_t> indices() const;

private:
    TokenKind kind_ = TokenKind::Top;
    std::vector<std::size_t> nums_;
    std::vector<Token> kids_;
};

std::string format_token(const Token& t);

// Parses a token starting at `pos`, skipping whitespace; advances `pos` past it.
// Throws ParseError.
Token parse_token(std::string_view text, std::size_t& pos);
Token parse_token(std::string_view text);

}  // namespace bh

template <>
struct std::hash<bh::Token> {
    std::size_t operator()(const bh::Token& t) const noexcept { return t.hash(); }
};

#endif
