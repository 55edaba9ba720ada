#ifndef BH_TERM_HPP
#define BH_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bh/dilator.hpp"
#include "bh/token.hpp"

namespace bh {

struct TermNode;

// Handle to an interned formal term `th(token; support...)`. Two handles from
// the same store are equal iff the terms are syntactically equal.
class Term {
public:
    Term() = default;
    explicit Term(const TermNode* n) : node_(n) {}

    const Token& token() const;
    const std::vector<Term>& support() const;
    // Height of the term tree: 1 + max over the support, 1 for empty support.
    std::uint32_t length() const;
    std::uint64_t id() const;

    CodedElement<Term> body() const;

    explicit operator bool() const { return node_ != nullptr; }
    friend bool operator==(Term a, Term b) { return a.node_ == b.node_; }

private:
    const TermNode* node_ = nullptr;
};

struct TermNode {
    Token token;
    std::vector<Term> support;
    std::uint32_t length = 1;
    std::uint64_t id = 0;
    std::size_t hash = 0;
};

inline const Token& Term::token() const { return node_->token; }
inline const std::vector<Term>& Term::support() const { return node_->support; }
inline std::uint32_t Term::length() const { return node_->length; }
inline std::uint64_t Term::id() const { return node_->id; }
inline CodedElement<Term> Term::body() const { return {node_->support, node_->token}; }

// Hash-consing arena. Thread-safe; nodes live as long as the store.
class TermStore {
public:
    TermStore() = default;
    TermStore(const TermStore&) = delete;
    TermStore& operator=(const TermStore&) = delete;

    Term intern(const Token& token, const std::vector<Term>& support);
    Term intern(const CodedElement<Term>& body) { return intern(body.token, body.support); }

    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::deque<TermNode> nodes_;
    std::unordered_multimap<std::size_t, const TermNode*> index_;
};

// th(tok) or th(tok;s1,...,sk), no whitespace.
std::string format_term(Term t);

}  // namespace bh

template <>
struct std::hash<bh::Term> {
    std::size_t operator()(bh::Term t) const noexcept { return std::hash<std::uint64_t>{}(t.id()); }
};

#endif
