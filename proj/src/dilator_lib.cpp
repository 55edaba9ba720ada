#include "bh/dilator_lib.hpp"

#include <algorithm>
#include <functional>

namespace bh {
namespace {

bool is_descending(const std::vector<std::size_t>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] > xs[i - 1]) return false;
    return true;
}

// Rewrites indices to positions inside the (sorted) support.
Token restrict_to(const Token& t, const std::vector<std::size_t>& support) {
    return t.relabel([&](std::size_t i) {
        return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), i) - support.begin());
    });
}

template <class Cmp>
void sort_tokens(std::vector<Token>& ts, Cmp cmp) {
    std::sort(ts.begin(), ts.end(), [&](const Token& a, const Token& b) { return cmp(a, b) < 0; });
}

class Successor final : public Dilator {
public:
    std::string name() const override { return "successor"; }

    bool is_token(std::size_t n, const Token& t) const override {
        return t.kind() == TokenKind::Top || (t.kind() == TokenKind::Var && t.value() < n);
    }

    std::strong_ordering compare_at(std::size_t, const Token& a, const Token& b) const override {
        const bool at = a.kind() == TokenKind::Top, bt = b.kind() == TokenKind::Top;
        if (at || bt) return at <=> bt;
        return a.value() <=> b.value();
    }

    Token map_token(const Embedding& f, const Token& t) const override {
        return t.relabel([&](std::size_t i) { return f(i); });
    }

    std::vector<std::size_t> supp_at(std::size_t, const Token& t) const override { return t.indices(); }

    Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const override {
        Enumerated<Token> out;
        for (std::size_t i = 0; i < n && out.items.size() < budget; ++i) out.items.push_back(Token::var(i));
        if (out.items.size() < budget) out.items.push_back(Token::top());
        out.exhaustive = n + 1 <= budget;
        return out;
    }

    NormalForm normal_form(std::size_t n, const Token& t) const override {
        auto s = supp_at(n, t);
        return {s, restrict_to(t, s)};
    }
};

class OmegaPower final : public Dilator {
public:
    std::string name() const override { return "omega"; }

    bool is_token(std::size_t n, const Token& t) const override {
        if (t.kind() != TokenKind::Seq || !is_descending(t.entries())) return false;
        return std::all_of(t.entries().begin(), t.entries().end(), [&](std::size_t x) { return x < n; });
    }

    std::strong_ordering compare_at(std::size_t, const Token& a, const Token& b) const override {
        const auto& x = a.entries();
        const auto& y = b.entries();
        return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
    }

    Token map_token(const Embedding& f, const Token& t) const override {
        return t.relabel([&](std::size_t i) { return f(i); });
    }

    std::vector<std::size_t> supp_at(std::size_t, const Token& t) const override { return t.indices(); }

    // Graded by length, so every token of T_n appears once the budget is large enough.
    Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const override {
        Enumerated<Token> out;
        if (budget == 0) return out;
        out.items.push_back(Token::seq({}));
        if (n == 0) {
            out.exhaustive = true;
            return out;
        }
        std::vector<std::size_t> cur;
        std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t remaining, std::size_t bound) {
            if (out.items.size() >= budget) return;
            if (remaining == 0) {
                out.items.push_back(Token::seq(cur));
                return;
            }
            for (std::size_t x = 0; x <= bound && out.items.size() < budget; ++x) {
                cur.push_back(x);
                fill(remaining - 1, x);
                cur.pop_back();
            }
        };
        for (std::size_t len = 1; out.items.size() < budget; ++len) fill(len, n - 1);
        sort_tokens(out.items, [&](const Token& a, const Token& b) { return compare_at(n, a, b); });
        return out;
    }

    NormalForm normal_form(std::size_t n, const Token& t) const override {
        auto s = supp_at(n, t);
        return {s, restrict_to(t, s)};
    }
};

class Constant final : public Dilator {
public:
    explicit Constant(std::size_t k) : k_(k) {}

    std::string name() const override { return "constant:" + std::to_string(k_); }

    bool is_token(std::size_t, const Token& t) const override {
        return t.kind() == TokenKind::Const && t.value() < k_;
    }

    std::strong_ordering compare_at(std::size_t, const Token& a, const Token& b) const override {
        return a.value() <=> b.value();
    }

    Token map_token(const Embedding&, const Token& t) const override { return t; }

    std::vector<std::size_t> supp_at(std::size_t, const Token&) const override { return {}; }

    Enumerated<Token> enumerate_at(std::size_t, std::size_t budget) const override {
        Enumerated<Token> out;
        for (std::size_t c = 0; c < k_ && c < budget; ++c) out.items.push_back(Token::constant(c));
        out.exhaustive = k_ <= budget;
        return out;
    }

    NormalForm normal_form(std::size_t, const Token& t) const override { return {{}, t}; }

private:
    std::size_t k_;
};

class Identity final : public Dilator {
public:
    std::string name() const override { return "identity"; }

    bool is_token(std::size_t n, const Token& t) const override {
        return t.kind() == TokenKind::Var && t.value() < n;
    }

    std::strong_ordering compare_at(std::size_t, const Token& a, const Token& b) const override {
        return a.value() <=> b.value();
    }

    Token map_token(const Embedding& f, const Token& t) const override {
        return t.relabel([&](std::size_t i) { return f(i); });
    }

    std::vector<std::size_t> supp_at(std::size_t, const Token& t) const override { return t.indices(); }

    Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const override {
        Enumerated<Token> out;
        for (std::size_t i = 0; i < n && i < budget; ++i) out.items.push_back(Token::var(i));
        out.exhaustive = n <= budget;
        return out;
    }

    NormalForm normal_form(std::size_t n, const Token& t) const override {
        auto s = supp_at(n, t);
        return {s, restrict_to(t, s)};
    }
};

class Sum final : public Dilator {
public:
    Sum(DilatorPtr l, DilatorPtr r) : l_(std::move(l)), r_(std::move(r)) {}

    std::string name() const override { return "sum(" + l_->name() + "," + r_->name() + ")"; }

    bool is_token(std::size_t n, const Token& t) const override {
        if (t.kind() == TokenKind::Left) return l_->is_token(n, t.child());
        if (t.kind() == TokenKind::Right) return r_->is_token(n, t.child());
        return false;
    }

    std::strong_ordering compare_at(std::size_t n, const Token& a, const Token& b) const override {
        if (a.kind() != b.kind()) return a.kind() == TokenKind::Left ? std::strong_ordering::less
                                                                     : std::strong_ordering::greater;
        return side(a).compare_at(n, a.child(), b.child());
    }

    Token map_token(const Embedding& f, const Token& t) const override {
        Token inner = side(t).map_token(f, t.child());
        return t.kind() == TokenKind::Left ? Token::left(std::move(inner)) : Token::right(std::move(inner));
    }

    std::vector<std::size_t> supp_at(std::size_t n, const Token& t) const override {
        return side(t).supp_at(n, t.child());
    }

    Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const override {
        auto a = l_->enumerate_at(n, budget);
        auto b = r_->enumerate_at(n, budget);
        Enumerated<Token> out;
        std::size_t i = 0, j = 0;
        while (out.items.size() < budget && (i < a.items.size() || j < b.items.size())) {
            if (i < a.items.size()) out.items.push_back(Token::left(a.items[i++]));
            if (out.items.size() < budget && j < b.items.size()) out.items.push_back(Token::right(b.items[j++]));
        }
        out.exhaustive = a.exhaustive && b.exhaustive && i == a.items.size() && j == b.items.size();
        sort_tokens(out.items, [&](const Token& x, const Token& y) { return compare_at(n, x, y); });
        return out;
    }

    NormalForm normal_form(std::size_t n, const Token& t) const override {
        NormalForm nf = side(t).normal_form(n, t.child());
        nf.token = t.kind() == TokenKind::Left ? Token::left(std::move(nf.token)) : Token::right(std::move(nf.token));
        return nf;
    }

private:
    const Dilator& side(const Token& t) const { return t.kind() == TokenKind::Left ? *l_ : *r_; }

    DilatorPtr l_, r_;
};

class LexProduct final : public Dilator {
public:
    LexProduct(DilatorPtr l, DilatorPtr r) : l_(std::move(l)), r_(std::move(r)) {}

    std::string name() const override { return "product(" + l_->name() + "," + r_->name() + ")"; }

    bool is_token(std::size_t n, const Token& t) const override {
        return t.kind() == TokenKind::Pair && l_->is_token(n, t.child(0)) && r_->is_token(n, t.child(1));
    }

    std::strong_ordering compare_at(std::size_t n, const Token& a, const Token& b) const override {
        auto c = l_->compare_at(n, a.child(0), b.child(0));
        return c != 0 ? c : r_->compare_at(n, a.child(1), b.child(1));
    }

    Token map_token(const Embedding& f, const Token& t) const override {
        return Token::pair(l_->map_token(f, t.child(0)), r_->map_token(f, t.child(1)));
    }

    std::vector<std::size_t> supp_at(std::size_t n, const Token& t) const override {
        auto a = l_->supp_at(n, t.child(0));
        auto b = r_->supp_at(n, t.child(1));
        std::vector<std::size_t> u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        return u;
    }

    Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const override {
        auto a = l_->enumerate_at(n, budget);
        auto b = r_->enumerate_at(n, budget);
        Enumerated<Token> out;
        const std::size_t na = a.items.size(), nb = b.items.size();
        if (na > 0 && nb > 0) {
            for (std::size_t d = 0; d + 1 < na + nb && out.items.size() < budget; ++d)
                for (std::size_t i = 0; i <= d && out.items.size() < budget; ++i)
                    if (i < na && d - i < nb) out.items.push_back(Token::pair(a.items[i], b.items[d - i]));
        }
        out.exhaustive = a.exhaustive && b.exhaustive && out.items.size() == na * nb;
        sort_tokens(out.items, [&](const Token& x, const Token& y) { return compare_at(n, x, y); });
        return out;
    }

    NormalForm normal_form(std::size_t n, const Token& t) const override {
        NormalForm a = l_->normal_form(n, t.child(0));
        NormalForm b = r_->normal_form(n, t.child(1));
        NormalForm nf;
        std::set_union(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                       std::back_inserter(nf.support));
        auto positions = [&](const std::vector<std::size_t>& part) {
            std::vector<std::size_t> pos;
            for (std::size_t x : part)
                pos.push_back(static_cast<std::size_t>(
                    std::lower_bound(nf.support.begin(), nf.support.end(), x) - nf.support.begin()));
            return Embedding(nf.support.size(), std::move(pos));
        };
        nf.token = Token::pair(l_->map_token(positions(a.support), a.token),
                               r_->map_token(positions(b.support), b.token));
        return nf;
    }

private:
    DilatorPtr l_, r_;
};

class BrokenSupport final : public Dilator {
public:
    explicit BrokenSupport(DilatorPtr inner) : inner_(std::move(inner)) {}

    std::string name() const override { return "broken:" + inner_->name(); }
    bool is_token(std::size_t n, const Token& t) const override { return inner_->is_token(n, t); }
    std::strong_ordering compare_at(std::size_t n, const Token& a, const Token& b) const override {
        return inner_->compare_at(n, a, b);
    }
    Token map_token(const Embedding& f, const Token& t) const override { return inner_->map_token(f, t); }
    std::vector<std::size_t> supp_at(std::size_t, const Token&) const override { return {}; }
    Enumerated<Token> enumerate_at(std::size_t n, std::size_t budget) const override {
        return inner_->enumerate_at(n, budget);
    }

private:
    DilatorPtr inner_;
};

}  // namespace

DilatorPtr make_successor() { return std::make_shared<Successor>(); }
DilatorPtr make_omega_power() { return std::make_shared<OmegaPower>(); }
DilatorPtr make_constant(std::size_t k) { return std::make_shared<Constant>(k); }
DilatorPtr make_identity() { return std::make_shared<Identity>(); }
DilatorPtr make_sum(DilatorPtr l, DilatorPtr r) { return std::make_shared<Sum>(std::move(l), std::move(r)); }
DilatorPtr make_product(DilatorPtr l, DilatorPtr r) {
    return std::make_shared<LexProduct>(std::move(l), std::move(r));
}
DilatorPtr make_broken_support(DilatorPtr inner) { return std::make_shared<BrokenSupport>(std::move(inner)); }

}  // namespace bh
