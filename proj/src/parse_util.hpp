#ifndef BH_PARSE_UTIL_HPP
#define BH_PARSE_UTIL_HPP

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "bh/errors.hpp"

namespace bh::detail {

// Whitespace-insensitive scanner over a borrowed string.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool consume_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        pos += w.size();
        return true;
    }

    std::size_t nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected natural number");
        std::size_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t d = static_cast<std::size_t>(text[pos] - '0');
            if (v > (std::numeric_limits<std::size_t>::max() - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
            ++pos;
        if (start == pos) fail("expected name");
        return std::string(text.substr(start, pos - start));
    }

    void expect_end() {
        if (peek() != '\0') fail("trailing input");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    }
};

}  // namespace bh::detail

#endif
