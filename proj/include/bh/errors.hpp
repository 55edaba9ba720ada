#ifndef BH_ERRORS_HPP
#define BH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bh {

// Malformed textual input (tokens, terms, selectors).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that does not denote an element of the requested structure,
// e.g. a term whose declared birth stage is wrong.
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structure violates one of the laws it is required to satisfy
// (dilator laws, system equation, goodness, collapse conditions).
class DefectError : public std::logic_error {
public:
    DefectError(std::string law, const std::string& detail)
        : std::logic_error(law + ": " + detail), law_(std::move(law)) {}

    const std::string& law() const { return law_; }

private:
    std::string law_;
};

}  // namespace bh

#endif
