#include "bh/interpretation.hpp"

#include "bh/dilator_lib.hpp"

namespace bh {

OmegaSuccessorWitness::OmegaSuccessorWitness() : dilator_(make_successor()) {}

std::uint64_t OmegaSuccessorWitness::collapse(const CodedElement<std::uint64_t>& sigma) const {
    if (sigma.token.kind() == TokenKind::Top && sigma.support.empty()) return 0;
    if (sigma.token == Token::var(0) && sigma.support.size() == 1) return sigma.support[0] + 1;
    throw std::domain_error("omega-successor: " + format_token(sigma.token) + " with " +
                            std::to_string(sigma.support.size()) + " support elements is not in T_omega");
}

std::vector<std::uint64_t> OmegaSuccessorWitness::sample(std::size_t budget) const {
    std::vector<std::uint64_t> out(budget);
    for (std::size_t i = 0; i < budget; ++i) out[i] = i;
    return out;
}

WitnessPtr<std::uint64_t> make_witness(const std::string& name) {
    if (name == "omega-successor") return std::make_shared<const OmegaSuccessorWitness>();
    throw SemanticError("unknown witness '" + name + "'");
}

}  // namespace bh
