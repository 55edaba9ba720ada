#include "bh/finite_orders.hpp"

#include <numeric>
#include <sstream>

namespace bh {

Embedding::Embedding(std::size_t codomain_size, std::vector<std::size_t> images)
    : codomain_(codomain_size), images_(std::move(images)) {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] >= codomain_)
            throw std::invalid_argument("embedding image out of range: " + to_string(*this));
        if (i > 0 && images_[i - 1] >= images_[i])
            throw std::invalid_argument("embedding not strictly increasing: " + to_string(*this));
    }
}

Embedding identity_embedding(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Embedding(n, std::move(images));
}

Embedding compose(const Embedding& f, const Embedding& g) {
    if (f.codomain_size() != g.domain_size())
        throw std::invalid_argument("compose: size mismatch " + to_string(f) + " then " + to_string(g));
    std::vector<std::size_t> images;
    images.reserve(f.domain_size());
    for (std::size_t i : f.images()) images.push_back(g.images()[i]);
    return Embedding(g.codomain_size(), std::move(images));
}

std::vector<Embedding> all_embeddings(std::size_t m, std::size_t n) {
    std::vector<Embedding> out;
    if (m > n) return out;
    std::vector<std::size_t> cur(m);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        out.emplace_back(n, cur);
        // next combination in lexicographic order
        std::size_t i = m;
        while (i > 0 && cur[i - 1] == n - m + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::string to_string(const Embedding& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.domain_size(); ++i) os << (i ? "," : "") << f.images()[i];
    os << "]:" << f.domain_size() << "->" << f.codomain_size();
    return os.str();
}

}  // namespace bh
