#include "detcount/matrix.hpp"

namespace detcount {

Matrix<ChainRing> project(const Matrix<ProductRing>& m, std::size_t component) {
    const auto& ring = m.ring().component(component);
    std::vector<Element> entries;
    entries.reserve(m.entries().size());
    for (const auto& a : m.entries()) entries.push_back(a.parts[component]);
    return Matrix<ChainRing>(ring, m.n(), std::move(entries));
}

ProductElement determinant(const Matrix<ProductRing>& m) {
    ProductElement out;
    out.parts.reserve(m.ring().arity());
    for (std::size_t i = 0; i < m.ring().arity(); ++i) out.parts.push_back(determinant(project(m, i)));
    return out;
}

}  // namespace detcount
