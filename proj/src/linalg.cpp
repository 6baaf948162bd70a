#include "celestial/linalg.hpp"

#include <stdexcept>

namespace celestial {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        FieldElement inv = m[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!m[r][k].is_zero()) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            FieldElement f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<FieldElement>> nullspace(Matrix m, std::size_t ncols) {
    for (auto& row : m)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    auto piv = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElement> v(ncols, FieldElement(0));
        v[f] = FieldElement(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> solve(Matrix m, const std::vector<FieldElement>& rhs) {
    if (m.size() != rhs.size()) throw std::invalid_argument("rhs length mismatch");
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    auto piv = rref(m);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<FieldElement> x(cols, FieldElement(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][cols];
    return x;
}

}  // namespace celestial
