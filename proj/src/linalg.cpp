#include "minv/linalg.hpp"

namespace minv {
namespace linalg {

std::vector<std::size_t> rref(const PrimeField& field, std::size_t rows, std::size_t cols,
                              std::vector<std::uint32_t>& a) {
    if (a.size() != rows * cols)
        throw std::invalid_argument("rref: shape mismatch");
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a[pr * cols + c] == 0)
            ++pr;
        if (pr == rows)
            continue;
        if (pr != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a[r * cols + j], a[pr * cols + j]);
        std::uint32_t inv = field.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j)
            a[r * cols + j] = field.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            std::uint32_t f = a[i * cols + c];
            if (f == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = field.sub(a[i * cols + j], field.mul(f, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const PrimeField& field, std::size_t rows, std::size_t cols,
                 std::vector<std::uint32_t> a) {
    return rref(field, rows, cols, a).size();
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeField& field, std::size_t rows,
                                                     std::size_t cols,
                                                     std::vector<std::uint32_t> a) {
    std::vector<std::size_t> pivots = rref(field, rows, cols, a);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = field.neg(a[i * cols + f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<std::uint32_t>> inverse(const PrimeField& field, std::size_t n,
                                                  const std::vector<std::uint32_t>& a) {
    if (a.size() != n * n)
        throw std::invalid_argument("inverse: shape mismatch");
    std::vector<std::uint32_t> aug(n * 2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i * 2 * n + j] = a[i * n + j];
        aug[i * 2 * n + n + i] = 1;
    }
    std::vector<std::size_t> pivots = rref(field, n, 2 * n, aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        return std::nullopt;
    std::vector<std::uint32_t> inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i * n + j] = aug[i * 2 * n + n + j];
    return inv;
}

std::uint32_t determinant(const PrimeField& field, std::size_t n, std::vector<std::uint32_t> a) {
    if (a.size() != n * n)
        throw std::invalid_argument("determinant: shape mismatch");
    std::uint32_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a[pr * n + c] == 0)
            ++pr;
        if (pr == n)
            return 0;
        if (pr != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[c * n + j], a[pr * n + j]);
            det = field.neg(det);
        }
        det = field.mul(det, a[c * n + c]);
        std::uint32_t inv = field.inv(a[c * n + c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            std::uint32_t f = field.mul(a[i * n + c], inv);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < n; ++j)
                a[i * n + j] = field.sub(a[i * n + j], field.mul(f, a[c * n + j]));
        }
    }
    return det;
}

} // namespace linalg
} // namespace minv
