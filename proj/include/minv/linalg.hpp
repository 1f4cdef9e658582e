#ifndef MINV_LINALG_HPP
#define MINV_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "minv/field.hpp"

namespace minv {
namespace linalg {

// Dense row-major helpers over F_p. Pivoting is deterministic (first nonzero
// row in column order), so reduced forms are reproducible.

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(const PrimeField& field, std::size_t rows, std::size_t cols,
                              std::vector<std::uint32_t>& a);

std::size_t rank(const PrimeField& field, std::size_t rows, std::size_t cols,
                 std::vector<std::uint32_t> a);

// Basis of the right null space { x : A x = 0 }, one vector per free column.
std::vector<std::vector<std::uint32_t>> kernel_basis(const PrimeField& field, std::size_t rows,
                                                     std::size_t cols,
                                                     std::vector<std::uint32_t> a);

// Gauss-Jordan inverse of an n x n matrix; empty when singular.
std::optional<std::vector<std::uint32_t>> inverse(const PrimeField& field, std::size_t n,
                                                  const std::vector<std::uint32_t>& a);

std::uint32_t determinant(const PrimeField& field, std::size_t n, std::vector<std::uint32_t> a);

} // namespace linalg
} // namespace minv

#endif
