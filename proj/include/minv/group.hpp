#ifndef MINV_GROUP_HPP
#define MINV_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minv/field.hpp"
#include "minv/poly.hpp"

namespace minv {

// Square matrix over F_p, row-major, entries reduced.
class MatrixF {
  public:
    MatrixF(PrimeField field, int n) : field_(field), n_(n), entries_(std::size_t(n) * n, 0) {}

    static MatrixF identity(PrimeField field, int n);
    static MatrixF from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

    const PrimeField& field() const { return field_; }
    int n() const { return n_; }
    std::uint32_t at(int i, int j) const { return entries_[std::size_t(i) * n_ + j]; }
    void set(int i, int j, std::uint32_t v) { entries_[std::size_t(i) * n_ + j] = v % field_.p(); }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    MatrixF operator*(const MatrixF& o) const;
    bool operator==(const MatrixF& o) const { return n_ == o.n_ && entries_ == o.entries_; }
    bool operator!=(const MatrixF& o) const { return !(*this == o); }

    std::uint32_t det() const;
    bool invertible() const { return det() != 0; }
    MatrixF inverted() const; // Gauss-Jordan; throws on singular input

  private:
    PrimeField field_;
    int n_;
    std::vector<std::uint32_t> entries_;
};

// Generators of G1, G2 in their own dimensions, for a group of block
// upper-triangular matrices (g1 m0 / 0 g2) with arbitrary m0.
struct BlockStructure {
    int m = 0;
    std::vector<MatrixF> g1_generators;
    std::vector<MatrixF> g2_generators;
};

struct GroupSpec {
    PrimeField field;
    int n = 0;
    std::vector<MatrixF> generators;
    std::optional<BlockStructure> block;
};

enum class OrderMethod { closure, block_formula };

struct OrderResult {
    std::uint64_t order = 0;
    OrderMethod method = OrderMethod::closure;
};

// Contragredient action: x_i maps to sum_j a_{i,j}(g^{-1}) x_j. The
// substitution map inverts g once and serves all n variables.
SubstitutionMap action_substitution(const MatrixF& g);
Polynomial act_on_variable(const MatrixF& g, int i);
Polynomial act_on_poly(const MatrixF& g, const Polynomial& f);

// Breadth-first closure under right multiplication by generators, with
// deterministic queue order; exact order when it fits under cap, otherwise
// nullopt.
std::optional<OrderResult> closure_order(const GroupSpec& spec, std::uint64_t cap);

// |G1| * |G2| * p^{m(n-m)}; factor orders come from closure enumeration of
// the small blocks.
OrderResult block_order(const GroupSpec& spec, std::uint64_t factor_cap = 1u << 24);

// Block formula when block metadata is present, closure otherwise.
std::optional<OrderResult> group_order(const GroupSpec& spec, std::uint64_t cap);

enum class MatrixGroupFamily { SL, GL };

// Transvection + signed-cycle generators for SL_n(F_p); GL adds a diagonal
// primitive-root generator. Correctness is pinned by closure order and
// invariance tests rather than a printed matrix list.
std::vector<MatrixF> standard_generators(MatrixGroupFamily family, int n, std::uint32_t p);

// Generators acting on a direct sum: each A-generator on the first block,
// each B-generator on the second.
std::vector<MatrixF> direct_sum_generators(const std::vector<MatrixF>& a, int dim_a,
                                           const std::vector<MatrixF>& b, int dim_b,
                                           PrimeField field);

// Embeds G1 top-left, G2 bottom-right, and adds the m(n-m) elementary
// unipotent generators 1 + E_{i,m+j}; records block metadata.
GroupSpec block_group_spec(PrimeField field, std::vector<MatrixF> g1_generators,
                           std::vector<MatrixF> g2_generators, int m, int n);

} // namespace minv

#endif
