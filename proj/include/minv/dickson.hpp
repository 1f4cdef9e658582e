#ifndef MINV_DICKSON_HPP
#define MINV_DICKSON_HPP

#include <cstdint>
#include <vector>

#include "minv/field.hpp"
#include "minv/poly.hpp"

namespace minv {

// Expansion of the span product applied to a formal variable X over a
// d-dimensional space W of linear forms:
//   prod_{w in W} (X + w) = sum_k S_k X^{p^k},  S_d = 1.
// The Dickson coefficients are the sign-folded c_{d,k} = (-1)^{d-k} S_k;
// c_{d,k} is homogeneous of degree p^d - p^k.
struct AdditiveExpansion {
    int subspace_dim = 0;                   // d
    std::vector<Polynomial> signed_coeffs;  // S_0..S_d in the ambient ring
    std::vector<Polynomial> dickson_coeffs; // c_{d,0}..c_{d,d}
};

// Product of one linear form per projective point, normalized so the first
// nonzero coordinate of each representative is 1. Satisfies
// e^{p-1} = sigma * c_{n,0} exactly; sigma is computed, never assumed.
struct EulerClass {
    Polynomial e;
    std::uint32_t sigma = 1;
};

// prod over all p^d vectors w of the span of the given basis variables of
// (target + w), multiplied incrementally in lexicographic coefficient order.
// target must be a linear form (degree <= 1, homogeneous or zero).
Polynomial span_product(const Polynomial& target, const std::vector<int>& v2_basis);

// Applies span_product to a fresh formal variable and reads the coefficients
// off the p^k-power terms; rejects any non-additive expansion.
AdditiveExpansion span_expansion(const std::vector<int>& v2_basis, int nvars, PrimeField field);

// c_{n,0}, ..., c_{n,n-1} in n variables; degrees p^n - p^k.
std::vector<Polynomial> dickson_generators(int n, std::uint32_t p);

EulerClass euler_class(int n, std::uint32_t p);

} // namespace minv

#endif
