#include "minv/dickson.hpp"

#include <algorithm>
#include <map>

namespace minv {

namespace {

void check_basis(const std::vector<int>& basis, int nvars) {
    std::vector<int> sorted = basis;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= nvars)
            throw std::invalid_argument("span basis: variable index out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("span basis: repeated variable");
    }
}

bool is_power_of(std::int64_t value, std::uint32_t p, int* k_out) {
    int k = 0;
    std::int64_t v = 1;
    while (v < value) {
        v *= p;
        ++k;
    }
    if (v != value)
        return false;
    *k_out = k;
    return true;
}

} // namespace

Polynomial span_product(const Polynomial& target, const std::vector<int>& v2_basis) {
    const PrimeField field = target.field();
    const int nvars = target.nvars();
    check_basis(v2_basis, nvars);
    Homogeneity h = target.homogeneity();
    if (!target.is_zero() && (!h.homogeneous || *h.degree > 1))
        throw std::invalid_argument("span_product: target must be a linear form");

    const std::uint32_t p = field.p();
    const int d = static_cast<int>(v2_basis.size());
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i)
        total *= p;

    Polynomial result = Polynomial::constant(field, nvars, 1);
    std::vector<std::uint32_t> coeffs(std::size_t(d), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        // digits of idx base p, last basis coordinate fastest
        std::uint64_t t = idx;
        for (int i = d - 1; i >= 0; --i) {
            coeffs[std::size_t(i)] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        Polynomial factor = target;
        std::vector<std::uint32_t> row(std::size_t(nvars), 0);
        bool any = false;
        for (int i = 0; i < d; ++i)
            if (coeffs[std::size_t(i)] != 0) {
                row[std::size_t(v2_basis[std::size_t(i)])] = coeffs[std::size_t(i)];
                any = true;
            }
        if (any)
            factor = factor + Polynomial::linear(field, row);
        result = result * factor;
    }
    return result;
}

AdditiveExpansion span_expansion(const std::vector<int>& v2_basis, int nvars, PrimeField field) {
    check_basis(v2_basis, nvars);
    const std::uint32_t p = field.p();
    const int d = static_cast<int>(v2_basis.size());

    // fresh formal variable appended after the ambient ones
    const int wide = nvars + 1;
    Polynomial formal = Polynomial::variable(field, wide, nvars);
    Polynomial product = span_product(formal, v2_basis);

    std::vector<std::map<Exponents, std::int64_t>> buckets(std::size_t(d) + 1);
    for (const Term& t : product.terms()) {
        std::int64_t e_formal = t.mono.exps[std::size_t(nvars)];
        int k = 0;
        if (!is_power_of(e_formal, p, &k) || k > d)
            throw std::runtime_error("span_expansion: non-additive expansion detected");
        Exponents ambient(t.mono.exps.begin(), t.mono.exps.end() - 1);
        buckets[std::size_t(k)][std::move(ambient)] += t.coeff;
    }

    AdditiveExpansion out;
    out.subspace_dim = d;
    std::int64_t pk = 1, pd = 1;
    for (int i = 0; i < d; ++i)
        pd *= p;
    for (int k = 0; k <= d; ++k) {
        std::vector<std::pair<Exponents, std::int64_t>> raw(buckets[std::size_t(k)].begin(),
                                                            buckets[std::size_t(k)].end());
        Polynomial s = Polynomial::from_terms(field, nvars, std::move(raw));
        Homogeneity h = s.homogeneity();
        if (s.is_zero() || !h.homogeneous || *h.degree != pd - pk)
            throw std::runtime_error("span_expansion: coefficient has wrong degree");
        std::uint32_t sign = ((d - k) % 2 == 0) ? 1 : field.neg(1);
        out.signed_coeffs.push_back(s);
        out.dickson_coeffs.push_back(s.scaled(sign));
        pk *= p;
    }
    if (!out.signed_coeffs.back().is_one())
        throw std::runtime_error("span_expansion: leading coefficient is not 1");
    return out;
}

std::vector<Polynomial> dickson_generators(int n, std::uint32_t p) {
    if (n < 1)
        throw std::invalid_argument("dickson_generators: n must be positive");
    PrimeField field(p);
    std::vector<int> basis(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        basis[std::size_t(i)] = i;
    AdditiveExpansion ex = span_expansion(basis, n, field);
    std::vector<Polynomial> out(ex.dickson_coeffs.begin(), ex.dickson_coeffs.end() - 1);
    return out;
}

EulerClass euler_class(int n, std::uint32_t p) {
    if (n < 1)
        throw std::invalid_argument("euler_class: n must be positive");
    PrimeField field(p);
    Polynomial e = Polynomial::constant(field, n, 1);

    // projective representatives: first nonzero coordinate equals 1,
    // enumerated in lexicographic coefficient order
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= p;
    std::vector<std::uint32_t> v(std::size_t(n), 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = n - 1; i >= 0; --i) {
            v[std::size_t(i)] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        std::uint32_t first = 0;
        for (int i = 0; i < n; ++i)
            if (v[std::size_t(i)] != 0) {
                first = v[std::size_t(i)];
                break;
            }
        if (first != 1)
            continue;
        e = e * Polynomial::linear(field, v);
    }

    Polynomial c0 = dickson_generators(n, p).front();
    Polynomial ep = e.pow(p - 1);
    if (ep.is_zero() || c0.is_zero())
        throw std::runtime_error("euler_class: degenerate relation");
    std::uint32_t sigma = field.mul(ep.terms().front().coeff, field.inv(c0.terms().front().coeff));
    if (ep != c0.scaled(sigma))
        throw std::runtime_error("euler_class: e^{p-1} is not proportional to c_{n,0}");
    // u^{p-1} = 1 for every unit, so sigma cannot be moved by rescaling e;
    // the classical normalization gives sigma = 1 and we record it as found.
    return EulerClass{e, sigma};
}

} // namespace minv
