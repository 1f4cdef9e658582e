#ifndef MINV_POLY_HPP
#define MINV_POLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "minv/field.hpp"

namespace minv {

using Exponents = std::vector<std::int32_t>;

// Exponent vector with cached total degree.
struct Monomial {
    Exponents exps;
    std::int32_t deg = 0;

    Monomial() = default;
    explicit Monomial(Exponents e);

    std::size_t nvars() const { return exps.size(); }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Graded lexicographic order: degree first, then left-to-right exponent
// comparison. Terms are stored highest-first.
bool grlex_less(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    std::uint32_t coeff = 0; // nonzero, reduced mod p

    bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
};

struct Homogeneity {
    bool homogeneous = false;
    std::optional<std::int32_t> degree; // empty for the zero polynomial
};

// Sparse multivariate polynomial over F_p. Immutable after construction;
// terms are kept in canonical (graded lex, highest first) order with no
// zero coefficients.
class Polynomial {
  public:
    Polynomial(PrimeField field, int nvars) : field_(field), nvars_(check_nvars(nvars)) {}

    static Polynomial zero(PrimeField field, int nvars) { return Polynomial(field, nvars); }
    static Polynomial constant(PrimeField field, int nvars, std::uint32_t c);
    static Polynomial variable(PrimeField field, int nvars, int index);
    static Polynomial linear(PrimeField field, const std::vector<std::uint32_t>& coeffs);
    // From arbitrary (possibly unsorted / repeated / unreduced) terms.
    static Polynomial from_terms(PrimeField field, int nvars,
                                 std::vector<std::pair<Exponents, std::int64_t>> raw);
    // Adopts terms already in canonical form; validates and throws otherwise.
    static Polynomial from_canonical_terms(PrimeField field, int nvars, std::vector<Term> terms);

    const PrimeField& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Max total degree; empty for the zero polynomial.
    std::optional<std::int32_t> degree() const;
    Homogeneity homogeneity() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(std::uint32_t c) const;
    Polynomial pow(std::uint64_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Value at a point of F_p^n.
    std::uint32_t eval(const std::vector<std::uint32_t>& point) const;

    // Same polynomial viewed in new_nvars variables, variable i becoming
    // variable offset+i.
    Polynomial reindexed(int new_nvars, int offset) const;

    std::string to_string() const; // human-readable, x1..xn

  private:
    static int check_nvars(int nvars);

    PrimeField field_;
    int nvars_;
    std::vector<Term> terms_;
};

// Images of the source variables; applying it is a ring homomorphism.
class SubstitutionMap {
  public:
    explicit SubstitutionMap(std::vector<Polynomial> images);

    static SubstitutionMap identity(PrimeField field, int nvars);

    int source_nvars() const { return static_cast<int>(images_.size()); }
    int target_nvars() const { return target_nvars_; }
    const PrimeField& field() const { return field_; }
    const Polynomial& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }

  private:
    std::vector<Polynomial> images_;
    PrimeField field_;
    int target_nvars_;
};

Polynomial substitute(const Polynomial& f, const SubstitutionMap& s);

} // namespace minv

#endif
