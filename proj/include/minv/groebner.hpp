#ifndef MINV_GROEBNER_HPP
#define MINV_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "minv/poly.hpp"

namespace minv {

// Graded reverse lexicographic order (the Groebner engine's working order;
// polynomial storage stays graded lex).
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GroebnerOptions {
    std::int32_t degree_cap = 100;       // S-pair lcm degree ceiling
    std::size_t basis_cap = 2000;        // max basis elements
    std::size_t reduction_cap = 2000000; // total single-step reductions
    double time_budget_seconds = 60.0;
};

enum class GroebnerStatus { complete, capped };

struct GroebnerResult {
    GroebnerStatus status = GroebnerStatus::capped;
    std::vector<Polynomial> basis;          // reduced basis, monic
    std::vector<Monomial> leading_monomials; // grevlex leads, aligned with basis
    double elapsed_seconds = 0.0;
};

// Buchberger with the normal (lowest lcm degree first) strategy and the
// coprime-lead criterion. Exceeding any cap yields status capped with the
// partial basis.
GroebnerResult buchberger(const std::vector<Polynomial>& gens,
                          const GroebnerOptions& opts = GroebnerOptions{});

// Full normal form of f modulo the basis (grevlex division).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Post-hoc check that every S-polynomial of a complete basis reduces to zero.
bool groebner_selfcheck(const GroebnerResult& result);

// Every variable has a pure power among the leading monomials. Meaningful
// only for a complete basis; vars_missing collects the violators.
bool leading_ideal_zero_dimensional(const std::vector<Monomial>& leading_monomials, int nvars,
                                    std::vector<int>* vars_missing = nullptr);

} // namespace minv

#endif
