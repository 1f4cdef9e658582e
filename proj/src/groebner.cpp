#include "minv/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <tuple>

namespace minv {

bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg)
        return a.deg < b.deg;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i])
            return a.exps[i] > b.exps[i]; // larger trailing exponent sorts lower
    }
    return false;
}

namespace {

using GTerm = std::pair<Monomial, std::uint32_t>;

struct GPoly {
    std::vector<GTerm> t; // grevlex descending, no zero coefficients
};

GPoly to_g(const Polynomial& p) {
    GPoly g;
    g.t.reserve(p.term_count());
    for (const Term& t : p.terms())
        g.t.emplace_back(t.mono, t.coeff);
    std::sort(g.t.begin(), g.t.end(),
              [](const GTerm& a, const GTerm& b) { return grevlex_less(b.first, a.first); });
    return g;
}

Polynomial from_g(const GPoly& g, PrimeField field, int nvars) {
    std::vector<std::pair<Exponents, std::int64_t>> raw;
    raw.reserve(g.t.size());
    for (const GTerm& t : g.t)
        raw.emplace_back(t.first.exps, t.second);
    return Polynomial::from_terms(field, nvars, std::move(raw));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg)
        return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i])
            return false;
    return true;
}

Monomial mono_quotient(const Monomial& a, const Monomial& b) {
    Monomial q;
    q.exps.resize(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        q.exps[i] = a.exps[i] - b.exps[i];
    q.deg = a.deg - b.deg;
    return q;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial l;
    l.exps.resize(a.exps.size());
    l.deg = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        l.exps[i] = std::max(a.exps[i], b.exps[i]);
        l.deg += l.exps[i];
    }
    return l;
}

Monomial mono_sum(const Monomial& a, const Monomial& b) {
    Monomial s;
    s.exps.resize(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        s.exps[i] = a.exps[i] + b.exps[i];
    s.deg = a.deg + b.deg;
    return s;
}

// out = f (from index head) - c * x^shift * g; both inputs grevlex descending.
GPoly merge_subtract(const GPoly& f, std::size_t head, const PrimeField& field, std::uint32_t c,
                     const Monomial& shift, const GPoly& g) {
    GPoly out;
    out.t.reserve(f.t.size() - head + g.t.size());
    std::size_t i = head, j = 0;
    while (i < f.t.size() && j < g.t.size()) {
        Monomial gm = mono_sum(shift, g.t[j].first);
        if (f.t[i].first == gm) {
            std::uint32_t v = field.sub(f.t[i].second, field.mul(c, g.t[j].second));
            if (v != 0)
                out.t.emplace_back(std::move(gm), v);
            ++i, ++j;
        } else if (grevlex_less(gm, f.t[i].first)) {
            out.t.push_back(f.t[i]);
            ++i;
        } else {
            std::uint32_t v = field.neg(field.mul(c, g.t[j].second));
            out.t.emplace_back(std::move(gm), v);
            ++j;
        }
    }
    for (; i < f.t.size(); ++i)
        out.t.push_back(f.t[i]);
    for (; j < g.t.size(); ++j) {
        std::uint32_t v = field.neg(field.mul(c, g.t[j].second));
        out.t.emplace_back(mono_sum(shift, g.t[j].first), v);
    }
    return out;
}

struct Reducer {
    const PrimeField& field;
    const std::vector<GPoly>& basis;
    const std::vector<Monomial>& leads;
    std::size_t* steps;

    // full normal form; skip_index excludes one basis element (for
    // inter-reduction)
    GPoly reduce(GPoly f, std::size_t skip_index = static_cast<std::size_t>(-1)) const {
        GPoly out;
        std::size_t head = 0;
        while (head < f.t.size()) {
            const Monomial& lm = f.t[head].first;
            std::size_t hit = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (k == skip_index || basis[k].t.empty())
                    continue;
                if (mono_divides(leads[k], lm)) {
                    hit = k;
                    break;
                }
            }
            if (hit == basis.size()) {
                out.t.push_back(f.t[head]);
                ++head;
                continue;
            }
            ++*steps;
            // basis is monic, so the factor is just the lead coefficient
            GPoly next = merge_subtract(f, head, field, f.t[head].second,
                                        mono_quotient(lm, leads[hit]), basis[hit]);
            f = std::move(next);
            head = 0;
        }
        return out;
    }
};

void make_monic(GPoly& g, const PrimeField& field) {
    if (g.t.empty())
        return;
    std::uint32_t inv = field.inv(g.t.front().second);
    if (inv == 1)
        return;
    for (GTerm& t : g.t)
        t.second = field.mul(t.second, inv);
}

} // namespace

GroebnerResult buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    if (gens.empty())
        throw std::invalid_argument("buchberger: no generators");
    const PrimeField field = gens.front().field();
    const int nvars = gens.front().nvars();
    for (const Polynomial& g : gens) {
        require_same_field(field, g.field(), "buchberger");
        if (g.nvars() != nvars)
            throw std::invalid_argument("buchberger: variable count mismatch");
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    std::vector<GPoly> basis;
    std::vector<Monomial> leads;
    for (const Polynomial& g : gens) {
        if (g.is_zero())
            continue;
        GPoly gp = to_g(g);
        make_monic(gp, field);
        leads.push_back(gp.t.front().first);
        basis.push_back(std::move(gp));
    }

    std::size_t steps = 0;
    Reducer red{field, basis, leads, &steps};

    // (lcm degree, i, j), processed in ascending order
    std::set<std::tuple<std::int32_t, std::size_t, std::size_t>> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace(mono_lcm(leads[i], leads[j]).deg, i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        push_pairs(j);

    bool capped = false;
    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (deg > opts.degree_cap) {
            capped = true; // everything left has even larger lcm degree
            break;
        }
        Monomial lcm = mono_lcm(leads[i], leads[j]);
        if (lcm.deg == leads[i].deg + leads[j].deg)
            continue; // coprime leads: S-polynomial reduces to zero
        GPoly s = merge_subtract(GPoly{}, 0, field, field.p() - 1,
                                 mono_quotient(lcm, leads[i]), basis[i]);
        s = merge_subtract(s, 0, field, 1, mono_quotient(lcm, leads[j]), basis[j]);
        GPoly h = red.reduce(std::move(s));
        if (!h.t.empty()) {
            make_monic(h, field);
            leads.push_back(h.t.front().first);
            basis.push_back(std::move(h));
            push_pairs(basis.size() - 1);
            if (basis.size() > opts.basis_cap) {
                capped = true;
                break;
            }
        }
        if (steps > opts.reduction_cap || elapsed() > opts.time_budget_seconds) {
            capped = true;
            break;
        }
    }

    GroebnerResult result;
    result.status = capped ? GroebnerStatus::capped : GroebnerStatus::complete;

    if (!capped) {
        // minimal basis: drop any element whose lead another lead divides
        std::vector<std::size_t> order(basis.size());
        for (std::size_t k = 0; k < order.size(); ++k)
            order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return grevlex_less(leads[a], leads[b]);
        });
        std::vector<std::size_t> kept;
        for (std::size_t k : order) {
            bool redundant = false;
            for (std::size_t m : kept)
                if (mono_divides(leads[m], leads[k])) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                kept.push_back(k);
        }
        std::vector<GPoly> minimal;
        std::vector<Monomial> minimal_leads;
        for (std::size_t k : kept) {
            minimal.push_back(basis[k]);
            minimal_leads.push_back(leads[k]);
        }
        // inter-reduce tails for the unique reduced basis
        Reducer mred{field, minimal, minimal_leads, &steps};
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            GPoly t = mred.reduce(minimal[k], k);
            make_monic(t, field);
            minimal[k] = std::move(t);
        }
        basis = std::move(minimal);
        leads = std::move(minimal_leads);
    }

    for (std::size_t k = 0; k < basis.size(); ++k) {
        result.basis.push_back(from_g(basis[k], field, nvars));
        result.leading_monomials.push_back(leads[k]);
    }
    result.elapsed_seconds = elapsed();
    return result;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    const PrimeField field = f.field();
    std::vector<GPoly> gb;
    std::vector<Monomial> leads;
    for (const Polynomial& g : basis) {
        if (g.is_zero())
            continue;
        GPoly gp = to_g(g);
        make_monic(gp, field);
        leads.push_back(gp.t.front().first);
        gb.push_back(std::move(gp));
    }
    std::size_t steps = 0;
    Reducer red{field, gb, leads, &steps};
    return from_g(red.reduce(to_g(f)), field, f.nvars());
}

bool groebner_selfcheck(const GroebnerResult& result) {
    if (result.status != GroebnerStatus::complete)
        return false;
    const auto& basis = result.basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Monomial& li = result.leading_monomials[i];
            const Monomial& lj = result.leading_monomials[j];
            Monomial lcm = mono_lcm(li, lj);
            const PrimeField field = basis[i].field();
            // S = x^{lcm-li} g_i - x^{lcm-lj} g_j, both monic
            Polynomial si = basis[i] * Polynomial::from_terms(field, basis[i].nvars(),
                                                              {{mono_quotient(lcm, li).exps, 1}});
            Polynomial sj = basis[j] * Polynomial::from_terms(field, basis[j].nvars(),
                                                              {{mono_quotient(lcm, lj).exps, 1}});
            if (!normal_form(si - sj, basis).is_zero())
                return false;
        }
    }
    return true;
}

bool leading_ideal_zero_dimensional(const std::vector<Monomial>& leading_monomials, int nvars,
                                    std::vector<int>* vars_missing) {
    bool ok = true;
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const Monomial& m : leading_monomials) {
            bool pure = true;
            for (int i = 0; i < nvars && pure; ++i)
                if (i != v && m.exps[std::size_t(i)] != 0)
                    pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) {
            ok = false;
            if (vars_missing)
                vars_missing->push_back(v);
        }
    }
    return ok;
}

} // namespace minv
