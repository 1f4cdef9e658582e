#include "minv/group.hpp"

#include <deque>
#include <set>
#include <unordered_set>

#include "minv/linalg.hpp"

namespace minv {

MatrixF MatrixF::identity(PrimeField field, int n) {
    MatrixF m(field, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

MatrixF MatrixF::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
    int n = static_cast<int>(rows.size());
    MatrixF m(field, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[std::size_t(i)].size()) != n)
            throw std::invalid_argument("MatrixF: ragged rows");
        for (int j = 0; j < n; ++j)
            m.set(i, j, field.reduce(rows[std::size_t(i)][std::size_t(j)]));
    }
    return m;
}

MatrixF MatrixF::operator*(const MatrixF& o) const {
    require_same_field(field_, o.field_, "matrix mul");
    if (n_ != o.n_)
        throw std::invalid_argument("matrix mul: dimension mismatch");
    MatrixF out(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::uint64_t acc = 0;
            for (int k = 0; k < n_; ++k)
                acc += std::uint64_t(at(i, k)) * o.at(k, j);
            out.set(i, j, static_cast<std::uint32_t>(acc % field_.p()));
        }
    return out;
}

std::uint32_t MatrixF::det() const {
    return linalg::determinant(field_, std::size_t(n_), entries_);
}

MatrixF MatrixF::inverted() const {
    auto inv = linalg::inverse(field_, std::size_t(n_), entries_);
    if (!inv)
        throw std::invalid_argument("MatrixF: singular matrix");
    MatrixF out(field_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out.set(i, j, (*inv)[std::size_t(i) * n_ + j]);
    return out;
}

SubstitutionMap action_substitution(const MatrixF& g) {
    MatrixF ginv = g.inverted();
    int n = g.n();
    std::vector<Polynomial> images;
    images.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> row(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j)
            row[std::size_t(j)] = ginv.at(i, j);
        images.push_back(Polynomial::linear(g.field(), row));
    }
    return SubstitutionMap(std::move(images));
}

Polynomial act_on_variable(const MatrixF& g, int i) {
    if (i < 0 || i >= g.n())
        throw std::invalid_argument("act_on_variable: index out of range");
    return action_substitution(g).image(i);
}

Polynomial act_on_poly(const MatrixF& g, const Polynomial& f) {
    require_same_field(g.field(), f.field(), "act_on_poly");
    if (g.n() != f.nvars())
        throw std::invalid_argument("act_on_poly: shape mismatch");
    return substitute(f, action_substitution(g));
}

namespace {

// Entries packed base p; fits u64 for every n, p in scope (checked).
bool key_packable(std::uint32_t p, int n) {
    long double v = 1.0L;
    for (int i = 0; i < n * n; ++i) {
        v *= p;
        if (v > 1.8e19L)
            return false;
    }
    return true;
}

std::uint64_t pack_matrix(const MatrixF& m) {
    std::uint64_t key = 0;
    const auto& e = m.entries();
    for (std::size_t i = e.size(); i-- > 0;)
        key = key * m.field().p() + e[i];
    return key;
}

MatrixF unpack_matrix(std::uint64_t key, PrimeField field, int n) {
    MatrixF m(field, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.set(i, j, static_cast<std::uint32_t>(key % field.p()));
            key /= field.p();
        }
    return m;
}

} // namespace

std::optional<OrderResult> closure_order(const GroupSpec& spec, std::uint64_t cap) {
    const PrimeField& field = spec.field;
    const int n = spec.n;
    for (const MatrixF& g : spec.generators)
        if (!g.invertible())
            throw std::invalid_argument("closure_order: singular generator");

    MatrixF id = MatrixF::identity(field, n);
    if (key_packable(field.p(), n)) {
        std::unordered_set<std::uint64_t> seen;
        std::deque<std::uint64_t> todo;
        seen.insert(pack_matrix(id));
        todo.push_back(pack_matrix(id));
        while (!todo.empty()) {
            MatrixF cur = unpack_matrix(todo.front(), field, n);
            todo.pop_front();
            for (const MatrixF& g : spec.generators) {
                std::uint64_t key = pack_matrix(cur * g);
                if (seen.insert(key).second) {
                    if (seen.size() > cap)
                        return std::nullopt;
                    todo.push_back(key);
                }
            }
        }
        return OrderResult{seen.size(), OrderMethod::closure};
    }
    std::set<std::vector<std::uint32_t>> seen;
    std::deque<MatrixF> todo;
    seen.insert(id.entries());
    todo.push_back(id);
    while (!todo.empty()) {
        MatrixF cur = todo.front();
        todo.pop_front();
        for (const MatrixF& g : spec.generators) {
            MatrixF next = cur * g;
            if (seen.insert(next.entries()).second) {
                if (seen.size() > cap)
                    return std::nullopt;
                todo.push_back(next);
            }
        }
    }
    return OrderResult{seen.size(), OrderMethod::closure};
}

OrderResult block_order(const GroupSpec& spec, std::uint64_t factor_cap) {
    if (!spec.block)
        throw std::invalid_argument("block_order: missing block structure");
    const BlockStructure& blk = *spec.block;
    const int m = blk.m;
    const int d = spec.n - m;
    GroupSpec g1{spec.field, m, blk.g1_generators, std::nullopt};
    GroupSpec g2{spec.field, d, blk.g2_generators, std::nullopt};
    auto o1 = m == 0 ? std::optional<OrderResult>(OrderResult{1, OrderMethod::closure})
                     : closure_order(g1, factor_cap);
    auto o2 = d == 0 ? std::optional<OrderResult>(OrderResult{1, OrderMethod::closure})
                     : closure_order(g2, factor_cap);
    if (!o1 || !o2)
        throw std::runtime_error("block_order: factor closure exceeded cap");
    std::uint64_t order = o1->order * o2->order;
    for (int i = 0; i < m * d; ++i)
        order *= spec.field.p();
    return OrderResult{order, OrderMethod::block_formula};
}

std::optional<OrderResult> group_order(const GroupSpec& spec, std::uint64_t cap) {
    if (spec.block)
        return block_order(spec, cap);
    return closure_order(spec, cap);
}

std::vector<MatrixF> standard_generators(MatrixGroupFamily family, int n, std::uint32_t p) {
    PrimeField field(p);
    std::vector<MatrixF> gens;
    if (n < 1)
        throw std::invalid_argument("standard_generators: n must be positive");
    if (n > 1) {
        MatrixF t = MatrixF::identity(field, n);
        t.set(0, 1, 1);
        gens.push_back(t);
        MatrixF c(field, n);
        for (int i = 0; i + 1 < n; ++i)
            c.set(i + 1, i, 1);
        // sign fix makes the cycle land in SL
        c.set(0, n - 1, (n % 2 == 0) ? field.neg(1) : 1);
        gens.push_back(c);
    }
    if (family == MatrixGroupFamily::GL && p > 2) {
        MatrixF d = MatrixF::identity(field, n);
        d.set(0, 0, field.primitive_root());
        gens.push_back(d);
    }
    return gens;
}

std::vector<MatrixF> direct_sum_generators(const std::vector<MatrixF>& a, int dim_a,
                                           const std::vector<MatrixF>& b, int dim_b,
                                           PrimeField field) {
    const int n = dim_a + dim_b;
    std::vector<MatrixF> gens;
    for (const MatrixF& g : a) {
        if (g.n() != dim_a)
            throw std::invalid_argument("direct_sum_generators: A block dimension mismatch");
        MatrixF e = MatrixF::identity(field, n);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                e.set(i, j, g.at(i, j));
        gens.push_back(e);
    }
    for (const MatrixF& g : b) {
        if (g.n() != dim_b)
            throw std::invalid_argument("direct_sum_generators: B block dimension mismatch");
        MatrixF e = MatrixF::identity(field, n);
        for (int i = 0; i < dim_b; ++i)
            for (int j = 0; j < dim_b; ++j)
                e.set(dim_a + i, dim_a + j, g.at(i, j));
        gens.push_back(e);
    }
    return gens;
}

GroupSpec block_group_spec(PrimeField field, std::vector<MatrixF> g1_generators,
                           std::vector<MatrixF> g2_generators, int m, int n) {
    if (m < 0 || m > n)
        throw std::invalid_argument("block_group_spec: bad block split");
    const int d = n - m;
    for (const MatrixF& g : g1_generators)
        if (g.n() != m)
            throw std::invalid_argument("block_group_spec: G1 generator dimension mismatch");
    for (const MatrixF& g : g2_generators)
        if (g.n() != d)
            throw std::invalid_argument("block_group_spec: G2 generator dimension mismatch");

    std::vector<MatrixF> gens;
    for (const MatrixF& g : g1_generators) {
        MatrixF e = MatrixF::identity(field, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                e.set(i, j, g.at(i, j));
        gens.push_back(e);
    }
    for (const MatrixF& g : g2_generators) {
        MatrixF e = MatrixF::identity(field, n);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                e.set(m + i, m + j, g.at(i, j));
        gens.push_back(e);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < d; ++j) {
            MatrixF e = MatrixF::identity(field, n);
            e.set(i, m + j, 1);
            gens.push_back(e);
        }
    GroupSpec spec{field, n, std::move(gens), std::nullopt};
    spec.block = BlockStructure{m, std::move(g1_generators), std::move(g2_generators)};
    return spec;
}

} // namespace minv
