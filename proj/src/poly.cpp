#include "minv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace minv {

namespace {

constexpr std::int32_t kExponentGuard = std::int32_t{1} << 30; // total degree cap

// Monomials pack into one u64 when nvars <= 7 and total degree <= 255:
// byte 7 holds the degree, bytes 6..0 the exponents left to right. Numeric
// order on keys is then exactly graded lex, and key(a*b) = key(a) + key(b)
// with no byte carries. Every production workload here fits (<= 6 variables,
// degree <= 162); anything larger takes the generic map path.
constexpr int kPackVars = 7;
constexpr std::int32_t kPackDegree = 255;

bool packable(int nvars, std::int64_t degree_bound) {
    return nvars <= kPackVars && degree_bound <= kPackDegree;
}

std::uint64_t pack_key(const Monomial& m) {
    std::uint64_t key = std::uint64_t(static_cast<std::uint32_t>(m.deg)) << 56;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        key |= std::uint64_t(static_cast<std::uint32_t>(m.exps[i])) << (8 * (6 - i));
    return key;
}

Monomial unpack_key(std::uint64_t key, int nvars) {
    Monomial m;
    m.exps.resize(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        m.exps[static_cast<std::size_t>(i)] = static_cast<std::int32_t>((key >> (8 * (6 - i))) & 0xFF);
    m.deg = static_cast<std::int32_t>(key >> 56);
    return m;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Open-addressing accumulator over packed keys, with a generic map fallback.
class Acc {
  public:
    Acc(PrimeField field, int nvars, std::int64_t degree_bound)
        : field_(field), nvars_(nvars), packed_(packable(nvars, degree_bound)) {
        if (packed_) {
            cap_ = 1u << 12;
            keys_.assign(cap_, 0);
            vals_.assign(cap_, 0);
            used_.assign(cap_, 0);
        }
    }

    bool packed() const { return packed_; }

    void add_key(std::uint64_t key, std::uint32_t c) {
        if (c == 0)
            return;
        if (count_ * 10 >= cap_ * 7)
            grow();
        std::size_t i = mix64(key) & (cap_ - 1);
        while (used_[i]) {
            if (keys_[i] == key) {
                std::uint32_t s = vals_[i] + c;
                vals_[i] = s >= field_.p() ? s - field_.p() : s;
                return;
            }
            i = (i + 1) & (cap_ - 1);
        }
        used_[i] = 1;
        keys_[i] = key;
        vals_[i] = c;
        ++count_;
    }

    void add_mono(const Monomial& m, std::uint32_t c) {
        if (c == 0)
            return;
        if (packed_)
            add_key(pack_key(m), c);
        else {
            auto it = slow_.find(m.exps);
            if (it == slow_.end())
                slow_.emplace(m.exps, c);
            else
                it->second = field_.add(it->second, c);
        }
    }

    // poly terms scaled by c, shifted by the exponents of shift.
    void add_scaled(const Polynomial& poly, std::uint32_t c, const Monomial& shift) {
        if (c == 0)
            return;
        if (packed_) {
            const std::uint64_t base = pack_key(shift);
            if (field_.p() <= 16) {
                std::uint8_t tab[16];
                for (std::uint32_t a = 0; a < field_.p(); ++a)
                    tab[a] = static_cast<std::uint8_t>(field_.mul(a, c));
                for (const Term& t : poly.terms())
                    add_key(base + pack_key(t.mono), tab[t.coeff]);
            } else {
                for (const Term& t : poly.terms())
                    add_key(base + pack_key(t.mono), field_.mul(t.coeff, c));
            }
        } else {
            for (const Term& t : poly.terms()) {
                Monomial m = t.mono;
                for (std::size_t i = 0; i < m.exps.size(); ++i)
                    m.exps[i] += shift.exps[i];
                m.deg += shift.deg;
                add_mono(m, field_.mul(t.coeff, c));
            }
        }
    }

    std::vector<Term> take_sorted() {
        std::vector<Term> out;
        if (packed_) {
            std::vector<std::pair<std::uint64_t, std::uint32_t>> kv;
            kv.reserve(count_);
            for (std::size_t i = 0; i < cap_; ++i)
                if (used_[i] && vals_[i] != 0)
                    kv.emplace_back(keys_[i], vals_[i]);
            std::sort(kv.begin(), kv.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
            out.reserve(kv.size());
            for (const auto& [k, v] : kv)
                out.push_back(Term{unpack_key(k, nvars_), v});
        } else {
            for (const auto& [e, v] : slow_)
                if (v != 0)
                    out.push_back(Term{Monomial(e), v});
            std::sort(out.begin(), out.end(),
                      [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
        }
        return out;
    }

  private:
    void grow() {
        std::size_t ncap = cap_ * 4;
        std::vector<std::uint64_t> nkeys(ncap, 0);
        std::vector<std::uint32_t> nvals(ncap, 0);
        std::vector<std::uint8_t> nused(ncap, 0);
        for (std::size_t i = 0; i < cap_; ++i) {
            if (!used_[i])
                continue;
            std::size_t j = mix64(keys_[i]) & (ncap - 1);
            while (nused[j])
                j = (j + 1) & (ncap - 1);
            nused[j] = 1;
            nkeys[j] = keys_[i];
            nvals[j] = vals_[i];
        }
        keys_.swap(nkeys);
        vals_.swap(nvals);
        used_.swap(nused);
        cap_ = ncap;
    }

    PrimeField field_;
    int nvars_;
    bool packed_;
    std::size_t cap_ = 0, count_ = 0;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> vals_;
    std::vector<std::uint8_t> used_;
    std::map<Exponents, std::uint32_t> slow_;
};

} // namespace

Monomial::Monomial(Exponents e) : exps(std::move(e)) {
    std::int64_t d = 0;
    for (std::int32_t x : exps) {
        if (x < 0)
            throw std::invalid_argument("Monomial: negative exponent");
        d += x;
    }
    if (d >= kExponentGuard)
        throw std::overflow_error("Monomial: degree exceeds guard");
    deg = static_cast<std::int32_t>(d);
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg)
        return a.deg < b.deg;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i])
            return a.exps[i] < b.exps[i];
    return false;
}

int Polynomial::check_nvars(int nvars) {
    if (nvars < 0)
        throw std::invalid_argument("Polynomial: negative variable count");
    return nvars;
}

Polynomial Polynomial::from_canonical_terms(PrimeField field, int nvars,
                                            std::vector<Term> terms) {
    Polynomial p(field, nvars);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (static_cast<int>(terms[i].mono.nvars()) != nvars)
            throw std::invalid_argument("from_canonical_terms: wrong arity");
        if (terms[i].coeff == 0 || terms[i].coeff >= field.p())
            throw std::invalid_argument("from_canonical_terms: coefficient not reduced-nonzero");
        if (i > 0 && !grlex_less(terms[i].mono, terms[i - 1].mono))
            throw std::invalid_argument("from_canonical_terms: terms not in canonical order");
    }
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(PrimeField field, int nvars, std::uint32_t c) {
    Polynomial p(field, nvars);
    c %= field.p();
    if (c != 0)
        p.terms_.push_back(Term{Monomial(Exponents(static_cast<std::size_t>(nvars), 0)), c});
    return p;
}

Polynomial Polynomial::variable(PrimeField field, int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("Polynomial::variable: index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    Polynomial p(field, nvars);
    p.terms_.push_back(Term{Monomial(std::move(e)), 1});
    return p;
}

Polynomial Polynomial::linear(PrimeField field, const std::vector<std::uint32_t>& coeffs) {
    int n = static_cast<int>(coeffs.size());
    Polynomial p(field, n);
    for (int i = 0; i < n; ++i) {
        std::uint32_t c = coeffs[static_cast<std::size_t>(i)] % field.p();
        if (c != 0) {
            Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            p.terms_.push_back(Term{Monomial(std::move(e)), c});
        }
    }
    return p;
}

Polynomial Polynomial::from_terms(PrimeField field, int nvars,
                                  std::vector<std::pair<Exponents, std::int64_t>> raw) {
    std::map<Exponents, std::uint32_t> acc;
    for (auto& [e, c] : raw) {
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("Polynomial::from_terms: wrong exponent arity");
        std::uint32_t r = field.reduce(c);
        if (r == 0)
            continue;
        auto it = acc.find(e);
        if (it == acc.end())
            acc.emplace(std::move(e), r);
        else
            it->second = field.add(it->second, r);
    }
    Polynomial p(field, nvars);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0)
            p.terms_.push_back(Term{Monomial(e), c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.deg == 0 && terms_[0].coeff == 1;
}

std::optional<std::int32_t> Polynomial::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.front().mono.deg; // grlex front has max degree
}

Homogeneity Polynomial::homogeneity() const {
    if (terms_.empty())
        return Homogeneity{true, std::nullopt};
    std::int32_t d = terms_.front().mono.deg;
    if (terms_.back().mono.deg != d)
        return Homogeneity{false, std::nullopt};
    return Homogeneity{true, d};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_field(field_, o.field_, "poly add");
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("poly add: variable count mismatch");
    Polynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = o.terms_[j];
        if (a.mono == b.mono) {
            std::uint32_t c = field_.add(a.coeff, b.coeff);
            if (c != 0)
                out.terms_.push_back(Term{a.mono, c});
            ++i, ++j;
        } else if (grlex_less(b.mono, a.mono)) {
            out.terms_.push_back(a);
            ++i;
        } else {
            out.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        out.terms_.push_back(o.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        out.terms_.push_back(Term{t.mono, field_.neg(t.coeff)});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    c %= field_.p();
    Polynomial out(field_, nvars_);
    if (c == 0)
        return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
        out.terms_.push_back(Term{t.mono, field_.mul(t.coeff, c)});
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_field(field_, o.field_, "poly mul");
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("poly mul: variable count mismatch");
    Polynomial out(field_, nvars_);
    if (terms_.empty() || o.terms_.empty())
        return out;
    std::int64_t bound = std::int64_t(*degree()) + *o.degree();
    if (bound >= kExponentGuard)
        throw std::overflow_error("poly mul: degree exceeds guard");
    Acc acc(field_, nvars_, bound);
    if (acc.packed()) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> fa, fb;
        fa.reserve(terms_.size());
        fb.reserve(o.terms_.size());
        for (const Term& t : terms_)
            fa.emplace_back(pack_key(t.mono), t.coeff);
        for (const Term& t : o.terms_)
            fb.emplace_back(pack_key(t.mono), t.coeff);
        const std::uint32_t p = field_.p();
        if (p <= 16) {
            std::uint8_t tab[256];
            for (std::uint32_t a = 0; a < p; ++a)
                for (std::uint32_t b = 0; b < p; ++b)
                    tab[a * 16 + b] = static_cast<std::uint8_t>(a * b % p);
            for (const auto& [ka, ca] : fa)
                for (const auto& [kb, cb] : fb)
                    acc.add_key(ka + kb, tab[ca * 16 + cb]);
        } else {
            for (const auto& [ka, ca] : fa)
                for (const auto& [kb, cb] : fb)
                    acc.add_key(ka + kb, field_.mul(ca, cb));
        }
    } else {
        for (const Term& a : terms_) {
            Monomial shift = a.mono;
            acc.add_scaled(o, a.coeff, shift);
        }
    }
    out.terms_ = acc.take_sorted();
    return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = Polynomial::constant(field_, nvars_, 1);
    if (e == 0)
        return result;
    if (!terms_.empty()) {
        std::int64_t d = *degree();
        if (d > 0 && e > std::uint64_t(kExponentGuard) / std::uint64_t(d))
            throw std::overflow_error("poly pow: degree exceeds guard");
    }
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::uint32_t Polynomial::eval(const std::vector<std::uint32_t>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("poly eval: wrong point arity");
    std::uint32_t acc = 0;
    for (const Term& t : terms_) {
        std::uint32_t v = t.coeff;
        for (int i = 0; i < nvars_; ++i) {
            std::int32_t e = t.mono.exps[static_cast<std::size_t>(i)];
            if (e != 0)
                v = field_.mul(v, field_.pow(point[static_cast<std::size_t>(i)],
                                             static_cast<std::uint64_t>(e)));
        }
        acc = field_.add(acc, v);
    }
    return acc;
}

Polynomial Polynomial::reindexed(int new_nvars, int offset) const {
    if (offset < 0 || offset + nvars_ > new_nvars)
        throw std::invalid_argument("poly reindex: target range out of bounds");
    Polynomial out(field_, new_nvars);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m;
        m.exps.assign(static_cast<std::size_t>(new_nvars), 0);
        for (int i = 0; i < nvars_; ++i)
            m.exps[static_cast<std::size_t>(offset + i)] = t.mono.exps[static_cast<std::size_t>(i)];
        m.deg = t.mono.deg;
        out.terms_.push_back(Term{std::move(m), t.coeff});
    }
    return out; // shared zero-padding keeps the relative order intact
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        bool wrote = false;
        if (t.coeff != 1 || t.mono.deg == 0) {
            os << t.coeff;
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            std::int32_t e = t.mono.exps[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            if (wrote)
                os << "*";
            os << "x" << (i + 1);
            if (e > 1)
                os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

SubstitutionMap::SubstitutionMap(std::vector<Polynomial> images)
    : images_(std::move(images)),
      field_(images_.empty() ? PrimeField(2) : images_.front().field()),
      target_nvars_(images_.empty() ? 0 : images_.front().nvars()) {
    if (images_.empty())
        throw std::invalid_argument("SubstitutionMap: no images");
    for (const Polynomial& im : images_) {
        require_same_field(field_, im.field(), "SubstitutionMap");
        if (im.nvars() != target_nvars_)
            throw std::invalid_argument("SubstitutionMap: inconsistent target arity");
    }
}

SubstitutionMap SubstitutionMap::identity(PrimeField field, int nvars) {
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        images.push_back(Polynomial::variable(field, nvars, i));
    return SubstitutionMap(std::move(images));
}

Polynomial substitute(const Polynomial& f, const SubstitutionMap& s) {
    require_same_field(f.field(), s.field(), "substitute");
    if (f.nvars() != s.source_nvars())
        throw std::invalid_argument("substitute: arity mismatch");
    const PrimeField field = f.field();
    const int n = f.nvars();
    const int tn = s.target_nvars();
    Polynomial out(field, tn);
    if (f.is_zero())
        return out;

    std::vector<std::int64_t> image_deg(static_cast<std::size_t>(n), 0);
    std::vector<bool> image_zero(static_cast<std::size_t>(n), false);
    std::vector<bool> image_mono(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        const Polynomial& im = s.image(i);
        if (im.is_zero())
            image_zero[static_cast<std::size_t>(i)] = true;
        else {
            image_deg[static_cast<std::size_t>(i)] = *im.degree();
            image_mono[static_cast<std::size_t>(i)] = im.term_count() == 1;
        }
    }

    std::int64_t bound = 0;
    for (const Term& t : f.terms()) {
        std::int64_t d = 0;
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            std::int32_t e = t.mono.exps[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            if (image_zero[static_cast<std::size_t>(i)])
                dead = true;
            else
                d += image_deg[static_cast<std::size_t>(i)] * e;
        }
        if (!dead)
            bound = std::max(bound, d);
    }
    if (bound >= kExponentGuard)
        throw std::overflow_error("substitute: degree exceeds guard");

    std::vector<std::map<std::int32_t, Polynomial>> power_cache(static_cast<std::size_t>(n));
    auto power_of_image = [&](int i, std::int32_t e) -> const Polynomial& {
        auto& cache = power_cache[static_cast<std::size_t>(i)];
        auto it = cache.find(e);
        if (it == cache.end())
            it = cache.emplace(e, s.image(i).pow(static_cast<std::uint64_t>(e))).first;
        return it->second;
    };

    Acc acc(field, tn, bound);
    const Monomial unit(Exponents(static_cast<std::size_t>(tn), 0));
    for (const Term& t : f.terms()) {
        std::uint32_t c = t.coeff;
        Monomial shift = unit;
        std::vector<std::pair<int, std::int32_t>> general;
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            std::int32_t e = t.mono.exps[static_cast<std::size_t>(i)];
            if (e == 0)
                continue;
            if (image_zero[static_cast<std::size_t>(i)]) {
                dead = true;
            } else if (image_mono[static_cast<std::size_t>(i)]) {
                const Term& it = s.image(i).terms().front();
                for (int k = 0; k < tn; ++k)
                    shift.exps[static_cast<std::size_t>(k)] +=
                        it.mono.exps[static_cast<std::size_t>(k)] * e;
                shift.deg += it.mono.deg * e;
                c = field.mul(c, field.pow(it.coeff, static_cast<std::uint64_t>(e)));
            } else {
                general.emplace_back(i, e);
            }
        }
        if (dead || c == 0)
            continue;
        if (general.empty()) {
            acc.add_mono(shift, c);
        } else if (general.size() == 1) {
            acc.add_scaled(power_of_image(general[0].first, general[0].second), c, shift);
        } else {
            Polynomial prod = power_of_image(general[0].first, general[0].second);
            for (std::size_t k = 1; k < general.size(); ++k)
                prod = prod * power_of_image(general[k].first, general[k].second);
            acc.add_scaled(prod, c, shift);
        }
    }

    return Polynomial::from_canonical_terms(field, tn, acc.take_sorted());
}

} // namespace minv
