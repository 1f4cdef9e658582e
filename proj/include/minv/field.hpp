#ifndef MINV_FIELD_HPP
#define MINV_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minv {

// Arithmetic context for a prime field F_p. Elements are plain uint32_t
// values kept fully reduced in [0, p); the modulus lives here, not in the
// elements. The parameter is named q in formula-facing code paths, but only
// q = p (prime) is supported.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p > (1u << 16))
            throw std::invalid_argument("PrimeField: modulus out of range: " + std::to_string(p));
        for (std::uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("PrimeField: modulus not prime: " + std::to_string(p));
    }

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1)
                acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }

    // a^{p-2}; throws on zero.
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0)
            throw std::invalid_argument("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }

    // Reduces an arbitrary signed value into [0, p).
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0)
            r += p_;
        return static_cast<std::uint32_t>(r);
    }

    // Smallest generator of the multiplicative group.
    std::uint32_t primitive_root() const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  private:
    std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b, const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": modulus mismatch");
}

} // namespace minv

#endif
