#include "minv/field.hpp"

namespace minv {

std::uint32_t PrimeField::primitive_root() const {
    if (p_ == 2)
        return 1;
    for (std::uint32_t g = 2; g < p_; ++g) {
        // g generates F_p^* iff g^{(p-1)/q} != 1 for every prime q | p-1
        std::uint32_t n = p_ - 1;
        bool ok = true;
        for (std::uint32_t q = 2; q * q <= n; ++q) {
            if (n % q == 0) {
                if (pow(g, (p_ - 1) / q) == 1) {
                    ok = false;
                    break;
                }
                while (n % q == 0)
                    n /= q;
            }
        }
        if (ok && n > 1 && pow(g, (p_ - 1) / n) == 1)
            ok = false;
        if (ok)
            return g;
    }
    throw std::logic_error("PrimeField: no primitive root found");
}

} // namespace minv
