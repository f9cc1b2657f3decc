#ifndef MOTIVIC_FF_HPP
#define MOTIVIC_FF_HPP

#include <cstdint>
#include <vector>

#include "motivic/numeric.hpp"

namespace motivic {

// F_{p^k} with full add/mul tables.  Elements are integers in [0, p^k):
// base-p digit vectors, digit i = coefficient of x^i in the residue class.
// The modulus is the least irreducible monic degree-k polynomial, comparing
// coefficient tuples from the highest degree down, so the field presentation
// is deterministic.  Tables cap the size; everything used here is <= 343.
class FieldContext {
public:
    FieldContext(uint32_t p, uint32_t k);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t q() const { return q_; } // p^k
    const std::vector<uint32_t>& modulus() const { return modulus_; } // degree k monic, size k+1

    uint32_t add(uint32_t a, uint32_t b) const { return add_[a * q_ + b]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mul_[a * q_ + b]; }
    uint32_t inv(uint32_t a) const; // a != 0
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frobenius(uint32_t a) const { return pow(a, p_); }
    // embed a base-field scalar c in [0, p)
    uint32_t scalar(uint32_t c) const { return c % p_; }

private:
    uint32_t p_, k_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint16_t> add_, mul_;
    std::vector<uint16_t> neg_, inv_;
};

bool is_prime(uint64_t n);

} // namespace motivic

#endif
