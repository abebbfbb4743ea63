// finite_field.hpp -- small finite fields with precomputed tables.
//
// Supports GF(q) for q in {2,3,4,5,7,8,9,11,13,16}.  Elements are indices
// 0..q-1; for prime q the index is the residue, for prime powers it encodes
// the coefficient vector of the residue polynomial in base p.  Addition,
// multiplication, negation and inversion are table lookups, which keeps the
// inner enumeration loops branch-free.

#pragma once

#include <cstdint>
#include <vector>

#include "curvelink/exactpoly.hpp"

namespace curvelink {

struct unsupported_field : calc_error {
    using calc_error::calc_error;
};

class finite_field {
  public:
    explicit finite_field(int q);
    finite_field() : finite_field(2) {}

    int q() const { return q_; }
    int characteristic() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t inv(uint8_t a) const;
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }
    // image of an integer under Z -> GF(q) (prime subfield)
    uint8_t from_int(int64_t n) const;

    // a + b*c, the fused op used throughout row reduction
    uint8_t axpy(uint8_t a, uint8_t b, uint8_t c) const { return add(a, mul(b, c)); }

  private:
    int q_ = 2, p_ = 2, deg_ = 1;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace curvelink
