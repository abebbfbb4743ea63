#include "curvelink/finite_field.hpp"

#include <string>

namespace curvelink {

namespace {

// modulus polynomials for the prime-power fields, low degree first,
// omitting the leading 1:  x^2+x+1, x^3+x+1, x^2+2x+2, x^4+x+1
const int* field_modulus(int q, int& p, int& deg) {
    static const int m4[] = {1, 1};
    static const int m8[] = {1, 1, 0};
    static const int m9[] = {2, 2};
    static const int m16[] = {1, 1, 0, 0};
    switch (q) {
        case 4: p = 2; deg = 2; return m4;
        case 8: p = 2; deg = 3; return m8;
        case 9: p = 3; deg = 2; return m9;
        case 16: p = 2; deg = 4; return m16;
        default: return nullptr;
    }
}

void to_digits(int idx, int p, int deg, int* d) {
    for (int i = 0; i < deg; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
}

int from_digits(const int* d, int p, int deg) {
    int idx = 0;
    for (int i = deg - 1; i >= 0; --i) idx = idx * p + d[i];
    return idx;
}

}  // namespace

finite_field::finite_field(int q) : q_(q) {
    const bool prime = (q == 2 || q == 3 || q == 5 || q == 7 || q == 11 || q == 13);
    const int* mod = nullptr;
    if (prime) {
        p_ = q;
        deg_ = 1;
    } else {
        mod = field_modulus(q, p_, deg_);
        if (!mod) throw unsupported_field("unsupported field size q=" + std::to_string(q));
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    int da[4], db[4], dc[8];
    for (int a = 0; a < q; ++a) {
        to_digits(a, p_, deg_, da);
        for (int i = 0; i < deg_; ++i) da[i] = (p_ - da[i]) % p_;
        neg_[a] = (uint8_t)from_digits(da, p_, deg_);
    }
    for (int a = 0; a < q; ++a) {
        to_digits(a, p_, deg_, da);
        for (int b = 0; b < q; ++b) {
            to_digits(b, p_, deg_, db);
            int ds[4];
            for (int i = 0; i < deg_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = (uint8_t)from_digits(ds, p_, deg_);
            // multiply polynomials, reduce by modulus
            for (int i = 0; i < 2 * deg_; ++i) dc[i] = 0;
            for (int i = 0; i < deg_; ++i)
                for (int j = 0; j < deg_; ++j) dc[i + j] = (dc[i + j] + da[i] * db[j]) % p_;
            for (int i = 2 * deg_ - 2; i >= deg_; --i) {
                int c = dc[i];
                if (c == 0) continue;
                dc[i] = 0;
                for (int j = 0; j < deg_; ++j)
                    dc[i - deg_ + j] = (dc[i - deg_ + j] + (p_ - 1) * c % p_ * mod[j]) % p_;
            }
            mul_[a * q + b] = (uint8_t)from_digits(dc, p_, deg_);
        }
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = (uint8_t)b;
}

uint8_t finite_field::inv(uint8_t a) const {
    if (a == 0) throw calc_error("inverse of zero in GF(q)");
    return inv_[a];
}

uint8_t finite_field::from_int(int64_t n) const {
    int64_t r = n % p_;
    if (r < 0) r += p_;
    return (uint8_t)r;
}

}  // namespace curvelink
