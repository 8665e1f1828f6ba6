#pragma once

// Small finite fields F_q for q = p^e with p in {2,3,5} and e in {1,2},
// table-driven. Elements are encoded 0..q-1 as a0 + p*a1 over the fixed
// irreducible (x^2+x+1 for F4, x^2+1 for F9).

#include <array>
#include <stdexcept>
#include <vector>

namespace wcl {

class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: p_ = q; e_ = 1; break;
      case 4: p_ = 2; e_ = 2; break;
      case 9: p_ = 3; e_ = 2; break;
      default: throw std::invalid_argument("unsupported field size");
    }
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    frob_.assign(q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<uint8_t>(poly_add(a, b));
        mul_[a * q + b] = static_cast<uint8_t>(poly_mul(a, b));
      }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        if (add_[a * q + b] == 0) neg_[a] = static_cast<uint8_t>(b);
        if (a != 0 && mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
      }
      int f = a;
      for (int k = 1; k < p_; ++k) f = mul_[f * q + a];  // a^p
      frob_[a] = static_cast<uint8_t>(f);
    }
  }

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return inv_[a];
  }
  int frob(int a) const { return frob_[a]; }  // x -> x^p
  // The field element for an integer (e.g. a structure constant).
  int from_int(long long v) const {
    int r = static_cast<int>(v % p_);
    return r < 0 ? r + p_ : r;
  }

 private:
  int poly_add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    return (a0 + b0) % p_ + p_ * ((a1 + b1) % p_);
  }
  int poly_mul(int a, int b) const {
    if (e_ == 1) return (a * b) % p_;
    int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
    // (a0 + a1 x)(b0 + b1 x) mod irreducible
    int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
    if (p_ == 2) {  // x^2 = x + 1
      c0 += c2;
      c1 += c2;
    } else {  // x^2 = -1
      c0 -= c2;
    }
    c0 %= p_; if (c0 < 0) c0 += p_;
    c1 %= p_; if (c1 < 0) c1 += p_;
    return c0 + p_ * c1;
  }

  int q_, p_, e_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace wcl
