// Copyright 2026 the nilmetric authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NILMETRIC_BIGINT_HPP
#define NILMETRIC_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace nilmetric {

// Exact signed integer of unbounded magnitude. Sign-magnitude with base-2^32
// limbs, little endian, no trailing zero limbs; sign is 0 exactly for zero.
// Entries of unitriangular matrix products grow multiplicatively, so every
// group-arithmetic path uses this type instead of fixed-width integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(const std::string& s);  // throws on bad input

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws if out of range
    double to_double() const;       // rounds; +-inf on extreme overflow

    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // q = floor(|this| / d) on the magnitude, returns remainder; d in [1, 2^32).
    // Only used for decimal conversion, so a small-divisor form is enough.
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& mag, std::uint32_t d);

    BigInt pow_u(unsigned e) const;  // this^e, e >= 0
    BigInt half() const;             // truncated division by 2

    int compare(const BigInt& o) const;  // -1, 0, 1
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    // Magnitude bytes, little endian, no trailing zeros. Used by the canonical
    // element encoding.
    std::vector<std::uint8_t> magnitude_bytes() const;

    std::size_t bit_length() const;  // of the magnitude; 0 for zero

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void normalize();
    static int compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

// floor(m^(1/k)) for m >= 0, k >= 1, exact: the returned r satisfies
// r^k <= m < (r+1)^k.
BigInt integer_kth_root(const BigInt& m, unsigned k);

}  // namespace nilmetric

#endif
