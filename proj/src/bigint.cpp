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

#include "bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nilmetric {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // careful with INT64_MIN
    std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1u;
    mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
}

void BigInt::normalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t s = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
        }
        std::size_t pos = i + b.size();
        while (carry) {
            std::uint64_t s = r[pos] + carry;
            r[pos] = static_cast<std::uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
            ++pos;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = compare_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.mag_ = sub_mag(mag_, o.mag_);
        } else {
            r.sign_ = o.sign_;
            r.mag_ = sub_mag(o.mag_, mag_);
        }
    }
    r.normalize();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.sign_ = sign_ * o.sign_;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.normalize();
    return r;
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = compare_mag(mag_, o.mag_);
    return sign_ > 0 ? c : -c;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t m = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return m <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    return m <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1u;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64");
    std::uint64_t m = 0;
    if (mag_.size() > 1) m = static_cast<std::uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) m |= mag_[0];
    if (sign_ >= 0) return static_cast<std::int64_t>(m);
    return static_cast<std::int64_t>(~m + 1u);
}

double BigInt::to_double() const {
    double v = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        v = v * 4294967296.0 + static_cast<double>(mag_[i]);
    }
    return sign_ < 0 ? -v : v;
}

std::uint32_t BigInt::divmod_small(std::vector<std::uint32_t>& mag, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag[i];
        mag[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    return static_cast<std::uint32_t>(rem);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        std::uint32_t r = divmod_small(m, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("empty integer literal");
    BigInt r;
    BigInt billion(1000000000);
    // consume 9 digits at a time
    while (pos < s.size()) {
        std::size_t chunk = std::min<std::size_t>(9, s.size() - pos);
        std::uint32_t v = 0;
        std::uint32_t scale = 1;
        for (std::size_t i = 0; i < chunk; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
            v = v * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        r = r * (chunk == 9 ? billion : BigInt(static_cast<std::int64_t>(scale))) +
            BigInt(static_cast<std::int64_t>(v));
        pos += chunk;
    }
    if (sign < 0) r = -r;
    return r;
}

BigInt BigInt::pow_u(unsigned e) const {
    BigInt result(1);
    BigInt base = *this;
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::vector<std::uint8_t> BigInt::magnitude_bytes() const {
    std::vector<std::uint8_t> out;
    for (std::uint32_t limb : mag_) {
        out.push_back(static_cast<std::uint8_t>(limb & 0xff));
        out.push_back(static_cast<std::uint8_t>((limb >> 8) & 0xff));
        out.push_back(static_cast<std::uint8_t>((limb >> 16) & 0xff));
        out.push_back(static_cast<std::uint8_t>((limb >> 24) & 0xff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

BigInt BigInt::half() const {
    BigInt r = *this;
    std::uint32_t carry = 0;
    for (std::size_t i = r.mag_.size(); i-- > 0;) {
        std::uint32_t cur = r.mag_[i];
        r.mag_[i] = (cur >> 1) | (carry << 31);
        carry = cur & 1u;
    }
    r.normalize();
    return r;
}

BigInt integer_kth_root(const BigInt& m, unsigned k) {
    if (m.sign() < 0) throw std::domain_error("integer_kth_root: negative radicand");
    if (k == 0) throw std::domain_error("integer_kth_root: k must be positive");
    if (m.is_zero()) return BigInt(0);
    if (k == 1) return m;
    if (m.fits_int64()) {
        // float seed, then exact correction in 128-bit arithmetic
        std::int64_t v = m.to_int64();
        auto pow128 = [k](std::int64_t base) {
            __int128 acc = 1;
            for (unsigned t = 0; t < k; ++t) acc *= base;
            return acc;
        };
        auto r = static_cast<std::int64_t>(std::pow(static_cast<double>(v), 1.0 / k));
        while (r > 0 && pow128(r) > v) --r;
        while (pow128(r + 1) <= v) ++r;
        return BigInt(r);
    }
    // binary search on the invariant lo^k <= m < hi^k
    std::size_t bits = m.bit_length() / k + 2;
    BigInt lo(1), hi = BigInt(2).pow_u(static_cast<unsigned>(bits));
    while (hi - lo > BigInt(1)) {
        BigInt mid = (lo + hi).half();
        if (mid.pow_u(k) <= m) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace nilmetric
