#include "decindex/natural.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace decindex {

namespace mp = boost::multiprecision;

OpCounts& thread_op_counts() {
    thread_local OpCounts counts;
    return counts;
}

Natural::Natural(const Backend& v) : v_(v) {
    if (v_.sign() < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::from_string(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("Natural: empty numeral");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("Natural: non-digit in numeral");
    }
    // Chunked accumulation keeps this linear-ish without going through the
    // counted operators.
    Backend v = 0;
    std::size_t i = 0;
    while (i < digits.size()) {
        const std::size_t len = std::min<std::size_t>(18, digits.size() - i);
        std::uint64_t chunk = 0;
        std::uint64_t scale = 1;
        for (std::size_t j = 0; j < len; ++j) {
            chunk = chunk * 10 + static_cast<std::uint64_t>(digits[i + j] - '0');
            scale *= 10;
        }
        v = v * scale + chunk;
        i += len;
    }
    return Natural(v);
}

std::string Natural::to_string() const { return v_.str(); }

std::size_t Natural::digit_count() const { return v_.is_zero() ? 1 : v_.str().size(); }

std::size_t Natural::bit_length() const { return v_.is_zero() ? 0 : mp::msb(v_) + 1; }

bool Natural::fits_u64() const { return bit_length() <= 64; }

std::uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw std::out_of_range("Natural: value exceeds 64 bits");
    return v_.convert_to<std::uint64_t>();
}

double Natural::to_double() const { return v_.convert_to<double>(); }

Natural& Natural::operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
}

Natural& Natural::operator-=(const Natural& o) {
    if (v_ < o.v_) throw std::domain_error("Natural: subtraction underflow");
    v_ -= o.v_;
    return *this;
}

Natural& Natural::operator*=(const Natural& o) {
    ++thread_op_counts().multiplications;
    v_ *= o.v_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o) {
    if (o.v_.is_zero()) throw std::domain_error("Natural: division by zero");
    ++thread_op_counts().divisions;
    v_ /= o.v_;
    return *this;
}

Natural& Natural::operator%=(const Natural& o) {
    if (o.v_.is_zero()) throw std::domain_error("Natural: division by zero");
    ++thread_op_counts().divisions;
    v_ %= o.v_;
    return *this;
}

Natural& Natural::operator<<=(std::size_t bits) {
    v_ <<= bits;
    return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
    v_ >>= bits;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_.str(); }

namespace {

// Below these sizes a double-precision seed is within one of the true root, so
// a fixed candidate check finishes the job with a constant operation count.
constexpr std::size_t kSmallSqrtBits = 96;
constexpr std::size_t kSmallCbrtBits = 144;

Natural small_floor_sqrt(const Natural& n) {
    const auto seed = static_cast<std::uint64_t>(std::sqrt(n.to_double()));
    const Natural s = seed;
    const Natural lo = seed == 0 ? Natural{0} : Natural{seed - 1};
    const Natural hi = s + 1;
    const Natural hi_sq = hi * hi;
    const Natural s_sq = s * s;
    if (hi_sq <= n) return hi;
    if (s_sq <= n) return s;
    return lo;
}

Natural small_floor_cbrt(const Natural& n) {
    const auto seed = static_cast<std::uint64_t>(std::cbrt(n.to_double()));
    const Natural s = seed;
    const Natural lo = seed == 0 ? Natural{0} : Natural{seed - 1};
    const Natural hi = s + 1;
    const Natural hi_cube = hi * hi * hi;
    const Natural s_cube = s * s * s;
    if (hi_cube <= n) return hi;
    if (s_cube <= n) return s;
    return lo;
}

}  // namespace

Natural floor_sqrt(const Natural& n) {
    if (n.bit_length() <= kSmallSqrtBits) return small_floor_sqrt(n);
    std::size_t shift = n.bit_length() - kSmallSqrtBits;
    shift += shift % 2;
    // (floor_sqrt(n >> shift) + 1) << shift/2 is never below the true root.
    Natural x = (small_floor_sqrt(n >> shift) + 1) << (shift / 2);
    for (;;) {
        Natural y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

Natural floor_cbrt(const Natural& n) {
    if (n.bit_length() <= kSmallCbrtBits) return small_floor_cbrt(n);
    std::size_t shift = n.bit_length() - kSmallCbrtBits;
    shift += (3 - shift % 3) % 3;
    Natural x = (small_floor_cbrt(n >> shift) + 1) << (shift / 3);
    for (;;) {
        Natural y = (x + x + n / (x * x)) / 3;
        if (y >= x) return x;
        x = std::move(y);
    }
}

}  // namespace decindex
