#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace decindex {

/// Per-thread tally of the big-integer operations issued through Natural.
/// Additions and comparisons are not counted; they are linear in operand size
/// and never dominate.
struct OpCounts {
    std::uint64_t multiplications = 0;
    std::uint64_t divisions = 0;  // includes modulo

    std::uint64_t total() const { return multiplications + divisions; }
    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

OpCounts& thread_op_counts();

/// Captures the operations performed on this thread between construction and
/// counts().
class OpCountScope {
public:
    OpCountScope() : start_(thread_op_counts()) {}
    OpCounts counts() const {
        const OpCounts& now = thread_op_counts();
        return {now.multiplications - start_.multiplications, now.divisions - start_.divisions};
    }

private:
    OpCounts start_;
};

/// Arbitrary-precision non-negative integer. Subtraction that would go below
/// zero throws std::domain_error.
class Natural {
public:
    using Backend = boost::multiprecision::cpp_int;

    Natural() = default;
    Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Natural(const Backend& v);

    /// Parses a base-10 numeral (digits only). Throws std::invalid_argument.
    static Natural from_string(std::string_view digits);

    std::string to_string() const;
    /// Number of base-10 digits ("0" has one).
    std::size_t digit_count() const;
    bool is_zero() const { return v_.is_zero(); }
    bool is_odd() const { return boost::multiprecision::bit_test(v_, 0); }
    /// Index of the highest set bit; 0 for zero.
    std::size_t bit_length() const;
    /// Value as uint64 if it fits.
    bool fits_u64() const;
    std::uint64_t to_u64() const;
    double to_double() const;

    const Backend& backend() const { return v_; }

    Natural& operator+=(const Natural& o);
    Natural& operator-=(const Natural& o);
    Natural& operator*=(const Natural& o);
    Natural& operator/=(const Natural& o);
    Natural& operator%=(const Natural& o);
    Natural& operator<<=(std::size_t bits);
    Natural& operator>>=(std::size_t bits);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }
    friend Natural operator<<(Natural a, std::size_t bits) { return a <<= bits; }
    friend Natural operator>>(Natural a, std::size_t bits) { return a >>= bits; }

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    Backend v_;
};

/// floor(sqrt(n)), exact.
Natural floor_sqrt(const Natural& n);
/// floor(cbrt(n)), exact.
Natural floor_cbrt(const Natural& n);

}  // namespace decindex
