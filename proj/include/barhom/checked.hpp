#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace barhom {

using i64 = std::int64_t;

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Signed 64-bit arithmetic overflowed. Raised instead of wrapping silently.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// A group/module/cochain spec was malformed. `field` names the offending input.
struct SpecError : Error {
    std::string field;
    SpecError(std::string field_, const std::string& what)
        : Error(what), field(std::move(field_)) {}
};

/// A computation would exceed the configured basis-size bound.
struct SizeGuardError : Error {
    explicit SizeGuardError(const std::string& what) : Error(what) {}
};

namespace checked {

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

/// Canonical representative in [0, m) for m > 0; identity for m == 0.
inline i64 reduce_mod(i64 x, i64 m) {
    if (m == 0) return x;
    i64 r = x % m;
    if (r < 0) r += m;
    return r;
}

inline i64 gcd(i64 a, i64 b) {
    if (a < 0) a = neg(a);
    if (b < 0) b = neg(b);
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace checked
} // namespace barhom
