#pragma once

// Overflow-checked 64-bit integer helpers for Green ring coefficients.

#include <cstdint>
#include <stdexcept>

namespace taft {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in subtraction");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
    return out;
}

}  // namespace taft
