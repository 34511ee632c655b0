#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "error.hpp"

namespace gca {

/// Exact Gaussian integer re + im*i.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t real, std::int64_t imag = 0) : re(real), im(imag) {}

    static constexpr GaussInt unit_i() { return {0, 1}; }

    [[nodiscard]] constexpr bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] constexpr std::int64_t norm() const { return re * re + im * im; }
    [[nodiscard]] constexpr GaussInt conj() const { return {re, -im}; }
    [[nodiscard]] constexpr bool is_unit() const { return norm() == 1; }

    constexpr GaussInt operator-() const { return {-re, -im}; }
    constexpr GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    constexpr GaussInt& operator*=(const GaussInt& o) {
        const std::int64_t r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend constexpr GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend constexpr GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend constexpr GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
    friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;

    /// Exact division by a positive integer; throws if any component is not divisible.
    [[nodiscard]] GaussInt divide_exact(std::int64_t divisor, ErrorKind on_failure) const {
        if (re % divisor != 0 || im % divisor != 0) {
            throw Error(on_failure, "inexact division of " + to_string() + " by " +
                                        std::to_string(divisor));
        }
        return {re / divisor, im / divisor};
    }

    [[nodiscard]] std::string to_string() const {
        if (im == 0) return std::to_string(re);
        if (re == 0) return std::to_string(im) + "i";
        return std::to_string(re) + (im < 0 ? "" : "+") + std::to_string(im) + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussInt& g) { return os << g.to_string(); }
};

} // namespace gca
