#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace klein {

// Coefficient slots of a multivector, in the fixed basis order
// {1, e0, e1, e2, e12, e20, e01, e012}. The order is part of the API
// and of every serialized form.
namespace slot {
inline constexpr std::size_t scalar = 0;
inline constexpr std::size_t e0 = 1;
inline constexpr std::size_t e1 = 2;
inline constexpr std::size_t e2 = 3;
inline constexpr std::size_t e12 = 4;
inline constexpr std::size_t e20 = 5;
inline constexpr std::size_t e01 = 6;
inline constexpr std::size_t e012 = 7;
} // namespace slot

namespace detail {

// Index set of each slot as a bitmask over {0,1,2}.
inline constexpr std::array<unsigned, 8> slot_mask = {0b000, 0b001, 0b010, 0b100,
                                                      0b110, 0b101, 0b011, 0b111};

// Slot holding a given index set.
inline constexpr std::array<std::uint8_t, 8> mask_slot = {0, 1, 2, 6, 3, 5, 4, 7};

// Sign relating each slot's basis blade to the ascending-index word:
// e20 = e2^e0 = -(e0^e2), every other slot is already ascending.
inline constexpr std::array<int, 8> slot_ascending_sign = {1, 1, 1, 1, 1, -1, 1, 1};

inline constexpr std::array<int, 8> slot_grade = {0, 1, 1, 1, 2, 2, 2, 3};

// Transposition parity of interleaving two ascending index words:
// (-1)^(number of pairs a in A, b in B with a > b).
constexpr int interleave_sign(unsigned mask_a, unsigned mask_b) {
    int crossings = 0;
    for (unsigned b = 0; b < 3; ++b) {
        if (mask_b & (1u << b)) crossings += std::popcount(mask_a >> (b + 1));
    }
    return (crossings % 2 == 0) ? 1 : -1;
}

} // namespace detail

/// A general element of the 8-dimensional algebra over the basis
/// {1, e0, e1, e2, e12, e20, e01, e012}: the universal value type for
/// scalars, lines (grade 1), points (grade 2), the pseudoscalar and spinors.
struct Multivector {
    std::array<double, 8> c{};

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr double operator[](std::size_t i) const { return c[i]; }

    constexpr bool operator==(const Multivector&) const = default;
};

constexpr Multivector multivector(double s, double d, double a, double b, double w, double x,
                                  double y, double p) {
    return Multivector{{s, d, a, b, w, x, y, p}};
}

constexpr Multivector scalar_mv(double s) { return Multivector{{s, 0, 0, 0, 0, 0, 0, 0}}; }

constexpr Multivector basis_blade(std::size_t slot_index) {
    Multivector m;
    m.c[slot_index] = 1.0;
    return m;
}

inline constexpr Multivector mv_zero{};
inline constexpr Multivector mv_one = basis_blade(slot::scalar);
inline constexpr Multivector e0 = basis_blade(slot::e0);
inline constexpr Multivector e1 = basis_blade(slot::e1);
inline constexpr Multivector e2 = basis_blade(slot::e2);
inline constexpr Multivector e12 = basis_blade(slot::e12);
inline constexpr Multivector e20 = basis_blade(slot::e20);
inline constexpr Multivector e01 = basis_blade(slot::e01);
inline constexpr Multivector e012 = basis_blade(slot::e012);
inline constexpr Multivector pseudoscalar = e012;

constexpr Multivector operator+(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

constexpr Multivector operator-(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

constexpr Multivector operator-(const Multivector& a) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
}

constexpr Multivector operator*(double s, const Multivector& a) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
}

constexpr Multivector operator*(const Multivector& a, double s) { return s * a; }

constexpr Multivector operator/(const Multivector& a, double s) { return (1.0 / s) * a; }

/// Coefficient-wise alpha*A + beta*B.
constexpr Multivector linear_combine(double alpha, const Multivector& a, double beta,
                                     const Multivector& b) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = alpha * a.c[i] + beta * b.c[i];
    return r;
}

/// Zeroes all coefficients outside grade k.
constexpr Multivector grade_select(const Multivector& a, int k) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i)
        if (detail::slot_grade[i] == k) r.c[i] = a.c[i];
    return r;
}

/// Sign-flips the components whose grade is in the given set.
constexpr Multivector grade_negate(const Multivector& a, std::initializer_list<int> grades) {
    unsigned mask = 0;
    for (int g : grades) mask |= 1u << g;
    Multivector r = a;
    for (std::size_t i = 0; i < 8; ++i)
        if (mask & (1u << detail::slot_grade[i])) r.c[i] = -r.c[i];
    return r;
}

/// The reverse, (A)_{23}: grade-2 and grade-3 components change sign.
constexpr Multivector reverse(const Multivector& a) {
    Multivector r = a;
    for (std::size_t i = slot::e12; i <= slot::e012; ++i) r.c[i] = -r.c[i];
    return r;
}

constexpr bool is_even(const Multivector& a) {
    return a.c[slot::e0] == 0.0 && a.c[slot::e1] == 0.0 && a.c[slot::e2] == 0.0 &&
           a.c[slot::e012] == 0.0;
}

/// True when every coefficient outside grade k vanishes.
constexpr bool is_k_vector(const Multivector& a, int k) {
    for (std::size_t i = 0; i < 8; ++i)
        if (detail::slot_grade[i] != k && a.c[i] != 0.0) return false;
    return true;
}

/// The grade of a pure k-vector, or -1 for zero/mixed-grade input.
constexpr int pure_grade(const Multivector& a) {
    int found = -1;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        int g = detail::slot_grade[i];
        if (found == -1) found = g;
        else if (found != g) return -1;
    }
    return found;
}

constexpr double max_abs_coefficient(const Multivector& a) {
    double m = 0.0;
    for (double v : a.c) {
        double av = v < 0 ? -v : v;
        if (av > m) m = av;
    }
    return m;
}

/// The metric-independent wedge A^B. For a k-vector and an l-vector the
/// result has grade k+l, or vanishes when k+l > 3.
constexpr Multivector outer_product(const Multivector& a, const Multivector& b) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (b.c[j] == 0.0) continue;
            unsigned ma = detail::slot_mask[i];
            unsigned mb = detail::slot_mask[j];
            if (ma & mb) continue; // repeated index: wedge vanishes
            std::size_t k = detail::mask_slot[ma | mb];
            int sign = detail::interleave_sign(ma, mb) * detail::slot_ascending_sign[i] *
                       detail::slot_ascending_sign[j] * detail::slot_ascending_sign[k];
            r.c[k] += sign * a.c[i] * b.c[j];
        }
    }
    return r;
}

} // namespace klein
