#pragma once

#include <array>

#include "error.hpp"
#include "multivector.hpp"

namespace klein {

/// An element of the model-space algebra over {1, e^0, e^1, e^2, e^12,
/// e^20, e^01, e^012}. A separate type from Multivector so the two
/// representations cannot be mixed in products.
struct DualMultivector {
    std::array<double, 8> c{};

    constexpr double& operator[](std::size_t i) { return c[i]; }
    constexpr double operator[](std::size_t i) const { return c[i]; }

    constexpr bool operator==(const DualMultivector&) const = default;
};

constexpr DualMultivector operator+(const DualMultivector& a, const DualMultivector& b) {
    DualMultivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

constexpr DualMultivector operator-(const DualMultivector& a, const DualMultivector& b) {
    DualMultivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

constexpr DualMultivector operator-(const DualMultivector& a) {
    DualMultivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
}

constexpr DualMultivector operator*(double s, const DualMultivector& a) {
    DualMultivector r;
    for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
}

constexpr DualMultivector operator*(const DualMultivector& a, double s) { return s * a; }

// The duality transformation is a fixed signed permutation of the eight
// slots (the metric plays no part in it):
//   D(1) = -e^012   D(e0) = -e^12   D(e1) = -e^20   D(e2) = -e^01
//   D(e12) = e^0    D(e20) = e^1    D(e01) = e^2    D(e012) = 1
namespace detail {
inline constexpr std::array<std::uint8_t, 8> dual_target = {7, 4, 5, 6, 1, 2, 3, 0};
inline constexpr std::array<int, 8> dual_sign = {-1, -1, -1, -1, 1, 1, 1, 1};
} // namespace detail

/// The duality transformation D into the model-space algebra.
constexpr DualMultivector dual(const Multivector& a) {
    DualMultivector r;
    for (std::size_t i = 0; i < 8; ++i)
        r.c[detail::dual_target[i]] = detail::dual_sign[i] * a.c[i];
    return r;
}

/// The exact inverse of D.
constexpr Multivector undual(const DualMultivector& x) {
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i)
        r.c[i] = detail::dual_sign[i] * x.c[detail::dual_target[i]];
    return r;
}

/// The index-preserving map Id(e_I) = e^I, extended by linearity.
constexpr DualMultivector identity_map(const Multivector& a) {
    DualMultivector r;
    r.c = a.c;
    return r;
}

/// Wedge in the model-space algebra; same sign and grade laws as the
/// wedge of Multivectors.
constexpr DualMultivector outer_product_dual(const DualMultivector& a, const DualMultivector& b) {
    DualMultivector r;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (b.c[j] == 0.0) continue;
            unsigned ma = detail::slot_mask[i];
            unsigned mb = detail::slot_mask[j];
            if (ma & mb) continue;
            std::size_t k = detail::mask_slot[ma | mb];
            int sign = detail::interleave_sign(ma, mb) * detail::slot_ascending_sign[i] *
                       detail::slot_ascending_sign[j] * detail::slot_ascending_sign[k];
            r.c[k] += sign * a.c[i] * b.c[j];
        }
    }
    return r;
}

/// The join A v B = D^{-1}(D(A) v D(B)); metric-independent.
constexpr Multivector join(const Multivector& a, const Multivector& b) {
    return undual(outer_product_dual(dual(a), dual(b)));
}

/// The pairing (d,a,b)[(w,x,y)] = dw + ax + by between a grade-1 line
/// and a grade-1 model vector.
inline double functional_apply(const Multivector& f, const DualMultivector& v) {
    if (!is_k_vector(f, 1))
        throw Error(ErrorKind::NotAVector, "functional must be a pure grade-1 multivector");
    for (std::size_t i = 0; i < 8; ++i)
        if (detail::slot_grade[i] != 1 && v.c[i] != 0.0)
            throw Error(ErrorKind::NotAVector, "argument must be a pure grade-1 model vector");
    return f.c[slot::e0] * v.c[slot::e0] + f.c[slot::e1] * v.c[slot::e1] +
           f.c[slot::e2] * v.c[slot::e2];
}

} // namespace klein
