#pragma once

#include <cmath>
#include <cstdlib>

#include "error.hpp"
#include "multivector.hpp"
#include "signature.hpp"

namespace klein {

/// Scale-relative threshold below which a norm counts as zero.
inline double zero_norm_threshold(const Multivector& a) {
    double scale = max_abs_coefficient(a);
    return 1e-9 * (scale > 1.0 ? scale : 1.0);
}

constexpr Multivector geometric_product(const Multivector& a, const Multivector& b,
                                        Signature sig) {
    const CayleyTable& table = cayley_table(sig);
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (b.c[j] == 0.0) continue;
            const auto& entry = table.at(i, j);
            if (entry.factor != 0) r.c[entry.target] += entry.factor * a.c[i] * b.c[j];
        }
    }
    return r;
}

/// A_k . B_l = <A_k B_l>_{|k-l|}, extended bilinearly over mixed grades.
constexpr Multivector inner_product(const Multivector& a, const Multivector& b, Signature sig) {
    const CayleyTable& table = cayley_table(sig);
    Multivector r;
    for (std::size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (b.c[j] == 0.0) continue;
            const auto& entry = table.at(i, j);
            if (entry.factor == 0) continue;
            int want = detail::slot_grade[i] - detail::slot_grade[j];
            if (want < 0) want = -want;
            if (detail::slot_grade[entry.target] == want)
                r.c[entry.target] += entry.factor * a.c[i] * b.c[j];
        }
    }
    return r;
}

/// A x B = (AB - BA)/2.
constexpr Multivector commutator(const Multivector& a, const Multivector& b, Signature sig) {
    return linear_combine(0.5, geometric_product(a, b, sig), -0.5, geometric_product(b, a, sig));
}

namespace detail {

// A~A is always of the form s + v (grades 0 and 1); the scalar
// s^2 - v^2 drives both the norm and the general inverse.
struct NormParts {
    Multivector a_rev_a;     // A~A
    Multivector flipped;     // (A~A)_1
    double quartic;          // A~A (A~A)_1, a scalar
};

inline NormParts norm_parts(const Multivector& a, Signature sig) {
    NormParts p;
    p.a_rev_a = geometric_product(a, reverse(a), sig);
    p.flipped = grade_negate(p.a_rev_a, {1});
    p.quartic = geometric_product(p.a_rev_a, p.flipped, sig).c[slot::scalar];
    return p;
}

} // namespace detail

/// ||A|| = |A~A (A~A)_1|^(1/4). Zero norm does not imply A = 0 under a
/// degenerate metric.
inline double norm(const Multivector& a, Signature sig) {
    return std::pow(std::abs(detail::norm_parts(a, sig).quartic), 0.25);
}

/// A^{-1} = ~A (A~A)_1 / (A~A (A~A)_1). Throws ZeroNorm when no inverse exists.
inline Multivector inverse(const Multivector& a, Signature sig) {
    auto parts = detail::norm_parts(a, sig);
    if (std::pow(std::abs(parts.quartic), 0.25) < zero_norm_threshold(a))
        throw Error(ErrorKind::ZeroNorm, "multivector has no inverse");
    return geometric_product(reverse(a), parts.flipped, sig) / parts.quartic;
}

inline Multivector normalise(const Multivector& a, Signature sig) {
    double n = norm(a, sig);
    if (n < zero_norm_threshold(a))
        throw Error(ErrorKind::ZeroNorm, "cannot normalise a multivector of zero norm");
    return a / n;
}

namespace detail {

// Closed form of e^R for R whose square is the scalar beta.
inline Multivector exp_square_scalar(const Multivector& r, double beta) {
    if (beta == 0.0) return mv_one + r;
    if (beta < 0.0) {
        double m = std::sqrt(-beta);
        return scalar_mv(std::cos(m)) + (std::sin(m) / m) * r;
    }
    double m = std::sqrt(beta);
    return scalar_mv(std::cosh(m)) + (std::sinh(m) / m) * r;
}

inline Multivector exp_taylor(const Multivector& a, Signature sig, int terms) {
    Multivector sum = mv_one;
    Multivector term = mv_one;
    for (int n = 1; n < terms; ++n) {
        term = geometric_product(term, a, sig) / static_cast<double>(n);
        sum = sum + term;
        if (max_abs_coefficient(term) < 1e-16) break;
    }
    return sum;
}

} // namespace detail

/// e^A. Splits off the scalar part; when the rest squares to a scalar
/// (every blade and every bivector does) the three closed forms apply,
/// otherwise a 32-term Taylor sum with early exit.
inline Multivector exponential(const Multivector& a, Signature sig) {
    double s = a.c[slot::scalar];
    Multivector rest = a;
    rest.c[slot::scalar] = 0.0;

    Multivector rest_sq = geometric_product(rest, rest, sig);
    Multivector off_scalar = rest_sq;
    off_scalar.c[slot::scalar] = 0.0;
    double scale = max_abs_coefficient(rest);
    double tol = 1e-14 * (scale > 1.0 ? scale * scale : 1.0);

    Multivector exp_rest = (max_abs_coefficient(off_scalar) <= tol)
                               ? detail::exp_square_scalar(rest, rest_sq.c[slot::scalar])
                               : detail::exp_taylor(rest, sig, 32);
    return (s == 0.0) ? exp_rest : std::exp(s) * exp_rest;
}

} // namespace klein
