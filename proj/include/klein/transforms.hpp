#pragma once

#include <cmath>
#include <string>

#include "algebra.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "multivector.hpp"
#include "spaces.hpp"

namespace klein {

/// (A.B)B^{-1}: the component of A along B. Line-on-line lands on B,
/// point-on-line lands on the line, line-on-point passes through the point.
inline Multivector project(const Multivector& a, const Multivector& b, const Space& space) {
    return geometric_product(inner_product(a, b, space.signature), inverse(b, space.signature),
                             space.signature);
}

/// (A^B)B^{-1}, the complement of the projection; point-by-point pairs use
/// the commutator so that projection + rejection always reconstitutes A.
inline Multivector reject(const Multivector& a, const Multivector& b, const Space& space) {
    auto ga = detail::blade_grade(a);
    auto gb = detail::blade_grade(b);
    Multivector top = (ga && gb && *ga == 2 && *gb == 2) ? commutator(a, b, space.signature)
                                                         : outer_product(a, b);
    return geometric_product(top, inverse(b, space.signature), space.signature);
}

/// P_gamma = (P.a)a^{-1} + gamma (P^a)a^{-1}: moves a finite Euclidean point
/// towards (gamma < 1) or away from (gamma > 1) the line a, scaling its
/// distance by gamma.
inline Multivector axial_scale(const Multivector& p, const Multivector& a, double gamma,
                               const Space& space) {
    if (space.name != SpaceName::Euclidean)
        throw Error(ErrorKind::UnsupportedSpace, "axial scaling is Euclidean-only");
    Multivector a_inv = inverse(a, space.signature);
    Multivector along = geometric_product(inner_product(p, a, space.signature), a_inv, space.signature);
    Multivector away = geometric_product(outer_product(p, a), a_inv, space.signature);
    return linear_combine(1.0, along, gamma, away);
}

enum class ReflectConvention { BottomUp, TopDown };

/// Reflection of X in the mirror M. The two conventions agree on reflections
/// in a point and differ by a sign on reflections in a line:
///   bottom-up: point-in-point PQP^-1, point-in-line -aPa^-1,
///              line-in-point PaP^-1,  line-in-line  aba^-1;
///   top-down flips the sign of both line-mirror cases.
inline Multivector reflect(const Multivector& x, const Multivector& m, ReflectConvention convention,
                           const Space& space) {
    auto gx = detail::blade_grade(x);
    auto gm = detail::blade_grade(m);
    if (!gx || !gm || (*gx != 1 && *gx != 2) || (*gm != 1 && *gm != 2))
        throw Error(ErrorKind::NotABlade, "reflection needs blades of grade 1 or 2");
    Multivector r = geometric_product(geometric_product(m, x, space.signature),
                                      inverse(m, space.signature), space.signature);
    bool line_mirror = (*gm == 1);
    bool negate = line_mirror && ((convention == ReflectConvention::BottomUp) ? (*gx == 2) : (*gx == 1));
    return negate ? -r : r;
}

/// An even multivector S with S~S = 1; acts on points and lines by the
/// sandwich SxS~ and realises rotations, translations and boosts.
struct Spinor {
    Multivector value;
    Space space;
};

inline bool is_spinor(const Multivector& a, const Space& space) {
    double scale = max_abs_coefficient(a);
    double even_tol = 1e-9 * (scale > 1.0 ? scale : 1.0);
    if (!(std::abs(a.c[slot::e0]) < even_tol && std::abs(a.c[slot::e1]) < even_tol &&
          std::abs(a.c[slot::e2]) < even_tol && std::abs(a.c[slot::e012]) < even_tol))
        return false;
    Multivector q = geometric_product(a, reverse(a), space.signature);
    Multivector dev = q - mv_one;
    return max_abs_coefficient(dev) < 1e-9;
}

inline Spinor make_spinor(const Multivector& value, const Space& space) {
    if (!is_spinor(value, space))
        throw Error(ErrorKind::InvalidSpinor, "value is not an even multivector with S~S = 1");
    return Spinor{value, space};
}

/// exp(-theta/2 P) for a bivector generator P: a rotation around P when P is
/// proper, a translation when P is null or improper.
inline Spinor spinor_from_generator(const Multivector& p, double theta, const Space& space) {
    if (!is_k_vector(p, 2))
        throw Error(ErrorKind::NotABivector, "spinor generator must be a bivector");
    Multivector s = exponential(-0.5 * theta * p, space.signature);
    return make_spinor(s, space);
}

/// S X ~S. Output keeps whatever homogeneous weight the product produces.
inline Multivector sandwich(const Spinor& s, const Multivector& x) {
    if (!is_spinor(s.value, s.space))
        throw Error(ErrorKind::InvalidSpinor, "sandwich requires a valid spinor");
    return geometric_product(geometric_product(s.value, x, s.space.signature), reverse(s.value),
                             s.space.signature);
}

enum class IsometryKind { Rotation, Translation, Boost };

/// Parameters of a named isometry: a rotation about a proper point, a
/// translation along a direction (or about a null/improper generator), or a
/// boost of the given rapidity about a proper point of a kinematic space.
struct IsometryParams {
    IsometryKind kind;
    Multivector center_or_direction; // point blade, or e0^(a e1 + b e2) from a direction
    double amount = 0.0;             // angle, distance/parameter, or rapidity
};

/// Generator for a translation in the plane direction (a,b):
/// e0 ^ (a e1 + b e2) with the direction normalised.
inline Multivector translation_generator(double a, double b) {
    double len = std::hypot(a, b);
    if (len == 0.0)
        throw Error(ErrorKind::DegenerateInput, "translation direction must be nonzero");
    return ideal_point(a / len, b / len);
}

inline Spinor make_isometry(const IsometryParams& params, const Space& space) {
    if (!std::isfinite(params.amount))
        throw Error(ErrorKind::WrongGeneratorClass, "isometry amount must be finite");
    switch (params.kind) {
    case IsometryKind::Rotation: {
        const Multivector& c = params.center_or_direction;
        if (!is_k_vector(c, 2))
            throw Error(ErrorKind::WrongGeneratorClass, "rotation center must be a point");
        if (classify(c, space) != Classification::Proper)
            throw Error(ErrorKind::WrongGeneratorClass, "rotation center must be a proper point");
        return spinor_from_generator(normalise(c, space.signature), params.amount, space);
    }
    case IsometryKind::Translation: {
        const Multivector& g = params.center_or_direction;
        if (!is_k_vector(g, 2))
            throw Error(ErrorKind::WrongGeneratorClass, "translation generator must be a point");
        Classification cls = classify(g, space);
        if (cls == Classification::Proper)
            throw Error(ErrorKind::WrongGeneratorClass,
                        "translation generator must be a null or improper point");
        Multivector gen = g;
        if (cls == Classification::Improper) gen = normalise(g, space.signature);
        return spinor_from_generator(gen, params.amount, space);
    }
    case IsometryKind::Boost: {
        if (!space.kinematic)
            throw Error(ErrorKind::WrongGeneratorClass, "boosts live in kinematic spaces");
        const Multivector& c = params.center_or_direction;
        if (!is_k_vector(c, 2))
            throw Error(ErrorKind::WrongGeneratorClass, "boost center must be a point");
        if (classify(c, space) != Classification::Proper)
            throw Error(ErrorKind::WrongGeneratorClass, "boost center must be a proper point");
        // B = e^{+phi/2 P}: the opposite sign from rotations, as the boost
        // convention requires.
        Multivector s = exponential(0.5 * params.amount * normalise(c, space.signature),
                                    space.signature);
        return make_spinor(s, space);
    }
    }
    throw Error(ErrorKind::WrongGeneratorClass, "unknown isometry kind");
}

} // namespace klein
