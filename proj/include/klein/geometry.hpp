#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "algebra.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "multivector.hpp"
#include "spaces.hpp"

namespace klein {

enum class Classification { Proper, Improper, Null };

inline const char* classification_name(Classification c) {
    switch (c) {
    case Classification::Proper: return "proper";
    case Classification::Improper: return "improper";
    case Classification::Null: return "null";
    }
    return "unknown";
}

/// The point (x,y), i.e. e12 + x e20 + y e01. In kinematic spaces the
/// second coordinate is the time coordinate t.
constexpr Multivector point(double x, double y) {
    return multivector(0, 0, 0, 0, 1, x, y, 0);
}

/// The line ax + by + d = 0 as the vector d e0 + a e1 + b e2.
constexpr Multivector line(double d, double a, double b) {
    return multivector(0, d, a, b, 0, 0, 0, 0);
}

/// The point reached along direction (a,b), i.e. e0 ^ (a e1 + b e2);
/// drawable only as a stack of parallel lines (at infinity in Euclidean space).
inline Multivector ideal_point(double a, double b) {
    if (a == 0.0 && b == 0.0)
        throw Error(ErrorKind::DegenerateInput, "ideal point needs a nonzero direction");
    return outer_product(e0, linear_combine(a, e1, b, e2));
}

namespace detail {

// Grade of a blade allowing for floating-point residue in other grades;
// nullopt when genuinely mixed or zero.
inline std::optional<int> blade_grade(const Multivector& a, double rel_tol = 1e-9) {
    double scale = max_abs_coefficient(a);
    if (scale == 0.0) return std::nullopt;
    std::array<double, 4> per_grade{};
    for (std::size_t i = 0; i < 8; ++i) {
        double v = std::abs(a.c[i]);
        if (v > per_grade[static_cast<std::size_t>(slot_grade[i])])
            per_grade[static_cast<std::size_t>(slot_grade[i])] = v;
    }
    int dominant = 0;
    for (int g = 1; g < 4; ++g)
        if (per_grade[static_cast<std::size_t>(g)] > per_grade[static_cast<std::size_t>(dominant)])
            dominant = g;
    for (int g = 0; g < 4; ++g)
        if (g != dominant && per_grade[static_cast<std::size_t>(g)] > rel_tol * scale)
            return std::nullopt;
    return dominant;
}

} // namespace detail

/// Sign classification of A~A for a blade of grade 1 or 2. Grade-2 blades
/// in kinematic spaces use the opposite sign so that the origin stays proper.
inline Classification classify(const Multivector& a, const Space& space) {
    double scale = max_abs_coefficient(a);
    if (scale == 0.0) return Classification::Null;
    auto grade = detail::blade_grade(a);
    if (!grade || (*grade != 1 && *grade != 2))
        throw Error(ErrorKind::NotABlade, "classification needs a blade of grade 1 or 2");
    double q = geometric_product(a, reverse(a), space.signature).c[slot::scalar];
    if (std::abs(q) < 1e-9 * scale * scale) return Classification::Null;
    bool flip = space.kinematic && *grade == 2;
    if (flip) q = -q;
    return q > 0.0 ? Classification::Proper : Classification::Improper;
}

/// Affine coordinates of a point blade, divided by its e12 weight.
inline std::pair<double, double> dehomogenize(const Multivector& p) {
    double w = p.c[slot::e12];
    double scale = max_abs_coefficient(p);
    if (std::abs(w) < 1e-12 * (scale > 1.0 ? scale : 1.0))
        throw Error(ErrorKind::DegenerateInput, "point has no affine coordinates (zero e12 weight)");
    return {p.c[slot::e20] / w, p.c[slot::e01] / w};
}

namespace detail {

inline Multivector normalise_or(const Multivector& a, Signature sig, ErrorKind kind,
                                const char* what) {
    try {
        return normalise(a, sig);
    } catch (const Error&) {
        throw Error(kind, what);
    }
}

inline double invert_distance_measure(double m, DistanceMeasure measure) {
    switch (measure) {
    case DistanceMeasure::Degenerate: return m;
    case DistanceMeasure::Elliptic: return std::asin(m > 1.0 ? 1.0 : m);
    case DistanceMeasure::Hyperbolic: return std::asinh(m);
    }
    return m;
}

} // namespace detail

/// Distance between two proper points, defined when their join is a proper
/// line. Inputs are normalised internally.
inline double distance(const Multivector& p, const Multivector& q, const Space& space) {
    if (classify(p, space) != Classification::Proper ||
        classify(q, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedDistance, "distance requires proper points");
    Multivector pn = detail::normalise_or(p, space.signature, ErrorKind::UndefinedDistance,
                                          "point cannot be normalised");
    Multivector qn = detail::normalise_or(q, space.signature, ErrorKind::UndefinedDistance,
                                          "point cannot be normalised");
    Multivector j = join(pn, qn);
    if (max_abs_coefficient(j) == 0.0 || classify(j, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedDistance, "join of the points is not a proper line");
    return detail::invert_distance_measure(norm(j, space.signature), space.distance_measure);
}

/// Unsigned angle between two proper lines meeting in a proper point:
/// arccos|a.b| in non-kinematic spaces, arccosh|a.b| in kinematic ones.
inline double angle(const Multivector& a, const Multivector& b, const Space& space) {
    if (classify(a, space) != Classification::Proper ||
        classify(b, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedAngle, "angle requires proper lines");
    Multivector meet = outer_product(a, b);
    if (max_abs_coefficient(meet) == 0.0 || classify(meet, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedAngle, "intersection point is not proper");
    Multivector an = detail::normalise_or(a, space.signature, ErrorKind::UndefinedAngle,
                                          "line cannot be normalised");
    Multivector bn = detail::normalise_or(b, space.signature, ErrorKind::UndefinedAngle,
                                          "line cannot be normalised");
    double c = std::abs(inner_product(an, bn, space.signature).c[slot::scalar]);
    if (space.angle_measure == AngleMeasure::Elliptic) return std::acos(c > 1.0 ? 1.0 : c);
    return std::acosh(c < 1.0 ? 1.0 : c);
}

/// Orientation-sensitive variant, cos(alpha) = a.b with alpha in [0, pi].
/// Only non-kinematic spaces carry this convention.
inline double angle_signed(const Multivector& a, const Multivector& b, const Space& space) {
    if (space.kinematic)
        throw Error(ErrorKind::UnsupportedSpace, "signed angle is defined in non-kinematic spaces");
    if (classify(a, space) != Classification::Proper ||
        classify(b, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedAngle, "angle requires proper lines");
    Multivector meet = outer_product(a, b);
    if (max_abs_coefficient(meet) == 0.0 || classify(meet, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedAngle, "intersection point is not proper");
    double c = inner_product(normalise(a, space.signature), normalise(b, space.signature),
                             space.signature)
                   .c[slot::scalar];
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

/// Distance from a line to a point via m_d(r) = |a v P| for normalised
/// inputs; the perpendicular through P and its foot must be proper.
inline double distance_point_line(const Multivector& a, const Multivector& p, const Space& space) {
    if (classify(p, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedDistance, "distance requires a proper point");
    Multivector an = detail::normalise_or(a, space.signature, ErrorKind::UndefinedDistance,
                                          "line cannot be normalised");
    Multivector pn = detail::normalise_or(p, space.signature, ErrorKind::UndefinedDistance,
                                          "point cannot be normalised");
    Multivector perp = inner_product(an, pn, space.signature);
    if (max_abs_coefficient(perp) == 0.0 || classify(perp, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedDistance, "perpendicular through the point is not proper");
    Multivector foot = outer_product(an, perp);
    if (max_abs_coefficient(foot) == 0.0 || classify(foot, space) != Classification::Proper)
        throw Error(ErrorKind::UndefinedDistance, "foot of the perpendicular is not proper");
    double m = std::abs(join(an, pn).c[slot::scalar]);
    return detail::invert_distance_measure(m, space.distance_measure);
}

/// The point of a line closest to the origin in the projective
/// parameterization, built purely from join and meet (metric-independent).
inline Multivector central_point(const Multivector& a) {
    double la = a.c[slot::e1];
    double lb = a.c[slot::e2];
    if (la == 0.0 && lb == 0.0)
        throw Error(ErrorKind::DegenerateInput, "central point needs (a,b) != (0,0)");
    Multivector through_origin = join(e12, point(la, lb));
    return outer_product(a, through_origin);
}

/// The polar point aI; every line through it is perpendicular to a.
inline Multivector polar_point(const Multivector& a, const Space& space) {
    return geometric_product(a, pseudoscalar, space.signature);
}

/// The line a.P: passes through P and is perpendicular to a.
inline Multivector perpendicular_through(const Multivector& a, const Multivector& p,
                                         const Space& space) {
    return inner_product(a, p, space.signature);
}

namespace detail {

inline Multivector default_auxiliary_line_through(const Multivector& p, const Space& space) {
    for (const Multivector& axis : {e1, e2, e0}) {
        Multivector cand = inner_product(axis, p, space.signature);
        if (max_abs_coefficient(cand) == 0.0) continue;
        if (classify(cand, space) != Classification::Null) return cand;
    }
    throw Error(ErrorKind::NullAuxiliary, "no non-null auxiliary line through the point");
}

inline void check_incident(const Multivector& b, const Multivector& p) {
    Multivector w = outer_product(b, p);
    double scale = max_abs_coefficient(b) * max_abs_coefficient(p);
    if (max_abs_coefficient(w) > 1e-9 * (scale > 1.0 ? scale : 1.0))
        throw Error(ErrorKind::NotIncident, "auxiliary line does not pass through the point");
}

} // namespace detail

/// The two null lines through a proper point of a kinematic space,
/// (P+1)b and (P-1)b for a non-null line b through P. When b is not
/// supplied, a deterministic perpendicular through P is used.
inline std::pair<Multivector, Multivector>
null_lines_through(const Multivector& p, const Space& space,
                   std::optional<Multivector> b = std::nullopt) {
    if (!space.kinematic)
        throw Error(ErrorKind::UnsupportedSpace,
                    "null lines through a proper point exist in kinematic spaces only");
    if (classify(p, space) != Classification::Proper)
        throw Error(ErrorKind::WrongGeneratorClass, "null lines pass through proper points only");
    Multivector pn = normalise(p, space.signature);
    Multivector aux = b ? *b : detail::default_auxiliary_line_through(pn, space);
    if (max_abs_coefficient(aux) == 0.0 || classify(aux, space) == Classification::Null)
        throw Error(ErrorKind::NullAuxiliary, "auxiliary line must be non-null");
    detail::check_incident(aux, pn);
    return {geometric_product(pn + mv_one, aux, space.signature),
            geometric_product(pn - mv_one, aux, space.signature)};
}

/// The two null points on a proper line of hyperbolic or de-Sitter space,
/// (a+I)b and (a-I)b for a non-null line b through the polar point aI.
inline std::pair<Multivector, Multivector>
null_points_on(const Multivector& a, const Space& space,
               std::optional<Multivector> b = std::nullopt) {
    if (space.name != SpaceName::Hyperbolic && space.name != SpaceName::DeSitter)
        throw Error(ErrorKind::UnsupportedSpace,
                    "proper lines carry null points in hyperbolic and de-Sitter space only");
    if (classify(a, space) != Classification::Proper)
        throw Error(ErrorKind::WrongGeneratorClass, "null points lie on proper lines only");
    Multivector an = normalise(a, space.signature);
    Multivector polar = polar_point(an, space);
    Multivector aux;
    if (b) {
        aux = *b;
    } else {
        aux = mv_zero;
        for (const Multivector& probe : {e12, e20, e01}) {
            Multivector cand = inner_product(an, probe, space.signature);
            if (max_abs_coefficient(cand) == 0.0) continue;
            if (classify(cand, space) != Classification::Null) {
                aux = cand;
                break;
            }
        }
        if (max_abs_coefficient(aux) == 0.0)
            throw Error(ErrorKind::NullAuxiliary, "no non-null auxiliary line through the polar point");
    }
    if (max_abs_coefficient(aux) == 0.0 || classify(aux, space) == Classification::Null)
        throw Error(ErrorKind::NullAuxiliary, "auxiliary line must be non-null");
    detail::check_incident(aux, polar);
    return {geometric_product(an + pseudoscalar, aux, space.signature),
            geometric_product(an - pseudoscalar, aux, space.signature)};
}

/// Closed-form distance from the origin to (x,y) (non-kinematic) or to the
/// event (x,t) (kinematic). Agrees with distance(point(0,0), point(x,v)).
inline double origin_distance(double x, double v, const Space& space) {
    double q = space.kinematic ? v * v - x * x : x * x + v * v;
    if (space.kinematic && q <= 0.0)
        throw Error(ErrorKind::UndefinedDistance, "event lies on or outside the null cone");
    switch (space.name) {
    case SpaceName::Euclidean:
    case SpaceName::Minkowski:
        return std::sqrt(q);
    case SpaceName::Elliptic:
    case SpaceName::AntiDeSitter:
        return std::asin(std::sqrt(q) / std::sqrt(1.0 + q));
    case SpaceName::Hyperbolic:
    case SpaceName::DeSitter:
        if (q >= 1.0)
            throw Error(ErrorKind::UndefinedDistance, "point lies on or beyond the null locus");
        return std::asinh(std::sqrt(q) / std::sqrt(1.0 - q));
    }
    throw Error(ErrorKind::UnsupportedSpace, "unknown space");
}

} // namespace klein
