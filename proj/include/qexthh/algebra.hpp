#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>

#include "qexthh/field.hpp"

namespace qexthh {

/// Index into the fixed ordered basis (1, x, y, yx) of the algebra
/// k<x,y> / (x^2, xy + q yx, y^2). Every coordinate vector in this project
/// uses this order; yx (not xy) is the degree-2 basis element.
enum BasisIndex : int { kOne = 0, kX = 1, kY = 2, kYX = 3 };

inline constexpr std::array<const char*, 4> kBasisNames{"1", "x", "y", "yx"};

/// Element of the 4-dimensional quantum exterior algebra over its fixed
/// basis. The product is determined by x*x = 0, y*y = 0, y*x = yx,
/// x*y = -q*yx, and the vanishing of all degree >= 3 products.
class AlgebraElement {
public:
    explicit AlgebraElement(const Field& f)
        : field_(f), coeffs_{f.zero(), f.zero(), f.zero(), f.zero()} {}
    AlgebraElement(const Field& f, Scalar c1, Scalar cx, Scalar cy, Scalar cyx)
        : field_(f), coeffs_{std::move(c1), std::move(cx), std::move(cy), std::move(cyx)} {}

    static AlgebraElement basis(const Field& f, int b);
    static AlgebraElement one(const Field& f) { return basis(f, kOne); }

    const Field& field() const { return field_; }
    const Scalar& coeff(int b) const { return coeffs_[static_cast<std::size_t>(b)]; }
    void set_coeff(int b, Scalar v) { coeffs_[static_cast<std::size_t>(b)] = std::move(v); }

    bool is_zero() const;
    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(const AlgebraElement& other) const;
    AlgebraElement scale(const Scalar& c) const;
    bool operator==(const AlgebraElement& other) const;
    bool operator!=(const AlgebraElement& other) const { return !(*this == other); }

    std::string str() const;

private:
    Field field_;
    std::array<Scalar, 4> coeffs_;
};

/// Projection onto the yx-coordinate: the Frobenius functional phi(1) that
/// witnesses the algebra as a Frobenius algebra.
inline const Scalar& frobenius_functional(const AlgebraElement& a) { return a.coeff(kYX); }

/// One twist parameter of a diagonal automorphism: either a symbolic signed
/// power of q (kept symbolic so membership in {±q^i} stays exactly
/// decidable), or an explicit nonzero scalar.
class AutParam {
public:
    static AutParam symbolic(int sign, long long exponent) {
        return AutParam(SignedQPower{sign < 0 ? -1 : 1, exponent});
    }
    static AutParam value(Scalar s);

    bool is_symbolic() const { return std::holds_alternative<SignedQPower>(rep_); }
    const SignedQPower& power() const { return std::get<SignedQPower>(rep_); }
    const Scalar& scalar() const { return std::get<Scalar>(rep_); }

    /// The parameter as an element of `f`. Symbolic parameters realize to
    /// sign * q^exponent; explicit scalars are specialized when `f` is a
    /// numeric field and the scalar lives over the transcendental one.
    Scalar realize(const Field& f) const;

    /// Coordinatewise group operations. Symbolic forms compose symbolically
    /// (signs multiply, exponents add); mixing symbolic with an explicit
    /// scalar degrades the result to an explicit scalar.
    AutParam inverse() const;
    static AutParam compose(const AutParam& a, const AutParam& b);

    std::string str() const;
    bool operator==(const AutParam& other) const { return rep_ == other.rep_; }

private:
    explicit AutParam(std::variant<SignedQPower, Scalar> rep) : rep_(std::move(rep)) {}
    std::variant<SignedQPower, Scalar> rep_;
};

/// A degree preserving algebra automorphism x -> alpha x, y -> beta y. These
/// are the only degree preserving automorphisms of the algebra.
class DiagonalAutomorphism {
public:
    DiagonalAutomorphism(AutParam alpha, AutParam beta)
        : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    static DiagonalAutomorphism identity() {
        return {AutParam::symbolic(1, 0), AutParam::symbolic(1, 0)};
    }

    const AutParam& alpha() const { return alpha_; }
    const AutParam& beta() const { return beta_; }

    std::pair<Scalar, Scalar> realize(const Field& f) const {
        return {alpha_.realize(f), beta_.realize(f)};
    }

    /// (c1, cx, cy, cyx) -> (c1, alpha*cx, beta*cy, alpha*beta*cyx).
    AlgebraElement apply(const AlgebraElement& a) const;

    DiagonalAutomorphism inverse() const { return {alpha_.inverse(), beta_.inverse()}; }

    std::string str() const { return "(" + alpha_.str() + ", " + beta_.str() + ")"; }
    bool operator==(const DiagonalAutomorphism& other) const {
        return alpha_ == other.alpha_ && beta_ == other.beta_;
    }

private:
    AutParam alpha_, beta_;
};

inline DiagonalAutomorphism compose(const DiagonalAutomorphism& a, const DiagonalAutomorphism& b) {
    return {AutParam::compose(a.alpha(), b.alpha()), AutParam::compose(a.beta(), b.beta())};
}

/// The Nakayama automorphism x -> -q^{-1} x, y -> -q y, which measures the
/// failure of the Frobenius form (a, b) -> phi(1)(a*b) to be symmetric.
inline DiagonalAutomorphism nakayama() {
    return {AutParam::symbolic(-1, -1), AutParam::symbolic(-1, 1)};
}

/// Classifies a pair of degree-1 images as a diagonal automorphism.
/// Writes img_x = a1 x + a2 y, img_y = b1 x + b2 y and accepts iff
/// a2 = b1 = 0 with a1, b2 nonzero. Throws NotDegreePreservingError when a
/// degree-0 or degree-2 component is present, NotAutomorphismError otherwise.
DiagonalAutomorphism automorphism_from_images(const AlgebraElement& img_x,
                                              const AlgebraElement& img_y);

} // namespace qexthh
