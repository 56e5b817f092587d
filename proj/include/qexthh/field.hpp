#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qexthh/errors.hpp"

namespace qexthh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Mode of the indeterminate q: a transcendental element (the default,
/// which makes "q is not a root of unity" structural), or a fixed rational
/// value used to specialize computations.
enum class QMode { Transcendental, Numeric };

struct FieldDescriptor {
    unsigned long characteristic = 0; // 0 or a prime
    QMode q_mode = QMode::Transcendental;
    Rational q_value = 0; // meaningful in Numeric mode only

    bool operator==(const FieldDescriptor& other) const {
        return characteristic == other.characteristic && q_mode == other.q_mode &&
               (q_mode == QMode::Transcendental || q_value == other.q_value);
    }
};

/// A scalar written as ±q^exponent.
struct SignedQPower {
    int sign = 1; // +1 or -1
    long long exponent = 0;

    bool operator==(const SignedQPower&) const = default;
};

class Scalar;

/// Immutable coefficient-field context: Q(q), F_p(q), or Q with q a fixed
/// rational. Scalars are created through the field and carry a handle to it.
/// A Field is never mutated after construction, so fields and scalars may be
/// shared freely across threads.
class Field {
public:
    /// Q(q) with q transcendental.
    static Field rationals_q();
    /// F_p(q) with q transcendental; p must be prime.
    static Field prime_field_q(unsigned long p);
    /// Q with q fixed to a rational value not in {0, 1, -1}.
    static Field numeric_q(const Rational& q);
    /// Generic constructor; validates the descriptor invariants.
    static Field make(const FieldDescriptor& desc);

    const FieldDescriptor& descriptor() const { return *impl_; }
    unsigned long characteristic() const { return impl_->characteristic; }
    bool numeric() const { return impl_->q_mode == QMode::Numeric; }
    const Rational& q_value() const { return impl_->q_value; }

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long long n) const;
    Scalar integer(const BigInt& n) const;
    Scalar rational(const Rational& r) const;
    Scalar q() const;
    Scalar q_power(long long s) const;

    /// Parses the scalar grammar: SIGN? ( "q^" INTEGER | ratio of
    /// integer-coefficient polynomials in q ), e.g. `-q^3`, `(q+1)/(q-1)`, `2`.
    Scalar parse(const std::string& text) const;

    bool operator==(const Field& other) const {
        return impl_ == other.impl_ || *impl_ == *other.impl_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    explicit Field(std::shared_ptr<const FieldDescriptor> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const FieldDescriptor> impl_;
    friend class Scalar;
};

namespace detail {
/// Dense univariate polynomial in q over the prime field, lowest degree
/// first, no trailing zero coefficients (zero polynomial = empty vector).
/// In characteristic p the coefficients are residues in [0, p) with
/// denominator 1.
using Poly = std::vector<Rational>;
} // namespace detail

/// An element of the coefficient field in canonical form: a reduced fraction
/// num/den of polynomials in q with gcd(num, den) = 1 and den monic. Zero is
/// 0/1. In numeric mode both polynomials are constants. Canonical form makes
/// operator== the field equality.
class Scalar {
public:
    Scalar(const Scalar&) = default;
    Scalar(Scalar&&) = default;
    Scalar& operator=(const Scalar&) = default;
    Scalar& operator=(Scalar&&) = default;

    const Field& field() const { return field_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const; // throws DivisionByZeroError
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    Scalar inverse() const; // throws DivisionByZeroError on zero

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Canonical text form per the scalar grammar (round-trips through
    /// Field::parse).
    std::string str() const;

    /// Size of the canonical representation (total number of stored
    /// coefficients); used as a pivot-selection heuristic.
    std::size_t representation_size() const { return num_.size() + den_.size(); }

    /// Numerator (resp. denominator) of the canonical form as a scalar with
    /// trivial denominator. denominator() is monic; scalar == numerator() /
    /// denominator().
    Scalar numerator() const { return Scalar(field_, num_, detail::Poly{Rational(1)}); }
    Scalar denominator() const { return Scalar(field_, den_, detail::Poly{Rational(1)}); }
    bool has_trivial_denominator() const { return den_.size() == 1 && den_[0] == 1; }

    /// Substitutes the numeric q of `target` for the indeterminate.
    /// Requires this scalar to live in a transcendental characteristic-0
    /// field and `target` to be numeric. Throws SpecializationError if the
    /// denominator vanishes at the chosen q.
    Scalar evaluate_at(const Field& target) const;

private:
    Scalar(Field f, detail::Poly num, detail::Poly den)
        : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}

    Field field_;
    detail::Poly num_;
    detail::Poly den_;

    friend class Field;
    friend std::optional<SignedQPower> signed_power_form(const Scalar&, long long);
};

/// Decides membership of a nonzero scalar in Sigma = {±q^i : i in Z}.
/// Returns (sign, exponent) iff the scalar is exactly ±q^i; in a
/// transcendental field this holds iff the canonical form is a signed
/// monomial. In numeric mode a monotone search bounded by |i| <= s_max is
/// used; it throws InconclusiveError if the bound is exhausted before the
/// question is settled. In characteristic 2 the sign is always +1.
std::optional<SignedQPower> signed_power_form(const Scalar& a, long long s_max = 64);

/// a^e with e possibly negative (throws DivisionByZeroError for 0^{negative}).
Scalar pow(const Scalar& a, long long e);

} // namespace qexthh
