#include "qexthh/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qexthh {

using detail::Poly;

namespace {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic on polynomial coefficients. Characteristic 0 works on
// rationals directly; characteristic p keeps residues in [0, p) with
// denominator 1.
struct CoeffOps {
    unsigned long p;

    Rational reduce(const Rational& c) const {
        if (p == 0) return c;
        BigInt mod(p);
        BigInt num = numerator(c) % mod;
        if (num < 0) num += mod;
        BigInt den = denominator(c) % mod;
        if (den < 0) den += mod;
        if (den == 0) throw DivisionByZeroError("coefficient denominator divisible by p");
        if (den == 1) return Rational(num);
        return Rational(num * inv_mod(den, mod) % mod);
    }

    static BigInt inv_mod(BigInt a, const BigInt& m) {
        // extended Euclid; m prime, a nonzero mod m
        BigInt t = 0, new_t = 1, r = m, new_r = a % m;
        while (new_r != 0) {
            BigInt quot = r / new_r;
            std::swap(t -= quot * new_t, new_t);
            std::swap(r -= quot * new_r, new_r);
        }
        if (r != 1) throw DivisionByZeroError("not invertible modulo p");
        if (t < 0) t += m;
        return t;
    }

    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    Rational inv(const Rational& a) const {
        if (a == 0) throw DivisionByZeroError("coefficient inverse of zero");
        if (p == 0) return Rational(1) / a;
        return Rational(inv_mod(numerator(reduce(a)), BigInt(p)));
    }
    Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }
};

void strip(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_const(const Rational& c, const CoeffOps& ops) {
    Rational r = ops.reduce(c);
    if (r == 0) return {};
    return {r};
}

Poly poly_add(const Poly& a, const Poly& b, const CoeffOps& ops) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = ops.add(out[i], b[i]);
    strip(out);
    return out;
}

Poly poly_neg(const Poly& a, const CoeffOps& ops) {
    Poly out = a;
    for (auto& c : out) c = ops.neg(c);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b, const CoeffOps& ops) {
    return poly_add(a, poly_neg(b, ops), ops);
}

Poly poly_mul(const Poly& a, const Poly& b, const CoeffOps& ops) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = ops.add(out[i + j], ops.mul(a[i], b[j]));
        }
    }
    strip(out);
    return out;
}

Poly poly_scale(const Poly& a, const Rational& c, const CoeffOps& ops) {
    Rational r = ops.reduce(c);
    if (r == 0) return {};
    Poly out = a;
    for (auto& x : out) x = ops.mul(x, r);
    strip(out);
    return out;
}

// Division with remainder; divisor must be nonzero.
void poly_divrem(const Poly& a, const Poly& b, Poly& quot, Poly& rem, const CoeffOps& ops) {
    if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
    rem = a;
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    Rational lead_inv = ops.inv(b.back());
    while (rem.size() >= b.size()) {
        Rational c = ops.mul(rem.back(), lead_inv);
        std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = ops.sub(rem[shift + i], ops.mul(c, b[i]));
        strip(rem);
        if (rem.empty()) break;
    }
    strip(quot);
}

Poly poly_divexact(const Poly& a, const Poly& b, const CoeffOps& ops) {
    Poly quot, rem;
    poly_divrem(a, b, quot, rem, ops);
    if (!rem.empty()) throw Error("inexact polynomial division");
    return quot;
}

Poly poly_make_monic(Poly a, const CoeffOps& ops) {
    if (a.empty()) return a;
    Rational inv = ops.inv(a.back());
    for (auto& c : a) c = ops.mul(c, inv);
    return a;
}

// Monic gcd via the Euclidean algorithm; remainders are normalized monic at
// each step to control coefficient growth.
Poly poly_gcd(Poly a, Poly b, const CoeffOps& ops) {
    a = poly_make_monic(std::move(a), ops);
    b = poly_make_monic(std::move(b), ops);
    while (!b.empty()) {
        Poly quot, rem;
        poly_divrem(a, b, quot, rem, ops);
        a = std::move(b);
        b = poly_make_monic(std::move(rem), ops);
    }
    return a;
}

Rational poly_eval(const Poly& a, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

bool poly_is_monomial(const Poly& a) {
    if (a.empty()) return false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

CoeffOps ops_for(const Field& f) { return CoeffOps{f.characteristic()}; }

// ---- canonical fraction ----

struct Fraction {
    Poly num, den;
};

Fraction reduce_fraction(Poly num, Poly den, const CoeffOps& ops) {
    if (den.empty()) throw DivisionByZeroError("scalar division by zero");
    if (num.empty()) return {Poly{}, Poly{Rational(1)}};
    Poly g = poly_gcd(num, den, ops);
    if (g.size() > 1) {
        num = poly_divexact(num, g, ops);
        den = poly_divexact(den, g, ops);
    }
    Rational lead_inv = ops.inv(den.back());
    for (auto& c : den) c = ops.mul(c, lead_inv);
    for (auto& c : num) c = ops.mul(c, lead_inv);
    return {std::move(num), std::move(den)};
}

// ---- text output ----

std::string bigint_str(const BigInt& n) { return n.str(); }

// Rescales num/den to integer-coefficient polynomials with coprime contents
// (display form; the canonical monic-denominator form stays internal).
void integerize(const Poly& num, const Poly& den, std::vector<BigInt>& num_i,
                std::vector<BigInt>& den_i) {
    BigInt lcm = 1;
    for (const auto& c : num) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    for (const auto& c : den) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    num_i.clear();
    den_i.clear();
    BigInt content = 0;
    auto push = [&](std::vector<BigInt>& out, const Rational& c) {
        BigInt v = numerator(c) * (lcm / denominator(c));
        out.push_back(v);
        content = boost::multiprecision::gcd(content, v);
    };
    for (const auto& c : num) push(num_i, c);
    for (const auto& c : den) push(den_i, c);
    if (content > 1) {
        for (auto& v : num_i) v /= content;
        for (auto& v : den_i) v /= content;
    }
}

std::string poly_str(const std::vector<BigInt>& a) {
    if (a.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        BigInt c = a[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        BigInt mag = boost::multiprecision::abs(c);
        if (i == 0) {
            out << bigint_str(mag);
        } else {
            if (mag != 1) out << bigint_str(mag) << "*";
            out << (i == 1 ? "q" : "q^" + std::to_string(i));
        }
        first = false;
    }
    return out.str();
}

// ---- parsing ----

struct Parser {
    const Field& field;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError("expected '" + std::string(1, c) + "' in scalar literal: " + text);
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            if (accept('+'))
                v = v + parse_term();
            else if (accept('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_unary();
        while (true) {
            if (accept('*'))
                v = v * parse_unary();
            else if (accept('/'))
                v = v / parse_unary();
            else
                return v;
        }
    }

    Scalar parse_unary() {
        if (accept('-')) return -parse_unary();
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    Scalar parse_power() {
        Scalar base = parse_atom();
        if (accept('^')) return pow(base, parse_int());
        return base;
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of scalar literal: " + text);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            expect(')');
            return v;
        }
        if (c == 'q') {
            ++pos;
            return field.q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return field.integer(parse_bigint());
        throw ParseError("unexpected character '" + std::string(1, c) + "' in scalar literal: " + text);
    }

    long long parse_int() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer exponent in: " + text);
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1LL << 40)) throw ParseError("exponent too large in: " + text);
            ++pos;
        }
        return neg ? -v : v;
    }

    BigInt parse_bigint() {
        BigInt v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }
};

} // namespace

// ---- Field ----

Field Field::make(const FieldDescriptor& desc) {
    if (desc.characteristic != 0 && !is_prime(desc.characteristic))
        throw FieldError("characteristic must be 0 or prime, got " +
                         std::to_string(desc.characteristic));
    if (desc.q_mode == QMode::Numeric) {
        if (desc.characteristic != 0)
            throw FieldError("numeric q requires characteristic 0 "
                             "(every nonzero element of F_p is a root of unity)");
        if (desc.q_value == 0) throw FieldError("numeric q must be nonzero");
        if (desc.q_value == 1 || desc.q_value == -1)
            throw RootOfUnityError("numeric q must not be a root of unity (q = " +
                                   std::string(desc.q_value == 1 ? "1" : "-1") + ")");
    }
    return Field(std::make_shared<const FieldDescriptor>(desc));
}

Field Field::rationals_q() { return make({0, QMode::Transcendental, 0}); }

Field Field::prime_field_q(unsigned long p) { return make({p, QMode::Transcendental, 0}); }

Field Field::numeric_q(const Rational& q) { return make({0, QMode::Numeric, q}); }

Scalar Field::zero() const { return Scalar(*this, Poly{}, Poly{Rational(1)}); }

Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long long n) const { return integer(BigInt(n)); }

Scalar Field::integer(const BigInt& n) const { return rational(Rational(n)); }

Scalar Field::rational(const Rational& r) const {
    CoeffOps ops = ops_for(*this);
    return Scalar(*this, poly_const(ops.reduce(r), ops), Poly{Rational(1)});
}

Scalar Field::q() const {
    if (numeric()) return rational(q_value());
    return Scalar(*this, Poly{Rational(0), Rational(1)}, Poly{Rational(1)});
}

Scalar Field::q_power(long long s) const { return pow(q(), s); }

Scalar Field::parse(const std::string& text) const {
    Parser p{*this, text};
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing characters in scalar literal: " + text);
    return v;
}

// ---- Scalar ----

bool Scalar::is_one() const {
    return num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

static void check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) throw FieldError("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_same_field(*this, other);
    CoeffOps ops = ops_for(field_);
    Poly num = poly_add(poly_mul(num_, other.den_, ops), poly_mul(other.num_, den_, ops), ops);
    Poly den = poly_mul(den_, other.den_, ops);
    Fraction f = reduce_fraction(std::move(num), std::move(den), ops);
    return Scalar(field_, std::move(f.num), std::move(f.den));
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
    check_same_field(*this, other);
    CoeffOps ops = ops_for(field_);
    Fraction f = reduce_fraction(poly_mul(num_, other.num_, ops), poly_mul(den_, other.den_, ops), ops);
    return Scalar(field_, std::move(f.num), std::move(f.den));
}

Scalar Scalar::operator/(const Scalar& other) const {
    check_same_field(*this, other);
    if (other.is_zero()) throw DivisionByZeroError("scalar division by zero");
    CoeffOps ops = ops_for(field_);
    Fraction f = reduce_fraction(poly_mul(num_, other.den_, ops), poly_mul(den_, other.num_, ops), ops);
    return Scalar(field_, std::move(f.num), std::move(f.den));
}

Scalar Scalar::operator-() const {
    CoeffOps ops = ops_for(field_);
    return Scalar(field_, poly_neg(num_, ops), den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    CoeffOps ops = ops_for(field_);
    Fraction f = reduce_fraction(den_, num_, ops);
    return Scalar(field_, std::move(f.num), std::move(f.den));
}

bool Scalar::operator==(const Scalar& other) const {
    check_same_field(*this, other);
    return num_ == other.num_ && den_ == other.den_;
}

Scalar pow(const Scalar& a, long long e) {
    if (e < 0) return pow(a.inverse(), -e);
    Scalar acc = a.field().one();
    Scalar base = a;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (auto p = signed_power_form(*this)) {
        std::string s = p->sign < 0 ? "-" : "";
        if (p->exponent == 0) return s + "1";
        if (p->exponent == 1) return s + "q";
        return s + "q^" + std::to_string(p->exponent);
    }
    std::vector<BigInt> num_i, den_i;
    integerize(num_, den_, num_i, den_i);
    if (den_i.size() == 1 && den_i[0] == 1) return poly_str(num_i);
    return "(" + poly_str(num_i) + ")/(" + poly_str(den_i) + ")";
}

Scalar Scalar::evaluate_at(const Field& target) const {
    if (field_.numeric() || field_.characteristic() != 0)
        throw SpecializationError("evaluation requires a transcendental characteristic-0 source");
    if (!target.numeric()) throw SpecializationError("evaluation target must be a numeric field");
    Rational d = poly_eval(den_, target.q_value());
    if (d == 0)
        throw SpecializationError("denominator vanishes at q = " +
                                  static_cast<std::string>(target.q_value().str()));
    return target.rational(poly_eval(num_, target.q_value()) / d);
}

std::optional<SignedQPower> signed_power_form(const Scalar& a, long long s_max) {
    if (a.is_zero()) throw Error("signed_power_form requires a nonzero scalar");
    const Field& f = a.field();
    if (!f.numeric()) {
        // canonical form: den monic, gcd(num, den) = 1, so membership in
        // {±q^i} means both polynomials are monomials and the numerator
        // coefficient is ±1 in the prime field
        if (!poly_is_monomial(a.num_) || !poly_is_monomial(a.den_)) return std::nullopt;
        const Rational& c = a.num_.back();
        int sign;
        unsigned long p = f.characteristic();
        if (c == 1)
            sign = 1;
        else if ((p == 0 && c == -1) || (p > 2 && c == Rational(BigInt(p - 1))))
            sign = -1;
        else
            return std::nullopt;
        long long e = static_cast<long long>(a.num_.size()) - static_cast<long long>(a.den_.size());
        return SignedQPower{sign, e};
    }
    // numeric mode: |q| != 1, so |q^e| is strictly monotone in e and at most
    // one exponent can match |a|; walk toward it and stop once passed
    auto matches = [&](long long e) -> std::optional<SignedQPower> {
        Scalar qe = f.q_power(e);
        if (a == qe) return SignedQPower{1, e};
        if (a == -qe) return SignedQPower{-1, e};
        return std::nullopt;
    };
    Rational value = poly_eval(a.num_, Rational(0)) / poly_eval(a.den_, Rational(0));
    Rational abs_a = value < 0 ? Rational(-value) : value;
    Rational abs_q = f.q_value() < 0 ? Rational(-f.q_value()) : f.q_value();
    if (abs_a == 1) return matches(0);
    long long dir = ((abs_a > 1) == (abs_q > 1)) ? 1 : -1;
    Rational factor = dir > 0 ? abs_q : Rational(1) / abs_q; // moves cur toward |a|
    bool increasing = abs_a > 1;
    Rational cur = 1;
    for (long long s = 1; s <= s_max; ++s) {
        cur *= factor;
        if (cur == abs_a) return matches(dir * s);
        if (increasing ? cur > abs_a : cur < abs_a) return std::nullopt;
    }
    throw InconclusiveError("numeric Sigma membership search exhausted |exponent| <= " +
                            std::to_string(s_max));
}

} // namespace qexthh
