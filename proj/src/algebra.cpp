#include "qexthh/algebra.hpp"

#include <sstream>

namespace qexthh {

AlgebraElement AlgebraElement::basis(const Field& f, int b) {
    AlgebraElement out(f);
    out.set_coeff(b, f.one());
    return out;
}

bool AlgebraElement::is_zero() const {
    for (const Scalar& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    AlgebraElement out(field_);
    for (int b = 0; b < 4; ++b) out.set_coeff(b, coeff(b) + other.coeff(b));
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    AlgebraElement out(field_);
    for (int b = 0; b < 4; ++b) out.set_coeff(b, coeff(b) - other.coeff(b));
    return out;
}

AlgebraElement AlgebraElement::scale(const Scalar& c) const {
    AlgebraElement out(field_);
    for (int b = 0; b < 4; ++b) out.set_coeff(b, coeff(b) * c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    if (field_ != other.field_) throw FieldError("algebra product over different fields");
    const Scalar &a1 = coeff(kOne), &ax = coeff(kX), &ay = coeff(kY), &ayx = coeff(kYX);
    const Scalar &b1 = other.coeff(kOne), &bx = other.coeff(kX), &by = other.coeff(kY),
                 &byx = other.coeff(kYX);
    AlgebraElement out(field_);
    out.set_coeff(kOne, a1 * b1);
    out.set_coeff(kX, a1 * bx + ax * b1);
    out.set_coeff(kY, a1 * by + ay * b1);
    // yx coordinate: y*x = yx and x*y = -q*yx; all other degree-2 and all
    // degree >= 3 products vanish
    out.set_coeff(kYX, a1 * byx + ayx * b1 + ay * bx - field_.q() * (ax * by));
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
    for (int b = 0; b < 4; ++b)
        if (coeff(b) != other.coeff(b)) return false;
    return true;
}

std::string AlgebraElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (int b = 0; b < 4; ++b) {
        if (coeff(b).is_zero()) continue;
        std::string c = coeff(b).str();
        if (!first) {
            if (!c.empty() && c[0] == '-') {
                out << " - ";
                c = c.substr(1);
            } else {
                out << " + ";
            }
        }
        bool needs_parens = c.find('+') != std::string::npos ||
                            c.find('-', 1) != std::string::npos;
        if (b == kOne) {
            out << (needs_parens ? "(" + c + ")" : c);
        } else {
            if (c == "1")
                out << kBasisNames[static_cast<std::size_t>(b)];
            else
                out << (needs_parens ? "(" + c + ")" : c) << "*"
                    << kBasisNames[static_cast<std::size_t>(b)];
        }
        first = false;
    }
    if (first) return "0";
    return out.str();
}

AutParam AutParam::value(Scalar s) {
    if (s.is_zero()) throw NotAutomorphismError("automorphism parameter must be nonzero");
    return AutParam(std::variant<SignedQPower, Scalar>(std::move(s)));
}

Scalar AutParam::realize(const Field& f) const {
    if (is_symbolic()) {
        Scalar p = f.q_power(power().exponent);
        return power().sign < 0 ? -p : p;
    }
    const Scalar& s = scalar();
    if (s.field() == f) return s;
    if (f.numeric() && !s.field().numeric() && s.field().characteristic() == 0) {
        Scalar v = s.evaluate_at(f);
        if (v.is_zero())
            throw SpecializationError("automorphism parameter vanishes at the numeric q");
        return v;
    }
    throw FieldError("automorphism parameter realized over an incompatible field");
}

AutParam AutParam::inverse() const {
    if (is_symbolic()) return symbolic(power().sign, -power().exponent);
    return value(scalar().inverse());
}

AutParam AutParam::compose(const AutParam& a, const AutParam& b) {
    if (a.is_symbolic() && b.is_symbolic())
        return symbolic(a.power().sign * b.power().sign, a.power().exponent + b.power().exponent);
    const Field& f = a.is_symbolic() ? b.scalar().field() : a.scalar().field();
    return value(a.realize(f) * b.realize(f));
}

std::string AutParam::str() const {
    if (!is_symbolic()) return scalar().str();
    const SignedQPower& p = power();
    std::string s = p.sign < 0 ? "-" : "";
    if (p.exponent == 0) return s + "1";
    if (p.exponent == 1) return s + "q";
    return s + "q^" + std::to_string(p.exponent);
}

AlgebraElement DiagonalAutomorphism::apply(const AlgebraElement& a) const {
    auto [al, be] = realize(a.field());
    AlgebraElement out(a.field());
    out.set_coeff(kOne, a.coeff(kOne));
    out.set_coeff(kX, al * a.coeff(kX));
    out.set_coeff(kY, be * a.coeff(kY));
    out.set_coeff(kYX, al * be * a.coeff(kYX));
    return out;
}

DiagonalAutomorphism automorphism_from_images(const AlgebraElement& img_x,
                                              const AlgebraElement& img_y) {
    for (const AlgebraElement* img : {&img_x, &img_y})
        if (!img->coeff(kOne).is_zero() || !img->coeff(kYX).is_zero())
            throw NotDegreePreservingError(
                "generator image has a degree-0 or degree-2 component: " + img->str());
    const Scalar &a1 = img_x.coeff(kX), &a2 = img_x.coeff(kY);
    const Scalar &b1 = img_y.coeff(kX), &b2 = img_y.coeff(kY);
    // psi(x^2) = psi(y^2) = psi(xy + q yx) = 0 forces a1 a2 = b1 b2 = a2 b1
    // = 0; a nonzero off-diagonal coefficient would kill x or y from the
    // image, so a2 = b1 = 0 and the diagonal must be invertible
    if (!a2.is_zero() || !b1.is_zero())
        throw NotAutomorphismError("generator images are not diagonal: x -> " + img_x.str() +
                                   ", y -> " + img_y.str());
    if (a1.is_zero() || b2.is_zero())
        throw NotAutomorphismError("diagonal coefficient vanishes: x -> " + img_x.str() +
                                   ", y -> " + img_y.str());
    return {AutParam::value(a1), AutParam::value(b2)};
}

} // namespace qexthh
