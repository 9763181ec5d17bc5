#include "diagramalg/coeff.hpp"

#include <sstream>

#include "diagramalg/errors.hpp"

namespace diagramalg {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::SyntaxError, "not a rational number: '" + text + "'");
    }
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.emplace(0, c).first->second.canonicalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    // Arithmetic on a non-canonical mpq is undefined, so normalise inputs.
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + shift, c);
    return p;
}

Rational LaurentPoly::evaluate(const Rational& n0) const {
    if (n0 == 0 && min_exponent() < 0)
        throw Error(ErrorCode::ZeroSubstitutionWithNegativeExponent, "n = 0 in " + to_string(*this));
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational power = 1;
        const Rational base = e < 0 ? Rational(1) / n0 : n0;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= base;
        sum += c * power;
    }
    return sum;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) p.add_term(ea + eb, ca * cb);
    return p;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        Rational c = it->second;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (c < 0) c = -c;
        if (e == 0) {
            out << c.get_str();
            continue;
        }
        if (c != 1) out << c.get_str() << '*';
        out << 'n';
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

Element::Element(const Diagram& d, Family family, const LaurentPoly& coeff) : k_(d.k()), family_(family) {
    add_term(d, coeff);
}

LaurentPoly Element::coeff(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void Element::add_term(const Diagram& d, const LaurentPoly& coeff) {
    if (d.k() != k_) throw Error(ErrorCode::AlgebraMismatch, "diagram size differs from element size");
    if (!in_family(d, family_))
        throw Error(ErrorCode::AlgebraMismatch,
                    "diagram " + format_diagram(d) + " not in " + std::string(family_name(family_)));
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check_compatible(const Element& o) const {
    if (k_ != o.k_ || family_ != o.family_)
        throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
}

Element& Element::operator+=(const Element& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

Element Element::scaled(const LaurentPoly& c) const {
    Element out(k_, family_);
    if (c.is_zero()) return out;
    for (const auto& [d, x] : terms_) out.terms_.emplace(d, x * c);
    return out;
}

bool Element::operator==(const Element& o) const {
    return k_ == o.k_ && family_ == o.family_ && terms_ == o.terms_;
}

Element operator+(Element a, const Element& b) { return a += b; }

Element operator-(Element a, const Element& b) { return a -= b; }

Element multiply(const Element& a, const Element& b) {
    if (a.k() != b.k() || a.family() != b.family())
        throw Error(ErrorCode::AlgebraMismatch, "multiplying elements of different algebras");
    Element out(a.k(), a.family());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [prod, deleted] = concat(da, db);
            out.add_term(prod, (ca * cb).shifted(deleted));
        }
    return out;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

Rational evaluate(const LaurentPoly& p, const Rational& n0) { return p.evaluate(n0); }

std::map<Diagram, Rational> evaluate(const Element& a, const Rational& n0) {
    std::map<Diagram, Rational> out;
    for (const auto& [d, c] : a.terms()) {
        Rational v = c.evaluate(n0);
        if (v != 0) out.emplace(d, v);
    }
    return out;
}

}  // namespace diagramalg
