#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "diagramalg/diagrams.hpp"

namespace diagramalg {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
// Accepts "p" or "p/q".
Rational parse_rational(const std::string& text);

// Rational Laurent polynomial in the parameter n.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Integer& c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exponent, const Rational& coeff = 1);
    static LaurentPoly n() { return monomial(1); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rational coeff(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    // Adds coeff * n^exponent.
    void add_term(int exponent, const Rational& coeff);
    // Multiplies by n^shift.
    LaurentPoly shifted(int shift) const;

    Rational evaluate(const Rational& n0) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

private:
    std::map<int, Rational> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
std::string to_string(const LaurentPoly& p);

// Sparse linear combination of diagrams of one family and size.
class Element {
public:
    Element(int k, Family family) : k_(k), family_(family) {}
    Element(const Diagram& d, Family family, const LaurentPoly& coeff = 1);

    int k() const { return k_; }
    Family family() const { return family_; }
    const std::map<Diagram, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const Diagram& d) const;

    void add_term(const Diagram& d, const LaurentPoly& coeff);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element scaled(const LaurentPoly& c) const;

    bool operator==(const Element& o) const;

private:
    void check_compatible(const Element& o) const;

    int k_;
    Family family_;
    std::map<Diagram, LaurentPoly> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element multiply(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);

Rational evaluate(const LaurentPoly& p, const Rational& n0);
std::map<Diagram, Rational> evaluate(const Element& a, const Rational& n0);

}  // namespace diagramalg
