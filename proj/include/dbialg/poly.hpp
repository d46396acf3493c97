#pragma once

// Univariate polynomials over the rationals.

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "dbialg/rational.hpp"

namespace dbialg {

/// Dense polynomial; coeffs()[k] is the coefficient of X^k. The zero
/// polynomial has no coefficients and the leading coefficient is never zero.
class Poly {
  public:
    Poly() = default;
    Poly(Scalar constant);  // NOLINT(google-explicit-constructor)
    Poly(int constant) : Poly(Scalar(constant)) {}  // NOLINT
    Poly(std::initializer_list<Scalar> ascending);
    explicit Poly(std::vector<Scalar> ascending);

    static Poly X() { return monomial(1); }
    static Poly monomial(int degree, Scalar coeff = Scalar(1));

    const std::vector<Scalar>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(int k) const;

    Scalar operator()(const Scalar& x) const { return eval(x); }
    Scalar eval(const Scalar& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Scalar& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Descending form, e.g. "X^3 - 3X^2 + 2X"; fractional coefficients are
    /// printed as "1/6*X^3".
    std::string str() const;
    /// Ascending form "c0 + c1*X + c2*X^2 + ..." (zero terms omitted).
    std::string str_ascending() const;

  private:
    void normalize();
    std::vector<Scalar> c_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(const Poly& a, const Poly& b, PolyOp op);

/// X(X-1)...(X-k+1)/k!
Poly hilbert(int k);

inline Scalar poly_eval(const Poly& p, const Scalar& x) { return p.eval(x); }

/// Coefficientwise equality.
inline bool poly_identity_check(const Poly& p, const Poly& q) { return p == q; }

/// Decides whether F(X,Y) == G(X,Y) for two bivariate expressions of degree at
/// most `degree` in each variable, by exact evaluation on the integer grid
/// {0..degree}^2. The callbacks receive the evaluation point.
bool bivariate_identity_check(int degree, const std::function<Scalar(const Scalar&, const Scalar&)>& lhs,
                              const std::function<Scalar(const Scalar&, const Scalar&)>& rhs);

}  // namespace dbialg
