#include "dbialg/poly.hpp"

#include <sstream>

namespace dbialg {

Poly::Poly(Scalar constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Scalar> ascending) : c_(ascending) { normalize(); }

Poly::Poly(std::vector<Scalar> ascending) : c_(std::move(ascending)) { normalize(); }

Poly Poly::monomial(int degree, Scalar coeff) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return c_[static_cast<std::size_t>(k)];
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    normalize();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

std::string power_of_x(int k) {
    if (k == 0) return "";
    if (k == 1) return "X";
    return "X^" + std::to_string(k);
}

// Magnitude of a coefficient followed by its monomial, sign handled by caller.
std::string term(const Scalar& magnitude, int k, bool star) {
    const std::string x = power_of_x(k);
    if (k == 0) return magnitude.str();
    if (magnitude == Scalar(1)) return x;
    if (magnitude.is_integer() && !star) return magnitude.str() + x;
    return magnitude.str() + "*" + x;
}

}  // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        os << term(neg ? -c : c, k, false);
        first = false;
    }
    return os.str();
}

std::string Poly::str_ascending() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Scalar& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        os << term(neg ? -c : c, k, true);
        first = false;
    }
    return os.str();
}

Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    return {};
}

Poly hilbert(int k) {
    Poly r(1);
    for (int i = 0; i < k; ++i) r *= Poly{Scalar(-i), Scalar(1)};
    return r * factorial(k).inverse();
}

bool bivariate_identity_check(int degree, const std::function<Scalar(const Scalar&, const Scalar&)>& lhs,
                              const std::function<Scalar(const Scalar&, const Scalar&)>& rhs) {
    for (int x = 0; x <= degree; ++x)
        for (int y = 0; y <= degree; ++y)
            if (lhs(Scalar(x), Scalar(y)) != rhs(Scalar(x), Scalar(y))) return false;
    return true;
}

}  // namespace dbialg
