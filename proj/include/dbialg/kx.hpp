#pragma once

// K[X] with the additive coproduct X -> X⊗1 + 1⊗X and the multiplicative one
// X -> X⊗X. Basis element n stands for X^n.

#include <string>
#include <vector>

#include "dbialg/lincomb.hpp"
#include "dbialg/poly.hpp"

namespace dbialg {

class KXCarrier {
  public:
    using Basis = int;

    int unit() const { return 0; }
    int grade(int n) const { return n; }
    LinComb<int> product(int a, int b) const { return LinComb<int>(a + b); }
    Tensor2<int> coproduct(int n) const {
        Tensor2<int> t;
        for (int k = 0; k <= n; ++k) t.add({k, n - k}, binomial(n, k));
        return t;
    }
    Tensor2<int> internal_coproduct(int n) const { return Tensor2<int>({n, n}); }
    Scalar counit(int n) const { return n == 0 ? Scalar(1) : Scalar(0); }
    Scalar internal_counit(int) const { return Scalar(1); }
    std::vector<int> basis(int n) const { return {n}; }
    std::string name() const { return "kx"; }
    std::string render(int n) const { return Poly::monomial(n).str(); }
};

inline LinComb<int> to_kx(const Poly& p) {
    LinComb<int> r;
    for (int k = 0; k <= p.degree(); ++k) r.add(k, p.coeff(k));
    return r;
}

inline Poly from_kx(const LinComb<int>& x) {
    Poly p;
    for (const auto& [k, c] : x) p += Poly::monomial(k, c);
    return p;
}

}  // namespace dbialg
