#pragma once

#include <utility>
#include <vector>

#include "kronx/xsum.hpp"

namespace kronx {

// half-integers travel as twice their value
struct Irrep {
    int twoJ;
    explicit Irrep(int twoj) : twoJ(twoj) {
        if (twoj < 0) throw DomainError("Irrep: twoJ must be nonnegative");
    }
    int dim() const { return twoJ + 1; }
};

enum class Generator { j3, plus, minus };

// m_k = j + 1 - k
Rational weight(const Irrep& rep, int k);
// c_k = sqrt(k(2j+1-k))
SqrtRational ladder_coef(const Irrep& rep, int k);

XSum<Rational> j3(const Irrep& rep);
XSum<SqrtRational> jpm(const Irrep& rep, Generator sign);
// any of the three generators with SqrtRational coefficients
XSum<SqrtRational> generator(const Irrep& rep, Generator which);

// C_r = sqrt(r! (2j)! / (2j-r)!), the norm of (J_-)^r |j, j>
SqrtRational ladder_norm(const Irrep& rep, int r);

// Action on basis ket k: (coefficient, target index). A vanishing action
// returns a zero coefficient with the out-of-range target k-1 or k+1.
std::pair<SqrtRational, int> act(const Irrep& rep, Generator which, int k);

// [J+, J-] = 2 J3, [J3, J+-] = +-J+-, and, when block_twoJ is given, the Casimir
// equals j(j+1) on each consecutive block. All checks exact.
struct Su2Laws {
    bool comm_pm = false, comm_3p = false, comm_3m = false, casimir = true;
    bool ok() const { return comm_pm && comm_3p && comm_3m && casimir; }
};

Su2Laws check_su2_laws(const XSum<SqrtRational>& j3, const XSum<SqrtRational>& jp, const XSum<SqrtRational>& jm,
                       const std::vector<int>& block_twoJ = {});

}  // namespace kronx
