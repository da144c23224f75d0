#pragma once

#include "kronx/coupling.hpp"

namespace kronx {

// S^{k,r}_{alpha,beta}: row p = alpha*n2 + beta, column q = z_{k-1} + r,
// nonzero only when k + r = alpha + beta + 1
struct CGIndex {
    int alpha, beta, k, r;
};

int cg_row(const CouplingLayout& L, int alpha, int beta);
int cg_col(const CouplingLayout& L, int k, int r);

struct CGMatrix {
    CouplingLayout layout;
    bool exact = true;                   // false when entries come from the ladder oracle
    XSum<SqrtRational> entries;          // valid when exact
    XSum<double> values;                 // always filled
};

// k = 1: sqrt[C(2j1,alpha) C(2j2,beta-1) / C(2j, r-1)], r = alpha + beta
SqrtRational s_first_block(int twoJ1, int twoJ2, int alpha, int beta);
// r = 1 column of block k (alpha + beta = k)
SqrtRational s_rone(int twoJ1, int twoJ2, int k, int alpha, int beta);
// general entry, r = in-block row 1..d_k
SqrtRational s_general(int twoJ1, int twoJ2, int k, int r, int alpha, int beta);

// the two factors of s_general: S = (-1)^alpha F Theta, returned as (F, Theta^2)
std::pair<Rational, Rational> s_general_parts(int twoJ1, int twoJ2, int k, int r, int alpha, int beta);

struct IntertwiningReport {
    double res3 = 0.0, res_plus = 0.0, res_minus = 0.0;
    bool diagonal_exact = true;  // m-sum condition on every nonzero entry
    double max_residual() const { return std::max(res3, std::max(res_plus, res_minus)); }
    bool ok(double tol = 1e-10) const { return diagonal_exact && max_residual() < tol; }
};

IntertwiningReport verify_intertwining(const CGMatrix& s);

CGMatrix build_S(int twoJ1, int twoJ2);
// extremal states + repeated J_- + Gram-Schmidt, in double precision
CGMatrix ladder_oracle_S(int twoJ1, int twoJ2);

// max |S^T S - I|
double unitarity_residual(const CGMatrix& s);
// sum_p S_{pq}^2 == 1 exactly for every column
bool columns_normalized_exact(const CGMatrix& s);

// <j1 m1; j2 m2 | J M>
SqrtRational cg_coefficient(int twoJ1, int twoM1, int twoJ2, int twoM2, int twoJ, int twoM);

// largest twoJ accepted by the CG builders
constexpr int kMaxTwoJ = 64;

}  // namespace kronx
