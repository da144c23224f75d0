#pragma once

#include <vector>

#include "kronx/perm.hpp"

namespace kronx {

// f_{ij} = w^{(i-1)(j-1)}, w = e^{2 pi i/n}
XSum<ComplexFloat> fourier_matrix(int n);
// diag(1, w, ..., w^{k-1}) with w = e^{2 pi i/n}; n defaults to 2k (the butterfly use)
XSum<ComplexFloat> omega_diag(int k, int n = 0);
// B_n = [[I_m, Omega_m], [I_m, -Omega_m]], m = n/2
XSum<ComplexFloat> butterfly(int n);

// odd indices first, then even ones
Permutation odd_even_perm(int k);
// Pi_k: the identity with its odd columns grouped first, i.e. P_pi^T for pi = odd_even_perm(k)
XSum<ComplexFloat> odd_even_matrix(int k);
// reverses the t-bit expansion of index-1
Permutation bit_reversal(int n);

struct FourierFactorization {
    int n = 0;
    std::vector<XSum<ComplexFloat>> factors;  // I_{2^s} (x) B_{n/2^s}, s = 0..t-1
    Permutation bit_reversal;
    XSum<ComplexFloat> product() const;
};

FourierFactorization cooley_tukey(int n);

bool is_hadamard(const XSum<ComplexFloat>& h, double tol = 1e-10);

struct Dephasing {
    XSum<ComplexFloat> dr, h0, dc;  // h0 = dr * H * dc
};

// normalizes column 1 with dr, then row 1 with dc
Dephasing dephase(const XSum<ComplexFloat>& h, double tol = 1e-10);

// max-norm of H1 - D1 P1 H2 P2 D2
double equivalence_residual(const XSum<ComplexFloat>& h1, const XSum<ComplexFloat>& d1, const Permutation& p1,
                            const XSum<ComplexFloat>& h2, const Permutation& p2, const XSum<ComplexFloat>& d2);

}  // namespace kronx
