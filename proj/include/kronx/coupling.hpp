#pragma once

#include <vector>

#include "kronx/kron.hpp"
#include "kronx/su2.hpp"

namespace kronx {

struct CouplingLayout {
    int twoJ1 = 0, twoJ2 = 0;
    int n1 = 1, n2 = 1, n0 = 1;
    std::vector<int> dims;     // dims[k-1] = d_k, k = 1..n0
    std::vector<int> offsets;  // offsets[k] = z_k, k = 0..n0

    int d(int k) const { return dims.at(static_cast<std::size_t>(k - 1)); }
    int z(int k) const { return offsets.at(static_cast<std::size_t>(k)); }
    int total() const { return n1 * n2; }
    // twice the coupled spin of block k
    int block_twoJ(int k) const { return twoJ1 + twoJ2 + 2 - 2 * k; }
};

CouplingLayout layout(int twoJ1, int twoJ2);

// J^{(j1)} (x) I + I (x) J^{(j2)} built through kron
XSum<SqrtRational> product_gen(int twoJ1, int twoJ2, Generator which);
// the same operator written directly with p' = ceil(p/n2)
XSum<SqrtRational> product_gen_ceiling(int twoJ1, int twoJ2, Generator which);

XSum<SqrtRational> direct_sum(const std::vector<XSum<SqrtRational>>& blocks);

struct BlockOp {
    CouplingLayout layout;
    std::vector<XSum<SqrtRational>> blocks;
    XSum<SqrtRational> flat() const { return direct_sum(blocks); }
};

// block k = generator of the irrep with twoJ = twoJ1 + twoJ2 + 2 - 2k
BlockOp block_gen(int twoJ1, int twoJ2, Generator which);
// flattened block operator from the per-block closed forms
//   J3: m_k^{(j1)} + m_p^{(j2)},  J+: c_{k,p} = sqrt(p[2(j1+j2-k)+3-p]) at (z_{k-1}+p, z_{k-1}+p+1)
XSum<SqrtRational> block_gen_formula(int twoJ1, int twoJ2, Generator which);

}  // namespace kronx
