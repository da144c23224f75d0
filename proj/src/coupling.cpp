#include "kronx/coupling.hpp"

namespace kronx {

CouplingLayout layout(int twoJ1, int twoJ2) {
    if (twoJ1 < 0 || twoJ2 < 0) throw DomainError("layout: twoJ must be nonnegative");
    CouplingLayout L;
    L.twoJ1 = twoJ1;
    L.twoJ2 = twoJ2;
    L.n1 = twoJ1 + 1;
    L.n2 = twoJ2 + 1;
    L.n0 = std::min(L.n1, L.n2);
    L.offsets.push_back(0);
    for (int k = 1; k <= L.n0; ++k) {
        const int dk = L.n1 + L.n2 + 1 - 2 * k;
        L.dims.push_back(dk);
        L.offsets.push_back(k * (dk + k - 1));
    }
    return L;
}

XSum<SqrtRational> product_gen(int twoJ1, int twoJ2, Generator which) {
    const Irrep r1(twoJ1), r2(twoJ2);
    return add(kron(generator(r1, which), identity<SqrtRational>(r2.dim())),
               kron(identity<SqrtRational>(r1.dim()), generator(r2, which)));
}

XSum<SqrtRational> product_gen_ceiling(int twoJ1, int twoJ2, Generator which) {
    if (which == Generator::minus) return adjoint(product_gen_ceiling(twoJ1, twoJ2, Generator::plus));
    const Irrep r1(twoJ1), r2(twoJ2);
    const int n1 = r1.dim(), n2 = r2.dim();
    XSum<SqrtRational> j(n1 * n2);
    for (int p = 1; p <= n1 * n2; ++p) {
        const int pp = static_cast<int>(ceil_ratio(p, n2));
        const int inner = p + n2 - n2 * pp;
        if (which == Generator::j3) {
            j.add_term(p, p, SqrtRational::from_rational(weight(r1, pp) + weight(r2, inner)));
            continue;
        }
        if (p <= n2 * (n1 - 1)) j.add_term(p, p + n2, ladder_coef(r1, pp));
        if (inner < n2) j.add_term(p, p + 1, ladder_coef(r2, inner));
    }
    return j;
}

XSum<SqrtRational> direct_sum(const std::vector<XSum<SqrtRational>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.order();
    XSum<SqrtRational> out(n);
    int off = 0;
    for (const auto& b : blocks) {
        for (const auto& [k, x] : b.terms()) out.add_term(off + k.first, off + k.second, x);
        off += b.order();
    }
    return out;
}

BlockOp block_gen(int twoJ1, int twoJ2, Generator which) {
    BlockOp op{layout(twoJ1, twoJ2), {}};
    for (int k = 1; k <= op.layout.n0; ++k) op.blocks.push_back(generator(Irrep(op.layout.block_twoJ(k)), which));
    return op;
}

XSum<SqrtRational> block_gen_formula(int twoJ1, int twoJ2, Generator which) {
    if (which == Generator::minus) return adjoint(block_gen_formula(twoJ1, twoJ2, Generator::plus));
    const auto L = layout(twoJ1, twoJ2);
    XSum<SqrtRational> j(L.total());
    for (int k = 1; k <= L.n0; ++k) {
        const int z = L.z(k - 1);
        for (int p = 1; p <= L.d(k); ++p) {
            if (which == Generator::j3) {
                // m_k^{(j1)} + m_p^{(j2)} = (twoJ1 + twoJ2 + 4 - 2k - 2p)/2
                j.add_term(z + p, z + p, SqrtRational::from_rational(make_rational(twoJ1 + twoJ2 + 4 - 2 * k - 2 * p, 2)));
            } else if (p < L.d(k)) {
                j.add_term(z + p, z + p + 1, SqrtRational::root(Rational(static_cast<long>(p) * (twoJ1 + twoJ2 - 2 * k + 3 - p))));
            }
        }
    }
    return j;
}

}  // namespace kronx
