#include "kronx/kron.hpp"

#include <bit>

namespace kronx {

XSum<SqrtRational> hadamard() {
    XSum<SqrtRational> h(2);
    const Rational half(1, 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) h.add_term(i, j, SqrtRational(((i - 1) * (j - 1)) % 2 ? -1 : 1, half));
    return h;
}

long hadamard_exponent(long p, long q, int t, HadamardForm form) {
    if (form == HadamardForm::binary)
        return std::popcount(static_cast<unsigned long>((p - 1) & (q - 1)));
    long e = 0, d = 1;
    for (int s = 0; s < t; ++s, d *= 2) e += (ceil_ratio(p, d) - 1) * (ceil_ratio(q, d) - 1);
    return e;
}

HadamardPower hadamard_power(int t, HadamardForm form) {
    if (t < 1) throw DomainError("hadamard_power: t must be >= 1");
    if (t > 12) throw ResourceError("hadamard_power: t > 12 exceeds the dense sign-lattice cap");
    const int n = 1 << t;
    HadamardPower h;
    h.t = t;
    h.signs = XSum<Rational>(n);
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q) h.signs.add_term(p, q, hadamard_exponent(p, q, t, form) % 2 ? -1 : 1);
    BigInt den = 1;
    den <<= static_cast<unsigned>(t);
    h.scale = SqrtRational(1, Rational(BigInt(1), den));
    return h;
}

XSum<SqrtRational> HadamardPower::matrix() const {
    XSum<SqrtRational> m(signs.order());
    for (const auto& [k, s] : signs.terms()) m.add_term(k.first, k.second, sgn(s) < 0 ? -scale : scale);
    return m;
}

EigenPairReport eigen_pair_check(const XSum<ComplexFloat>& a, const XSum<ComplexFloat>& b,
                                 const std::vector<EigenPair>& pa, const std::vector<EigenPair>& pb, double tol) {
    EigenPairReport rep;
    const auto ab = kron(a, b);
    const auto ksum = add(kron(a, identity<ComplexFloat>(b.order())), kron(identity<ComplexFloat>(a.order()), b));
    for (std::size_t i = 0; i < pa.size(); ++i) {
        for (std::size_t j = 0; j < pb.size(); ++j) {
            const auto v = kron_ket(pa[i].vector, pb[j].vector);
            const auto w1 = apply(ab, v), w2 = apply(ksum, v);
            double r1 = 0.0, r2 = 0.0;
            for (int k = 1; k <= v.dim(); ++k) {
                r1 = std::max(r1, std::abs(w1(k) - pa[i].value * pb[j].value * v(k)));
                r2 = std::max(r2, std::abs(w2(k) - (pa[i].value + pb[j].value) * v(k)));
            }
            rep.max_product_residual = std::max(rep.max_product_residual, r1);
            rep.max_sum_residual = std::max(rep.max_sum_residual, r2);
            if (r1 > tol || r2 > tol) rep.failures.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }
    return rep;
}

}  // namespace kronx
