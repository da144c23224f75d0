#include "kronx/su2.hpp"

namespace kronx {

namespace {

void check_level(const Irrep& rep, int k) {
    if (k < 1 || k > rep.dim()) throw IndexError("level index " + std::to_string(k) + " outside irrep");
}

}  // namespace

Rational weight(const Irrep& rep, int k) {
    check_level(rep, k);
    return make_rational(rep.twoJ + 2 - 2 * k, 2);
}

SqrtRational ladder_coef(const Irrep& rep, int k) {
    if (k < 0 || k > rep.dim()) throw IndexError("ladder_coef: k out of range");
    return SqrtRational::root(Rational(static_cast<long>(k) * (rep.twoJ + 1 - k)));
}

XSum<Rational> j3(const Irrep& rep) {
    XSum<Rational> m(rep.dim());
    for (int k = 1; k <= rep.dim(); ++k) m.add_term(k, k, weight(rep, k));
    return m;
}

XSum<SqrtRational> jpm(const Irrep& rep, Generator sign) {
    if (sign == Generator::j3) throw DomainError("jpm: expected plus or minus");
    XSum<SqrtRational> m(rep.dim());
    for (int k = 1; k < rep.dim(); ++k) {
        if (sign == Generator::plus) m.add_term(k, k + 1, ladder_coef(rep, k));
        else m.add_term(k + 1, k, ladder_coef(rep, k));
    }
    return m;
}

XSum<SqrtRational> generator(const Irrep& rep, Generator which) {
    if (which == Generator::j3) return convert<SqrtRational>(j3(rep));
    return jpm(rep, which);
}

SqrtRational ladder_norm(const Irrep& rep, int r) {
    if (r < 0 || r > rep.twoJ) throw IndexError("ladder_norm: r outside [0, 2j]");
    return SqrtRational::root(Rational(factorial(r) * factorial(rep.twoJ) / factorial(rep.twoJ - r)));
}

std::pair<SqrtRational, int> act(const Irrep& rep, Generator which, int k) {
    check_level(rep, k);
    switch (which) {
        case Generator::j3:
            return {SqrtRational::from_rational(weight(rep, k)), k};
        case Generator::plus:
            return {SqrtRational::root(Rational(static_cast<long>(k - 1) * (rep.twoJ + 2 - k))), k - 1};
        case Generator::minus:
            return {SqrtRational::root(Rational(static_cast<long>(k) * (rep.twoJ + 1 - k))), k + 1};
    }
    return {};
}

Su2Laws check_su2_laws(const XSum<SqrtRational>& j3, const XSum<SqrtRational>& jp, const XSum<SqrtRational>& jm,
                       const std::vector<int>& block_twoJ) {
    Su2Laws r;
    try {
        r.comm_pm = bracket(jp, jm) == scale(SqrtRational(2), j3);
        r.comm_3p = bracket(j3, jp) == jp;
        r.comm_3m = bracket(j3, jm) == neg(jm);
        if (!block_twoJ.empty()) {
            const auto c = add(mul(j3, j3), scale(SqrtRational::root(Rational(1, 4)), bracket(jp, jm, Bracket::anticommutator)));
            XSum<SqrtRational> want(j3.order());
            int at = 0;
            for (int tj : block_twoJ)
                for (int i = 0; i <= tj; ++i) {
                    ++at;
                    want.add_term(at, at, SqrtRational::from_rational(make_rational(tj * (tj + 2), 4)));
                }
            r.casimir = at == j3.order() && c == want;
        }
    } catch (const ClosureError&) {
        r.casimir = false;
    }
    return r;
}

}  // namespace kronx
