#include "kronx/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include "kronx/cg.hpp"
#include "kronx/fourier.hpp"
#include "kronx/models.hpp"

namespace kronx::verify {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string pair_label(int a, int b) { return "2j1=" + std::to_string(a) + " 2j2=" + std::to_string(b); }

XSum<Rational> random_rational(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), coin(0, 2);
    XSum<Rational> a(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (coin(rng)) a.add_term(i, j, make_rational(num(rng), den(rng)));
    return a;
}

// block definition [a_ij B], written with dense loops
XSum<Rational> kron_oracle(const XSum<Rational>& a, const XSum<Rational>& b) {
    const int n = a.order(), m = b.order();
    XSum<Rational> c(n * m);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= m; ++l) c.add_term((i - 1) * m + k, (j - 1) * m + l, a.coef(i, j) * b.coef(k, l));
    return c;
}

// ---- suites ----------------------------------------------------------------

SuiteResult intertwining(const Options& o) {
    SuiteResult s{"intertwining", {}};
    for (int a = 0; a <= o.max_twoj; ++a)
        for (int b = 0; b <= o.max_twoj; ++b) {
            const auto S = build_S(a, b);
            const auto rep = verify_intertwining(S);
            const double unit = unitarity_residual(S);
            const bool norm = columns_normalized_exact(S);
            bool positive = true;
            for (int k = 1; k <= S.layout.n0; ++k)
                positive = positive && S.values.coef(cg_row(S.layout, 0, k), cg_col(S.layout, k, 1)) > 0;
            s.checks.push_back({pair_label(a, b),
                                "intertwining=" + fmt(rep.max_residual()) + " unitarity=" + fmt(unit) +
                                    " norm=" + (norm ? "exact" : "inexact") + " positivity=" + (positive ? "ok" : "bad"),
                                rep.ok(o.tol) && unit < o.tol && norm && positive && S.exact});
        }
    return s;
}

SuiteResult su2(const Options& o) {
    SuiteResult s{"su2", {}};
    for (int tj = 0; tj <= 2 * o.max_twoj; ++tj) {
        const Irrep rep(tj);
        const auto laws = check_su2_laws(generator(rep, Generator::j3), generator(rep, Generator::plus),
                                         generator(rep, Generator::minus), {tj});
        s.checks.push_back({"2j=" + std::to_string(tj), laws.ok() ? "exact" : "violated", laws.ok()});
    }
    return s;
}

SuiteResult coupling(const Options& o) {
    SuiteResult s{"coupling", {}};
    for (int a = 0; a <= o.max_twoj; ++a)
        for (int b = 0; b <= o.max_twoj; ++b) {
            const auto L = layout(a, b);
            const auto prod = check_su2_laws(product_gen(a, b, Generator::j3), product_gen(a, b, Generator::plus),
                                             product_gen(a, b, Generator::minus));
            std::vector<int> tjs;
            for (int k = 1; k <= L.n0; ++k) tjs.push_back(L.block_twoJ(k));
            const auto blk = check_su2_laws(block_gen(a, b, Generator::j3).flat(), block_gen(a, b, Generator::plus).flat(),
                                            block_gen(a, b, Generator::minus).flat(), tjs);
            bool same = true;
            for (auto g : {Generator::j3, Generator::plus, Generator::minus})
                same = same && product_gen(a, b, g) == product_gen_ceiling(a, b, g) &&
                       block_gen(a, b, g).flat() == block_gen_formula(a, b, g);
            s.checks.push_back({pair_label(a, b),
                                std::string("product=") + (prod.ok() ? "ok" : "bad") + " block=" + (blk.ok() ? "ok" : "bad") +
                                    " paths=" + (same ? "agree" : "differ"),
                                prod.ok() && blk.ok() && same});
        }
    return s;
}

SuiteResult kron_suite(const Options& o) {
    SuiteResult s{"kron", {}};
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> ord8(1, 8), ord4(1, 4), ord23(2, 3), pw(1, 4);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        const auto a = random_rational(rng, ord8(rng)), b = random_rational(rng, ord8(rng));
        const auto ref = kron_oracle(a, b);
        if (kron(a, b, o.threads) != ref || kron_closed(a, b) != ref) ++bad;
    }
    s.checks.push_back({"pairs", std::to_string(bad) + "/200 mismatches", bad == 0});
    bad = 0;
    for (int i = 0; i < 50; ++i) {
        std::vector<XSum<Rational>> f;
        for (int j = 0; j < 3; ++j) f.push_back(random_rational(rng, ord4(rng)));
        const auto ref = kron_oracle(kron_oracle(f[0], f[1]), f[2]);
        if (kron_many(f, o.threads) != ref || kron_many_closed(f) != ref) ++bad;
    }
    s.checks.push_back({"triples", std::to_string(bad) + "/50 mismatches", bad == 0});
    bad = 0;
    for (int i = 0; i < 20; ++i) {
        const auto a = random_rational(rng, ord23(rng));
        const int t = pw(rng);
        auto ref = a;
        for (int j = 1; j < t; ++j) ref = kron_oracle(ref, a);
        if (kron_power(a, t, o.threads) != ref || kron_power_closed(a, t) != ref) ++bad;
    }
    s.checks.push_back({"powers", std::to_string(bad) + "/20 mismatches", bad == 0});
    return s;
}

SuiteResult perm_suite(const Options& o) {
    SuiteResult s{"perm", {}};
    std::mt19937_64 rng(o.seed + 1);
    std::uniform_int_distribution<int> n6(1, 6), n5(1, 5), v(-9, 9);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = n6(rng);
        Ket<Rational> x(n), y(n);
        for (int j = 1; j <= n; ++j) {
            x(j) = v(rng);
            y(j) = make_rational(v(rng), 7);
        }
        if (apply(perm_matrix<Rational>(swap_perm(n)), kron_ket(x, y)) != kron_ket(y, x)) ++bad;
    }
    s.checks.push_back({"swap", std::to_string(bad) + "/100 mismatches", bad == 0});
    bad = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = n5(rng), m = n5(rng);
        const auto a = random_rational(rng, n), b = random_rational(rng, m);
        const auto P = perm_matrix<Rational>(commutation_perm(n, m));
        if (mul(mul(transpose(P), kron(a, b)), P) != kron(b, a)) ++bad;
    }
    s.checks.push_back({"commutation", std::to_string(bad) + "/100 mismatches", bad == 0});
    bad = 0;
    int total = 0;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (const auto& pi : all_permutations(n))
                for (const auto& sg : all_permutations(m)) {
                    ++total;
                    if (perm_matrix<Rational>(kron_perm(pi, sg)) != kron(perm_matrix<Rational>(pi), perm_matrix<Rational>(sg)))
                        ++bad;
                }
    s.checks.push_back({"kron_perm", std::to_string(bad) + "/" + std::to_string(total) + " mismatches", bad == 0});
    return s;
}

SuiteResult hadamard_suite(const Options&) {
    SuiteResult s{"hadamard", {}};
    for (int t = 1; t <= 6; ++t) {
        const auto c = hadamard_power(t, HadamardForm::ceiling), b = hadamard_power(t, HadamardForm::binary);
        const auto h = c.matrix();
        const bool forms = c.signs == b.signs && c.scale == b.scale;
        const bool unitary = mul(h, adjoint(h)) == identity<SqrtRational>(h.order());
        const bool power = h == kron_power(hadamard(), t);
        s.checks.push_back({"t=" + std::to_string(t),
                            std::string("forms=") + (forms ? "equal" : "differ") + " unitary=" + (unitary ? "exact" : "no") +
                                " kron_power=" + (power ? "equal" : "differ"),
                            forms && unitary && power});
    }
    return s;
}

SuiteResult lemmas(const Options& o) {
    SuiteResult s{"lemmas", {}};
    long bad = 0;
    for (long p = 1; p <= 10000; ++p)
        for (long n = 1; n <= 64; ++n) {
            const long c = ceil_ratio(p, n);
            if (c != floor_ratio(p + n - 1, n) || ceil_ratio(p + 3 * n, n) != c + 3 || !(n * c >= p && n * c < p + n))
                ++bad;
            if (ceil_ratio(p + 1, n) != floor_ratio(p, n) + 1) ++bad;
            for (long m = 1; m <= 64; m += 7)
                if (ceil_ratio(p, n * m) != ceil_ratio(c, m)) ++bad;
        }
    s.checks.push_back({"ceiling", std::to_string(bad) + " violations", bad == 0});

    std::mt19937_64 rng(o.seed + 2);
    std::uniform_int_distribution<int> ab(-6, 12), nn(0, 8);
    bad = 0;
    for (int i = 0; i < 500; ++i) {
        const int a = ab(rng), b = ab(rng), n = nn(rng);
        Rational lhs = 0;
        for (int k = 0; k <= n; ++k) lhs += Rational(binomial(n, k)) * rising(a, k) * rising(b, n - k);
        if (lhs != rising(a + b, n)) ++bad;
    }
    s.checks.push_back({"addition", std::to_string(bad) + "/500 violations", bad == 0});

    std::uniform_int_distribution<int> rr(0, 6), par(-12, 12);
    bad = 0;
    int done = 0;
    while (done < 500) {
        const int r = rr(rng), b = par(rng), c = par(rng), d = par(rng), e = par(rng);
        bool zero = false;
        for (int k = 0; k < r; ++k) zero = zero || d + k == 0 || -e + k == 0;
        if (zero) continue;
        ++done;
        if (rising(d, r) * falling(e, r) * hyp3f2_terminating(r, b, c, d, e) != hyp3f2_scaled(r, b, c, d, e)) ++bad;
    }
    s.checks.push_back({"hypergeometric", std::to_string(bad) + "/500 violations", bad == 0});
    return s;
}

SuiteResult fft(const Options& o) {
    SuiteResult s{"fft", {}};
    for (int n = 2; n <= 32; n *= 2) {
        const auto f = cooley_tukey(n);
        bool sparse = true;
        for (const auto& st : f.factors) sparse = sparse && st.size() == static_cast<std::size_t>(2 * n);
        const double err = max_abs_diff(f.product(), fourier_matrix(n));
        s.checks.push_back({"n=" + std::to_string(n),
                            "stages=" + std::to_string(f.factors.size()) + " nnz=" + (sparse ? "2n" : "bad") +
                                " error=" + fmt(err),
                            sparse && err < o.tol});
    }
    return s;
}

SuiteResult models(const Options& o) {
    SuiteResult s{"models", {}};
    const auto d = diagonalize(to_complex(heisenberg_two_site_printed(1)));
    const std::vector<double> want{-1.75, -0.25, -0.25, 2.25};
    double err = 0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::fabs(d.eigenvalues[i] - want[i]));
    s.checks.push_back({"heisenberg-two-site", "error=" + fmt(err), err < 1e-12});

    std::mt19937_64 rng(o.seed + 3);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int n = 2; n <= 12; n += 2) {
        XSum<ComplexFloat> h(n);
        for (int i = 1; i <= n; ++i) {
            h.add_term(i, i, g(rng));
            for (int j = i + 1; j <= n; ++j) {
                const ComplexFloat v(g(rng), g(rng));
                h.add_term(i, j, v);
                h.add_term(j, i, std::conj(v));
            }
        }
        const auto r = diagonalize(h);
        XSum<ComplexFloat> diag(n);
        for (int i = 1; i <= n; ++i) diag.add_term(i, i, r.diagonal[static_cast<std::size_t>(i - 1)]);
        worst = std::max(worst, max_abs_diff(mul(mul(adjoint(r.u), h), r.u), diag));
    }
    s.checks.push_back({"jacobi-random", "reconstruction=" + fmt(worst), worst < 1e-9});

    const SpinChainParams p{4, 1, 1, 1};
    const auto h = heisenberg_h(p);
    const auto sz = total_sz(4);
    const bool comm = bracket(h, sz).empty();
    s.checks.push_back({"heisenberg-sz", comm ? "commutes" : "does not commute", comm});
    return s;
}

SuiteResult jc(const Options& o) {
    SuiteResult s{"jc", {}};
    JCConfig cfg{1.0, 32};
    double surv = 0, unit = 0;
    for (int i = 0; i < 20; ++i) {
        const double t = 0.17 * (i + 1);
        const auto u = jc_evolution(cfg, t);
        for (int n = 0; n <= 8; ++n) {
            const double p = std::norm(u.coef(cfg.index(1, n), cfg.index(1, n)));
            surv = std::max(surv, std::fabs(p - std::pow(std::cos(t * std::sqrt(n + 1.0)), 2)));
        }
        const auto w = mul(u, jc_evolution(cfg, -t));
        for (int a = 1; a <= 2; ++a)
            for (int n = 0; n < cfg.cutoff; ++n)
                for (int b = 1; b <= 2; ++b)
                    for (int m = 0; m < cfg.cutoff; ++m) {
                        const int p = cfg.index(a, n), q = cfg.index(b, m);
                        unit = std::max(unit, std::abs(w.coef(p, q) - (p == q ? 1.0 : 0.0)));
                    }
    }
    s.checks.push_back({"survival", "error=" + fmt(surv), surv < 1e-9});
    s.checks.push_back({"unitarity", "error=" + fmt(unit), unit < o.tol});
    const auto h = jc_hamiltonian(cfg);
    const double comm = max_norm(bracket(h, jc_excitation_number(cfg)));
    s.checks.push_back({"excitation-number", "commutator=" + fmt(comm), comm < 1e-12});
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"intertwining", "su2", "coupling", "kron", "perm",
                                                "hadamard",     "lemmas", "fft",   "models", "jc"};
    return names;
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
    if (name == "intertwining") return intertwining(opt);
    if (name == "su2") return su2(opt);
    if (name == "coupling") return coupling(opt);
    if (name == "kron") return kron_suite(opt);
    if (name == "perm") return perm_suite(opt);
    if (name == "hadamard") return hadamard_suite(opt);
    if (name == "lemmas") return lemmas(opt);
    if (name == "fft") return fft(opt);
    if (name == "models") return models(opt);
    if (name == "jc") return jc(opt);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace kronx::verify
