#pragma once

#include <vector>

#include "kronx/kron.hpp"
#include "kronx/perm.hpp"

namespace kronx {

// ---- n-level Hamiltonians and Jacobi rotations -----------------------------

// H = sum eps_p X^{p,p} + sum V_{p,q} X^{p,q}, V_{q,p} = conj(V_{p,q})
class NLevelHamiltonian {
public:
    explicit NLevelHamiltonian(XSum<ComplexFloat> h, double tol = 1e-12);
    int order() const { return h_.order(); }
    double eps(int p) const { return h_.coef(p, p).real(); }
    ComplexFloat v(int p, int q) const { return h_.coef(p, q); }
    const XSum<ComplexFloat>& matrix() const { return h_; }

private:
    XSum<ComplexFloat> h_;
};

// exp(alpha X^{k,m} - conj(alpha) X^{m,k}) with alpha = |alpha| e^{i mu}
XSum<ComplexFloat> givens_unitary(int n, int k, int m, double absalpha, double mu);

struct RotationStep {
    XSum<ComplexFloat> h;  // U H U^dagger, with the (k,m) pair set to zero
    XSum<ComplexFloat> u;
    double absalpha = 0.0;
    double mu = 0.0;
};

// Zeroes V_{k,m}. Branch: mu = phi when eps_k > eps_m, phi + pi when eps_k < eps_m,
// tan 2|alpha| = 2|V| / |eps_k - eps_m| with |alpha| in (0, pi/4]; for eps_k = eps_m,
// |alpha| = pi/4 and mu is whichever of phi, phi + pi lies in (0, pi].
RotationStep rotate_step(const XSum<ComplexFloat>& h, int k, int m);

struct Diagonalization {
    std::vector<double> eigenvalues;  // ascending
    std::vector<int> order;           // eigenvalues[i] = diagonal[order[i] - 1]
    std::vector<double> diagonal;     // final diagonal in basis order
    XSum<ComplexFloat> u;             // U^dagger H U = diag(diagonal)
    int sweeps = 0;
    double off_norm = 0.0;
};

// cyclic Jacobi sweeps over (k, m), k < m, until max |offdiag| < tol;
// single_sweep performs one ordered pass and returns whatever remains
Diagonalization diagonalize(const XSum<ComplexFloat>& h, double tol = 1e-12, int max_sweeps = 100,
                            bool single_sweep = false);

// ---- spin chains -----------------------------------------------------------

// I^{(x)(j-1)} (x) op (x) I^{(x)(n-j)}
template <class S>
XSum<S> site_embed(const XSum<S>& op, int j, int n) {
    if (j < 1 || j > n) throw IndexError("site_embed: site outside chain");
    std::vector<XSum<S>> f(static_cast<std::size_t>(n), identity<S>(op.order()));
    f[static_cast<std::size_t>(j - 1)] = op;
    return kron_many(f);
}

XSum<Rational> pauli_x();
XSum<ComplexFloat> pauli_y();
XSum<Rational> pauli_z();

struct SpinChainParams {
    int sites = 2;
    Rational jx = 1, jy = 1, jz = 1;
};

// -1/2 sum_j (Jx sx_j sx_{j+1} + Jy sy_j sy_{j+1} + Jz sz_j sz_{j+1}); sigma_{n+1} = sigma_1 when periodic
XSum<Rational> heisenberg_h(const SpinChainParams& p, bool periodic = true);
// the two-site XXX matrix as printed alongside the rotation example:
// -J/4 (X^{11} - X^{22} - X^{33} + X^{44}) - 2J (X^{23} + X^{32})
XSum<Rational> heisenberg_two_site_printed(const Rational& J);
// sum_j sz_j
XSum<Rational> total_sz(int sites);

// ---- Hubbard model -----------------------------------------------------------

struct HubbardParams {
    int sites = 1;
    Rational e0 = 0, e1 = 0, e2 = 0;
    std::vector<std::vector<Rational>> t;  // t[i-1][j-1], symmetric

    // E0 = 0, E1 = eps - mu, E2 = 2 E1 + U, nearest-neighbour hopping on an open chain
    static HubbardParams chain(int sites, const Rational& eps, const Rational& mu, const Rational& U,
                               const Rational& hop);
};

// local basis ordered (0, +, -, 2)
struct HubbardSiteOps {
    XSum<Rational> c_up, c_dn, c_up_dag, c_dn_dag;
};

HubbardSiteOps hubbard_site_ops();
XSum<Rational> hubbard_h(const HubbardParams& p, int max_sites = 4);

// ---- Jaynes-Cummings ---------------------------------------------------------

// atom level p = 1 excited, 2 ground; photons 0..cutoff; index (p-1)(cutoff+1) + n + 1
struct JCConfig {
    double gamma = 1.0;
    int cutoff = 1;
    int dim() const { return 2 * (cutoff + 1); }
    int index(int p, int photons) const { return (p - 1) * (cutoff + 1) + photons + 1; }
};

XSum<ComplexFloat> jc_hamiltonian(const JCConfig& cfg);
// U(t) = e^{-i H_I t} from the closed form on the truncated space
XSum<ComplexFloat> jc_evolution(const JCConfig& cfg, double t);
// atomic level + photon number
XSum<ComplexFloat> jc_excitation_number(const JCConfig& cfg);
XSum<ComplexFloat> two_cavity_evolution(const JCConfig& c1, const JCConfig& c2, double t);

}  // namespace kronx
