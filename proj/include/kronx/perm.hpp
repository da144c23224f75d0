#pragma once

#include <vector>

#include "kronx/kron.hpp"

namespace kronx {

// bijection on {1..n}; images()[j-1] = pi(j)
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    // +1 for even, -1 for odd (cycle decomposition)
    int parity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

// (a o b)(j) = a(b(j))
Permutation compose(const Permutation& a, const Permutation& b);

// all permutations of {1..p} in lexicographic order of images
std::vector<Permutation> all_permutations(int p);

// P_pi = sum_j X_n^{j, pi(j)}
template <class S = Rational>
XSum<S> perm_matrix(const Permutation& pi) {
    XSum<S> m(pi.degree());
    for (int j = 1; j <= pi.degree(); ++j) m.add_term(j, pi(j), Scalar<S>::one());
    return m;
}

// y_j = x_{pi(j)}
template <class S>
Ket<S> apply_perm(const Permutation& pi, const Ket<S>& x) {
    if (pi.degree() != x.dim()) throw DimensionError("apply_perm: degree mismatch");
    Ket<S> y(x.dim());
    for (int j = 1; j <= x.dim(); ++j) y(j) = x(pi(j));
    return y;
}

// pi(p) = n(p+n-1) - (n^2-1) ceil(p/n)
Permutation swap_perm(int n);
// alpha(p) = m[pi(p')-1] + sigma(p - m p' + m), p' = ceil(p/m), m = degree(sigma)
Permutation kron_perm(const Permutation& pi, const Permutation& sigma);
// pi(m(i-1)+k) = n(k-1)+i; P^T (A (x) B) P = B (x) A for A of order n, B of order m
Permutation commutation_perm(int n, int m);
// index permutation of (K^n)^{(x)p}: position j of the new tensor holds old factor pi(j)
Permutation factor_perm(const Permutation& pi, int n);

// (1/p!) sum_pi P_pi and (1/p!) sum_pi chi(pi) P_pi on (K^n)^{(x)p}
XSum<Rational> symmetrizer(int p, int n, long cap = 4096);
XSum<Rational> antisymmetrizer(int p, int n, long cap = 4096);

}  // namespace kronx
