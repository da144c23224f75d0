#include "kronx/perm.hpp"

#include <algorithm>
#include <numeric>

namespace kronx {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw DomainError("Permutation: images are not a bijection on {1.." + std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(img_.size());
    for (int j = 1; j <= degree(); ++j) v[static_cast<std::size_t>((*this)(j) - 1)] = j;
    return Permutation(std::move(v));
}

int Permutation::parity() const {
    const int n = degree();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int cycles = 0;
    for (int j = 1; j <= n; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        ++cycles;
        for (int k = j; !seen[static_cast<std::size_t>(k)]; k = (*this)(k)) seen[static_cast<std::size_t>(k)] = 1;
    }
    return (n - cycles) % 2 ? -1 : 1;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DimensionError("compose: degree mismatch");
    std::vector<int> v(static_cast<std::size_t>(a.degree()));
    for (int j = 1; j <= a.degree(); ++j) v[static_cast<std::size_t>(j - 1)] = a(b(j));
    return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int p) {
    std::vector<int> v(static_cast<std::size_t>(p));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Permutation swap_perm(int n) {
    if (n < 1) throw DomainError("swap_perm: n must be >= 1");
    const long N = static_cast<long>(n) * n;
    std::vector<int> v(static_cast<std::size_t>(N));
    for (long p = 1; p <= N; ++p)
        v[static_cast<std::size_t>(p - 1)] = static_cast<int>(n * (p + n - 1) - (N - 1) * ceil_ratio(p, n));
    return Permutation(std::move(v));
}

Permutation kron_perm(const Permutation& pi, const Permutation& sigma) {
    const int m = sigma.degree();
    const int N = pi.degree() * m;
    std::vector<int> v(static_cast<std::size_t>(N));
    for (int p = 1; p <= N; ++p) {
        const int pp = static_cast<int>(ceil_ratio(p, m));
        v[static_cast<std::size_t>(p - 1)] = m * (pi(pp) - 1) + sigma(p - m * pp + m);
    }
    return Permutation(std::move(v));
}

Permutation commutation_perm(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("commutation_perm: orders must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(n) * m);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= m; ++k) v[static_cast<std::size_t>(m * (i - 1) + k - 1)] = n * (k - 1) + i;
    return Permutation(std::move(v));
}

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Permutation factor_perm(const Permutation& pi, int n) {
    const int p = pi.degree();
    if (p < 1 || n < 1) throw DomainError("factor_perm: p and n must be >= 1");
    const long N = ipow(n, p);
    if (N > (1L << 26)) throw ResourceError("factor_perm: n^p too large");
    const Permutation inv = pi.inverse();
    std::vector<int> v(static_cast<std::size_t>(N));
    std::vector<int> digits(static_cast<std::size_t>(p)), moved(static_cast<std::size_t>(p));
    for (long idx = 1; idx <= N; ++idx) {
        // multi-index j_1..j_p of idx (first factor slowest)
        long rest = idx - 1;
        for (int l = p; l >= 1; --l) {
            digits[static_cast<std::size_t>(l - 1)] = static_cast<int>(rest % n) + 1;
            rest /= n;
        }
        // sigma(idx(j)) = idx(j o pi^{-1})
        long out = 0;
        for (int l = 1; l <= p; ++l) out = out * n + (digits[static_cast<std::size_t>(inv(l) - 1)] - 1);
        v[static_cast<std::size_t>(idx - 1)] = static_cast<int>(out + 1);
    }
    return Permutation(std::move(v));
}

namespace {

XSum<Rational> group_average(int p, int n, long cap, bool signed_sum) {
    if (p < 1 || n < 1) throw DomainError("symmetrizer: p and n must be >= 1");
    if (p > 10) throw ResourceError("symmetrizer: p! terms exceed the supported range");
    long N = 1;
    for (int i = 0; i < p; ++i) {
        N *= n;
        if (N > cap) throw ResourceError("symmetrizer: n^p exceeds cap " + std::to_string(cap));
    }
    XSum<Rational> acc(static_cast<int>(N));
    const auto group = all_permutations(p);
    const Rational w(1, static_cast<long>(group.size()));
    for (const auto& pi : group) {
        const Rational c = signed_sum ? Rational(w * pi.parity()) : w;
        const auto sigma = factor_perm(pi, n);
        for (int j = 1; j <= sigma.degree(); ++j) acc.add_term(j, sigma(j), c);
    }
    return acc;
}

}  // namespace

XSum<Rational> symmetrizer(int p, int n, long cap) { return group_average(p, n, cap, false); }
XSum<Rational> antisymmetrizer(int p, int n, long cap) { return group_average(p, n, cap, true); }

}  // namespace kronx
