#include "kronx/xsum.hpp"

namespace kronx {

Rational det_dense(const DenseMatrix<Rational>& a) {
    const int n = a.order();
    if (n == 0) return 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a(i + 1, j + 1);

    int sign = 1;
    Rational prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace kronx
