#include "tautkit/faber.hpp"

#include "tautkit/errors.hpp"
#include "tautkit/numeric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tautkit {

Rational faber_coeff(int g, const std::vector<int>& d) {
    if (g < 2) throw std::invalid_argument("faber_coeff needs g >= 2");
    const int n = static_cast<int>(d.size());
    if (n < 1) throw std::invalid_argument("faber_coeff needs n >= 1");
    Rational c(factorial(2 * g - 3 + n) * double_factorial(2 * g - 1),
               factorial(2 * g - 1));
    for (int dj : d) {
        if (dj < 0) throw std::invalid_argument("negative kappa index");
        c /= Rational(double_factorial(2 * dj + 1));
    }
    return c;
}

std::map<Partition, Integer> faber_rhs(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (n < 1) throw std::invalid_argument("faber_rhs needs n >= 1");
    if (n > 8) throw ResourceCapError("faber_rhs cap is n <= 8");
    for (int dj : d)
        if (dj < 1) throw std::invalid_argument("faber_rhs needs parts >= 1");

    std::map<Partition, Integer> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> sums;
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int s = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                s += d[j];
            }
            sums.push_back(s);
        }
        ++out[Partition(std::move(sums))];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Rational faber_taketwo_coeff(int g, const Partition& alpha) {
    const int n = alpha.length();
    if (alpha.size() != g - 2 + n)
        throw std::invalid_argument("psi exponents must sum to g - 2 + n");
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
        if (alpha[i] < 2)
            throw std::invalid_argument("psi exponents must all be >= 2");
        d[i] = alpha[i] - 1;
    }
    return faber_coeff(g, d);
}

std::map<Partition, Rational> kappa_solve(int g) {
    if (g < 2) throw std::invalid_argument("kappa_solve needs g >= 2");
    if (g == 2) return {{Partition(), Rational(1)}};

    const auto monomials = Partition::all_of(g - 2);
    const int m = static_cast<int>(monomials.size());
    std::map<Partition, int> column;
    for (int j = 0; j < m; ++j) column[monomials[j]] = j;

    // One equation per partition d of g-2: the S_n cycle-sum identity.
    std::vector<std::vector<Rational>> rows;
    for (const Partition& d : monomials) {
        std::vector<Rational> row(m + 1);
        for (const auto& [mono, count] : faber_rhs(d.parts()))
            row[column.at(mono)] = Rational(count);
        row[m] = faber_coeff(g, d.parts());
        rows.push_back(std::move(row));
    }

    // Exact Gaussian elimination; the system is square and must be regular.
    std::vector<Rational> x(m);
    for (int c = 0; c < m; ++c) {
        int pivot = -1;
        for (int r = c; r < m; ++r)
            if (!rows[r][c].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::runtime_error("singular socle system");
        std::swap(rows[c], rows[pivot]);
        Rational inv = Rational(1) / rows[c][c];
        for (int j = c; j <= m; ++j) rows[c][j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == c || rows[r][c].is_zero()) continue;
            Rational f = rows[r][c];
            for (int j = c; j <= m; ++j) rows[r][j] -= f * rows[c][j];
        }
    }
    std::map<Partition, Rational> out;
    for (int j = 0; j < m; ++j) out[monomials[j]] = rows[j][m];
    return out;
}

}  // namespace tautkit
