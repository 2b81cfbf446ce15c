#include "tautkit/interpolate.hpp"

#include "tautkit/numeric.hpp"

#include <functional>
#include <stdexcept>

namespace tautkit {

std::vector<ExponentVector> monomials_in_window(int n, int degmin, int degmax) {
    std::vector<ExponentVector> out;
    ExponentVector cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            if (used >= degmin) out.push_back(cur);
            return;
        }
        for (int e = 0; used + e <= degmax; ++e) {
            cur[pos] = e;
            rec(pos + 1, used + e);
        }
        cur[pos] = 0;
    };
    if (degmin > degmax || degmax < 0)
        throw std::invalid_argument("monomials_in_window: bad degree window");
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> default_grid(int n, int count) {
    int m = 1;
    auto points_of = [&](int mm) {
        long long p = 1;
        for (int i = 0; i < n; ++i) {
            p *= mm;
            if (p > 1'000'000) return p;  // plenty
        }
        return p;
    };
    while (points_of(m) < count) ++m;
    std::vector<std::vector<int>> grid;
    std::vector<int> cur(n, 1);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            grid.push_back(cur);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return grid;
}

Rational eval_poly(const std::map<ExponentVector, Rational>& coeffs,
                   const std::vector<int>& point) {
    Rational acc(0);
    for (const auto& [exps, c] : coeffs) {
        Integer mono = 1;
        for (size_t i = 0; i < exps.size(); ++i)
            mono *= pow_int(Integer(point[i]), exps[i]);
        acc += c * Rational(mono);
    }
    return acc;
}

std::map<ExponentVector, Rational> interpolate_poly(
    const std::vector<SymmetricPolySample>& samples, int n, int degmin, int degmax) {
    const auto monos = monomials_in_window(n, degmin, degmax);
    const int cols = static_cast<int>(monos.size());

    // Incremental row echelon form over Q.  pivot_rows[j], when present, has a
    // leading 1 in column pivot_col[j] and zeros in earlier pivot columns.
    std::vector<std::vector<Rational>> pivot_rows;  // length cols+1 (augmented)
    std::vector<int> pivot_col;

    for (const auto& s : samples) {
        if (static_cast<int>(s.point.size()) != n)
            throw std::invalid_argument("interpolate_poly: point arity mismatch");
        std::vector<Rational> row(cols + 1);
        for (int j = 0; j < cols; ++j) {
            Integer mono = 1;
            for (int i = 0; i < n; ++i)
                mono *= pow_int(Integer(s.point[i]), monos[j][i]);
            row[j] = Rational(mono);
        }
        row[cols] = s.value;

        for (size_t p = 0; p < pivot_rows.size(); ++p) {
            const Rational& f = row[pivot_col[p]];
            if (f.is_zero()) continue;
            Rational factor = f;
            for (int j = pivot_col[p]; j <= cols; ++j)
                row[j] -= factor * pivot_rows[p][j];
        }
        int lead = -1;
        for (int j = 0; j < cols; ++j)
            if (!row[j].is_zero()) { lead = j; break; }
        if (lead < 0) {
            if (!row[cols].is_zero())
                throw std::runtime_error("degree bounds violated");
            continue;  // redundant sample
        }
        Rational inv = Rational(1) / row[lead];
        for (int j = lead; j <= cols; ++j) row[j] *= inv;
        pivot_rows.push_back(std::move(row));
        pivot_col.push_back(lead);
    }

    if (static_cast<int>(pivot_rows.size()) < cols)
        throw std::runtime_error("insufficient samples");

    // Back substitution, highest pivot column first.
    std::vector<int> by_col(cols);
    for (int p = 0; p < cols; ++p) by_col[pivot_col[p]] = p;
    std::vector<Rational> x(cols);
    for (int c = cols - 1; c >= 0; --c) {
        int p = by_col[c];
        Rational v = pivot_rows[p][cols];
        for (int j = c + 1; j < cols; ++j)
            v -= pivot_rows[p][j] * x[j];
        x[c] = v;
    }

    std::map<ExponentVector, Rational> coeffs;
    for (int j = 0; j < cols; ++j)
        if (!x[j].is_zero()) coeffs[monos[j]] = x[j];

    // Every sample equation must be reproduced exactly.
    for (const auto& s : samples)
        if (eval_poly(coeffs, s.point) != s.value)
            throw std::runtime_error("degree bounds violated");
    return coeffs;
}

}  // namespace tautkit
