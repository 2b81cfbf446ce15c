#include "tautkit/hodge.hpp"

#include "tautkit/hurwitz.hpp"
#include "tautkit/numeric.hpp"

#include <cmath>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>

namespace tautkit {

namespace {

// P_{g,n} evaluated at a composition x: the Hurwitz number divided by its
// combinatorial prefactor.
Rational poly_sample(int g, const std::vector<int>& x) {
    Partition alpha(x);
    const int d = alpha.size();
    const int n = alpha.length();
    const int r = rh_branch_count(g, d, n);

    // Enumeration cost is roughly (#transpositions)^r before pruning; fall
    // back to the class-algebra evaluation when that blows up or when the
    // default caps are exceeded.
    const double trans = d * (d - 1) / 2.0;
    const EnumerationCaps caps;
    const bool cheap = d <= caps.max_degree && r <= caps.max_branch_points &&
                       (trans <= 1.0 || r * std::log(trans) <= std::log(1e6));
    HurwitzQuery q{g, alpha, true};
    Rational h = cheap ? hurwitz_bruteforce(q) : hurwitz_classalg(q);

    Rational prefactor(factorial(r));
    for (int xi : x) prefactor *= Rational(pow_int(xi, xi), factorial(xi));
    return h / prefactor;
}

void for_each_composition(int d, int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> x(n, 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            x[pos] = left;
            f(x);
            return;
        }
        for (int v = 1; v <= left - (n - 1 - pos); ++v) {
            x[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (d >= n) rec(0, d);
}

}  // namespace

std::map<ExponentVector, Rational> hurwitz_polynomial(int g, int n) {
    if (g < 0 || n < 1 || 2 * g - 2 + n <= 0 || (g == 0 && n < 3))
        throw std::invalid_argument("hurwitz_polynomial needs stable (g,n)");
    const int degmax = 3 * g - 3 + n;
    const int degmin = std::max(0, 2 * g - 3 + n);
    const std::size_t need = monomials_in_window(n, degmin, degmax).size();

    std::vector<SymmetricPolySample> samples;
    for (int d = n;; ++d) {
        for_each_composition(d, n, [&](const std::vector<int>& x) {
            samples.push_back({x, poly_sample(g, x)});
        });
        if (samples.size() < need) continue;
        try {
            return interpolate_poly(samples, n, degmin, degmax);
        } catch (const std::runtime_error& e) {
            if (std::strcmp(e.what(), "insufficient samples") != 0) throw;
        }
    }
}

std::vector<HodgeIntegral> hodge_from_hurwitz(int g, int n) {
    const auto coeffs = hurwitz_polynomial(g, n);
    const int degmax = 3 * g - 3 + n;
    const int degmin = std::max(0, 2 * g - 3 + n);
    std::vector<HodgeIntegral> table;
    for (const auto& a : monomials_in_window(n, degmin, degmax)) {
        int total = 0;
        for (int e : a) total += e;
        const int k = degmax - total;
        Rational coeff(0);
        if (auto it = coeffs.find(a); it != coeffs.end()) coeff = it->second;
        if (k % 2 != 0) coeff = -coeff;
        table.push_back({g, a, k, coeff});
    }
    return table;
}

Rational elsv_forward(int g, const Partition& alpha,
                      const std::vector<HodgeIntegral>& table) {
    const int n = alpha.length();
    Rational sum(0);
    for (const auto& entry : table) {
        if (entry.g != g || static_cast<int>(entry.psi_exps.size()) != n)
            throw std::invalid_argument("hodge table does not match (g,n)");
        if (entry.value.is_zero()) continue;
        Rational term = entry.value;
        if (entry.k % 2 != 0) term = -term;
        for (int i = 0; i < n; ++i)
            term *= Rational(pow_int(alpha[i], entry.psi_exps[i]));
        sum += term;
    }
    Rational prefactor(factorial(rh_branch_count(g, alpha.size(), n)));
    for (int i = 0; i < n; ++i)
        prefactor *= Rational(pow_int(alpha[i], alpha[i]), factorial(alpha[i]));
    return prefactor * sum;
}

}  // namespace tautkit
