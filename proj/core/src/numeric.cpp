#include "tautkit/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace tautkit {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Integer pow_int(const Integer& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Integer double_factorial(int m) {
    if (m < -1) throw std::invalid_argument("double_factorial: argument below -1");
    if (m % 2 == 0 && m != 0)
        throw std::invalid_argument("double_factorial: even argument");
    Integer r = 1;
    for (int k = m; k >= 2; k -= 2) r *= k;
    return r;
}

Rational bernoulli(int m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("bernoulli: argument must be even and >= 2");
    // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
    std::vector<Rational> b(m + 1);
    b[0] = Rational(1);
    b[1] = Rational(-1, 2);
    for (int k = 2; k <= m; k += 2) {
        Rational sum(0);
        for (int j = 0; j < k; ++j) sum += Rational(binomial(k + 1, j)) * b[j];
        b[k] = -sum / Rational(Integer(k + 1));
    }
    return b[m];
}

Integer aut_partition(const Partition& alpha) {
    Integer r = 1;
    int run = 1;
    for (int i = 1; i <= alpha.length(); ++i) {
        if (i < alpha.length() && alpha[i] == alpha[i - 1]) {
            ++run;
        } else {
            r *= factorial(run);
            run = 1;
        }
    }
    return r;
}

int rh_branch_count(int g, int d, int n) {
    if (g < 0 || d < 1 || n < 1 || n > d)
        throw std::invalid_argument("rh_branch_count: need g >= 0, 1 <= n <= d");
    return 2 * g + d + n - 2;
}

Rational euler_char_mg(int g) {
    if (g < 2) throw std::invalid_argument("euler_char_mg: need g >= 2");
    return bernoulli(2 * g) / Rational(Integer(2 * g) * Integer(2 * g - 2));
}

Rational euler_char_mgn(int g, int n) {
    if (g < 1 || n < 0 || 2 * g - 2 + n <= 0)
        throw std::invalid_argument("euler_char_mgn: (g,n) must be stable with g >= 1");
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * Rational(factorial(2 * g + n - 3)) * bernoulli(2 * g) /
           Rational(Integer(2 * g) * factorial(2 * g - 2));
}

}  // namespace tautkit
