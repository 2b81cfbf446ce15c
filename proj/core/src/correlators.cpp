#include "tautkit/correlators.hpp"

#include "tautkit/numeric.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tautkit {

Rational psi_genus0(const std::vector<int>& exps) {
    const int n = static_cast<int>(exps.size());
    if (n < 3) throw std::invalid_argument("psi_genus0 needs n >= 3");
    int total = 0;
    for (int k : exps) {
        if (k < 0) throw std::invalid_argument("negative psi exponent");
        total += k;
    }
    if (total != n - 3) return Rational(0);
    Rational r(factorial(n - 3));
    for (int k : exps) r /= Rational(factorial(k));
    return r;
}

Rational IntersectionTable::correlator(int g, std::vector<int> exps) {
    if (g < 0) throw std::invalid_argument("negative genus");
    for (int k : exps)
        if (k < 0) throw std::invalid_argument("negative psi exponent");
    const int n = static_cast<int>(exps.size());
    if (2 * g - 2 + n <= 0) return Rational(0);
    int total = std::accumulate(exps.begin(), exps.end(), 0);
    if (total != 3 * g - 3 + n) return Rational(0);

    std::sort(exps.begin(), exps.end(), std::greater<int>());
    CorrelatorKey key{g, exps};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Rational value = compute(g, exps);
    memo_.emplace(std::move(key), value);
    return value;
}

Rational IntersectionTable::compute(int g, const std::vector<int>& exps) {
    const int n = static_cast<int>(exps.size());
    if (g == 0) return psi_genus0(exps);
    if (g == 1 && n == 1) return Rational(1, 24);  // exps == {1} by dimension

    // exps is sorted descending, so a trailing 0 means a tau_0 insertion:
    // remove it with the string equation.
    if (exps.back() == 0) {
        std::vector<int> rest(exps.begin(), exps.end() - 1);
        Rational sum(0);
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0) continue;
            std::vector<int> reduced = rest;
            --reduced[j];
            sum += correlator(g, std::move(reduced));
        }
        return sum;
    }
    // Likewise a trailing 1 is a dilaton insertion.
    if (exps.back() == 1) {
        std::vector<int> rest(exps.begin(), exps.end() - 1);
        return Rational(2 * g - 2 + n - 1) * correlator(g, std::move(rest));
    }

    // KdV n-point recursion on the largest exponent m + 1 (>= 2 here).
    const int m = exps.front() - 1;
    const std::vector<int> rest(exps.begin() + 1, exps.end());
    const int nr = static_cast<int>(rest.size());

    Rational rhs(0);
    for (int j = 0; j < nr; ++j) {
        std::vector<int> merged = rest;
        merged[j] += m;
        rhs += Rational(double_factorial(2 * rest[j] + 2 * m + 1),
                        double_factorial(2 * rest[j] - 1)) *
               correlator(g, std::move(merged));
    }
    for (int a = 0; a <= m - 1; ++a) {
        const int b = m - 1 - a;
        const Rational weight(double_factorial(2 * a + 1) * double_factorial(2 * b + 1),
                              2);
        {
            std::vector<int> lower = rest;
            lower.push_back(a);
            lower.push_back(b);
            rhs += weight * correlator(g - 1, std::move(lower));
        }
        for (int g1 = 0; g1 <= g; ++g1) {
            for (unsigned mask = 0; mask < (1u << nr); ++mask) {
                std::vector<int> left{a}, right{b};
                for (int j = 0; j < nr; ++j)
                    ((mask >> j) & 1 ? left : right).push_back(rest[j]);
                Rational l = correlator(g1, std::move(left));
                if (l.is_zero()) continue;
                rhs += weight * l * correlator(g - g1, std::move(right));
            }
        }
    }
    return rhs / Rational(double_factorial(2 * m + 3));
}

void IntersectionTable::save(std::ostream& out) const {
    for (const auto& [key, value] : memo_) {
        out << key.g << ';';
        for (std::size_t i = 0; i < key.exps.size(); ++i) {
            if (i) out << ',';
            out << key.exps[i];
        }
        out << ';' << value.str() << '\n';
    }
}

void IntersectionTable::load(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t s1 = line.find(';');
        std::size_t s2 = line.find(';', s1 + 1);
        if (s1 == std::string::npos || s2 == std::string::npos)
            throw std::runtime_error("malformed correlator cache line: " + line);
        CorrelatorKey key;
        key.g = std::stoi(line.substr(0, s1));
        std::stringstream exps(line.substr(s1 + 1, s2 - s1 - 1));
        std::string tok;
        while (std::getline(exps, tok, ','))
            key.exps.push_back(std::stoi(tok));
        std::sort(key.exps.begin(), key.exps.end(), std::greater<int>());
        memo_[std::move(key)] = Rational::parse(line.substr(s2 + 1));
    }
}

void IntersectionTable::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write correlator cache: " + path);
    save(out);
}

bool IntersectionTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    load(in);
    return true;
}

}  // namespace tautkit
