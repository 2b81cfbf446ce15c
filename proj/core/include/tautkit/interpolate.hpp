#ifndef TAUTKIT_INTERPOLATE_HPP
#define TAUTKIT_INTERPOLATE_HPP

#include "tautkit/rational.hpp"

#include <map>
#include <vector>

namespace tautkit {

/// One evaluation of the polynomial being reconstructed: an integer point
/// with entries >= 1 and the exact value there.
struct SymmetricPolySample {
    std::vector<int> point;
    Rational value;
};

using ExponentVector = std::vector<int>;

/// Recovers the exact coefficients of a polynomial in n variables whose
/// monomials all have total degree in [degmin, degmax], from exact samples.
/// Plain monomial basis, exact Gaussian elimination; zero coefficients are
/// omitted from the result.
///
/// Throws std::runtime_error("insufficient samples") if the linear system is
/// underdetermined and std::runtime_error("degree bounds violated") if it is
/// inconsistent.
std::map<ExponentVector, Rational> interpolate_poly(
    const std::vector<SymmetricPolySample>& samples, int n, int degmin, int degmax);

/// All exponent vectors of length n with total degree in [degmin, degmax],
/// in lexicographic order.
std::vector<ExponentVector> monomials_in_window(int n, int degmin, int degmax);

/// The default sample grid {1,...,M}^n with M minimal such that M^n >= count.
std::vector<std::vector<int>> default_grid(int n, int count);

/// Evaluates a coefficient map at an integer point.
Rational eval_poly(const std::map<ExponentVector, Rational>& coeffs,
                   const std::vector<int>& point);

}  // namespace tautkit

#endif
