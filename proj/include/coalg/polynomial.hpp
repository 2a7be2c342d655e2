#pragma once

#include <string>
#include <vector>

#include "coalg/scalar.hpp"

namespace coalg {

/// Coefficients from the constant term upward; no trailing zeros.
using Polynomial = std::vector<Scalar>;

void trim(Polynomial& f);
int degree(const Polynomial& f);  // -1 for the zero polynomial
Scalar evaluate(const Polynomial& f, const Scalar& x);
Polynomial multiply(const Polynomial& a, const Polynomial& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);
Polynomial monic_gcd(Polynomial a, Polynomial b);
std::string format_polynomial(const Polynomial& f);

struct LinearSplit {
    std::vector<Scalar> roots;  // distinct roots in the base field, ascending
    Polynomial residual;        // f / prod (x - r), monic; degree 0 when f splits squarefree
};

/// Finds every root of f in its base field and divides each out once.
///
/// Over Q this uses the rational root theorem on the integer-cleared
/// polynomial; over F_p it is exhaustive for small p and Cantor-Zassenhaus
/// otherwise. Throws RefusalError if a coefficient over Q is too large to
/// factor by trial division.
LinearSplit split_linear_factors(const Polynomial& f);

}  // namespace coalg
