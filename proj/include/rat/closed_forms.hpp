#pragma once

#include <cstddef>
#include <stdexcept>

#include "rat/algebra.hpp"

namespace rat {

class AlphaEqualsBeta : public std::domain_error {
public:
    AlphaEqualsBeta() : std::domain_error("z0_closed is undefined at alpha == beta") {}
};

/// C(n,r) prod_{i=r}^{n-1} (a + b + i a b).
Polynomial z_q1_closed(std::size_t n, std::size_t r);

/// C(n,r) prod_{i=r}^{n-1} (x a + b + i a b).
Polynomial z_x_closed(std::size_t n, std::size_t r);

/// Right-hand side of Z_{n+1,r}(x) = (x a + b + r a b) Z_{n,r}(x + b) + Z_{n,r-1}(x + b),
/// built from z_x_closed (the second term is dropped when r = 0).
Polynomial z_x_recursion(std::size_t n, std::size_t r);

/// Z_{n,r}(alpha, beta, 0) for alpha != beta:
/// (ab)^(n-r) sum_{p=0}^{n-r} (2r+p)/(2n-p) C(2n-p, n+r) (a^(-p-1) - b^(-p-1)) / (a^-1 - b^-1).
/// The p = 0 term, (r/n) C(2n, n+r), vanishes when r = 0; for r > 0 the sum
/// starting at p = 1 falls short of the enumerated value by exactly that term.
Rational z0_closed(std::size_t n, std::size_t r, const Rational& alpha, const Rational& beta);

/// 2(r+1)/(n+r+2) C(2n+1, n-r).
Integer mct_count(std::size_t n, std::size_t r);

/// (r+1)/(n+1) C(n+1, k) C(n+1, ell) with ell = n - r - k.
Integer mct_count_by_k(std::size_t n, std::size_t r, std::size_t k);

/// C(n,r) (n+1)! / (r+1)!.
Integer equivalence_class_count(std::size_t n, std::size_t r);

/// Plane partitions in an a x b x c box: prod (i+j+m-1)/(i+j+m-2).
Integer macmahon_box(std::size_t a, std::size_t b, std::size_t c);

}  // namespace rat
