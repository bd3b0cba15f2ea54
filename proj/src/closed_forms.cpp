#include "rat/closed_forms.hpp"

namespace rat {

namespace {

void check_sector(std::size_t n, std::size_t r) {
    if (r > n) throw std::invalid_argument("r must not exceed n");
}

unsigned u(std::size_t v) { return static_cast<unsigned>(v); }

Rational ratio(std::size_t num, std::size_t den) {
    Rational v(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
    v.canonicalize();
    return v;
}

Integer exact_quotient(const Rational& value) {
    if (value.get_den() != 1) throw std::logic_error("closed form did not produce an integer");
    return value.get_num();
}

}  // namespace

Polynomial z_q1_closed(std::size_t n, std::size_t r) {
    return z_x_closed(n, r).substitute(Symbol::X, Polynomial(1));
}

Polynomial z_x_closed(std::size_t n, std::size_t r) {
    check_sector(n, r);
    const Polynomial a = Polynomial::symbol(Symbol::Alpha);
    const Polynomial b = Polynomial::symbol(Symbol::Beta);
    const Polynomial x = Polynomial::symbol(Symbol::X);
    Polynomial out(binomial(u(n), u(r)));
    for (std::size_t i = r; i < n; ++i) out *= x * a + b + Polynomial(static_cast<long>(i)) * a * b;
    return out;
}

Polynomial z_x_recursion(std::size_t n, std::size_t r) {
    check_sector(n, r);
    const Polynomial a = Polynomial::symbol(Symbol::Alpha);
    const Polynomial b = Polynomial::symbol(Symbol::Beta);
    const Polynomial shifted = Polynomial::symbol(Symbol::X) + b;
    Polynomial out = (Polynomial::symbol(Symbol::X) * a + b + Polynomial(static_cast<long>(r)) * a * b) *
                     z_x_closed(n, r).substitute(Symbol::X, shifted);
    if (r > 0) out += z_x_closed(n, r - 1).substitute(Symbol::X, shifted);
    return out;
}

Rational z0_closed(std::size_t n, std::size_t r, const Rational& alpha, const Rational& beta) {
    check_sector(n, r);
    if (alpha == 0 || beta == 0) throw std::domain_error("z0_closed needs nonzero alpha and beta");
    if (n == r) return 1;
    if (alpha == beta) throw AlphaEqualsBeta();
    const Rational inv_a = 1 / alpha, inv_b = 1 / beta;
    Rational sum = 0;
    for (std::size_t p = 0; p <= n - r; ++p) {
        Rational c = ratio(2 * r + p, 2 * n - p) * Rational(binomial(u(2 * n - p), u(n + r)));
        const int e = static_cast<int>(p) + 1;
        sum += c * (rational_pow(inv_a, e) - rational_pow(inv_b, e)) / (inv_a - inv_b);
    }
    Rational out = rational_pow(alpha * beta, static_cast<int>(n - r)) * sum;
    out.canonicalize();
    return out;
}

Integer mct_count(std::size_t n, std::size_t r) {
    check_sector(n, r);
    Rational v = ratio(2 * (r + 1), n + r + 2) * Rational(binomial(u(2 * n + 1), u(n - r)));
    return exact_quotient(v);
}

Integer mct_count_by_k(std::size_t n, std::size_t r, std::size_t k) {
    if (r + k > n) throw std::invalid_argument("k + r must not exceed n");
    const std::size_t ell = n - r - k;
    Rational v = ratio(r + 1, n + 1) * Rational(binomial(u(n + 1), u(k)) * binomial(u(n + 1), u(ell)));
    return exact_quotient(v);
}

Integer equivalence_class_count(std::size_t n, std::size_t r) {
    check_sector(n, r);
    Rational v(binomial(u(n), u(r)) * factorial(u(n + 1)), factorial(u(r + 1)));
    v.canonicalize();
    return exact_quotient(v);
}

Integer macmahon_box(std::size_t a, std::size_t b, std::size_t c) {
    Rational v = 1;
    for (std::size_t i = 1; i <= a; ++i)
        for (std::size_t j = 1; j <= b; ++j)
            for (std::size_t m = 1; m <= c; ++m)
                v *= ratio(i + j + m - 1, i + j + m - 2);
    return exact_quotient(v);
}

}  // namespace rat
