#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rat {

using Integer = mpz_class;
using Rational = mpq_class;

/// The four indeterminates that appear in every generating function here.
/// Text names: a (alpha), b (beta), q, x.
enum class Symbol : std::uint8_t { Alpha = 0, Beta = 1, Q = 2, X = 3 };

inline constexpr std::array<Symbol, 4> kAllSymbols = {Symbol::Alpha, Symbol::Beta, Symbol::Q,
                                                      Symbol::X};

char symbol_name(Symbol s);

class MissingSymbol : public std::invalid_argument {
public:
    explicit MissingSymbol(Symbol s);
    Symbol symbol() const { return symbol_; }

private:
    Symbol symbol_;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Values for the indeterminates; unbound symbols may only appear with exponent zero.
class Binding {
public:
    Binding() = default;
    Binding(Rational alpha, Rational beta, Rational q);

    Binding& set(Symbol s, Rational value);
    const std::optional<Rational>& get(Symbol s) const {
        return values_[static_cast<std::size_t>(s)];
    }

private:
    std::array<std::optional<Rational>, 4> values_;
};

/// Sparse polynomial in (alpha, beta, q, x) with big-integer coefficients.
///
/// Terms are kept in a map keyed by the exponent vector, ordered descending
/// lexicographically on (e_alpha, e_beta, e_q, e_x); zero coefficients are never
/// stored, so structural equality is polynomial equality.
class Polynomial {
public:
    using Exponents = std::array<unsigned, 4>;
    using TermMap = std::map<Exponents, Integer, std::greater<Exponents>>;

    Polynomial() = default;
    Polynomial(long constant);  // NOLINT(google-explicit-constructor)
    explicit Polynomial(const Integer& constant);

    static Polynomial monomial(const Exponents& e, const Integer& coefficient = 1);
    static Polynomial symbol(Symbol s, unsigned power = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Integer coefficient(const Exponents& e) const;
    unsigned degree(Symbol s) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(unsigned e) const;

    Rational evaluate(const Binding& at) const;

    /// Replaces `s` by `value` everywhere (composition).
    Polynomial substitute(Symbol s, const Polynomial& value) const;

    /// Collects the coefficient polynomial of s^k for each k.
    std::map<unsigned, Polynomial> split_by(Symbol s) const;

    /// Canonical text form, e.g. "a^2*b + a*b^2 + q*a*b".
    std::string to_string() const;
    static Polynomial parse(std::string_view text);

private:
    void add_term(const Exponents& e, const Integer& c);

    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }
inline Rational poly_eval(const Polynomial& p, const Binding& at) { return p.evaluate(at); }

/// Exact "p/q" (or bare integer) parsing; rejects anything that looks like a float.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);
Rational rational_pow(const Rational& base, int exponent);

}  // namespace rat
