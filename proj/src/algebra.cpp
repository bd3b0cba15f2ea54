#include "rat/algebra.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace rat {

char symbol_name(Symbol s) {
    switch (s) {
        case Symbol::Alpha: return 'a';
        case Symbol::Beta: return 'b';
        case Symbol::Q: return 'q';
        case Symbol::X: return 'x';
    }
    return '?';
}

MissingSymbol::MissingSymbol(Symbol s)
    : std::invalid_argument(std::string("no value bound for symbol '") + symbol_name(s) + "'"),
      symbol_(s) {}

Binding::Binding(Rational alpha, Rational beta, Rational q) {
    set(Symbol::Alpha, std::move(alpha));
    set(Symbol::Beta, std::move(beta));
    set(Symbol::Q, std::move(q));
}

Binding& Binding::set(Symbol s, Rational value) {
    value.canonicalize();
    values_[static_cast<std::size_t>(s)] = std::move(value);
    return *this;
}

Polynomial::Polynomial(long constant) {
    if (constant != 0) terms_.emplace(Exponents{}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
    if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Polynomial Polynomial::monomial(const Exponents& e, const Integer& coefficient) {
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(e, coefficient);
    return p;
}

Polynomial Polynomial::symbol(Symbol s, unsigned power) {
    Exponents e{};
    e[static_cast<std::size_t>(s)] = power;
    return monomial(e);
}

Integer Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Polynomial::degree(Symbol s) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(s)]);
    return d;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Rational Polynomial::evaluate(const Binding& at) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (Symbol s : kAllSymbols) {
            unsigned power = e[static_cast<std::size_t>(s)];
            if (power == 0) continue;
            const auto& value = at.get(s);
            if (!value) throw MissingSymbol(s);
            term *= rational_pow(*value, static_cast<int>(power));
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

Polynomial Polynomial::substitute(Symbol s, const Polynomial& value) const {
    const auto idx = static_cast<std::size_t>(s);
    std::vector<Polynomial> powers{Polynomial(1)};
    Polynomial out;
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[idx] = 0;
        out += monomial(rest, c) * powers[e[idx]];
    }
    return out;
}

std::map<unsigned, Polynomial> Polynomial::split_by(Symbol s) const {
    const auto idx = static_cast<std::size_t>(s);
    std::map<unsigned, Polynomial> out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[idx] = 0;
        out[e[idx]].add_term(rest, c);
    }
    return out;
}

namespace {

constexpr std::array<Symbol, 4> kPrintOrder = {Symbol::Q, Symbol::Alpha, Symbol::Beta, Symbol::X};

std::string monomial_text(const Polynomial::Exponents& e, const Integer& magnitude) {
    std::string out;
    bool constant = true;
    for (Symbol s : kPrintOrder) constant = constant && e[static_cast<std::size_t>(s)] == 0;
    if (constant || magnitude != 1) out = magnitude.get_str();
    for (Symbol s : kPrintOrder) {
        unsigned power = e[static_cast<std::size_t>(s)];
        if (power == 0) continue;
        if (!out.empty()) out += '*';
        out += symbol_name(s);
        if (power > 1) out += '^' + std::to_string(power);
    }
    return out;
}

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        Polynomial out;
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        out += signed_term(negative);
        for (;;) {
            skip_space();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            out += signed_term(op == '-');
        }
        return out;
    }

private:
    Polynomial signed_term(bool negative) {
        Polynomial t = term();
        return negative ? -t : t;
    }

    Polynomial term() {
        Integer coefficient = 1;
        Polynomial::Exponents e{};
        for (bool first = true;; first = false) {
            skip_space();
            if (!first) {
                if (at_end() || peek() != '*') break;
                ++pos_;
                skip_space();
            }
            if (at_end()) fail("dangling factor");
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coefficient *= Integer(digits());
            } else {
                Symbol s = symbol(c);
                ++pos_;
                unsigned power = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    power = static_cast<unsigned>(std::stoul(digits()));
                }
                e[static_cast<std::size_t>(s)] += power;
            }
        }
        return Polynomial::monomial(e, coefficient);
    }

    Symbol symbol(char c) {
        switch (c) {
            case 'a': return Symbol::Alpha;
            case 'b': return Symbol::Beta;
            case 'q': return Symbol::Q;
            case 'x': return Symbol::X;
            default: fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        Integer magnitude = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += monomial_text(e, magnitude);
    }
    return out;
}

Polynomial Polynomial::parse(std::string_view text) { return PolynomialParser(text).parse(); }

Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not an exact rational (expected p/q): '" + std::string(text) + "'");
    }
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational out(n, d);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        Rational inv = 1 / base;
        return rational_pow(inv, -exponent);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    out.canonicalize();
    return out;
}

}  // namespace rat
