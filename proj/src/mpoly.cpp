#include "cycperm/mpoly.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cycperm {

MPoly::MPoly(long long c) {
    if (c != 0) terms_.emplace(Exps{}, BigInt(c));
}

MPoly::MPoly(const BigInt& c) {
    if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

MPoly MPoly::variable(Var v) {
    return monomial(BigInt(1), v == Var::Q ? 1 : 0, v == Var::X ? 1 : 0, v == Var::Y ? 1 : 0);
}

MPoly MPoly::monomial(BigInt c, int eq, int ex, int ey) {
    assert(eq >= 0 && ex >= 0 && ey >= 0);
    MPoly r;
    if (!c.is_zero()) r.terms_.emplace(Exps{eq, ex, ey}, std::move(c));
    return r;
}

BigInt MPoly::coeff(int eq, int ex, int ey) const {
    auto it = terms_.find(Exps{eq, ex, ey});
    return it == terms_.end() ? BigInt() : it->second;
}

void MPoly::add_term(const Exps& e, const BigInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
    MPoly r;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            r.add_term(Exps{ea.q + eb.q, ea.x + eb.x, ea.y + eb.y}, ca * cb);
        }
    }
    return r;
}

namespace {
int exp_of(const Exps& e, Var v) {
    switch (v) {
        case Var::Q: return e.q;
        case Var::X: return e.x;
        default: return e.y;
    }
}

Exps with_exp(Exps e, Var v, int value) {
    switch (v) {
        case Var::Q: e.q = value; break;
        case Var::X: e.x = value; break;
        default: e.y = value; break;
    }
    return e;
}
} // namespace

MPoly MPoly::partial(Var v) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        int k = exp_of(e, v);
        if (k == 0) continue;
        r.add_term(with_exp(e, v, k - 1), c * BigInt(k));
    }
    return r;
}

MPoly MPoly::subst_q_squared() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exps{2 * e.q, e.x, e.y}, c);
    return r;
}

MPoly MPoly::subst(Var v, const BigInt& value) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        r.add_term(with_exp(e, v, 0), c * BigInt::pow(value, exp_of(e, v)));
    }
    return r;
}

BigInt MPoly::eval(const BigInt& q, const BigInt& x, const BigInt& y) const {
    BigInt r;
    for (const auto& [e, c] : terms_) {
        r += c * BigInt::pow(q, e.q) * BigInt::pow(x, e.x) * BigInt::pow(y, e.y);
    }
    return r;
}

MPoly MPoly::coefficient_of(Var v, int e) const {
    MPoly r;
    for (const auto& [exps, c] : terms_) {
        if (exp_of(exps, v) == e) r.terms_.emplace(with_exp(exps, v, 0), c);
    }
    return r;
}

std::optional<int> MPoly::degree_in(Var v) const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int k = exp_of(e, v);
        if (!deg || k > *deg) deg = k;
    }
    return deg;
}

std::vector<BigInt> MPoly::univariate_coeffs(Var v) const {
    auto deg = degree_in(v);
    std::vector<BigInt> coeffs(deg ? static_cast<std::size_t>(*deg) + 1 : 1);
    for (const auto& [e, c] : terms_) {
        if (e.degree() != exp_of(e, v)) {
            throw std::invalid_argument("univariate_coeffs: polynomial is not univariate in " +
                                        var_name(v));
        }
        coeffs[static_cast<std::size_t>(exp_of(e, v))] = c;
    }
    return coeffs;
}

std::string var_name(Var v) {
    switch (v) {
        case Var::Q: return "q";
        case Var::X: return "x";
        default: return "y";
    }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void append_power(std::string& out, const char* name, int e) {
    if (e == 0) return;
    out += name;
    if (e > 1) {
        out += '^';
        out += std::to_string(e);
    }
}

// Prints |c| q^eq x^ex y^ey (sign handled by the caller).
std::string monomial_text(const BigInt& c, int eq, int ex, int ey) {
    std::string out;
    BigInt a = c.abs();
    if (!(a == BigInt(1)) || (eq == 0 && ex == 0 && ey == 0)) out += a.to_string();
    append_power(out, "q", eq);
    append_power(out, "x", ex);
    append_power(out, "y", ey);
    return out;
}

// Sum over q,y-terms with no separating spaces, e.g. "1+5q" or "15y+20y^2".
std::string qy_sum_text(const MPoly& g) {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
        if (first) {
            if (c.sign() < 0) out += '-';
        } else {
            out += c.sign() < 0 ? '-' : '+';
        }
        out += monomial_text(c, e.q, 0, e.y);
        first = false;
    }
    return out;
}

} // namespace

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";

    // Group terms by the power of x, ascending.
    std::map<int, MPoly> groups;
    for (const auto& [e, c] : terms_) {
        groups[e.x].add_term(Exps{e.q, 0, e.y}, c);
    }

    std::string out;
    bool first = true;
    for (const auto& [ex, g] : groups) {
        if (g.term_count() == 1) {
            const auto& [e, c] = *g.terms().begin();
            if (first) {
                if (c.sign() < 0) out += '-';
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            out += monomial_text(c, e.q, ex, e.y);
        } else {
            std::string inner = qy_sum_text(g);
            if (!first) out += " + ";
            if (ex == 0 && groups.size() == 1) {
                out += inner;
            } else {
                out += '(';
                out += inner;
                out += ')';
                append_power(out, "x", ex);
            }
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
//
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := factor+                       (implicit multiplication)
//   factor  := INT | VAR ['^' INT] | '(' poly ')'
//   VAR     := 'q' | 'x' | 'y'

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    MPoly parse() {
        MPoly p = parse_poly();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                    ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MPoly parse_poly() {
        MPoly sum;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            MPoly t = parse_term();
            sum += negate ? -t : t;
            char c = peek();
            if (c == '+') {
                negate = false;
                ++pos_;
            } else if (c == '-') {
                negate = true;
                ++pos_;
            } else {
                return sum;
            }
        }
    }

    bool starts_factor(char c) const {
        return c == '(' || c == 'q' || c == 'x' || c == 'y' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    MPoly parse_term() {
        char c = peek();
        if (!starts_factor(c)) fail("expected a number, variable or '('");
        MPoly prod(1);
        while (starts_factor(peek())) prod *= parse_factor();
        return prod;
    }

    MPoly parse_factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return MPoly(parse_int_big());
        if (c == '(') {
            ++pos_;
            MPoly inner = parse_poly();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        Var v;
        if (c == 'q') v = Var::Q;
        else if (c == 'x') v = Var::X;
        else if (c == 'y') v = Var::Y;
        else fail("expected a number, variable or '('");
        ++pos_;
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            e = parse_exponent();
        }
        return MPoly::monomial(BigInt(1), v == Var::Q ? e : 0, v == Var::X ? e : 0,
                               v == Var::Y ? e : 0);
    }

    BigInt parse_int_big() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return BigInt::from_string(text_.substr(start, pos_ - start));
    }

    int parse_exponent() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4) fail("exponent too large");
        return std::stoi(digits);
    }
};

} // namespace

MPoly MPoly::parse(std::string_view text) {
    return PolyParser(text).parse();
}

} // namespace cycperm
