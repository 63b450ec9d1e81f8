#ifndef CYCPERM_MPOLY_HPP
#define CYCPERM_MPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cycperm/bigint.hpp"

namespace cycperm {

enum class Var { Q, X, Y };

// Exponent triple of a monomial q^q x^x y^y.
struct Exps {
    int q = 0;
    int x = 0;
    int y = 0;
    bool operator==(const Exps&) const = default;
    int degree() const { return q + x + y; }
};

// Graded order, q-major within a degree class. Iterating a term map in this
// order gives the canonical printing order (ascending total degree).
struct TermOrder {
    bool operator()(const Exps& a, const Exps& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.q != b.q) return a.q > b.q;
        if (a.x != b.x) return a.x > b.x;
        return a.y > b.y;
    }
};

// Sparse polynomial in q, x, y over arbitrary-precision integers.
// No zero coefficients are ever stored; the zero polynomial has no terms.
class MPoly {
public:
    using TermMap = std::map<Exps, BigInt, TermOrder>;

    MPoly() = default;
    MPoly(long long c);
    MPoly(const BigInt& c);

    static MPoly variable(Var v);
    static MPoly monomial(BigInt c, int eq, int ex, int ey);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of the exact monomial; zero if absent.
    BigInt coeff(int eq, int ex, int ey) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { lhs += rhs; return lhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { lhs -= rhs; return lhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs) { *this = *this * rhs; return *this; }

    bool operator==(const MPoly& rhs) const { return terms_ == rhs.terms_; }

    // Formal partial derivative.
    MPoly partial(Var v) const;

    // Substitutions. subst_q_squared doubles every q exponent (q -> q^2);
    // subst replaces a variable by an exact integer constant.
    MPoly subst_q_squared() const;
    MPoly subst(Var v, const BigInt& value) const;
    BigInt eval(const BigInt& q, const BigInt& x, const BigInt& y) const;

    // Polynomial in the remaining variables multiplying v^e.
    MPoly coefficient_of(Var v, int e) const;

    // Maximum exponent of v; nullopt for the zero polynomial.
    std::optional<int> degree_in(Var v) const;

    // Coefficients c_0..c_deg of v^k with all other variables required absent.
    // Throws std::invalid_argument if another variable occurs. The zero
    // polynomial yields {0}.
    std::vector<BigInt> univariate_coeffs(Var v) const;

    // Canonical text form, e.g. "(1+5q)x + (3+4y+4qy)x^2 + 6x^3y^2 + x^4y^4".
    // Terms are grouped by ascending power of x; a group's q,y-coefficient is
    // parenthesized when it has several terms. parse accepts the same grammar
    // (sums of implicit products of integers, variables with optional '^'
    // powers, and parenthesized subexpressions).
    std::string to_string() const;
    static MPoly parse(std::string_view text);

private:
    TermMap terms_;
    void add_term(const Exps& e, const BigInt& c);
};

std::string var_name(Var v);

} // namespace cycperm

#endif
