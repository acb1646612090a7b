#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latpoly/rational.hpp"

namespace latpoly {

enum class Alpha { X, Y };

struct Bidegree {
    int dx = 0;
    int dy = 0;
    auto operator<=>(const Bidegree&) const = default;
};

// Exponent vectors for x_1..x_n and y_1..y_n; the arity n is fixed per context.
struct Monomial {
    std::vector<std::int32_t> xe, ye;

    Monomial() = default;
    Monomial(std::vector<std::int32_t> x, std::vector<std::int32_t> y)
        : xe(std::move(x)), ye(std::move(y)) {}
    static Monomial one(int n) {
        return Monomial(std::vector<std::int32_t>(n, 0), std::vector<std::int32_t>(n, 0));
    }
    static Monomial var(int n, Alpha a, int i, int exp = 1);

    int n() const { return static_cast<int>(xe.size()); }
    int xdeg() const;
    int ydeg() const;
    int deg() const { return xdeg() + ydeg(); }
    Bidegree bidegree() const { return {xdeg(), ydeg()}; }
    bool is_one() const { return deg() == 0; }
    bool divides(const Monomial& m) const;  // componentwise <=

    bool operator==(const Monomial&) const = default;
};

// Canonical term order: total degree first, then lexicographic on the
// concatenated exponent vector, x block first. Declared once so every printed
// polynomial and every echelon pivot is reproducible bit for bit.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_less(a, b);
    }
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : n_(nvars) {}
    Polynomial(int nvars, TermMap terms);

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, Alpha a, int i);
    static Polynomial monomial(Monomial m, const Rational& c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;  // greatest in canonical order

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, Polynomial p);
    bool operator==(const Polynomial&) const = default;

    Polynomial derivative(Alpha a, int i) const;
    Polynomial pow(int e) const;

    bool is_bihomogeneous() const;
    // Bidegree of a nonzero bihomogeneous polynomial.
    Bidegree bidegree() const;

    Rational evaluate(const std::vector<Rational>& xs,
                      const std::vector<Rational>& ys) const;
    // Apply a permutation of the variable indices diagonally to x and y.
    Polynomial permute_variables(const std::vector<int>& perm) const;
    // Reinterpret in a larger arity, new variables unused.
    Polynomial embed(int nvars) const;

  private:
    int n_ = 0;
    TermMap terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Rational& c, const Polynomial& p);

// P(d)Q: substitute d/dx_i for x_i and d/dy_i for y_i in P, apply to Q.
Polynomial apply_operator(const Polynomial& P, const Polynomial& Q);

// (P,Q) = constant term of P(d)Q.
Rational apolar_pairing(const Polynomial& P, const Polynomial& Q);

std::map<Bidegree, Polynomial> bihomogeneous_components(const Polynomial& P);

// P = sum over beta of y^beta * c_beta(X); keys are the y-exponent vectors.
std::map<std::vector<std::int32_t>, Polynomial> y_layers(const Polynomial& P);

// Signed sum of terms like "2*x1^2*y3 - 1/2*x2".
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(int nvars, const std::string& s);

}  // namespace latpoly
