#include "latpoly/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latpoly {

namespace {
void check_arity(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomial arity mismatch: " +
                                    std::to_string(a.nvars()) + " vs " +
                                    std::to_string(b.nvars()));
}
}  // namespace

Monomial Monomial::var(int n, Alpha a, int i, int exp) {
    Monomial m = one(n);
    if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
    (a == Alpha::X ? m.xe[i] : m.ye[i]) = exp;
    return m;
}

int Monomial::xdeg() const { return std::accumulate(xe.begin(), xe.end(), 0); }
int Monomial::ydeg() const { return std::accumulate(ye.begin(), ye.end(), 0); }

bool Monomial::divides(const Monomial& m) const {
    for (int i = 0; i < n(); ++i)
        if (xe[i] > m.xe[i] || ye[i] > m.ye[i]) return false;
    return true;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    const int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    // Ties: variables rank x1 < ... < xn < y1 < ... < yn, so weight on an
    // earlier variable makes the monomial smaller.
    for (int i = 0; i < a.n(); ++i)
        if (a.xe[i] != b.xe[i]) return a.xe[i] > b.xe[i];
    for (int i = 0; i < a.n(); ++i)
        if (a.ye[i] != b.ye[i]) return a.ye[i] > b.ye[i];
    return false;
}

Polynomial::Polynomial(int nvars, TermMap terms) : n_(nvars), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.n() != n_)
            throw std::invalid_argument("monomial arity mismatch in polynomial");
        if (sgn(it->second) == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial::one(nvars), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, Alpha a, int i) {
    Polynomial p(nvars);
    p.add_term(Monomial::var(nvars, a, i), 1);
    return p;
}

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
    Polynomial p(m.n());
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.n() != n_) throw std::invalid_argument("monomial arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_arity(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_arity(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_arity(a, b);
    Polynomial r(a.nvars());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (int i = 0; i < m.n(); ++i) {
                m.xe[i] += mb.xe[i];
                m.ye[i] += mb.ye[i];
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const Rational& c, Polynomial p) {
    if (sgn(c) == 0) return Polynomial(p.nvars());
    for (auto& [m, v] : p.terms_) v *= c;
    return p;
}

Polynomial Polynomial::derivative(Alpha a, int i) const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        const std::int32_t e = (a == Alpha::X) ? m.xe[i] : m.ye[i];
        if (e == 0) continue;
        Monomial d = m;
        (a == Alpha::X ? d.xe[i] : d.ye[i]) = e - 1;
        r.add_term(d, c * e);
    }
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::constant(n_, 1);
    for (int t = 0; t < e; ++t) r = r * *this;
    return r;
}

bool Polynomial::is_bihomogeneous() const {
    if (terms_.empty()) return true;
    const Bidegree d = terms_.begin()->first.bidegree();
    for (const auto& [m, c] : terms_)
        if (m.bidegree() != d) return false;
    return true;
}

Bidegree Polynomial::bidegree() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no bidegree");
    if (!is_bihomogeneous())
        throw std::domain_error("polynomial is not bihomogeneous");
    return terms_.begin()->first.bidegree();
}

Rational Polynomial::evaluate(const std::vector<Rational>& xs,
                              const std::vector<Rational>& ys) const {
    if (static_cast<int>(xs.size()) != n_ || static_cast<int>(ys.size()) != n_)
        throw std::invalid_argument("evaluation point arity mismatch");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < n_; ++i) {
            for (int e = 0; e < m.xe[i]; ++e) t *= xs[i];
            for (int e = 0; e < m.ye[i]; ++e) t *= ys[i];
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::permute_variables(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation arity mismatch");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
        Monomial pm = Monomial::one(n_);
        for (int i = 0; i < n_; ++i) {
            pm.xe[perm[i]] = m.xe[i];
            pm.ye[perm[i]] = m.ye[i];
        }
        r.add_term(pm, c);
    }
    return r;
}

Polynomial Polynomial::embed(int nvars) const {
    if (nvars < n_) throw std::invalid_argument("embed cannot shrink arity");
    Polynomial r(nvars);
    for (const auto& [m, c] : terms_) {
        Monomial em = Monomial::one(nvars);
        std::copy(m.xe.begin(), m.xe.end(), em.xe.begin());
        std::copy(m.ye.begin(), m.ye.end(), em.ye.begin());
        r.add_term(em, c);
    }
    return r;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial scale(const Rational& c, const Polynomial& p) { return c * p; }

Polynomial apply_operator(const Polynomial& P, const Polynomial& Q) {
    check_arity(P, Q);
    const int n = P.nvars();
    Polynomial r(n);
    for (const auto& [mp, cp] : P.terms()) {
        for (const auto& [mq, cq] : Q.terms()) {
            if (!mp.divides(mq)) continue;
            Integer f = 1;
            Monomial m = mq;
            for (int i = 0; i < n; ++i) {
                if (mp.xe[i]) {
                    f *= falling_factorial(mq.xe[i], mp.xe[i]);
                    m.xe[i] -= mp.xe[i];
                }
                if (mp.ye[i]) {
                    f *= falling_factorial(mq.ye[i], mp.ye[i]);
                    m.ye[i] -= mp.ye[i];
                }
            }
            r.add_term(m, cp * cq * Rational(f));
        }
    }
    return r;
}

Rational apolar_pairing(const Polynomial& P, const Polynomial& Q) {
    check_arity(P, Q);
    Rational total = 0;
    const auto& a = P.terms();
    const auto& b = Q.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    MonomialLess less;
    while (ia != a.end() && ib != b.end()) {
        if (less(ia->first, ib->first)) {
            ++ia;
        } else if (less(ib->first, ia->first)) {
            ++ib;
        } else {
            Integer f = 1;
            for (int i = 0; i < P.nvars(); ++i) {
                f *= factorial(ia->first.xe[i]);
                f *= factorial(ia->first.ye[i]);
            }
            total += ia->second * ib->second * Rational(f);
            ++ia;
            ++ib;
        }
    }
    return total;
}

std::map<Bidegree, Polynomial> bihomogeneous_components(const Polynomial& P) {
    std::map<Bidegree, Polynomial> out;
    for (const auto& [m, c] : P.terms()) {
        auto [it, inserted] = out.emplace(m.bidegree(), Polynomial(P.nvars()));
        it->second.add_term(m, c);
    }
    return out;
}

std::map<std::vector<std::int32_t>, Polynomial> y_layers(const Polynomial& P) {
    std::map<std::vector<std::int32_t>, Polynomial> out;
    const int n = P.nvars();
    for (const auto& [m, c] : P.terms()) {
        auto [it, inserted] = out.emplace(m.ye, Polynomial(n));
        Monomial xm(m.xe, std::vector<std::int32_t>(n, 0));
        it->second.add_term(xm, c);
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            a = abs(a);
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || m.is_one()) factors.push_back(a.get_str());
        for (int i = 0; i < m.n(); ++i) {
            if (m.xe[i]) {
                std::string f = "x" + std::to_string(i + 1);
                if (m.xe[i] > 1) f += "^" + std::to_string(m.xe[i]);
                factors.push_back(f);
            }
        }
        for (int i = 0; i < m.n(); ++i) {
            if (m.ye[i]) {
                std::string f = "y" + std::to_string(i + 1);
                if (m.ye[i] > 1) f += "^" + std::to_string(m.ye[i]);
                factors.push_back(f);
            }
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << "*";
            os << factors[k];
        }
    }
    return os.str();
}

namespace {
// One factor of a term: a rational literal or x<i>[^e] / y<i>[^e].
void apply_factor(const std::string& f, int nvars, Monomial& m, Rational& coef) {
    if (f.empty()) throw std::invalid_argument("empty factor in polynomial literal");
    if (f[0] == 'x' || f[0] == 'y') {
        const bool isx = f[0] == 'x';
        const auto caret = f.find('^');
        const std::string idx = f.substr(1, caret == std::string::npos
                                                ? std::string::npos
                                                : caret - 1);
        const int i = std::stoi(idx) - 1;
        const int e = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
        if (i < 0 || i >= nvars)
            throw std::invalid_argument("variable index out of range in '" + f + "'");
        (isx ? m.xe[i] : m.ye[i]) += e;
    } else {
        coef *= parse_rational(f);
    }
}
}  // namespace

Polynomial parse_polynomial(int nvars, const std::string& s) {
    Polynomial p(nvars);
    std::string text;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    if (text.empty() || text == "0") return p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') sign = -sign;
            ++pos;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' &&
               !(text[end] == '-' && end > pos && text[end - 1] != '/'))
            ++end;
        const std::string term = text.substr(pos, end - pos);
        Monomial m = Monomial::one(nvars);
        Rational coef = sign;
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            const auto star = term.find('*', fpos);
            const std::string f =
                term.substr(fpos, star == std::string::npos ? std::string::npos
                                                            : star - fpos);
            apply_factor(f, nvars, m, coef);
            if (star == std::string::npos) break;
            fpos = star + 1;
        }
        p.add_term(m, coef);
        pos = end;
    }
    return p;
}

}  // namespace latpoly
