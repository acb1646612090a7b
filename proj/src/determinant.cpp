#include "latpoly/determinant.hpp"

#include <algorithm>
#include <stdexcept>

namespace latpoly {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Monomial term_monomial(const std::vector<Cell>& cells, const std::vector<int>& perm) {
    const int n = static_cast<int>(cells.size());
    Monomial m = Monomial::one(n);
    for (int i = 0; i < n; ++i) {
        m.xe[i] = cells[perm[i]].row;
        m.ye[i] = cells[perm[i]].col;
    }
    return m;
}

}  // namespace

Polynomial delta(const LatticeDiagram& d) {
    const int n = d.size();
    if (n == 0) throw std::domain_error("delta of the empty diagram");
    const std::vector<Cell>& cells = d.cells();

    std::vector<std::vector<std::pair<Monomial, int>>> blocks(n);
#pragma omp parallel for schedule(dynamic)
    for (int first = 0; first < n; ++first) {
        std::vector<int> rest;
        for (int j = 0; j < n; ++j)
            if (j != first) rest.push_back(j);
        std::vector<int> perm(n);
        perm[0] = first;
        auto& out = blocks[first];
        do {
            std::copy(rest.begin(), rest.end(), perm.begin() + 1);
            out.emplace_back(term_monomial(cells, perm), permutation_sign(perm));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    Polynomial p(n);
    for (const auto& block : blocks)
        for (const auto& [m, s] : block) p.add_term(m, s);
    return p;
}

namespace {

// det of the minor with the given variable rows and cell columns.
Polynomial det_minor(const std::vector<Cell>& cells, const std::vector<int>& rows,
                     const std::vector<int>& cols, int n) {
    if (cols.empty()) return Polynomial::constant(n, 1);
    const int col = cols.front();
    const std::vector<int> rest(cols.begin() + 1, cols.end());
    Polynomial acc(n);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const int var = rows[k];
        Monomial e = Monomial::one(n);
        e.xe[var] = cells[col].row;
        e.ye[var] = cells[col].col;
        std::vector<int> subrows;
        for (std::size_t t = 0; t < rows.size(); ++t)
            if (t != k) subrows.push_back(rows[t]);
        Polynomial cof = det_minor(cells, subrows, rest, n);
        Polynomial entry = Polynomial::monomial(e, (k % 2 == 0) ? 1 : -1);
        acc += entry * cof;
    }
    return acc;
}

}  // namespace

Polynomial delta_serial(const LatticeDiagram& d) {
    const int n = d.size();
    if (n == 0) throw std::domain_error("delta of the empty diagram");
    std::vector<int> rows(n), cols(n);
    for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
    return det_minor(d.cells(), rows, cols, n);
}

std::vector<Rational> extract_diagram_coefficients(
    const Polynomial& P, const std::vector<LatticeDiagram>& ds) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ds.size());
    Polynomial rest = P;
    for (const LatticeDiagram& d : ds) {
        if (d.size() == 0) throw std::domain_error("empty diagram in extraction");
        const int n = d.size();
        if (n != P.nvars())
            throw std::invalid_argument("diagram size does not match arity");
        Monomial probe = Monomial::one(n);
        for (int i = 0; i < n; ++i) {
            probe.xe[i] = d.cells()[i].row;
            probe.ye[i] = d.cells()[i].col;
        }
        const Rational c = rest.coeff(probe);
        coeffs.push_back(c);
        if (!is_zero(c)) rest -= c * delta(d);
    }
    if (!rest.is_zero())
        throw std::domain_error("polynomial is not in the span of the given deltas");
    return coeffs;
}

}  // namespace latpoly
