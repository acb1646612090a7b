#include "latpoly/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latpoly {

LatticeDiagram::LatticeDiagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (const Cell& c : cells_)
        if (c.row < 0 || c.col < 0)
            throw std::invalid_argument("cell outside the nonnegative quadrant");
    std::sort(cells_.begin(), cells_.end(), pseudo_lex_less);
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw std::invalid_argument("lattice diagram has a repeated cell");
}

bool LatticeDiagram::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c,
                              pseudo_lex_less);
}

int LatticeDiagram::xdegree() const {
    int s = 0;
    for (const Cell& c : cells_) s += c.row;
    return s;
}

int LatticeDiagram::ydegree() const {
    int s = 0;
    for (const Cell& c : cells_) s += c.col;
    return s;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Cell& c) const {
    return c.row >= 0 && c.row < rows() && c.col >= 0 && c.col < parts_[c.row];
}

HoledDiagram::HoledDiagram(Partition shape, std::set<Cell> holes)
    : shape_(std::move(shape)), holes_(std::move(holes)) {
    for (const Cell& h : holes_)
        if (!shape_.contains(h))
            throw std::invalid_argument("hole " + latpoly::to_string(h) +
                                        " outside shape " + latpoly::to_string(shape_));
}

LatticeDiagram HoledDiagram::cells() const {
    std::vector<Cell> cs;
    for (int r = 0; r < shape_.rows(); ++r)
        for (int c = 0; c < shape_.parts()[r]; ++c)
            if (!holes_.contains({r, c})) cs.push_back({r, c});
    return LatticeDiagram(std::move(cs));
}

LatticeDiagram partition_cells(const Partition& mu) {
    std::vector<Cell> cs;
    for (int r = 0; r < mu.rows(); ++r)
        for (int c = 0; c < mu.parts()[r]; ++c) cs.push_back({r, c});
    return LatticeDiagram(std::move(cs));
}

std::vector<Cell> pseudo_lex_order(const LatticeDiagram& d) { return d.cells(); }

std::vector<Cell> shadow(const Partition& mu, const Cell& c) {
    if (!mu.contains(c))
        throw std::invalid_argument("cell " + to_string(c) + " not in " + to_string(mu));
    std::vector<Cell> out;
    for (int r = c.row; r < mu.rows(); ++r)
        for (int q = c.col; q < mu.parts()[r]; ++q) out.push_back({r, q});
    std::sort(out.begin(), out.end(), pseudo_lex_less);
    return out;
}

int shadow_size(const Partition& mu, const Cell& c) {
    return static_cast<int>(shadow(mu, c).size());
}

HoledDiagram remove_cells(const Partition& mu, const std::set<Cell>& holes) {
    return HoledDiagram(mu, holes);
}

LatticeDiagram remove_cell(const Partition& mu, const Cell& hole) {
    return HoledDiagram(mu, {hole}).cells();
}

std::vector<Cell> right_edge_cells(const Partition& mu, const Cell& c) {
    std::vector<Cell> out;
    for (const Cell& s : shadow(mu, c))
        if (!mu.contains({s.row, s.col + 1})) out.push_back(s);
    return out;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("empty partition literal");
    return Partition(std::move(parts));
}

Cell parse_cell(const std::string& s) {
    int r = 0, c = 0;
    char l = 0, m = 0, t = 0;
    std::stringstream ss(s);
    if (!(ss >> l >> r >> m >> c >> t) || l != '(' || m != ',' || t != ')')
        throw std::invalid_argument("bad cell literal: '" + s + "'");
    return Cell{r, c};
}

std::vector<Cell> parse_cells(const std::string& s) {
    std::vector<Cell> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        const auto b = tok.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        const auto e = tok.find_last_not_of(" \t");
        out.push_back(parse_cell(tok.substr(b, e - b + 1)));
    }
    return out;
}

std::string to_string(const Partition& mu) {
    std::string s;
    for (int p : mu.parts()) {
        if (!s.empty()) s += ',';
        s += std::to_string(p);
    }
    return s;
}

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(const LatticeDiagram& d) {
    std::string s;
    for (const Cell& c : d.cells()) {
        if (!s.empty()) s += ';';
        s += to_string(c);
    }
    return s;
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n <= 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace latpoly
