#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace latpoly {

// A cell (row, col) of the nonnegative quadrant. Under the determinant map the
// row index becomes an x-exponent and the column index a y-exponent.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Column-major order: by column, then by row. This is the canonical ordering
// that fixes the sign of every lattice determinant.
inline bool pseudo_lex_less(const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
}

// A finite set of distinct cells, stored in pseudo-lex order.
class LatticeDiagram {
  public:
    LatticeDiagram() = default;
    explicit LatticeDiagram(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(const Cell& c) const;
    bool empty() const { return cells_.empty(); }

    int xdegree() const;  // sum of rows
    int ydegree() const;  // sum of cols

    auto operator<=>(const LatticeDiagram&) const = default;

  private:
    std::vector<Cell> cells_;
};

// Weakly decreasing positive parts. Row r of the diagram has parts()[r] cells.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const;  // number of cells
    int row_length(int r) const { return r < rows() ? parts_[r] : 0; }
    bool contains(const Cell& c) const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// A partition shape with a set of removed cells.
class HoledDiagram {
  public:
    HoledDiagram() = default;
    HoledDiagram(Partition shape, std::set<Cell> holes);

    const Partition& shape() const { return shape_; }
    const std::set<Cell>& holes() const { return holes_; }
    LatticeDiagram cells() const;  // the denoted diagram, shape minus holes

    auto operator<=>(const HoledDiagram&) const = default;

  private:
    Partition shape_;
    std::set<Cell> holes_;
};

LatticeDiagram partition_cells(const Partition& mu);
std::vector<Cell> pseudo_lex_order(const LatticeDiagram& d);

// Cells of mu weakly north-east of c.
std::vector<Cell> shadow(const Partition& mu, const Cell& c);
int shadow_size(const Partition& mu, const Cell& c);

HoledDiagram remove_cells(const Partition& mu, const std::set<Cell>& holes);
LatticeDiagram remove_cell(const Partition& mu, const Cell& hole);

// Shadow cells whose right neighbour is outside mu.
std::vector<Cell> right_edge_cells(const Partition& mu, const Cell& c);

// Text forms: "4,2,1" for partitions, "(i,j)" for cells, ";"-separated lists.
Partition parse_partition(const std::string& s);
Cell parse_cell(const std::string& s);
std::vector<Cell> parse_cells(const std::string& s);
std::string to_string(const Partition& mu);
std::string to_string(const Cell& c);
std::string to_string(const LatticeDiagram& d);

// All partitions of n, in lexicographically decreasing part order.
std::vector<Partition> partitions_of(int n);

}  // namespace latpoly
