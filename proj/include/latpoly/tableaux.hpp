#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "latpoly/diagram.hpp"

namespace latpoly {

// Injective partial filling with entries 1..n; unfilled cells are white.
// Entries increase left to right along each row across the filled cells.
struct Tableau {
    Partition shape;
    std::map<Cell, int> entries;
    std::set<Cell> white;
};

// k circled cells forming right-edge suffixes of shadow rows: row r carries
// circles on its last whites_per_row[r] cells. One suffix profile per
// selection; this is the reading under which the counting identity and the
// basis dimensions close up.
struct Selection {
    Partition shape;
    Cell anchor;
    std::vector<int> whites_per_row;

    std::vector<Cell> circled() const;
    int k() const;
};

using DepthTuple = std::vector<int>;  // weakly increasing

// n! / (nu_1! nu_2! ...), the number of injective row-increasing tableaux of
// shape nu. Exact; verified against enumeration in tests.
std::int64_t count_row_increasing(const Partition& nu, int n);

// All selections of k circled suffix cells in the shadow of c.
std::vector<Selection> enum_selections(const Partition& mu, const Cell& c, int k);

// Partition of n left after removing the circled cells and resorting rows.
Partition mu_f(const Selection& sel);

// The holed diagram attached to a selection. Scanning the circles right to
// left and bottom to top, a circle in column j' with l lower in-column spots
// that could carry a circle (free suffix ends below the lowest circle, plus
// circles already scanned) lands its hole at (i + l, j'); per column the
// holes form a block starting at row i + m.
HoledDiagram mu_f_holes(const Selection& sel);

// Depth of each hole (cells above it in its column that are not holes),
// sorted ascending.
DepthTuple depth_tuple(const HoledDiagram& hd);

// Row-increasing tableaux with k white suffix cells in the shadow.
std::vector<Tableau> enum_tableaux(const Partition& mu, const Cell& c, int k);
std::int64_t count_tableaux(const Partition& mu, const Cell& c, int k);

// Checks sum over selections of n!/mu_F! against the tableau count.
bool counting_identity(const Partition& mu, const Cell& c, int k);

}  // namespace latpoly
