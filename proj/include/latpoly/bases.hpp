#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "latpoly/spaces.hpp"
#include "latpoly/tableaux.hpp"

namespace latpoly {

// Raised when a family that a proved statement guarantees independent or
// spanning fails the exact rank check. Test signal, never swallowed.
class theorem_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// (layer, xmon): apply xmon(dX) to the y-layer coefficient indexed by layer.
struct MonomialIndex {
    std::vector<std::int32_t> layer;
    std::vector<std::int32_t> xmon;
    bool operator==(const MonomialIndex&) const = default;
};

struct BasisEntry {
    Selection selection;
    MonomialIndex index;
    Polynomial value;
};

struct BasisFamily {
    std::vector<BasisEntry> entries;
    std::size_t size() const { return entries.size(); }
};

// Deterministic greedy extraction of a monomial-derivative basis of
// x_space(d): walk (xmon degree, layer, xmon) in canonical order, keep an
// index when its value is independent of what was kept before.
std::vector<MonomialIndex> greedy_monomial_basis(const LatticeDiagram& d);

// The explicit basis family for the zero-y-degree space: per selection F,
// the first n!/mu_F! greedy indices against the layers of delta of its holed
// diagram. Global independence is checked by exact rank; failure throws.
BasisFamily build_basis_family(const Partition& mu, const Cell& c, int k);

// Full verification: family independent, contained in the sum space, and of
// its exact dimension.
struct BasisVerification {
    std::int64_t family_size = 0;
    std::int64_t space_dimension = 0;
    std::int64_t tableau_count = 0;
    bool independent = false;
    bool contained = false;
    bool spans = false;
    bool ok() const {
        return independent && contained && spans &&
               family_size == space_dimension && family_size == tableau_count;
    }
};
BasisVerification verify_basis_family(const Partition& mu, const Cell& c, int k);

// Subscript scheme for the killing product of h-operators.
enum class KillStrategy { descending, ascending };

struct KillReport {
    struct Entry {
        Selection selection;
        DepthTuple depths;
        bool is_target = false;
        bool image_zero = false;
        bool ok = false;
    };
    std::vector<Entry> entries;
    bool all_ok() const;
};

// Applies the depth-driven product of h_m(dX) powers for the lexicographically
// greatest depth tuple to every selection's delta; lex-smaller tuples must die
// and the target must survive.
KillReport depth_filtration_kill(const Partition& mu, const Cell& c, int k,
                                 KillStrategy strategy = KillStrategy::descending);

}  // namespace latpoly
