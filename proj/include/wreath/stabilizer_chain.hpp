// Base and strong generating set for a permutation group, built with a
// deterministic (non-randomized) Schreier-Sims. Base points are chosen as the
// first point moved by the offending generator, so a fixed input ordering
// always yields the same chain. Supports exact order and membership queries.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wreath/perm.hpp"

namespace wreath {

class StabilizerChain {
public:
    // Generators must be nonempty and of equal degree. Identity generators
    // are ignored; a list of identities yields the trivial chain.
    static StabilizerChain build(const std::vector<Perm>& gens);

    std::size_t degree() const { return degree_; }
    const BigInt& order() const { return order_; }

    // True iff p lies in the represented group. Degree mismatch is an error.
    bool contains(const Perm& p) const;

    std::vector<uint32_t> base() const;
    std::vector<std::size_t> orbit_sizes() const;
    std::size_t num_levels() const { return levels_.size(); }

private:
    struct Level {
        uint32_t beta = 0;
        std::vector<Perm> gens;            // generators fixing all earlier base points
        std::vector<int32_t> where;        // point -> orbit position, -1 outside
        std::vector<uint32_t> orbit;       // discovery order, orbit[0] == beta
        std::vector<Perm> rep;             // rep[j] maps beta to orbit[j]
        std::vector<Perm> rep_inv;         // cached after the build settles
    };

    explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

    void insert_generator(const Perm& g);
    void close_under_schreier();
    void recompute_orbit(std::size_t i);
    // Sift through levels [from, end); returns the residue and the level at
    // which sifting stopped (== num_levels() on full sift).
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
    void finalize();

    std::size_t degree_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
};

}  // namespace wreath
