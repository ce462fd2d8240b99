// Wreath products of permutation groups by contiguous-block imprimitivity.
//
// Points of H wr K live on Z = X x Y with |X| = block size and |Y| = |K|;
// the pair (x, y) gets index x + |X|*y, so each fiber X_y is the contiguous
// range [y*|X|, (y+1)*|X|). Iterating with H = W(G,i), K = G gives the tower
// W(G,n) on G^n, whose points are mixed-radix numerals: coordinate i of a
// tuple (x_1,...,x_n) contributes x_i * |G|^(i-1), top coordinate most
// significant.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/perm.hpp"

namespace wreath {

// h acting on one fiber: index b*s + r maps to b*s + h[r] when b == block,
// fixed otherwise. Degree of the result is h.degree() * num_blocks.
Perm fiber_embed(const Perm& h, uint32_t block, uint32_t num_blocks);

// Right translation of the fibers: b*s + r maps to (b*k)*s + r, with b*k the
// product in K. An injective homomorphism K -> S(Z) (checked in tests, not
// here); identity of K gives the identity permutation.
Perm translation_embed(int k, const FiniteGroup& K, uint32_t block_size);

// Generators of H wr K on Z: H's generators embedded in the fiber over the
// identity of K, then translations by K's generators. Translation-conjugates
// of fiber 0 reach every fiber, so these generate the full wreath product of
// order |H|^|K| * |K|. Identity generators are dropped; if nothing is left
// the single identity on Z is returned.
std::vector<Perm> wreath_product(const std::vector<Perm>& fiber_gens, const FiniteGroup& K);

// Total order of the level-n tower group over a base group of order m:
// m^(1 + m + ... + m^(n-1)), which is 1 when m == 1 or n == 0.
BigInt wreath_order(int group_order, int level);

class WreathTower {
public:
    // Level 0 is the trivial group on one point; level i+1 = wreath_product
    // of level i with G. Throws when |G|^levels would exceed max_degree.
    static WreathTower build(FiniteGroup G, int levels, uint32_t max_degree = 4096);

    const FiniteGroup& group() const { return group_; }
    int levels() const { return levels_; }
    uint32_t degree() const { return degrees_.back(); }
    uint32_t degree_at(int level) const;

    // Generators of the level-i group at its native degree |G|^i.
    const std::vector<Perm>& gens(int level) const;
    const std::vector<Perm>& top_gens() const { return gens_.back(); }

private:
    explicit WreathTower(FiniteGroup G) : group_(std::move(G)) {}

    FiniteGroup group_;
    int levels_ = 0;
    std::vector<uint32_t> degrees_;       // degrees_[i] = |G|^i
    std::vector<std::vector<Perm>> gens_;  // gens_[i] generates the level-i group
};

// Mixed-radix helpers for the tower's point labels. digits holds coordinates
// x_1..x_n, least significant first; each must be in [0, radix).
uint32_t point_index(const std::vector<int>& digits, int radix);
std::vector<int> point_digits(uint32_t index, int radix, int length);

struct BlockPartition {
    uint32_t degree = 0;
    uint32_t block_size = 0;

    uint32_t num_blocks() const { return degree / block_size; }
    uint32_t block_of(uint32_t point) const { return point / block_size; }

    // Throws unless block_size divides degree.
    static BlockPartition make(uint32_t degree, uint32_t block_size);
};

// Outcome of testing whether a permutation maps every block onto a block.
struct BlockImage {
    std::optional<Perm> image;  // the induced permutation of block indices
    uint32_t witness = 0;       // a point carried outside its block's target

    bool stable() const { return image.has_value(); }
};

BlockImage block_image(const Perm& p, const BlockPartition& part);

// Plain-text manifest: the group spec, level count, degree, then one
// "gen: <cycles>" line per top-level generator.
void write_tower_manifest(std::ostream& out, const WreathTower& tower,
                          const std::string& group_spec);

}  // namespace wreath
