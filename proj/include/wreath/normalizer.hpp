// The complement that carries Aut(G)^n inside the normalizer of the tower
// group W(G,n) in S(G^n).
//
// Two embeddings build it. aut_embed sends an automorphism of the top factor
// to the permutation relabeling fibers by it (trivial inside each fiber);
// diagonal_embed replays a lower-level normalizing permutation identically in
// every fiber. Applying diagonal_embed level by level and appending the top
// aut_embeds yields generators of a complement M with M * W the full
// normalizer and M meeting W trivially, certified by order arithmetic in
// verify_normalizer rather than by coset enumeration.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/perm.hpp"
#include "wreath/wreath_tower.hpp"

namespace wreath {

// Fiber relabeling: index b*s + r maps to gamma(b)*s + r. Identity inside
// every fiber; a monomorphism from the automorphism group (tested, not
// rechecked here).
Perm aut_embed(const GroupAut& gamma, uint32_t block_size);

// Same action in every fiber: b*s + r maps to b*s + m[r]. Commutes with both
// fiber translations and aut_embed images, which verify_normalizer checks.
Perm diagonal_embed(const Perm& m, uint32_t num_blocks);

struct ComplementGen {
    Perm perm;      // at the tower's full degree
    int level;      // 1..n: the level whose fiber relabeling this generator lifts
    int aut_index;  // position in the sorted automorphism list (identity = 0)
};

class NormalizerComplement {
public:
    // Level recursion: the level-(i+1) list is every level-i generator pushed
    // through diagonal_embed, followed by aut_embed of each nonidentity
    // automorphism. Ordering is therefore by level ascending, then by the
    // automorphism sort order. Throws when |G| exceeds the automorphism cap.
    static NormalizerComplement build(const WreathTower& tower, int max_aut_order = 24);

    const std::vector<ComplementGen>& gens() const { return gens_; }
    std::vector<Perm> perms() const;

    // Full sorted automorphism list of the base group, identity first.
    const std::vector<GroupAut>& auts() const { return auts_; }
    std::size_t aut_order() const { return auts_.size(); }

    int levels() const { return levels_; }
    uint32_t degree() const { return degree_; }

private:
    std::vector<ComplementGen> gens_;
    std::vector<GroupAut> auts_;
    int levels_ = 0;
    uint32_t degree_ = 1;
};

// |Aut(G)|^n times the tower group order.
BigInt predicted_normalizer_order(std::size_t aut_order, int group_order, int level);
BigInt predicted_normalizer_order(const FiniteGroup& G, int level, int max_aut_order = 24);

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // empty on pass
};

struct NormalizerReport {
    std::vector<CheckResult> checks;
    BigInt tower_order = 0;      // |W|
    BigInt complement_order = 0; // order of the group the complement generates
    BigInt combined_order = 0;   // order of the group complement and tower generate
    BigInt predicted_order = 0;  // |Aut(G)|^n * |W|

    bool all_pass() const;
};

// Four checks, reported rather than thrown:
//   normalizes            every complement generator conjugates every tower
//                         generator back into the tower group
//   semidirect-order      combined order equals |Aut(G)|^n * |W|; with the
//                         first check this forces complement meet tower = 1
//   commutators           lifted generators commute with all top-level fiber
//                         translations and top-level aut_embeds
//   complement-structure  complement order is |Aut(G)|^n; when Aut(G) is
//                         abelian, the complement is abelian with exponent
//                         dividing Aut(G)'s
NormalizerReport verify_normalizer(const WreathTower& tower, const NormalizerComplement& comp);

// One line per check: "id: PASS" or "id: FAIL <witness>".
void render_report(std::ostream& out, const NormalizerReport& report);

}  // namespace wreath
