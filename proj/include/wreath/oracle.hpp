// Brute-force ground truth: the normalizer of a small permutation group
// computed straight from its definition by scanning all of S_m, capped at
// m = 9. Everything else in the library can be checked against these results.
//
// The scan partitions S_m into contiguous lexicographic rank ranges that
// workers process independently; chunks are merged in rank order, so the
// element list is identical whatever the worker count. A serial reference
// scan is kept alongside the parallel kernel for testing and benchmarks.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wreath/perm.hpp"
#include "wreath/stabilizer_chain.hpp"
#include "wreath/wreath_tower.hpp"

namespace wreath {

// Exhaustive enumeration refuses degrees above this.
inline constexpr uint32_t kOracleMaxDegree = 9;

// m! for m <= 20.
uint64_t factorial(uint32_t m);

// The rank-th permutation of degree m in lexicographic order of image arrays.
Perm perm_unrank(uint32_t m, uint64_t rank);

// All m! permutations exactly once, lexicographic, identity first. Requires
// 1 <= m <= kOracleMaxDegree.
void enumerate_sym(uint32_t m, const std::function<void(const Perm&)>& fn);

struct OracleResult {
    uint32_t degree;
    BigInt normalizer_order;
    std::vector<Perm> elements;   // the whole normalizer, lexicographic
    StabilizerChain certificate;  // chain rebuilt from the elements
    double elapsed_seconds;
};

// Collects every a in S_m whose conjugation sends each generator of W into W
// in both directions (by a and by a^-1, which makes the generator-level test
// exact without appealing to finiteness). Generators must be nonempty and of
// the given degree; degree must be within the cap.
OracleResult brute_force_normalizer_serial(const std::vector<Perm>& w_gens, uint32_t degree);

// Same result, chunked scan. workers = 0 takes the runtime default; without
// OpenMP support any worker count degrades to the serial scan.
OracleResult brute_force_normalizer(const std::vector<Perm>& w_gens, uint32_t degree,
                                    int workers = 0);

struct OracleCheck {
    bool pass = true;
    std::string witness;  // empty on pass
};

// Conjugation by any normalizer element must keep each embedded fiber
// generator inside the base group: fixing every top-level fiber setwise and
// restricting on each fiber to an element of the level-(n-1) tower group.
// Requires tower degree == result degree and at least one level.
OracleCheck fiber_conjugation_check(const OracleResult& result, const WreathTower& tower);

// Every normalizer element must map blocks onto blocks.
OracleCheck block_stability_check(const OracleResult& result, const BlockPartition& part);

// True iff the level-n tower over C_p has the full p-part of (p^n)! as its
// order, i.e. is as large as a Sylow p-subgroup of S_{p^n}. Order comparison
// only; p must be prime and p^n within the oracle cap.
bool sylow_check(int p, int n);

// "degree:" and "order:" lines, then one "gen:" line per normalizer element
// in cycle notation.
void write_oracle_manifest(std::ostream& out, const OracleResult& result);

}  // namespace wreath
