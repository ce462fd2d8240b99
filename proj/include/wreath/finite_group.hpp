// Finite groups given by Cayley table, with the identity pinned at index 0.
// table(a, b) is the product "a then b"; the regular representation realizes
// element g as the right-multiplication permutation x -> table(x, g).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wreath/perm.hpp"

namespace wreath {

class FiniteGroup {
public:
    // Validates the table: square, Latin, has an identity, associative
    // (exhaustively up to order 64, on a fixed sample above). If the identity
    // sits at another index the whole table is relabeled to move it to 0.
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels = {});

    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);   // order 2n, rotations then reflections
    static FiniteGroup symmetric(int n);  // elements in lexicographic one-line order
    static FiniteGroup klein4();
    static FiniteGroup quaternion8();

    // Catalogue dispatch: cyclic/dihedral/symmetric need a parameter,
    // klein4/quaternion8 reject one. Resulting order is capped at 64.
    static FiniteGroup named(const std::string& name, std::optional<int> parameter);

    int order() const { return order_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int element_order(int a) const;
    bool is_abelian() const;
    const std::vector<std::string>& labels() const { return labels_; }

    // One permutation of the element indices per element; entry 0 is the
    // identity and compose(r[a], r[b]) == r[mul(a, b)].
    std::vector<Perm> regular_representation() const;

    // Smallest generating sequence found by greedily adding the lowest index
    // outside the subgroup generated so far. Empty for the trivial group.
    std::vector<int> generating_set() const;

private:
    FiniteGroup() = default;
    void validate_and_normalize();

    int order_ = 0;
    std::vector<int> table_;  // row-major order_ x order_
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

// An automorphism as an index bijection fixing 0 and preserving the table.
struct GroupAut {
    std::vector<int> images;

    int operator()(int a) const { return images[a]; }
    bool is_identity() const;

    friend bool operator==(const GroupAut&, const GroupAut&) = default;
    friend auto operator<=>(const GroupAut&, const GroupAut&) = default;
};

GroupAut compose(const GroupAut& a, const GroupAut& b);  // a then b
GroupAut inverse(const GroupAut& a);

// Complete automorphism group of G by backtracking over generator images
// (candidates restricted to elements of equal order, extended through the
// multiplication table). Sorted lexicographically by image array, so the
// identity comes first. Throws if G.order() exceeds max_order.
std::vector<GroupAut> automorphisms(const FiniteGroup& G, int max_order = 24);

struct AutStructure {
    std::size_t order = 0;
    bool is_abelian = false;
    uint64_t exponent = 1;  // lcm of element orders
};

// Requires the list to be closed under composition (verified).
AutStructure aut_structure(const std::vector<GroupAut>& auts);

// Cayley-table file format: first line the order m, then m rows of m indices;
// an optional "#labels" line carries display names, other '#' lines are
// comments.
FiniteGroup read_cayley_table(std::istream& in);
FiniteGroup read_cayley_table_file(const std::string& path);
void write_cayley_table(std::ostream& out, const FiniteGroup& G);

// Group spec grammar used by the CLI: "cyclic:5", "klein4", or "@path" for a
// Cayley-table file.
FiniteGroup group_from_spec(const std::string& spec);

}  // namespace wreath
