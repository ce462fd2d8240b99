// Permutations of {0,...,m-1} as image arrays, acting on the right:
// the image of point i under p is p[i], and compose(p, q) applies p first.
// Exponent notation p^a from group theory is conjugate(p, a) = a^-1 p a.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreath {

using BigInt = boost::multiprecision::cpp_int;

class Perm {
public:
    // Identity on m points; m must be at least 1.
    static Perm identity(std::size_t m);

    // Takes ownership of an image array; must be a bijection of {0,...,m-1}.
    explicit Perm(std::vector<uint32_t> images);

    std::size_t degree() const { return images_.size(); }
    uint32_t operator[](uint32_t point) const { return images_[point]; }
    const std::vector<uint32_t>& images() const { return images_; }

    bool is_identity() const;
    // Smallest point with p[i] != i; degree() if none.
    uint32_t first_moved() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<uint32_t> images_;
};

// r = p then q, i.e. r[i] = q[p[i]]. Degrees must agree.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// a^-1 p a. Degrees must agree.
Perm conjugate(const Perm& p, const Perm& a);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

// Order of p as a group element (lcm of cycle lengths).
BigInt perm_order(const Perm& p);

// Nontrivial cycles, each starting at its smallest point, sorted by that point.
std::vector<std::vector<uint32_t>> cycles(const Perm& p);

// Sorted multiset of cycle lengths including fixed points.
std::vector<uint32_t> cycle_type(const Perm& p);

// "(0 1)(2 3)" with 0-based points and fixed points omitted; identity is "()".
std::string to_cycle_string(const Perm& p);

// Inverse of to_cycle_string; whitespace between cycles and points is free-form.
// All points must be < degree and no point may repeat.
Perm parse_cycle_string(std::string_view text, std::size_t degree);

}  // namespace wreath
