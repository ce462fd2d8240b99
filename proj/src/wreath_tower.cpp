#include "wreath/wreath_tower.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace wreath {

namespace {

uint32_t checked_degree(uint64_t value, const char* what) {
    if (value == 0 || value > std::numeric_limits<uint32_t>::max())
        throw std::invalid_argument(std::string(what) + ": resulting degree out of range");
    return static_cast<uint32_t>(value);
}

}  // namespace

Perm fiber_embed(const Perm& h, uint32_t block, uint32_t num_blocks) {
    if (block >= num_blocks)
        throw std::invalid_argument("fiber_embed: block " + std::to_string(block) +
                                    " out of range for " + std::to_string(num_blocks) + " blocks");
    const uint32_t s = h.degree();
    const uint32_t degree = checked_degree(static_cast<uint64_t>(s) * num_blocks, "fiber_embed");
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    const uint32_t base = block * s;
    for (uint32_t r = 0; r < s; ++r) img[base + r] = base + h[r];
    return Perm(std::move(img));
}

Perm translation_embed(int k, const FiniteGroup& K, uint32_t block_size) {
    if (k < 0 || k >= K.order())
        throw std::invalid_argument("translation_embed: element " + std::to_string(k) +
                                    " out of range for group of order " +
                                    std::to_string(K.order()));
    if (block_size == 0) throw std::invalid_argument("translation_embed: zero block size");
    const uint32_t m = static_cast<uint32_t>(K.order());
    const uint32_t degree =
        checked_degree(static_cast<uint64_t>(block_size) * m, "translation_embed");
    std::vector<uint32_t> img(degree);
    for (uint32_t b = 0; b < m; ++b) {
        const uint32_t target = static_cast<uint32_t>(K.mul(static_cast<int>(b), k));
        for (uint32_t r = 0; r < block_size; ++r) img[b * block_size + r] = target * block_size + r;
    }
    return Perm(std::move(img));
}

std::vector<Perm> wreath_product(const std::vector<Perm>& fiber_gens, const FiniteGroup& K) {
    if (fiber_gens.empty())
        throw std::invalid_argument("wreath_product: fiber generator list is empty "
                                    "(pass the identity for a trivial fiber group)");
    const uint32_t s = fiber_gens.front().degree();
    for (const Perm& h : fiber_gens)
        if (h.degree() != s)
            throw std::invalid_argument("wreath_product: fiber generators of mixed degree");
    const uint32_t m = static_cast<uint32_t>(K.order());
    std::vector<Perm> gens;
    for (const Perm& h : fiber_gens)
        if (!h.is_identity()) gens.push_back(fiber_embed(h, 0, m));
    for (int k : K.generating_set()) gens.push_back(translation_embed(k, K, s));
    if (gens.empty())
        gens.push_back(Perm::identity(checked_degree(static_cast<uint64_t>(s) * m,
                                                     "wreath_product")));
    return gens;
}

BigInt wreath_order(int group_order, int level) {
    if (group_order < 1) throw std::invalid_argument("wreath_order: group order must be positive");
    if (level < 0 || level > 64)
        throw std::invalid_argument("wreath_order: level must be in [0, 64]");
    BigInt order = 1;
    for (int i = 0; i < level; ++i)
        order = boost::multiprecision::pow(order, static_cast<unsigned>(group_order)) * group_order;
    return order;
}

WreathTower WreathTower::build(FiniteGroup G, int levels, uint32_t max_degree) {
    if (levels < 0) throw std::invalid_argument("WreathTower: negative level count");
    if (levels > 64) throw std::invalid_argument("WreathTower: level count above 64");
    if (max_degree == 0) throw std::invalid_argument("WreathTower: zero degree cap");

    WreathTower tower(std::move(G));
    const uint32_t m = static_cast<uint32_t>(tower.group_.order());
    tower.degrees_.push_back(1);
    for (int i = 1; i <= levels; ++i) {
        const uint64_t next = static_cast<uint64_t>(tower.degrees_.back()) * m;
        if (next > max_degree)
            throw std::invalid_argument("WreathTower: degree " + std::to_string(next) +
                                        " at level " + std::to_string(i) + " exceeds cap " +
                                        std::to_string(max_degree));
        tower.degrees_.push_back(static_cast<uint32_t>(next));
    }

    tower.gens_.push_back({Perm::identity(1)});
    for (int i = 1; i <= levels; ++i)
        tower.gens_.push_back(wreath_product(tower.gens_.back(), tower.group_));

    tower.levels_ = levels;
    return tower;
}

uint32_t WreathTower::degree_at(int level) const {
    if (level < 0 || level > levels_)
        throw std::out_of_range("WreathTower: level " + std::to_string(level) + " out of range");
    return degrees_[static_cast<std::size_t>(level)];
}

const std::vector<Perm>& WreathTower::gens(int level) const {
    if (level < 0 || level > levels_)
        throw std::out_of_range("WreathTower: level " + std::to_string(level) + " out of range");
    return gens_[static_cast<std::size_t>(level)];
}

uint32_t point_index(const std::vector<int>& digits, int radix) {
    if (radix < 1) throw std::invalid_argument("point_index: radix must be positive");
    uint64_t index = 0;
    uint64_t weight = 1;
    for (int d : digits) {
        if (d < 0 || d >= radix) throw std::invalid_argument("point_index: digit out of range");
        index += static_cast<uint64_t>(d) * weight;
        weight *= static_cast<uint64_t>(radix);
        if (index > std::numeric_limits<uint32_t>::max())
            throw std::out_of_range("point_index: index does not fit a 32-bit point");
    }
    return static_cast<uint32_t>(index);
}

std::vector<int> point_digits(uint32_t index, int radix, int length) {
    if (radix < 1) throw std::invalid_argument("point_digits: radix must be positive");
    if (length < 0) throw std::invalid_argument("point_digits: negative length");
    std::vector<int> digits(static_cast<std::size_t>(length));
    uint64_t rest = index;
    for (int i = 0; i < length; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<uint64_t>(radix));
        rest /= static_cast<uint64_t>(radix);
    }
    if (rest != 0)
        throw std::out_of_range("point_digits: index needs more than the given digit count");
    return digits;
}

BlockPartition BlockPartition::make(uint32_t degree, uint32_t block_size) {
    if (degree == 0 || block_size == 0)
        throw std::invalid_argument("BlockPartition: degree and block size must be positive");
    if (degree % block_size != 0)
        throw std::invalid_argument("BlockPartition: block size " + std::to_string(block_size) +
                                    " does not divide degree " + std::to_string(degree));
    BlockPartition part;
    part.degree = degree;
    part.block_size = block_size;
    return part;
}

BlockImage block_image(const Perm& p, const BlockPartition& part) {
    if (p.degree() != part.degree)
        throw std::invalid_argument("block_image: permutation degree " +
                                    std::to_string(p.degree()) + " does not match partition on " +
                                    std::to_string(part.degree) + " points");
    const uint32_t s = part.block_size;
    const uint32_t nb = part.num_blocks();
    std::vector<uint32_t> img(nb);
    for (uint32_t b = 0; b < nb; ++b) {
        const uint32_t target = part.block_of(p[b * s]);
        for (uint32_t r = 1; r < s; ++r)
            if (part.block_of(p[b * s + r]) != target) return BlockImage{std::nullopt, b * s + r};
        img[b] = target;
    }
    // Blocks map onto whole blocks, so the induced map is a bijection.
    return BlockImage{Perm(std::move(img)), 0};
}

void write_tower_manifest(std::ostream& out, const WreathTower& tower,
                          const std::string& group_spec) {
    out << "group: " << group_spec << "\n";
    out << "level: " << tower.levels() << "\n";
    out << "degree: " << tower.degree() << "\n";
    for (const Perm& g : tower.top_gens()) out << "gen: " << to_cycle_string(g) << "\n";
}

}  // namespace wreath
