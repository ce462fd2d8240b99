#include "wreath/stabilizer_chain.hpp"

#include <stdexcept>

namespace wreath {

StabilizerChain StabilizerChain::build(const std::vector<Perm>& gens) {
    if (gens.empty())
        throw std::invalid_argument("StabilizerChain: generator list must be nonempty");
    const std::size_t m = gens[0].degree();
    for (const Perm& g : gens)
        if (g.degree() != m)
            throw std::invalid_argument("StabilizerChain: generators of mixed degree");

    StabilizerChain chain(m);
    for (const Perm& g : gens)
        if (!g.is_identity()) chain.insert_generator(g);
    chain.close_under_schreier();
    chain.finalize();
    return chain;
}

void StabilizerChain::insert_generator(const Perm& g) {
    // Skip anything the chain already proves membership for.
    auto [residue, stop] = strip(g, 0);
    if (residue.is_identity()) return;

    // The residue fixes base[0..stop-1]; it becomes a strong generator on
    // every level it fixes into, extending the base if it fixes all of it.
    if (stop == levels_.size()) {
        Level lv;
        lv.beta = residue.first_moved();
        levels_.push_back(std::move(lv));
    }
    for (std::size_t l = 0; l <= stop && l < levels_.size(); ++l)
        levels_[l].gens.push_back(residue);
}

void StabilizerChain::close_under_schreier() {
    if (levels_.empty()) return;
    // Walk bottom-up; whenever a Schreier generator fails to sift, record it
    // as a strong generator at the levels it fixes into and drop back down.
    std::size_t i = levels_.size();
    while (i-- > 0) {
    restart_level:
        recompute_orbit(i);
        Level& lv = levels_[i];
        for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
            for (std::size_t s = 0; s < lv.gens.size(); ++s) {
                const uint32_t target = lv.gens[s][lv.orbit[j]];
                Perm schreier =
                    compose(compose(lv.rep[j], lv.gens[s]),
                            inverse(lv.rep[static_cast<std::size_t>(lv.where[target])]));
                if (schreier.is_identity()) continue;
                auto [residue, stop] = strip(std::move(schreier), i + 1);
                if (residue.is_identity()) continue;
                if (stop == levels_.size()) {
                    Level fresh;
                    fresh.beta = residue.first_moved();
                    levels_.push_back(std::move(fresh));
                }
                for (std::size_t l = i + 1; l <= stop && l < levels_.size(); ++l)
                    levels_[l].gens.push_back(residue);
                i = stop < levels_.size() ? stop : levels_.size() - 1;
                goto restart_level;
            }
        }
    }
}

void StabilizerChain::recompute_orbit(std::size_t i) {
    Level& lv = levels_[i];
    lv.where.assign(degree_, -1);
    lv.orbit.clear();
    lv.rep.clear();
    lv.orbit.push_back(lv.beta);
    lv.where[lv.beta] = 0;
    lv.rep.push_back(Perm::identity(degree_));
    for (std::size_t j = 0; j < lv.orbit.size(); ++j) {
        for (const Perm& g : lv.gens) {
            const uint32_t img = g[lv.orbit[j]];
            if (lv.where[img] < 0) {
                lv.where[img] = static_cast<int32_t>(lv.orbit.size());
                lv.orbit.push_back(img);
                lv.rep.push_back(compose(lv.rep[j], g));
            }
        }
    }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        const uint32_t img = g[lv.beta];
        if (lv.where.empty() || lv.where[img] < 0) return {std::move(g), l};
        const auto j = static_cast<std::size_t>(lv.where[img]);
        if (!lv.rep_inv.empty())
            g = compose(g, lv.rep_inv[j]);
        else
            g = compose(g, inverse(lv.rep[j]));
    }
    return {std::move(g), levels_.size()};
}

void StabilizerChain::finalize() {
    order_ = 1;
    for (Level& lv : levels_) {
        order_ *= static_cast<unsigned>(lv.orbit.size());
        lv.rep_inv.reserve(lv.rep.size());
        for (const Perm& r : lv.rep) lv.rep_inv.push_back(inverse(r));
    }
}

bool StabilizerChain::contains(const Perm& p) const {
    if (p.degree() != degree_)
        throw std::invalid_argument("StabilizerChain::contains: degree mismatch");
    auto [residue, stop] = strip(p, 0);
    return stop == levels_.size() && residue.is_identity();
}

std::vector<uint32_t> StabilizerChain::base() const {
    std::vector<uint32_t> b;
    b.reserve(levels_.size());
    for (const Level& lv : levels_) b.push_back(lv.beta);
    return b;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
    std::vector<std::size_t> s;
    s.reserve(levels_.size());
    for (const Level& lv : levels_) s.push_back(lv.orbit.size());
    return s;
}

}  // namespace wreath
