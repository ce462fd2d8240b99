#include "wreath/normalizer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "wreath/stabilizer_chain.hpp"

namespace wreath {

namespace {

uint32_t product_degree(uint64_t a, uint64_t b, const char* what) {
    const uint64_t d = a * b;
    if (a == 0 || b == 0 || d > std::numeric_limits<uint32_t>::max())
        throw std::invalid_argument(std::string(what) + ": resulting degree out of range");
    return static_cast<uint32_t>(d);
}

}  // namespace

Perm aut_embed(const GroupAut& gamma, uint32_t block_size) {
    const uint32_t nb = static_cast<uint32_t>(gamma.images.size());
    const uint32_t degree = product_degree(nb, block_size, "aut_embed");
    std::vector<uint32_t> img(degree);
    for (uint32_t b = 0; b < nb; ++b) {
        const uint32_t target = static_cast<uint32_t>(gamma.images[b]);
        for (uint32_t r = 0; r < block_size; ++r) img[b * block_size + r] = target * block_size + r;
    }
    return Perm(std::move(img));
}

Perm diagonal_embed(const Perm& m, uint32_t num_blocks) {
    const uint32_t s = m.degree();
    const uint32_t degree = product_degree(s, num_blocks, "diagonal_embed");
    std::vector<uint32_t> img(degree);
    for (uint32_t b = 0; b < num_blocks; ++b)
        for (uint32_t r = 0; r < s; ++r) img[b * s + r] = b * s + m[r];
    return Perm(std::move(img));
}

NormalizerComplement NormalizerComplement::build(const WreathTower& tower, int max_aut_order) {
    NormalizerComplement comp;
    comp.auts_ = automorphisms(tower.group(), max_aut_order);
    comp.levels_ = tower.levels();
    comp.degree_ = tower.degree();
    const uint32_t m = static_cast<uint32_t>(tower.group().order());

    for (int level = 1; level <= comp.levels_; ++level) {
        for (ComplementGen& g : comp.gens_) g.perm = diagonal_embed(g.perm, m);
        const uint32_t block_size = tower.degree_at(level - 1);
        for (std::size_t a = 0; a < comp.auts_.size(); ++a) {
            if (comp.auts_[a].is_identity()) continue;
            comp.gens_.push_back(
                ComplementGen{aut_embed(comp.auts_[a], block_size), level, static_cast<int>(a)});
        }
    }
    return comp;
}

std::vector<Perm> NormalizerComplement::perms() const {
    std::vector<Perm> out;
    out.reserve(gens_.size());
    for (const ComplementGen& g : gens_) out.push_back(g.perm);
    return out;
}

BigInt predicted_normalizer_order(std::size_t aut_order, int group_order, int level) {
    if (aut_order == 0)
        throw std::invalid_argument("predicted_normalizer_order: automorphism count is zero");
    return boost::multiprecision::pow(BigInt(aut_order), static_cast<unsigned>(level)) *
           wreath_order(group_order, level);
}

BigInt predicted_normalizer_order(const FiniteGroup& G, int level, int max_aut_order) {
    return predicted_normalizer_order(automorphisms(G, max_aut_order).size(), G.order(), level);
}

bool NormalizerReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

NormalizerReport verify_normalizer(const WreathTower& tower, const NormalizerComplement& comp) {
    if (comp.degree() != tower.degree() || comp.levels() != tower.levels())
        throw std::invalid_argument("verify_normalizer: complement was built from another tower");

    NormalizerReport rep;
    const std::vector<Perm>& wgens = tower.top_gens();
    const StabilizerChain wchain = StabilizerChain::build(wgens);
    rep.tower_order = wchain.order();
    const int n = tower.levels();
    rep.predicted_order =
        predicted_normalizer_order(comp.aut_order(), tower.group().order(), n);

    CheckResult normalizes{"normalizes", true, ""};
    for (std::size_t i = 0; i < comp.gens().size() && normalizes.pass; ++i)
        for (std::size_t j = 0; j < wgens.size(); ++j)
            if (!wchain.contains(conjugate(wgens[j], comp.gens()[i].perm))) {
                normalizes.pass = false;
                normalizes.witness = "conjugate of tower generator " + std::to_string(j) +
                                     " by complement generator " + std::to_string(i) +
                                     " leaves the tower group";
                break;
            }
    rep.checks.push_back(std::move(normalizes));

    std::vector<Perm> all = comp.perms();
    all.insert(all.end(), wgens.begin(), wgens.end());
    const StabilizerChain nchain = StabilizerChain::build(all);
    rep.combined_order = nchain.order();
    CheckResult sd{"semidirect-order", rep.combined_order == rep.predicted_order, ""};
    if (!sd.pass)
        sd.witness = "generated order " + rep.combined_order.str() + " differs from predicted " +
                     rep.predicted_order.str();
    rep.checks.push_back(std::move(sd));

    // Generators lifted from lower levels act identically in every top-level
    // fiber, so they must commute with everything that only permutes or
    // relabels whole fibers.
    CheckResult comm{"commutators", true, ""};
    if (n >= 1) {
        const uint32_t block_size = tower.degree_at(n - 1);
        std::vector<Perm> fiber_movers;
        std::vector<std::string> mover_names;
        for (int k = 0; k < tower.group().order(); ++k) {
            fiber_movers.push_back(translation_embed(k, tower.group(), block_size));
            mover_names.push_back("translation by element " + std::to_string(k));
        }
        for (std::size_t a = 0; a < comp.auts().size(); ++a) {
            fiber_movers.push_back(aut_embed(comp.auts()[a], block_size));
            mover_names.push_back("top fiber relabeling " + std::to_string(a));
        }
        for (std::size_t i = 0; i < comp.gens().size() && comm.pass; ++i) {
            const ComplementGen& g = comp.gens()[i];
            if (g.level >= n) continue;
            for (std::size_t t = 0; t < fiber_movers.size(); ++t)
                if (compose(g.perm, fiber_movers[t]) != compose(fiber_movers[t], g.perm)) {
                    comm.pass = false;
                    comm.witness = "lifted generator " + std::to_string(i) +
                                   " does not commute with " + mover_names[t];
                    break;
                }
        }
    }
    rep.checks.push_back(std::move(comm));

    std::vector<Perm> mperms = comp.perms();
    if (mperms.empty()) mperms.push_back(Perm::identity(tower.degree()));
    const StabilizerChain mchain = StabilizerChain::build(mperms);
    rep.complement_order = mchain.order();
    const BigInt expected =
        boost::multiprecision::pow(BigInt(comp.aut_order()), static_cast<unsigned>(n));
    CheckResult structure{"complement-structure", true, ""};
    if (rep.complement_order != expected) {
        structure.pass = false;
        structure.witness = "complement generates order " + rep.complement_order.str() +
                            " instead of " + expected.str();
    } else {
        const AutStructure st = aut_structure(comp.auts());
        if (st.is_abelian) {
            BigInt exponent = 1;
            for (std::size_t i = 0; i < mperms.size() && structure.pass; ++i) {
                for (std::size_t j = i + 1; j < mperms.size(); ++j)
                    if (compose(mperms[i], mperms[j]) != compose(mperms[j], mperms[i])) {
                        structure.pass = false;
                        structure.witness = "complement generators " + std::to_string(i) + " and " +
                                            std::to_string(j) +
                                            " do not commute although the automorphism group is "
                                            "abelian";
                        break;
                    }
                exponent = boost::multiprecision::lcm(exponent, perm_order(mperms[i]));
            }
            if (structure.pass && n >= 1 && BigInt(st.exponent) % exponent != 0) {
                structure.pass = false;
                structure.witness = "complement exponent " + exponent.str() +
                                    " does not divide the automorphism-group exponent " +
                                    std::to_string(st.exponent);
            }
        }
    }
    rep.checks.push_back(std::move(structure));

    return rep;
}

void render_report(std::ostream& out, const NormalizerReport& report) {
    for (const CheckResult& c : report.checks) {
        out << c.id << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.witness.empty()) out << ' ' << c.witness;
        out << "\n";
    }
}

}  // namespace wreath
