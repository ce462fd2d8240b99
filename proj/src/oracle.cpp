#include "wreath/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wreath {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_scan_degree(uint32_t m) {
    if (m < 1 || m > kOracleMaxDegree)
        throw std::invalid_argument("oracle: degree " + std::to_string(m) +
                                    " outside the exhaustive range [1, " +
                                    std::to_string(kOracleMaxDegree) + "]");
}

bool normalizes(const Perm& a, const std::vector<Perm>& gens, const StabilizerChain& chain) {
    for (const Perm& g : gens)
        if (!chain.contains(conjugate(g, a))) return false;
    const Perm ainv = inverse(a);
    for (const Perm& g : gens)
        if (!chain.contains(conjugate(g, ainv))) return false;
    return true;
}

// Candidates with lexicographic ranks in [begin, end), in order.
std::vector<Perm> scan_range(uint32_t m, uint64_t begin, uint64_t end,
                             const std::vector<Perm>& gens, const StabilizerChain& chain) {
    std::vector<Perm> hits;
    if (begin >= end) return hits;
    std::vector<uint32_t> img = perm_unrank(m, begin).images();
    for (uint64_t r = begin; r < end; ++r) {
        Perm a(img);
        if (normalizes(a, gens, chain)) hits.push_back(std::move(a));
        std::next_permutation(img.begin(), img.end());
    }
    return hits;
}

void check_scan_inputs(const std::vector<Perm>& w_gens, uint32_t degree) {
    check_scan_degree(degree);
    if (w_gens.empty()) throw std::invalid_argument("oracle: empty generator list");
    for (const Perm& g : w_gens)
        if (g.degree() != degree)
            throw std::invalid_argument("oracle: generator degree " + std::to_string(g.degree()) +
                                        " does not match scan degree " + std::to_string(degree));
}

OracleResult finish(uint32_t m, std::vector<Perm> elements, Clock::time_point start) {
    StabilizerChain certificate = StabilizerChain::build(elements);
    if (certificate.order() != elements.size())
        throw std::logic_error("oracle: collected set is not closed (internal error)");
    BigInt order = certificate.order();
    return OracleResult{m, std::move(order), std::move(elements), std::move(certificate),
                        seconds_since(start)};
}

}  // namespace

uint64_t factorial(uint32_t m) {
    if (m > 20) throw std::invalid_argument("factorial: argument above 20 overflows");
    uint64_t f = 1;
    for (uint32_t i = 2; i <= m; ++i) f *= i;
    return f;
}

Perm perm_unrank(uint32_t m, uint64_t rank) {
    if (m == 0) throw std::invalid_argument("perm_unrank: zero degree");
    if (rank >= factorial(m)) throw std::out_of_range("perm_unrank: rank out of range");
    std::vector<uint32_t> pool(m);
    for (uint32_t i = 0; i < m; ++i) pool[i] = i;
    std::vector<uint32_t> img;
    img.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        const uint64_t f = factorial(m - 1 - i);
        const std::size_t pick = static_cast<std::size_t>(rank / f);
        rank %= f;
        img.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Perm(std::move(img));
}

void enumerate_sym(uint32_t m, const std::function<void(const Perm&)>& fn) {
    check_scan_degree(m);
    std::vector<uint32_t> img(m);
    for (uint32_t i = 0; i < m; ++i) img[i] = i;
    do {
        fn(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

OracleResult brute_force_normalizer_serial(const std::vector<Perm>& w_gens, uint32_t degree) {
    check_scan_inputs(w_gens, degree);
    const auto start = Clock::now();
    const StabilizerChain chain = StabilizerChain::build(w_gens);
    std::vector<Perm> elements;
    enumerate_sym(degree, [&](const Perm& a) {
        if (normalizes(a, w_gens, chain)) elements.push_back(a);
    });
    return finish(degree, std::move(elements), start);
}

OracleResult brute_force_normalizer(const std::vector<Perm>& w_gens, uint32_t degree,
                                    int workers) {
    check_scan_inputs(w_gens, degree);
    if (workers < 0) throw std::invalid_argument("oracle: negative worker count");
    const auto start = Clock::now();
    const StabilizerChain chain = StabilizerChain::build(w_gens);

#ifdef _OPENMP
    const int effective = workers > 0 ? workers : omp_get_max_threads();
#else
    const int effective = 1;
#endif
    const uint64_t total = factorial(degree);
    const uint64_t chunks =
        std::min<uint64_t>(total, static_cast<uint64_t>(std::max(effective, 1)) * 4);

    std::vector<std::vector<Perm>> buckets(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(effective)
#endif
    for (int64_t c = 0; c < static_cast<int64_t>(chunks); ++c) {
        const uint64_t begin = total * static_cast<uint64_t>(c) / chunks;
        const uint64_t end = total * (static_cast<uint64_t>(c) + 1) / chunks;
        buckets[static_cast<std::size_t>(c)] = scan_range(degree, begin, end, w_gens, chain);
    }

    std::vector<Perm> elements;
    for (std::vector<Perm>& b : buckets)
        for (Perm& p : b) elements.push_back(std::move(p));
    return finish(degree, std::move(elements), start);
}

OracleCheck fiber_conjugation_check(const OracleResult& result, const WreathTower& tower) {
    if (tower.degree() != result.degree)
        throw std::invalid_argument("fiber_conjugation_check: tower degree " +
                                    std::to_string(tower.degree()) +
                                    " does not match oracle degree " +
                                    std::to_string(result.degree));
    const int n = tower.levels();
    if (n < 1)
        throw std::invalid_argument("fiber_conjugation_check: tower has no fiber level");
    const uint32_t m = static_cast<uint32_t>(tower.group().order());
    const uint32_t s = tower.degree_at(n - 1);
    const BlockPartition part = BlockPartition::make(tower.degree(), s);
    const std::vector<Perm>& lower = tower.gens(n - 1);
    const StabilizerChain lower_chain = StabilizerChain::build(lower);

    std::vector<Perm> fiber_gens;
    std::vector<std::pair<std::size_t, uint32_t>> origin;  // (lower gen index, fiber)
    for (std::size_t j = 0; j < lower.size(); ++j)
        for (uint32_t y = 0; y < m; ++y) {
            fiber_gens.push_back(fiber_embed(lower[j], y, m));
            origin.emplace_back(j, y);
        }

    std::vector<uint32_t> restriction(s);
    for (const Perm& alpha : result.elements)
        for (std::size_t t = 0; t < fiber_gens.size(); ++t) {
            const Perm conj = conjugate(fiber_gens[t], alpha);
            const auto [j, y] = origin[t];
            const std::string where = "fiber generator " + std::to_string(j) + " over fiber " +
                                      std::to_string(y) + " conjugated by " +
                                      to_cycle_string(alpha);
            const BlockImage bi = block_image(conj, part);
            if (!bi.stable())
                return OracleCheck{false, where + " carries point " + std::to_string(bi.witness) +
                                              " across fibers"};
            if (!bi.image->is_identity())
                return OracleCheck{false, where + " permutes whole fibers"};
            for (uint32_t b = 0; b < m; ++b) {
                for (uint32_t r = 0; r < s; ++r) restriction[r] = conj[b * s + r] - b * s;
                if (!lower_chain.contains(Perm(restriction)))
                    return OracleCheck{false, where + " restricts on fiber " + std::to_string(b) +
                                                  " to a permutation outside the lower tower "
                                                  "group"};
            }
        }
    return OracleCheck{};
}

OracleCheck block_stability_check(const OracleResult& result, const BlockPartition& part) {
    if (part.degree != result.degree)
        throw std::invalid_argument("block_stability_check: partition degree " +
                                    std::to_string(part.degree) +
                                    " does not match oracle degree " +
                                    std::to_string(result.degree));
    for (const Perm& alpha : result.elements) {
        const BlockImage bi = block_image(alpha, part);
        if (!bi.stable())
            return OracleCheck{false, "element " + to_cycle_string(alpha) + " carries point " +
                                          std::to_string(bi.witness) +
                                          " outside its block's image"};
    }
    return OracleCheck{};
}

bool sylow_check(int p, int n) {
    if (p < 2) throw std::invalid_argument("sylow_check: " + std::to_string(p) + " is not prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("sylow_check: " + std::to_string(p) + " is not prime");
    if (n < 0) throw std::invalid_argument("sylow_check: negative level");
    uint64_t degree = 1;
    for (int i = 0; i < n; ++i) {
        degree *= static_cast<uint64_t>(p);
        if (degree > kOracleMaxDegree)
            throw std::invalid_argument("sylow_check: p^n = " + std::to_string(degree) +
                                        " exceeds the oracle cap of " +
                                        std::to_string(kOracleMaxDegree));
    }

    const WreathTower tower = WreathTower::build(FiniteGroup::cyclic(p), n);
    const StabilizerChain chain = StabilizerChain::build(tower.top_gens());

    unsigned valuation = 0;
    for (uint64_t q = static_cast<uint64_t>(p); q <= degree; q *= static_cast<uint64_t>(p))
        valuation += static_cast<unsigned>(degree / q);
    return chain.order() == boost::multiprecision::pow(BigInt(p), valuation);
}

void write_oracle_manifest(std::ostream& out, const OracleResult& result) {
    out << "degree: " << result.degree << "\n";
    out << "order: " << result.normalizer_order << "\n";
    for (const Perm& p : result.elements) out << "gen: " << to_cycle_string(p) << "\n";
}

}  // namespace wreath
