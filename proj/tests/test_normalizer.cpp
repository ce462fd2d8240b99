#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wreath/finite_group.hpp"
#include "wreath/normalizer.hpp"
#include "wreath/stabilizer_chain.hpp"
#include "wreath/wreath_tower.hpp"

using namespace wreath;

namespace {

Perm random_perm(std::size_t m, std::mt19937& rng) {
    std::vector<uint32_t> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<uint32_t>(i);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

}  // namespace

TEST_CASE("aut_embed relabels whole fibers") {
    const std::vector<GroupAut> auts3 = automorphisms(FiniteGroup::cyclic(3));
    REQUIRE(auts3.size() == 2);
    REQUIRE(auts3[1].images == std::vector<int>{0, 2, 1});

    CHECK(to_cycle_string(aut_embed(auts3[1], 3)) == "(3 6)(4 7)(5 8)");
    CHECK(to_cycle_string(aut_embed(auts3[1], 1)) == "(1 2)");
    CHECK(aut_embed(auts3[0], 5).is_identity());
    CHECK(aut_embed(auts3[1], 2).degree() == 6);

    SUBCASE("embedding is a monomorphism") {
        const std::vector<GroupAut> auts = automorphisms(FiniteGroup::klein4());
        REQUIRE(auts.size() == 6);
        for (const GroupAut& a : auts)
            for (const GroupAut& b : auts) {
                CHECK(compose(aut_embed(a, 2), aut_embed(b, 2)) == aut_embed(compose(a, b), 2));
                if (!(a == b)) CHECK(aut_embed(a, 2) != aut_embed(b, 2));
            }
    }
}

TEST_CASE("diagonal_embed replays one permutation in every fiber") {
    const Perm swap12 = parse_cycle_string("(1 2)", 3);
    CHECK(to_cycle_string(diagonal_embed(swap12, 3)) == "(1 2)(4 5)(7 8)");
    CHECK(diagonal_embed(Perm::identity(3), 4).is_identity());
    CHECK(diagonal_embed(swap12, 1) == swap12);
    CHECK_THROWS_AS(diagonal_embed(swap12, 0), std::invalid_argument);

    SUBCASE("composition passes through the embedding") {
        std::mt19937 rng(2026);
        for (int trial = 0; trial < 20; ++trial) {
            const Perm p = random_perm(3, rng);
            const Perm q = random_perm(3, rng);
            CHECK(compose(diagonal_embed(p, 4), diagonal_embed(q, 4)) ==
                  diagonal_embed(compose(p, q), 4));
        }
    }

    SUBCASE("diagonal pieces commute with whole-fiber moves") {
        const FiniteGroup c3 = FiniteGroup::cyclic(3);
        std::mt19937 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const Perm d = diagonal_embed(random_perm(3, rng), 3);
            for (int k = 0; k < 3; ++k) {
                const Perm t = translation_embed(k, c3, 3);
                CHECK(compose(d, t) == compose(t, d));
            }
            for (const GroupAut& g : automorphisms(c3)) {
                const Perm a = aut_embed(g, 3);
                CHECK(compose(d, a) == compose(a, d));
            }
        }
    }
}

TEST_CASE("conjugating embedded pieces by a fiber relabeling") {
    SUBCASE("cyclic base") {
        const FiniteGroup c3 = FiniteGroup::cyclic(3);
        const std::vector<GroupAut> auts = automorphisms(c3);
        const Perm hs[] = {parse_cycle_string("(0 1 2)", 3), parse_cycle_string("(0 1)", 3)};
        for (const GroupAut& g : auts) {
            const Perm a = aut_embed(g, 3);
            for (const Perm& h : hs)
                for (uint32_t k = 0; k < 3; ++k)
                    CHECK(conjugate(fiber_embed(h, k, 3), a) ==
                          fiber_embed(h, static_cast<uint32_t>(g(static_cast<int>(k))), 3));
            for (int k = 0; k < 3; ++k)
                CHECK(conjugate(translation_embed(k, c3, 3), a) ==
                      translation_embed(g(k), c3, 3));
        }
    }

    SUBCASE("klein four base") {
        const FiniteGroup v4 = FiniteGroup::klein4();
        const Perm h = parse_cycle_string("(0 1 2 3)", 4);
        for (const GroupAut& g : automorphisms(v4)) {
            const Perm a = aut_embed(g, 4);
            for (uint32_t k = 0; k < 4; ++k)
                CHECK(conjugate(fiber_embed(h, k, 4), a) ==
                      fiber_embed(h, static_cast<uint32_t>(g(static_cast<int>(k))), 4));
            for (int k = 0; k < 4; ++k)
                CHECK(conjugate(translation_embed(k, v4, 4), a) ==
                      translation_embed(g(k), v4, 4));
        }
    }
}

TEST_CASE("NormalizerComplement lifts the automorphism generators level by level") {
    SUBCASE("rigid base group leaves an empty complement") {
        const WreathTower t = WreathTower::build(FiniteGroup::cyclic(2), 2);
        const NormalizerComplement c = NormalizerComplement::build(t);
        CHECK(c.gens().empty());
        CHECK(c.perms().empty());
        CHECK(c.aut_order() == 1);
        CHECK(c.levels() == 2);
        CHECK(c.degree() == 4);
    }

    SUBCASE("cyclic 3, one level") {
        const WreathTower t = WreathTower::build(FiniteGroup::cyclic(3), 1);
        const NormalizerComplement c = NormalizerComplement::build(t);
        REQUIRE(c.gens().size() == 1);
        CHECK(to_cycle_string(c.gens()[0].perm) == "(1 2)");
        CHECK(c.gens()[0].level == 1);
        CHECK(c.gens()[0].aut_index == 1);
    }

    SUBCASE("cyclic 3, two levels") {
        const WreathTower t = WreathTower::build(FiniteGroup::cyclic(3), 2);
        const NormalizerComplement c = NormalizerComplement::build(t);
        REQUIRE(c.gens().size() == 2);
        CHECK(to_cycle_string(c.gens()[0].perm) == "(1 2)(4 5)(7 8)");
        CHECK(c.gens()[0].level == 1);
        CHECK(to_cycle_string(c.gens()[1].perm) == "(3 6)(4 7)(5 8)");
        CHECK(c.gens()[1].level == 2);
        CHECK(c.aut_order() == 2);

        const NormalizerComplement again = NormalizerComplement::build(t);
        CHECK(again.perms() == c.perms());
    }

    SUBCASE("generators are ordered by level, then automorphism") {
        const WreathTower t = WreathTower::build(FiniteGroup::klein4(), 2);
        const NormalizerComplement c = NormalizerComplement::build(t);
        REQUIRE(c.gens().size() == 10);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(c.gens()[i].level == (i < 5 ? 1 : 2));
            CHECK(c.gens()[i].aut_index == static_cast<int>(i % 5) + 1);
        }
        CHECK(StabilizerChain::build(c.perms()).order() == 36);
    }

    SUBCASE("the automorphism cap still applies") {
        const WreathTower t = WreathTower::build(FiniteGroup::cyclic(25), 1);
        CHECK_THROWS_AS(NormalizerComplement::build(t), std::invalid_argument);
        const NormalizerComplement c = NormalizerComplement::build(t, 32);
        CHECK(c.aut_order() == 20);
        CHECK(c.gens().size() == 19);
    }
}

TEST_CASE("predicted_normalizer_order multiplies the relabelings into the tower") {
    CHECK(predicted_normalizer_order(2, 3, 2) == 324);
    CHECK(predicted_normalizer_order(2, 3, 1) == 6);
    CHECK(predicted_normalizer_order(1, 2, 3) == 128);
    CHECK(predicted_normalizer_order(7, 5, 0) == 1);
    CHECK(predicted_normalizer_order(FiniteGroup::cyclic(5), 1) == 20);
    CHECK(predicted_normalizer_order(FiniteGroup::klein4(), 1) == 24);
    CHECK(predicted_normalizer_order(FiniteGroup::symmetric(3), 1) == 36);
    CHECK(predicted_normalizer_order(FiniteGroup::cyclic(3), 2) ==
          predicted_normalizer_order(2, 3, 2));
    CHECK_THROWS_AS(predicted_normalizer_order(0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(predicted_normalizer_order(FiniteGroup::cyclic(25), 1), std::invalid_argument);
    CHECK(predicted_normalizer_order(FiniteGroup::cyclic(25), 1, 32) == 500);
}

TEST_CASE("verify_normalizer passes on built complements") {
    struct Case {
        FiniteGroup group;
        int levels;
        BigInt tower_order;
        BigInt complement_order;
        BigInt predicted;
    };
    const Case cases[] = {
        {FiniteGroup::cyclic(3), 2, 81, 4, 324},
        {FiniteGroup::cyclic(2), 3, 128, 1, 128},
        {FiniteGroup::cyclic(5), 1, 5, 4, 20},
        {FiniteGroup::klein4(), 1, 4, 6, 24},
        {FiniteGroup::symmetric(3), 1, 6, 6, 36},
        {FiniteGroup::cyclic(3), 0, 1, 1, 1},
    };
    for (const Case& c : cases) {
        CAPTURE(c.group.order());
        CAPTURE(c.levels);
        const WreathTower t = WreathTower::build(c.group, c.levels);
        const NormalizerComplement m = NormalizerComplement::build(t);
        const NormalizerReport rep = verify_normalizer(t, m);
        CHECK(rep.all_pass());
        CHECK(rep.tower_order == c.tower_order);
        CHECK(rep.complement_order == c.complement_order);
        CHECK(rep.predicted_order == c.predicted);
        CHECK(rep.combined_order == c.predicted);
        REQUIRE(rep.checks.size() == 4);
        CHECK(rep.checks[0].id == "normalizes");
        CHECK(rep.checks[1].id == "semidirect-order");
        CHECK(rep.checks[2].id == "commutators");
        CHECK(rep.checks[3].id == "complement-structure");
        for (const CheckResult& chk : rep.checks) CHECK(chk.witness.empty());
    }
}

TEST_CASE("verify_normalizer rejects a complement from another tower") {
    const NormalizerComplement c22 =
        NormalizerComplement::build(WreathTower::build(FiniteGroup::cyclic(2), 2));
    CHECK_THROWS_AS(verify_normalizer(WreathTower::build(FiniteGroup::cyclic(2), 3), c22),
                    std::invalid_argument);
    // Same degree, different level count.
    CHECK_THROWS_AS(verify_normalizer(WreathTower::build(FiniteGroup::cyclic(4), 1), c22),
                    std::invalid_argument);
}

TEST_CASE("a complement for the wrong group fails exactly the conjugation check") {
    // W(C_4,1) and W(V_4,1) share degree and level count, but the V_4 fiber
    // relabelings do not normalize the cyclic tower. The order arithmetic
    // still comes out right (both sides generate S_4), so only the
    // conjugation check can catch the mismatch.
    const WreathTower t = WreathTower::build(FiniteGroup::cyclic(4), 1);
    const NormalizerComplement wrong =
        NormalizerComplement::build(WreathTower::build(FiniteGroup::klein4(), 1));
    const NormalizerReport rep = verify_normalizer(t, wrong);
    CHECK(!rep.all_pass());
    REQUIRE(rep.checks.size() == 4);
    CHECK(!rep.checks[0].pass);
    CHECK(!rep.checks[0].witness.empty());
    CHECK(rep.checks[1].pass);
    CHECK(rep.checks[2].pass);
    CHECK(rep.checks[3].pass);
    CHECK(rep.combined_order == 24);
}

TEST_CASE("render_report format is frozen") {
    const WreathTower t = WreathTower::build(FiniteGroup::cyclic(3), 2);
    const NormalizerReport rep = verify_normalizer(t, NormalizerComplement::build(t));
    std::ostringstream out;
    render_report(out, rep);
    CHECK(out.str() ==
          "normalizes: PASS\n"
          "semidirect-order: PASS\n"
          "commutators: PASS\n"
          "complement-structure: PASS\n");

    SUBCASE("failures carry their witness") {
        NormalizerReport bad;
        bad.checks.push_back({"normalizes", false, "generator 0 escapes"});
        bad.checks.push_back({"semidirect-order", true, ""});
        CHECK(!bad.all_pass());
        std::ostringstream o2;
        render_report(o2, bad);
        CHECK(o2.str() ==
              "normalizes: FAIL generator 0 escapes\n"
              "semidirect-order: PASS\n");
    }
}
