#include <doctest.h>

#include "helpers.hpp"
#include "qirw/instances.hpp"
#include "qirw/json_io.hpp"

using namespace qirw;
using namespace qirw::test;

TEST_CASE("gen_pathlike identity case") {
    auto inst = gen_pathlike(42, 6, 1, 0);
    CHECK(inst.g->vertices() == inst.h->vertices());
    CHECK(inst.g->edges() == inst.h->edges());
    for (int v : inst.g->vertices()) CHECK(inst.phi(v) == v);
    CHECK(validate(inst.d).empty());
}

TEST_CASE("gen_pathlike doubling") {
    auto inst = gen_pathlike(7, 6, 2, 0);
    CHECK(inst.g->vertex_count() == 11); // 6 + 5 midpoints
    CHECK(is_qi(inst.phi, {2, 1}));      // the doubling map with lower-id provenance
    auto c = measure_params(inst.phi);
    REQUIRE(c.has_value());
    CHECK(is_qi(inst.phi, {*c - 1, *c}));
}

TEST_CASE("generators are deterministic") {
    for (std::uint64_t seed : {1u, 99u, 1234567u}) {
        auto a = gen_pathlike(seed, 9, 2, 30);
        auto b = gen_pathlike(seed, 9, 2, 30);
        CHECK(instance_to_json(a) == instance_to_json(b));
        auto c = gen_bounded_pw(seed, 15, 2);
        auto d2 = gen_bounded_pw(seed, 15, 2);
        CHECK(instance_to_json(c) == instance_to_json(d2));
    }
    CHECK(instance_to_json(gen_comb(3)) == instance_to_json(gen_comb(3)));
    // different seeds should differ somewhere
    CHECK(instance_to_json(gen_pathlike(1, 9, 2, 30)) !=
          instance_to_json(gen_pathlike(2, 9, 2, 30)));
}

TEST_CASE("generator outputs are valid and measurable") {
    Rng rng(31337);
    for (int trial = 0; trial < 12; ++trial) {
        Instance inst;
        switch (trial % 3) {
            case 0:
                inst = gen_pathlike(rng.next_u64(), rng.next_int(2, 14), rng.next_int(1, 3),
                                    rng.next_int(0, 40));
                break;
            case 1:
                inst = gen_bounded_pw(rng.next_u64(), rng.next_int(2, 20), rng.next_int(1, 3));
                break;
            default:
                inst = gen_comb(rng.next_int(1, 4));
        }
        CHECK(validate(inst.d).empty());
        CHECK(inst.g->connected());
        CHECK(inst.h->connected());
        auto c = measure_params(inst.phi);
        CHECK(c.has_value());
    }
}

TEST_CASE("gen_bounded_pw stays within its width budget") {
    auto inst = gen_bounded_pw(5, 30, 2);
    CHECK(validate(inst.d).empty());
    CHECK(inst.d.width() <= 2);

    // exhaustive cross-check on a small sample
    auto small = gen_bounded_pw(8, 9, 2);
    auto exact = exact_pathwidth(small.h, 2);
    REQUIRE(exact.has_value());
    CHECK(exact->width <= 2);
}

TEST_CASE("gen_comb matches the truncation contract") {
    auto m1 = gen_comb(1);
    CHECK(m1.g->vertex_count() == 6); // spine of 3 plus one tooth of length 2
    CHECK(m1.h->vertex_count() == 3);
    CHECK(m1.d.width() == 1);
    CHECK(minimal_additive(m1.phi) == 1); // the (1,1) measurement
    CHECK(is_qi(m1.phi, {1, 1}));

    for (int m = 1; m <= 6; ++m) {
        auto inst = gen_comb(m);
        std::set<int> image;
        for (int v : inst.g->vertices()) image.insert(inst.phi(v));
        CHECK(image.size() == inst.h->vertex_count()); // surjective
        CHECK(is_qi(inst.phi, {1, 2}));
        CHECK(measure_params(inst.phi) == 2);
    }
}

TEST_CASE("naive distances agree with the search engines") {
    Rng rng(616);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_graph(rng, rng.next_int(2, 12), 30);
        NaiveDistances naive(g);
        auto table = all_pairs(g);
        for (int u : g->vertices())
            for (int v : g->vertices()) CHECK(naive.at(u, v) == table.at(u, v));

        std::map<Edge, std::int64_t> wm;
        for (const Edge& e : g->edges()) wm.emplace(e, rng.next_int(0, 9));
        auto w = EdgeWeighting::make(g, wm);
        NaiveDistances wnaive(g, &w);
        auto wtable = all_pairs(w);
        for (int u : g->vertices())
            for (int v : g->vertices()) CHECK(wnaive.at(u, v) == wtable.at(u, v));
    }
}

TEST_CASE("certify verdicts") {
    auto inst = gen_pathlike(12, 8, 1, 0); // identity instance
    auto rep = synthesize(inst.phi, inst.d);
    auto res = certify(inst, rep);
    CHECK(res.pass);
    CHECK(res.oracle_additive == rep.oracle_additive);
    CHECK(res.oracle_additive <= 8); // small for the identity instance

    // claimed constant below the oracle must fail
    auto lying = rep;
    lying.c_prime = BigInt(std::max<std::int64_t>(res.oracle_additive - 1, -1));
    auto res2 = certify(inst, lying);
    CHECK_FALSE(res2.pass);

    // metamorphic tamper: +1 on one edge never drops the oracle by more than 1
    if (!rep.weighting.weights().empty()) {
        auto wm = rep.weighting.weights();
        wm.begin()->second += 1;
        auto tampered = rep;
        tampered.weighting = EdgeWeighting::make(inst.h, wm);
        auto res3 = certify(inst, tampered);
        CHECK(res3.oracle_additive >= res.oracle_additive - 1);
    }
}

TEST_CASE("certify catches ledger tampering") {
    auto inst = gen_comb(2);
    auto rep = synthesize(inst.phi, inst.d);
    REQUIRE(certify(inst, rep).pass);
    auto bad = rep;
    REQUIRE_FALSE(bad.levels.empty());
    bad.levels.back().ledger.c0 += 1;
    bad.levels.back().kappa += 1;
    bad.c_prime += 1;
    auto res = certify(inst, bad);
    CHECK_FALSE(res.pass);
}

TEST_CASE("certify verifies anchor certificates") {
    auto inst = gen_pathlike(77, 10, 2, 0);
    auto rep = synthesize(inst.phi, inst.d);
    REQUIRE(certify(inst, rep).pass);
    REQUIRE_FALSE(rep.levels.front().anchor_vertex.empty());

    // swapping two anchor indices breaks the distance identity
    auto forged = rep;
    auto& idx = forged.levels.front().anchor_index;
    if (idx.size() >= 2) {
        std::swap(idx.front(), idx.back());
        auto res = certify(inst, forged);
        CHECK_FALSE(res.pass);
    }

    // a certificate naming a foreign vertex is rejected
    auto alien = rep;
    alien.levels.front().anchor_vertex.front() = 987654;
    CHECK_FALSE(certify(inst, alien).pass);
}
