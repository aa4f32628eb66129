#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "exactcat/jordan_holder.hpp"

using namespace exactcat;

namespace {

// factors of a series as a sorted list of dimension vectors, for quick checks
std::vector<std::vector<int>> factor_dims(const CompositionSeries& s) {
    std::vector<std::vector<int>> out;
    for (const Representation& f : s.factors) out.push_back(f.dims());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("series of the zero object") {
    Representation zero = Representation::zero(fixtures::a2(), fixtures::f2());
    auto s = find_composition_series(zero, fixtures::e_all());
    REQUIRE(s.has_value());
    CHECK(s->length() == 0);
    CHECK(s->chain.size() == 1);
    validate_composition_series(*s, fixtures::e_all());
    CHECK(all_composition_series(zero, fixtures::e_all()).size() == 1);
}

TEST_CASE("P1 has exactly one e_all composition series") {
    ExactStructure e = fixtures::e_all();
    auto all = all_composition_series(fixtures::P1(), e);
    REQUIRE(all.size() == 1);
    const CompositionSeries& s = all[0];
    CHECK(s.length() == 2);
    validate_composition_series(s, e);
    // factors are S2 (bottom) then S1 (top)
    CHECK(s.factors[0].dims() == std::vector<int>{0, 1});
    CHECK(s.factors[1].dims() == std::vector<int>{1, 0});

    auto greedy = find_composition_series(fixtures::P1(), e);
    REQUIRE(greedy.has_value());
    CHECK(greedy->length() == 2);
    CHECK(factor_dims(*greedy) == factor_dims(s));
}

TEST_CASE("S1 + S2 has two series and they compare by a transposition") {
    ExactStructure e = fixtures::e_all();
    auto all = all_composition_series(fixtures::S1S2(), e);
    REQUIRE(all.size() == 2);
    for (const CompositionSeries& s : all) validate_composition_series(s, e);

    JHComparisonResult cmp = baumslag_compare(all[0], all[1], e, true);
    INFO(cmp.failure);
    REQUIRE(cmp.ok);
    CHECK(cmp.supported);
    CHECK(cmp.equal_length);
    CHECK(cmp.sigma == std::vector<int>{1, 0});
    REQUIRE(cmp.factor_isos.size() == 2);
    for (int l = 0; l < 2; ++l) {
        CHECK(cmp.factor_isos[l].source() == all[0].factors[l]);
        CHECK(cmp.factor_isos[l].target() == all[1].factors[cmp.sigma[l]]);
        CHECK(cmp.factor_isos[l].vertexwise_invertible());
    }
    REQUIRE_FALSE(cmp.trace.empty());
    CHECK(cmp.trace[0].pivot == 0);

    // self-comparison is the identity permutation
    JHComparisonResult self = baumslag_compare(all[0], all[0], e, true);
    REQUIRE(self.ok);
    CHECK(self.sigma == std::vector<int>{0, 1});
}

TEST_CASE("P1 + S1 has four e_all series with equal factor multisets") {
    ExactStructure e = fixtures::e_all();
    auto all = all_composition_series(fixtures::P1S1(), e);
    REQUIRE(all.size() == 4);
    FactorMultiset first = composition_factors(all[0]);
    CHECK(first.classes.size() == 2);  // S1 twice, S2 once
    for (const CompositionSeries& s : all) {
        validate_composition_series(s, e);
        CHECK(s.length() == 3);
        CHECK(factor_dims(s) ==
              std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 0}});
        CHECK(factor_multisets_equal(first, composition_factors(s)));
    }

    // every ordered pair compares successfully under the AIS structure
    for (const CompositionSeries& a : all)
        for (const CompositionSeries& b : all) {
            JHComparisonResult cmp = baumslag_compare(a, b, e, true);
            INFO(cmp.failure);
            CHECK(cmp.ok);
            CHECK(cmp.equal_length);
        }
}

TEST_CASE("baumslag under e_split: the P1-copy pairs are honest failures") {
    ExactStructure e = fixtures::e_split();
    auto all = all_composition_series(fixtures::P1S1(), e);
    REQUIRE(all.size() == 3);

    int ok_count = 0, fail_count = 0;
    for (const CompositionSeries& a : all)
        for (const CompositionSeries& b : all) {
            JHComparisonResult cmp = baumslag_compare(a, b, e, false);
            CHECK_FALSE(cmp.supported);
            if (cmp.ok) {
                ++ok_count;
                // even unsupported successes carry verified witnesses
                for (size_t l = 0; l < cmp.factor_isos.size(); ++l)
                    CHECK(cmp.factor_isos[l].vertexwise_invertible());
            } else {
                ++fail_count;
                CHECK(cmp.failure == "pivot level has a nonzero intersection factor");
                // the two P1 copies intersect in the S2 copy, which is not an
                // admissible e_split subobject of either copy
                CHECK(factor_dims(a) == factor_dims(b));
            }
        }
    CHECK(ok_count == 7);
    CHECK(fail_count == 2);

    // multiset comparison still succeeds on every pair
    for (const CompositionSeries& a : all)
        for (const CompositionSeries& b : all)
            CHECK(factor_multisets_equal(composition_factors(a), composition_factors(b)));
}

TEST_CASE("jh property check passes for both structures") {
    for (const ExactStructure& e : {fixtures::e_all(), fixtures::e_split()}) {
        AxiomReport r = jh_property_check(e, fixtures::corpus());
        INFO(e.name());
        CHECK(r.all_passed());
        REQUIRE(r.blocks.size() == 3);
        CHECK(r.blocks[0].name == "series_exist");
        CHECK(r.blocks[1].name == "jh_lengths");
        CHECK(r.blocks[2].name == "jh_factors");
        for (const CheckBlock& b : r.blocks) CHECK(b.cases > 0);
    }
}

TEST_CASE("validate rejects corrupted series") {
    ExactStructure e = fixtures::e_all();
    auto good = find_composition_series(fixtures::P1(), e);
    REQUIRE(good.has_value());

    CompositionSeries bad = *good;
    bad.factors[0] = fixtures::S1();  // true factor is S2
    CHECK_THROWS_AS(validate_composition_series(bad, e), invalid_input);

    CompositionSeries short_chain = *good;
    short_chain.chain.erase(short_chain.chain.begin());
    CHECK_THROWS_AS(validate_composition_series(short_chain, e), invalid_input);

    // a one-step "series" whose only factor is not simple
    AdmissibleSubobject zero_sub(
        RepMorphism::zero(Representation::zero(fixtures::a2(), fixtures::f2()), fixtures::P1S1()),
        e);
    AdmissibleSubobject full_sub(RepMorphism::identity(fixtures::P1S1()), e);
    RepMorphism step = RepMorphism::zero(zero_sub.object(), fixtures::P1S1());
    CompositionSeries coarse{fixtures::P1S1(), {zero_sub, full_sub}, {step}, {fixtures::P1S1()}};
    CHECK_THROWS_AS(validate_composition_series(coarse, e), invalid_input);
}

TEST_CASE("baumslag rejects mismatched inputs") {
    ExactStructure e = fixtures::e_all();
    auto p1 = find_composition_series(fixtures::P1(), e);
    auto sum = find_composition_series(fixtures::S1S2(), e);
    REQUIRE(p1.has_value());
    REQUIRE(sum.has_value());
    JHComparisonResult cmp = baumslag_compare(*p1, *sum, e, true);
    CHECK_FALSE(cmp.ok);
    CHECK(cmp.failure == "series of different objects");
}

TEST_CASE("greedy series agree with enumeration everywhere") {
    for (const ExactStructure& e : {fixtures::e_all(), fixtures::e_split()}) {
        for (const Representation& x : fixtures::corpus()) {
            auto greedy = find_composition_series(x, e);
            auto all = all_composition_series(x, e);
            REQUIRE(greedy.has_value());
            REQUIRE_FALSE(all.empty());
            validate_composition_series(*greedy, e);
            CHECK(greedy->length() == all[0].length());
            CHECK(factor_multisets_equal(composition_factors(*greedy),
                                         composition_factors(all[0])));
        }
    }
}
