#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "exactcat/subobjects.hpp"
#include "oracles.hpp"

using namespace exactcat;

TEST_CASE("subspace enumeration counts") {
    PrimeField f2 = fixtures::f2();
    CHECK(subspaces_of(f2, 0).size() == 1);
    CHECK(subspaces_of(f2, 1).size() == 2);
    CHECK(subspaces_of(f2, 2).size() == 5);  // 0, three lines, plane
    PrimeField f3(3);
    CHECK(subspaces_of(f3, 2).size() == 6);  // 0, four lines, plane
    // every listed subspace is in canonical column-space form
    for (const Matrix& s : subspaces_of(f2, 2)) CHECK(s == s.column_space_basis());
}

TEST_CASE("admissible subobject construction") {
    ExactStructure all = fixtures::e_all();
    ExactStructure split = fixtures::e_split();
    PrimeField f2 = fixtures::f2();

    RepMorphism incl(fixtures::S2(), fixtures::P1(),
                     {Matrix(f2, 1, 0), Matrix::from_rows(f2, {{1}})});
    AdmissibleSubobject sub(incl, all);
    CHECK(sub.object() == fixtures::S2());
    CHECK(sub.parent() == fixtures::P1());
    CHECK_FALSE(sub.is_full());
    CHECK(is_proper(sub));

    // the same monic is not admissible under e_split
    CHECK_THROWS_AS(AdmissibleSubobject(incl, split), invalid_input);

    AdmissibleSubobject full(RepMorphism::identity(fixtures::P1()), all);
    CHECK(full.is_full());
    CHECK(full.contains(sub));
    CHECK_FALSE(sub.contains(full));
    CHECK(sub.same_subobject(sub));

    auto mono = containment_monic(sub, full);
    REQUIRE(mono.has_value());
    CHECK(compose(full.inflation(), *mono) == sub.inflation());
    CHECK_FALSE(containment_monic(full, sub).has_value());
}

TEST_CASE("lattice of P1") {
    SubobjectLattice all = enumerate_admissible_subobjects(fixtures::P1(), fixtures::e_all());
    CHECK(all.elements.size() == 3);  // 0, S2, P1
    CHECK(all.containments.size() == 3);
    CHECK(all.zero_index == 0);
    CHECK(all.full_index == 2);
    CHECK(all.contains_pair(0, 2));
    CHECK_FALSE(all.contains_pair(2, 0));

    SubobjectLattice split = enumerate_admissible_subobjects(fixtures::P1(), fixtures::e_split());
    CHECK(split.elements.size() == 2);  // S2 >-> P1 does not split
}

TEST_CASE("lattice of P1 + S1") {
    SubobjectLattice all = enumerate_admissible_subobjects(fixtures::P1S1(), fixtures::e_all());
    CHECK(all.elements.size() == 7);
    CHECK(all.containments.size() == 15);

    SubobjectLattice split =
        enumerate_admissible_subobjects(fixtures::P1S1(), fixtures::e_split());
    // 0, the S1 summand, the two P1 copies, and the whole object
    CHECK(split.elements.size() == 5);

    SubobjectLattice sum = enumerate_admissible_subobjects(fixtures::S1S2(), fixtures::e_all());
    CHECK(sum.elements.size() == 4);
    CHECK(sum.containments.size() == 5);
}

TEST_CASE("lattices match brute-force subrepresentation enumeration") {
    ExactStructure all = fixtures::e_all();
    for (const Representation& x : fixtures::corpus()) {
        SubobjectLattice lat = enumerate_admissible_subobjects(x, all);
        auto brute = oracle::brute_subreps(x);
        REQUIRE(lat.elements.size() == brute.size());
        for (const AdmissibleSubobject& s : lat.elements)
            CHECK(brute.count(oracle::mask_of_images(s.canonical_images())) == 1);
    }
}

TEST_CASE("quotients") {
    ExactStructure all = fixtures::e_all();
    PrimeField f2 = fixtures::f2();
    RepMorphism incl(fixtures::S2(), fixtures::P1(),
                     {Matrix(f2, 1, 0), Matrix::from_rows(f2, {{1}})});
    AdmissibleSubobject sub(incl, all);
    QuotientResult q = quotient(fixtures::P1(), sub);
    CHECK(q.object == fixtures::S1());
    CHECK(compose(q.projection, incl).is_zero());
    CHECK_THROWS_AS(quotient(fixtures::S1S2(), sub), invalid_input);
}

TEST_CASE("E-simplicity") {
    ExactStructure all = fixtures::e_all();
    ExactStructure split = fixtures::e_split();
    Budgets b;
    CHECK(is_E_simple(fixtures::S1(), all, b));
    CHECK(is_E_simple(fixtures::S2(), all, b));
    CHECK_FALSE(is_E_simple(fixtures::P1(), all, b));
    CHECK_FALSE(is_E_simple(fixtures::S1S2(), all, b));
    CHECK_FALSE(is_E_simple(Representation::zero(fixtures::a2(), fixtures::f2()), all, b));

    // P1 becomes simple once the non-split inclusion is outlawed
    CHECK(is_E_simple(fixtures::P1(), split, b));
    CHECK_FALSE(is_E_simple(fixtures::S1S2(), split, b));
}

TEST_CASE("enumeration budget") {
    Budgets tiny;
    tiny.enumeration = 1;
    CHECK_THROWS_AS(enumerate_admissible_subobjects(fixtures::P1S1(), fixtures::e_all(), tiny),
                    budget_exceeded);
}
