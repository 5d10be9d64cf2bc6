#include <doctest.h>

#include "fixtures.hpp"
#include "hopfcyc/tensor.hpp"

using namespace hopfcyc;
using fixtures::group;
using Dims = std::vector<Index>;

namespace {

SparseMatrix scalar_matrix(const Rational& c) {
    return assemble_serial(1, 1, [&](Index) { return SparseVec{Entry{0, c}}; });
}

GroupModule character_group_module(const FiniteGroupData& g, bool sign) {
    GroupModule gm{g, 1, {}};
    for (std::uint32_t x = 0; x < g.order(); ++x) gm.act.push_back(scalar_matrix(sign && g.sign[x] < 0 ? -1 : 1));
    return gm;
}

bool same_object(const CyclicObjectData& a, const CyclicObjectData& b) {
    return a.dims == b.dims && a.faces == b.faces && a.degeneracies == b.degeneracies && a.cyclic == b.cyclic;
}

}  // namespace

TEST_CASE("auxiliary cyclic object is contractible to the ground field") {
    for (HopfPtr h : {group("z2"), group("z3"), fixtures::sweedler()}) {
        CyclicObjectData z = aux_cyclic(*h, 4);
        for (int n = 0; n <= 4; ++n) CHECK(z.dims[n] == ipow(h->dim(), n + 1));
        CheckReport r = verify_cyclic_object(z);
        CHECK_MESSAGE(r.ok(), r.first_failure());
        CHECK(hochschild(z, 0, 3) == Dims{1, 0, 0, 0});
        CHECK(cyclic_connes(z, 0, 3) == Dims{1, 0, 1, 0});
    }
}

TEST_CASE("normal form is balanced over the Hopf algebra") {
    CHECK(verify_normal_form(adjoint_module(group("s3")), 2).ok());
    CHECK(verify_normal_form(coadjoint_module(fixtures::sweedler()), 2).ok());
    CHECK(verify_normal_form(adjoint_module(fixtures::sweedler()), 1).ok());
}

TEST_CASE("identity suite on modular crossed modules") {
    std::vector<CrossedModuleData> ms = {adjoint_module(group("s3")), coadjoint_module(group("z3")),
                                         trivial_module(group("d4")), adjoint_module(fixtures::sweedler()),
                                         coadjoint_module(fixtures::sweedler())};
    for (const auto& m : ms) {
        CAPTURE(m.base->dim());
        CyclicObjectData z = build_cyclic(m, 3);
        CHECK(z.dims[0] == m.dim);
        for (int n = 1; n <= 3; ++n) CHECK(z.dims[n] == z.dims[n - 1] * m.base->dim());
        CheckReport r = verify_cyclic_object(z);
        CHECK_MESSAGE(r.ok(), r.first_failure());
        // tau_0 = Id and tau_n^{n+1} = Id, computed independently of the suite
        CHECK(z.cyclic[0] == SparseMatrix::identity(z.dims[0]));
        for (int n = 1; n <= 3; ++n) {
            SparseMatrix p = z.cyclic[n];
            for (int k = 1; k <= n; ++k) p = p * z.cyclic[n];
            CHECK(p == SparseMatrix::identity(z.dims[n]));
        }
    }
}

TEST_CASE("construction refuses inputs that are not modular crossed modules") {
    HopfPtr z2 = group("z2");
    std::uint32_t g = 1 - z2->group->identity();
    std::vector<Rational> sign(2, 1);
    sign[g] = -1;
    CrossedModuleData bad = character_module(z2, sign, unit_vector(g));
    CHECK_THROWS_WITH_AS(build_cyclic(bad, 3), doctest::Contains("cyclic operator refused"), AxiomViolation);
    CyclicObjectData forced = build_cyclic(bad, 3, BuildOptions{false});
    CheckReport r = verify_cyclic_object(forced);
    REQUIRE(r.find("cyclic order"));
    CHECK_FALSE(r.find("cyclic order")->passed);
    // the simplicial part only needs the module structure
    CHECK(verify_cyclic_object(build_simplicial(bad, 3)).ok());

    CHECK_THROWS_WITH_AS(build_cyclic(trivial_module(fixtures::sweedler()), 2),
                         doctest::Contains("not a crossed module"), AxiomViolation);
}

TEST_CASE("b' complex of a cyclic object is acyclic") {
    for (const auto& m : {adjoint_module(group("s3")), adjoint_module(fixtures::sweedler())}) {
        CyclicObjectData z = build_cyclic(m, 4);
        ChainComplexData bp = bar_prime_complex(z);
        CHECK(check_complex(bp).empty());
        CHECK(homology_dims(bp, 0, 3) == Dims{0, 0, 0, 0});
        CHECK(check_complex(hochschild_complex(z)).empty());
    }
}

TEST_CASE("Hochschild homology against the bar resolution") {
    std::vector<CrossedModuleData> ms = {adjoint_module(group("z3")), coadjoint_module(group("s3")),
                                         adjoint_module(fixtures::sweedler()), coadjoint_module(fixtures::sweedler())};
    for (const auto& m : ms) {
        Dims hh = hochschild(build_simplicial(m, 4), 0, 3);
        CHECK(hh == tor_oracle(m, 0, 3));
    }
    // over F_2 with a field-dependent answer
    CrossedModuleData t = trivial_module(group("z2"));
    CHECK(hochschild(build_simplicial(t, 5), 0, 4, Field{2}) == tor_oracle(t, 0, 4, Field{2}));
}

TEST_CASE("group homology oracle") {
    HopfPtr hz2 = group("z2"), hs3 = group("s3");
    const FiniteGroupData& z2 = *hz2->group;
    // H_n(Z/2, Q) = Q, 0, 0, ...; H_n(Z/2, F_2) = F_2 in every degree
    CHECK(group_homology(character_group_module(z2, false), 0, 4) == Dims{1, 0, 0, 0, 0});
    CHECK(group_homology(character_group_module(z2, false), 0, 4, Field{2}) == Dims{1, 1, 1, 1, 1});
    // sign coefficients: zero over Q, periodic over F_2 where the sign is trivial
    CHECK(group_homology(character_group_module(z2, true), 0, 4) == Dims{0, 0, 0, 0, 0});
    CHECK(group_homology(character_group_module(z2, true), 0, 3, Field{3}) == Dims{0, 0, 0, 0});

    HopfPtr h = hz2;
    CrossedModuleData triv = trivial_module(h), sign = sign_module(h);
    CHECK(hochschild(build_simplicial(triv, 5), 0, 4, Field{2}) == Dims{1, 1, 1, 1, 1});
    CHECK(hochschild(build_simplicial(sign, 4), 0, 3) == Dims{0, 0, 0, 0});
    CHECK(hochschild(build_simplicial(sign, 4), 0, 3, Field{3}) ==
          group_homology(character_group_module(z2, true), 0, 3, Field{3}));

    // S3 with trivial coefficients over F_3: H_n = F_3 exactly for n = 0, 3 mod 4
    const FiniteGroupData& s3 = *hs3->group;
    CHECK(group_homology(character_group_module(s3, false), 0, 4, Field{3}) == Dims{1, 0, 0, 1, 1});
    CHECK(group_homology(character_group_module(s3, false), 0, 4, Field{3}) ==
          hochschild(build_simplicial(trivial_module(hs3), 5), 0, 4, Field{3}));
}

TEST_CASE("Connes complex agrees with the cyclic bicomplex") {
    std::vector<CrossedModuleData> ms = {adjoint_module(group("z3")), adjoint_module(group("s3")),
                                         trivial_module(group("z2")), adjoint_module(fixtures::sweedler()),
                                         coadjoint_module(fixtures::sweedler())};
    for (const auto& m : ms) {
        CyclicObjectData z = build_cyclic(m, 4);
        Dims connes = cyclic_connes(z, 0, 3);
        CHECK(connes == cyclic_bicomplex(z, 0, 3));
        CHECK(check_bicomplex(tsygan_bicomplex(z)).empty());
        CheckReport sbi = sbi_check(hochschild(z, 0, 3), connes);
        CHECK_MESSAGE(sbi.ok(), sbi.first_failure());
    }
}

TEST_CASE("truncation is enforced") {
    CyclicObjectData z = build_cyclic(adjoint_module(group("z2")), 3);
    CHECK_NOTHROW(hochschild(z, 0, 2));
    CHECK_THROWS_AS(hochschild(z, 0, 3), InsufficientTruncation);
    CHECK_THROWS_AS(cyclic_connes(z, 0, 3), InsufficientTruncation);
    CHECK_THROWS_AS(cyclic_connes(build_simplicial(adjoint_module(group("z2")), 3), 0, 1), AxiomViolation);
}

TEST_CASE("periodic folding and the SBI sequence") {
    CHECK(fold_periodic({1, 0, 2, 0, 1}) == Dims{1, 0, 3, 0, 4});
    CHECK(fold_periodic({1, 1, 1}) == Dims{1, 1, 2});
    CHECK(fold_periodic({}).empty());
    // ad kZ/2: HH = 2,2,2,..., HC = 2,0,2,0
    CHECK(sbi_check({2, 2, 2, 2}, {2, 0, 2, 0}).ok());
    CHECK(sbi_check({1, 0, 0, 0}, {1, 0, 1, 0}).ok());
    CHECK_FALSE(sbi_check({1, 0, 0, 0}, {1, 0, 0, 0}).ok());
    // HC_0 = HH_0 always
    CHECK_FALSE(sbi_check({2, 2, 2, 2}, {1, 0, 1, 0}).ok());
}

TEST_CASE("conjugacy class formula for group algebras") {
    for (const char* name : {"z3", "s3"})
        for (const char* mod : {"adjoint", "coadjoint", "trivial"}) {
            CAPTURE(name);
            CAPTURE(mod);
            CrossedModuleData m = *builtin_module(group(name), mod);
            BurgheleaResult b = burghelea_finite(m, 3);
            CHECK(b.checks.ok());
            CHECK(b.folded == cyclic_connes(build_cyclic(m, 4), 0, 3));
        }
    // over Q every class of the adjoint module contributes k in even degrees
    BurgheleaResult b = burghelea_finite(adjoint_module(group("d4")), 3);
    CHECK(b.representatives.size() == 5);
    CHECK(b.folded == Dims{5, 0, 5, 0});
}

TEST_CASE("folded Tor comparison applies to cocommutative trivial coaction") {
    ComparisonReport r = folded_tor_check(trivial_module(group("s3")), 3);
    CHECK(r.applicable);
    CHECK(r.ok());
    CHECK(r.left == Dims{1, 0, 1, 0});
    ComparisonReport sign = folded_tor_check(sign_module(group("s3")), 3);
    CHECK(sign.ok());
    CHECK(sign.left == Dims{0, 0, 0, 0});
    CHECK_FALSE(folded_tor_check(adjoint_module(group("z2")), 2).applicable);
    ComparisonReport sw = folded_tor_check(coadjoint_module(fixtures::sweedler()), 2);
    CHECK_FALSE(sw.applicable);
    CHECK_FALSE(sw.reason.empty());
}

TEST_CASE("parallel assembly matches serial assembly") {
    CrossedModuleData m = adjoint_module(group("s3"));
    bool before = parallel_enabled();
    set_parallel(false);
    CyclicObjectData serial = build_cyclic(m, 3);
    Dims hh_serial = hochschild(serial, 0, 2), hc_serial = cyclic_connes(serial, 0, 2);
    set_parallel(true);
    CyclicObjectData par = build_cyclic(m, 3);
    CHECK(same_object(serial, par));
    CHECK(hochschild(par, 0, 2) == hh_serial);
    CHECK(cyclic_connes(par, 0, 2) == hc_serial);
    set_parallel(before);
}
