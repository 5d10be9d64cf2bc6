// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "hopfcyc/io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hopfcyc;

namespace {

using Dims = std::vector<Index>;

std::string show(const Dims& v) {
    std::ostringstream ss;
    ss << '(';
    for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
    ss << ')';
    return ss.str();
}

struct Criterion {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) ok = false;
        notes.push_back((cond ? "" : "MISMATCH ") + what);
    }
    void equal(const Dims& got, const Dims& want, const std::string& what) {
        expect(got == want, what + " " + show(got) + (got == want ? "" : " expected " + show(want)));
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HopfPtr algebra(const char* name) { return group_algebra(*builtin_group(name)); }

// (HH, HC) pairs collected from criteria 1-8 for the exactness check.
std::vector<std::pair<std::string, std::pair<Dims, Dims>>> sbi_pairs;

void record(const std::string& label, const Dims& hh, const Dims& hc) { sbi_pairs.push_back({label, {hh, hc}}); }

Criterion aux_values() {
    Criterion c;
    auto run = [&](const char* name, int hi, double limit) {
        auto t0 = std::chrono::steady_clock::now();
        HopfPtr h = algebra(name);
        CyclicObjectData z = aux_cyclic(*h, hi + 1);
        Dims hh = hochschild(z, 0, hi), hc = cyclic_connes(z, 0, hi);
        double dt = seconds_since(t0);
        Dims want_hh(hi + 1, 0), want_hc(hi + 1, 0);
        want_hh[0] = 1;
        for (int n = 0; n <= hi; n += 2) want_hc[n] = 1;
        c.equal(hh, want_hh, std::string(name) + " HH");
        c.equal(hc, want_hc, std::string(name) + " HC");
        std::ostringstream t;
        t << name << " " << dt << "s (limit " << limit << "s)";
        c.expect(dt < limit, t.str());
        record(std::string("aux ") + name, hh, hc);
    };
    run("z2", 4, 10);
    run("z3", 4, 10);
    run("s3", 3, 120);
    return c;
}

Criterion identity_suite() {
    Criterion c;
    CyclicObjectData z = build_cyclic(adjoint_module(algebra("s3")), 4);
    CheckReport rep = verify_cyclic_object(z);
    for (const char* fam : {"face relations", "degeneracy relations", "face-degeneracy relations",
                            "face-cyclic relations", "degeneracy-cyclic relations", "cyclic order"}) {
        const CheckResult* r = rep.find(fam);
        c.expect(r && r->passed, std::string("ad kS3: ") + fam + (r ? "" : " (missing)"));
    }
    // k with the sign action and coaction m -> m (x) g is crossed but not modular.
    HopfPtr z2 = algebra("z2");
    const FiniteGroupData& g = *z2->group;
    std::uint32_t gen = 1 - g.identity();
    std::vector<Rational> sign(2);
    sign[g.identity()] = 1;
    sign[gen] = -1;
    CrossedModuleData bad = character_module(z2, sign, unit_vector(gen));
    c.expect(verify_crossed(bad).ok(), "sign module with grouplike coaction is crossed");
    c.expect(!verify_modular(bad).ok(), "sign module with grouplike coaction is not modular");
    bool refused = false;
    try {
        build_cyclic(bad, 4);
    } catch (const AxiomViolation&) {
        refused = true;
    }
    c.expect(refused, "default construction refuses the non-modular module");
    CheckReport wd = verify_cyclic_well_defined(bad, 4);
    CheckReport suite;
    if (wd.ok()) suite = verify_cyclic_object(build_cyclic(bad, 4, BuildOptions{false}));
    const CheckResult* order = suite.find("cyclic order");
    bool failed_as_expected = !wd.ok() || (order && !order->passed);
    c.expect(failed_as_expected, "identity suite fails on the non-modular module: " +
                                     (!wd.ok() ? wd.first_failure() : suite.first_failure()));
    return c;
}

Criterion oracle_equivalence() {
    Criterion c;
    auto run = [&](const char* group, const char* module) {
        CrossedModuleData m = *builtin_module(algebra(group), module);
        Dims hh = hochschild(build_simplicial(m, 5), 0, 4);
        Dims tor = tor_oracle(m, 0, 4);
        c.equal(hh, tor, std::string(group) + " " + module + " HH vs Tor");
    };
    run("z2", "adjoint");
    run("z4", "adjoint");
    run("s3", "trivial");
    run("s3", "adjoint");
    return c;
}

Criterion burghelea_values() {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    for (auto [name, classes] : std::vector<std::pair<const char*, Index>>{{"z2", 2}, {"z3", 3}, {"z2xz2", 4}, {"s3", 3}}) {
        HopfPtr h = algebra(name);
        c.expect(conjugacy_data(*h->group).size() == classes, std::string(name) + " has " + std::to_string(classes) + " classes");
        CyclicObjectData z = build_cyclic(adjoint_module(h), 4);
        Dims hc = cyclic_connes(z, 0, 3);
        c.equal(hc, {classes, 0, classes, 0}, std::string(name) + " HC");
        record(std::string("ad k") + name, hochschild(z, 0, 3), hc);
    }
    double dt = seconds_since(t0);
    c.expect(dt < 300, "total " + std::to_string(dt) + "s (limit 300s)");
    return c;
}

Criterion galois_suite() {
    Criterion c;
    GaloisExtensionData g = galois_check(*builtin_extension("s3_over_a3"));
    c.expect(g.galois && g.coinvariants.basis.size() == 3, "canonical map bijective, B = kA3");
    CheckReport kr = kappa_relations(g);
    c.expect(kr.checks.size() == 5 && kr.ok(), "translation map relations: " + (kr.ok() ? "all hold" : kr.first_failure()));
    GaloisHomologyReport gh = galois_homology(g, 3);
    for (const char* op : {"faces", "degeneracies", "the cyclic operator"}) {
        const CheckResult* r = gh.lambda.checks.find(std::string("lambda commutes with ") + op);
        c.expect(r && r->passed, std::string("lambda commutes with ") + op);
    }
    c.expect(gh.lambda.checks.ok(), "lambda suite " + (gh.lambda.checks.ok() ? "passes" : gh.lambda.checks.first_failure()));
    c.equal(gh.hc_direct, {3, 0, 3, 0}, "HC(A/B) direct");
    c.equal(gh.hc_transported, {3, 0, 3, 0}, "HC(A/B) through lambda");
    record("kS3/kA3", gh.hh_direct, gh.hc_direct);
    record("kZ2, A_B", gh.hh_transported, gh.hc_transported);
    return c;
}

Criterion semisimple() {
    Criterion c;
    HopfPtr s3 = algebra("s3");
    std::vector<std::uint32_t> even;
    for (std::uint32_t x = 0; x < s3->group->order(); ++x)
        if (s3->group->sign[x] > 0) even.push_back(x);
    CrossedModuleData ad = adjoint_module(s3);
    ReductionReport r = semisimple_reduction(subgroup_algebra(s3, even), ad, 3);
    c.expect(r.normal && r.semisimple, "kA3 is normal and semisimple");
    c.expect(r.quotient && r.quotient->dim() == 2, "quotient Hopf algebra has dimension 2");
    c.equal(r.hh.left, r.hh.right, "HH(kS3, ad) vs HH(kZ2, reduced module)");
    c.equal(r.hh.left, tor_oracle(ad, 0, 3), "HH(kS3, ad) vs Tor oracle");
    c.expect(r.hh.checks.ok(), "reduced module is crossed");
    record("ad kS3", r.hh.left, r.hc.left);
    record("reduced", r.hh.right, r.hc.right);
    return c;
}

Criterion shapiro() {
    Criterion c;
    HopfPtr z4 = algebra("z4");
    const FiniteGroupData& g = *z4->group;
    std::uint32_t e = g.identity(), sq = e;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (x != e && g.mul(x, x) == e) sq = x;
    HopfSubalgebraData k = subgroup_algebra(z4, {e, sq});
    ShapiroReport r = shapiro_check(k, adjoint_module(k.sub), 3);
    c.expect(r.free_rank_matches, "kZ4 is free over kZ2");
    c.equal(r.hc.left, r.hc.right, "HC(kZ4, Ind ad) vs HC(kZ2, ad)");
    c.equal(r.hh.left, r.hh.right, "HH(kZ4, Ind ad) vs HH(kZ2, ad)");
    record("Ind ad", r.hh.left, r.hc.left);
    record("ad kZ2", r.hh.right, r.hc.right);
    return c;
}

Criterion folded_tor() {
    Criterion c;
    CrossedModuleData sign = sign_module(algebra("z2"));
    ComparisonReport a = folded_tor_check(sign, 4);
    c.expect(a.applicable, "sign module: cocommutative, trivial coaction");
    c.equal(a.left, Dims(5, 0), "kZ2 sign HC direct");
    c.equal(a.right, Dims(5, 0), "kZ2 sign HC folded Tor");
    record("kZ2 sign", hochschild(build_simplicial(sign, 5), 0, 4), a.left);
    CrossedModuleData triv = trivial_module(algebra("z3"));
    ComparisonReport b = folded_tor_check(triv, 3);
    c.expect(b.applicable, "trivial kZ3 module applicable");
    c.equal(b.left, {1, 0, 1, 0}, "kZ3 trivial HC direct");
    c.equal(b.right, {1, 0, 1, 0}, "kZ3 trivial HC folded Tor");
    record("kZ3 trivial", hochschild(build_simplicial(triv, 4), 0, 3), b.left);
    return c;
}

Criterion base_change() {
    Criterion c;
    AlgebraData a = underlying_algebra(*algebra("z4"));
    // kZ2 inside kZ4 is spanned by 1 and the square of a generator.
    HopfPtr z4 = algebra("z4");
    const FiniteGroupData& g = *z4->group;
    std::uint32_t e = g.identity(), sq = e;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (x != e && g.mul(x, x) == e) sq = x;
    SubalgebraData b = subalgebra(a, {unit_vector(e), unit_vector(sq)});
    BaseChangeReport r = separable_base_change(a, b, ground_field(a), regular_bimodule(a), 3);
    c.expect(r.separable, "kZ2 is separable");
    c.expect(r.quasi_iso.chain_map, "comparison map is a chain map" +
                                        (r.quasi_iso.chain_map ? "" : ": " + r.quasi_iso.chain_map_failure));
    bool all = !r.quasi_iso.iso.empty();
    for (bool x : r.quasi_iso.iso) all = all && x;
    c.expect(all && r.quasi_iso.iso.size() == 4, "isomorphism on homology in degrees 0..3");
    c.expect(r.ok(), "rank certificate " + (r.checks.ok() ? "complete" : r.checks.first_failure()));
    c.equal(r.hh_small, r.hh_large, "HH relative to k vs relative to kZ2");
    return c;
}

Criterion torus() {
    Criterion c;
    TorusCocycle t;
    t.r = 2;
    t.a = {{0, 1}, {-1, 0}};
    TorusReport rep = torus_homology(t, 4);
    Dims hh, hc;
    bool finite = true;
    for (const auto& d : rep.degrees) {
        finite = finite && d.hh_total && d.hc_total;
        hh.push_back(d.hh_total ? d.hh_total->get_ui() : 0);
        hc.push_back(d.hc_total ? d.hc_total->get_ui() : 0);
    }
    c.expect(rep.lattice_finite && finite, "X = " + rep.lattice.describe() + ", totals finite");
    hh.pop_back();
    c.equal(hh, {1, 2, 1, 0}, "HH");
    c.equal(hc, {1, 2, 2, 2, 2}, "HC");
    for (int d : {2, 3, 5}) {
        TorusCocycle f = t;
        f.q_order = Integer(d);
        CheckReport box = box_oracle(f, x_lambda(f), 2 * d);
        c.expect(box.ok(), "order " + std::to_string(d) + ": " + x_lambda(f).describe() + " matches box enumeration");
    }
    return c;
}

Criterion sbi() {
    Criterion c;
    for (const auto& [label, p] : sbi_pairs) {
        CheckReport r = sbi_check(p.first, p.second);
        c.expect(r.ok(), label + (r.ok() ? "" : ": " + r.first_failure()));
    }
    c.expect(sbi_pairs.size() >= 14, std::to_string(sbi_pairs.size()) + " pairs");
    return c;
}

Criterion filtration() {
    Criterion c;
    CrossedModuleData triv = trivial_module(algebra("z2"));
    FiltrationData ft = coinvariants_filtration(triv);
    c.expect(!ft.levels.empty() && ft.levels[0].dim() == triv.dim && ft.exhaustive, "trivial coaction: F_0 = M, exhaustive");
    HopfPtr z2 = algebra("z2");
    CrossedModuleData ad = adjoint_module(z2);
    FiltrationData fa = coinvariants_filtration(ad);
    bool span_one = !fa.levels.empty() && fa.levels[0].dim() == 1 && fa.levels[0].contains(z2->unit);
    c.expect(span_one, "ad kZ2: F_0 = span{1}");
    c.expect(!fa.exhaustive && fa.levels.back().dim() == 1, "ad kZ2: stabilizes at span{1}, not exhaustive");
    for (auto [group, module] : std::vector<std::pair<const char*, const char*>>{{"z3", "trivial"}, {"s3", "sign"}}) {
        FiltrationReport r = filtration_report(*builtin_module(algebra(group), module), 3);
        std::string tag = std::string(group) + " " + module;
        c.expect(r.filtration.exhaustive, tag + ": exhaustive");
        c.expect(r.graded_trivial_coaction, tag + ": graded pieces have trivial coaction");
        c.expect(r.matches_folding, tag + ": graded HC matches folded Tor");
        c.equal(r.e1_total, r.hc, tag + ": E1 total vs HC");
    }
    return c;
}

}  // namespace

int main() {
    std::vector<std::pair<const char*, std::function<Criterion()>>> all = {
        {"aux object values", aux_values},
        {"cyclic identity suite", identity_suite},
        {"Hochschild complex equals Tor oracle", oracle_equivalence},
        {"finite group class decomposition", burghelea_values},
        {"Galois suite for kS3 over kA3", galois_suite},
        {"semisimple reduction", semisimple},
        {"Shapiro reduction", shapiro},
        {"folded Tor comparison", folded_tor},
        {"separable base change", base_change},
        {"quantum torus", torus},
        {"SBI consistency", sbi},
        {"coinvariants filtration", filtration},
    };
    int failures = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Criterion c;
        try {
            c = all[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << all[i].first << '\n';
        for (const auto& n : c.notes) std::cout << "    " << n << '\n';
        failures += !c.ok;
    }
    std::cout << (failures ? "FAILED " : "all ") << (failures ? std::to_string(failures) : std::string("12"))
              << (failures ? " of 12 criteria\n" : " criteria passed\n");
    return failures ? 1 : 0;
}
