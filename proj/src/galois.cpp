#include "hopfcyc/galois.hpp"

#include "hopfcyc/rank.hpp"
#include "hopfcyc/tensor.hpp"

#include <functional>

namespace hopfcyc {

namespace {

SparseVec bilinear(const std::vector<SparseVec>& table, Index cols, const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    for (const auto& x : a)
        for (const auto& y : b) out = axpy(out, x.value * y.value, table[x.index * cols + y.index]);
    return out;
}

std::string vec_label(const std::vector<std::string>& basis, Index i) {
    return i < basis.size() ? basis[i] : "#" + std::to_string(i);
}

// Entries of a vector on A (x) H as (a, h, coef).
template <class Fn>
void split2(const SparseVec& v, Index second, Fn fn) {
    for (const auto& e : v) fn(e.index / second, e.index % second, e.value);
}

SparseVec kappa_of(const GaloisExtensionData& g, const SparseVec& h) {
    SparseVec out;
    for (const auto& e : h) out = axpy(out, e.value, g.kappa[e.index]);
    return out;
}

bool is_regular(const AlgebraData& a, const BimoduleData& m) {
    if (m.dim != a.dim()) return false;
    BimoduleData r = regular_bimodule(a);
    return r.left == m.left && r.right == m.right;
}

// maps[n] : source_n -> target_n commute with faces, degeneracies and, when
// both carry one, the cyclic operator.
CheckReport commutation_suite(const std::vector<SparseMatrix>& maps, const CyclicObjectData& src,
                              const CyclicObjectData& tgt, const std::string& name) {
    CheckReport rep;
    int top = static_cast<int>(maps.size()) - 1;
    std::string bad;
    for (int n = 1; n <= top && bad.empty(); ++n)
        for (int i = 0; i <= n && bad.empty(); ++i)
            if (!(maps[n - 1] * src.faces[n][i] == tgt.faces[n][i] * maps[n]))
                bad = "degree " + std::to_string(n) + ", face " + std::to_string(i);
    rep.add(name + " commutes with faces", bad.empty(), bad);
    bad.clear();
    for (int n = 0; n < top && bad.empty(); ++n)
        for (int i = 0; i <= n && bad.empty(); ++i)
            if (!(maps[n + 1] * src.degeneracies[n][i] == tgt.degeneracies[n][i] * maps[n]))
                bad = "degree " + std::to_string(n) + ", degeneracy " + std::to_string(i);
    rep.add(name + " commutes with degeneracies", bad.empty(), bad);
    if (src.has_cyclic() && tgt.has_cyclic()) {
        bad.clear();
        for (int n = 0; n <= top && bad.empty(); ++n)
            if (!(maps[n] * src.cyclic[n] == tgt.cyclic[n] * maps[n])) bad = "degree " + std::to_string(n);
        rep.add(name + " commutes with the cyclic operator", bad.empty(), bad);
    }
    return rep;
}

// Projects the first factor of a vector on X (x) H (index x*second + h).
SparseVec project_first(const Quotient& q, const SparseVec& v, Index second) {
    SparseVec out;
    split2(v, second, [&](Index x, Index h, const Rational& c) {
        for (const auto& p : q.project_basis(x)) out.push_back(Entry{p.index * second + h, c * p.value});
    });
    normalize(out);
    return out;
}

}  // namespace

SparseVec AlgebraData::multiply(const SparseVec& a, const SparseVec& b) const { return bilinear(mult, dim(), a, b); }

CheckReport verify_algebra(const AlgebraData& a) {
    CheckReport rep;
    std::uint32_t d = a.dim();
    if (a.mult.size() != Index(d) * d) {
        rep.add("shape", false, "multiplication table has " + std::to_string(a.mult.size()) + " entries");
        return rep;
    }
    std::string bad;
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i)
        for (std::uint32_t j = 0; j < d && bad.empty(); ++j)
            for (std::uint32_t k = 0; k < d && bad.empty(); ++k)
                if (a.multiply(a.product(i, j), unit_vector(k)) != a.multiply(unit_vector(i), a.product(j, k)))
                    bad = "(" + a.basis[i] + ", " + a.basis[j] + ", " + a.basis[k] + ")";
    rep.add("associativity", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i)
        if (a.multiply(a.unit, unit_vector(i)) != unit_vector(i) || a.multiply(unit_vector(i), a.unit) != unit_vector(i))
            bad = a.basis[i];
    rep.add("unit", bad.empty(), bad);
    return rep;
}

AlgebraData underlying_algebra(const HopfAlgebraData& h) { return AlgebraData{h.basis, h.mult, h.unit}; }

SparseVec ComoduleAlgebraData::coact(const SparseVec& a) const {
    SparseVec out;
    for (const auto& e : a) out = axpy(out, e.value, coaction[e.index]);
    return out;
}

CheckReport verify_comodule_algebra(const ComoduleAlgebraData& a) {
    CheckReport rep = verify_algebra(a.algebra);
    const HopfAlgebraData& h = *a.base;
    Index dh = h.dim(), d = a.algebra.dim();
    if (a.coaction.size() != d) {
        rep.add("shape", false, "coaction has " + std::to_string(a.coaction.size()) + " entries");
        return rep;
    }
    std::string bad;
    for (std::uint32_t x = 0; x < d && bad.empty(); ++x) {
        SparseVec lhs, rhs;
        split2(a.coaction[x], dh, [&](Index y, Index k, const Rational& c) {
            split2(a.coaction[y], dh, [&](Index z, Index l, const Rational& c2) {
                lhs.push_back(Entry{(z * dh + l) * dh + k, c * c2});
            });
            for (const auto& t : h.comult[k]) rhs.push_back(Entry{(y * dh + t.left) * dh + t.right, c * t.coef});
        });
        normalize(lhs);
        normalize(rhs);
        if (lhs != rhs) bad = a.algebra.basis[x];
    }
    rep.add("coaction is coassociative", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t x = 0; x < d && bad.empty(); ++x) {
        SparseVec v;
        split2(a.coaction[x], dh, [&](Index y, Index k, const Rational& c) { v.push_back(Entry{y, c * h.counit[k]}); });
        normalize(v);
        if (v != unit_vector(x)) bad = a.algebra.basis[x];
    }
    rep.add("coaction is counital", bad.empty(), bad);
    // rho(xy) = rho(x) rho(y) in A (x) H
    auto mult2 = [&](const SparseVec& u, const SparseVec& v) {
        SparseVec out;
        split2(u, dh, [&](Index x1, Index h1, const Rational& c1) {
            split2(v, dh, [&](Index x2, Index h2, const Rational& c2) {
                SparseVec ax = a.algebra.product(static_cast<std::uint32_t>(x1), static_cast<std::uint32_t>(x2));
                const SparseVec& hx = h.product(static_cast<std::uint32_t>(h1), static_cast<std::uint32_t>(h2));
                for (const auto& p : ax)
                    for (const auto& q : hx) out.push_back(Entry{p.index * dh + q.index, c1 * c2 * p.value * q.value});
            });
        });
        normalize(out);
        return out;
    };
    bad.clear();
    for (std::uint32_t x = 0; x < d && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < d && bad.empty(); ++y)
            if (a.coact(a.algebra.product(x, y)) != mult2(a.coaction[x], a.coaction[y]))
                bad = "(" + a.algebra.basis[x] + ", " + a.algebra.basis[y] + ")";
    if (bad.empty() && a.coact(a.algebra.unit) != tensor(a.algebra.unit, h.unit, dh)) bad = "unit";
    rep.add("coaction is an algebra map", bad.empty(), bad);
    return rep;
}

SubalgebraData subalgebra(const AlgebraData& a, const std::vector<SparseVec>& spanning) {
    SubalgebraData s;
    s.space = Subspace(a.dim(), spanning);
    for (Index j = 0; j < s.space.dim(); ++j) s.basis.push_back(s.space.inclusion().column(j));
    if (!s.space.contains(a.unit)) throw AxiomViolation("subalgebra does not contain the unit");
    for (const auto& x : s.basis)
        for (const auto& y : s.basis)
            if (!s.space.contains(a.multiply(x, y))) throw AxiomViolation("span is not closed under multiplication");
    return s;
}

SubalgebraData ground_field(const AlgebraData& a) { return subalgebra(a, {a.unit}); }

SubalgebraData coinvariants(const ComoduleAlgebraData& a) {
    Index dh = a.base->dim();
    std::vector<SparseVec> cols;
    for (std::uint32_t x = 0; x < a.algebra.dim(); ++x)
        cols.push_back(axpy(a.coaction[x], -1, tensor(unit_vector(x), a.base->unit, dh)));
    RankKernel rk = rank_kernel(SparseMatrix::from_columns(a.algebra.dim() * dh, cols));
    return subalgebra(a.algebra, rk.kernel);
}

SparseVec BimoduleData::act_left(const SparseVec& a, const SparseVec& m) const { return bilinear(left, dim, a, m); }

SparseVec BimoduleData::act_right(const SparseVec& m, const SparseVec& a) const {
    Index da = dim ? right.size() / dim : 0;
    return bilinear(right, da, m, a);
}

BimoduleData regular_bimodule(const AlgebraData& a) { return BimoduleData{a.dim(), a.mult, a.mult, a.basis}; }

CheckReport verify_bimodule(const AlgebraData& a, const BimoduleData& m) {
    CheckReport rep;
    std::uint32_t da = a.dim();
    if (m.left.size() != Index(da) * m.dim || m.right.size() != Index(da) * m.dim) {
        rep.add("shape", false, "action tables do not match dimensions");
        return rep;
    }
    std::string bad;
    for (std::uint32_t x = 0; x < da && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < da && bad.empty(); ++y)
            for (std::uint32_t v = 0; v < m.dim && bad.empty(); ++v) {
                SparseVec ex = unit_vector(x), ey = unit_vector(y), ev = unit_vector(v);
                if (m.act_left(a.product(x, y), ev) != m.act_left(ex, m.act_left(ey, ev)) ||
                    m.act_right(ev, a.product(x, y)) != m.act_right(m.act_right(ev, ex), ey) ||
                    m.act_right(m.act_left(ex, ev), ey) != m.act_left(ex, m.act_right(ev, ey)))
                    bad = "(" + a.basis[x] + ", " + a.basis[y] + ", " + vec_label(m.labels, v) + ")";
            }
    for (std::uint32_t v = 0; v < m.dim && bad.empty(); ++v)
        if (m.act_left(a.unit, unit_vector(v)) != unit_vector(v) || m.act_right(unit_vector(v), a.unit) != unit_vector(v))
            bad = "unit on " + vec_label(m.labels, v);
    rep.add("bimodule axioms", bad.empty(), bad);
    return rep;
}

Quotient balanced_tensor(const AlgebraData& a, const SubalgebraData& b, const BimoduleData& m, int n, bool cyclic) {
    Index da = a.dim();
    std::vector<Index> radices{m.dim};
    for (int k = 0; k < n; ++k) radices.push_back(da);
    Index ambient = m.dim * ipow(da, n);
    Echelon ech(ambient);
    auto place = [&](const std::vector<std::uint32_t>& s, int slot, const SparseVec& v, SparseVec& out, const Rational& c) {
        std::vector<std::uint32_t> t = s;
        for (const auto& e : v) {
            t[slot] = static_cast<std::uint32_t>(e.index);
            out.push_back(Entry{pack(t, radices), c * e.value});
        }
    };
    for (Index idx = 0; idx < ambient; ++idx) {
        auto s = unpack(idx, radices);
        SparseVec em = unit_vector(s[0]);
        for (const auto& bv : b.basis) {
            if (n >= 1) {
                SparseVec a1 = unit_vector(s[1]);
                SparseVec out;
                // (m b) (x) a1 - m (x) (b a1)
                for (const auto& e : m.act_right(em, bv)) {
                    auto t = s;
                    t[0] = static_cast<std::uint32_t>(e.index);
                    out.push_back(Entry{pack(t, radices), e.value});
                }
                place(s, 1, a.multiply(bv, a1), out, -1);
                normalize(out);
                if (!out.empty()) ech.insert(out);
                for (int i = 1; i < n; ++i) {
                    SparseVec out2;
                    place(s, i, a.multiply(unit_vector(s[i]), bv), out2, 1);
                    place(s, i + 1, a.multiply(bv, unit_vector(s[i + 1])), out2, -1);
                    normalize(out2);
                    if (!out2.empty()) ech.insert(out2);
                }
                if (cyclic) {
                    SparseVec out3;
                    place(s, n, a.multiply(unit_vector(s[n]), bv), out3, 1);
                    for (const auto& e : m.act_left(bv, em)) {
                        auto t = s;
                        t[0] = static_cast<std::uint32_t>(e.index);
                        out3.push_back(Entry{pack(t, radices), -e.value});
                    }
                    normalize(out3);
                    if (!out3.empty()) ech.insert(out3);
                }
            } else if (cyclic) {
                SparseVec out = axpy(m.act_right(em, bv), -1, m.act_left(bv, em));
                if (!out.empty()) ech.insert(out);
            }
        }
    }
    return Quotient(std::move(ech));
}

SparseVec beta_power(const ComoduleAlgebraData& a, const BimoduleData& m, int n, Index ambient_index) {
    Index da = a.algebra.dim(), dh = a.base->dim();
    std::vector<Index> radices{m.dim};
    for (int k = 0; k < n; ++k) radices.push_back(da);
    auto s = unpack(ambient_index, radices);
    if (n == 0) return unit_vector(s[0]);
    // W holds beta applied to a^j (x) ... (x) a^n as a vector of A (x) H^{(x)(n-j)}.
    SparseVec w = unit_vector(s[n]);
    Index hpow = 1;
    for (int j = n - 1; j >= 1; --j) {
        SparseVec next;
        for (const auto& e : w) {
            Index y = e.index / hpow, hs = e.index % hpow;
            split2(a.coaction[y], dh, [&](Index y0, Index y1, const Rational& c) {
                for (const auto& p : a.algebra.product(s[j], static_cast<std::uint32_t>(y0)))
                    next.push_back(Entry{(p.index * dh + y1) * hpow + hs, e.value * c * p.value});
            });
        }
        normalize(next);
        w.swap(next);
        hpow *= dh;
    }
    SparseVec out;
    SparseVec em = unit_vector(s[0]);
    for (const auto& e : w) {
        Index y = e.index / hpow, hs = e.index % hpow;
        split2(a.coaction[y], dh, [&](Index y0, Index y1, const Rational& c) {
            for (const auto& p : m.act_right(em, unit_vector(y0)))
                out.push_back(Entry{(p.index * dh + y1) * hpow + hs, e.value * c * p.value});
        });
    }
    normalize(out);
    return out;
}

GaloisExtensionData galois_check(const ComoduleAlgebraData& a) {
    GaloisExtensionData g;
    g.ext = a;
    g.checks = verify_comodule_algebra(a);
    if (!g.checks.ok()) return g;
    const AlgebraData& alg = a.algebra;
    Index da = alg.dim(), dh = a.base->dim();
    g.coinvariants = coinvariants(a);
    BimoduleData reg = regular_bimodule(alg);
    g.tensor = balanced_tensor(alg, g.coinvariants, reg, 1, false);
    auto beta_of = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& e : v) out = axpy(out, e.value, beta_power(a, reg, 1, e.index));
        return out;
    };
    std::string bad;
    for (const auto& r : g.tensor.relator_basis())
        if (!beta_of(r).empty()) {
            bad = "relator at ambient index " + std::to_string(r.front().index);
            break;
        }
    g.checks.add("canonical map is balanced over B", bad.empty(), bad);
    g.beta = assemble(da * dh, g.tensor.dim(), [&](Index k) { return beta_power(a, reg, 1, g.tensor.representative(k)); });
    std::size_t r = rank(g.beta);
    Index big = std::max<Index>(g.tensor.dim(), da * dh);
    g.rank_defect = big - r;
    g.galois = g.tensor.dim() == da * dh && r == big;
    g.checks.add("canonical map is bijective", g.galois,
                 g.galois ? "" : "rank " + std::to_string(r) + " of " + std::to_string(g.tensor.dim()) + " -> " +
                                     std::to_string(da * dh));
    if (!g.galois) return g;
    g.beta_inverse = *inverse(g.beta);
    SparseMatrix sec = g.tensor.section();
    for (std::uint32_t h = 0; h < dh; ++h)
        g.kappa.push_back(sec.apply(g.beta_inverse.apply(tensor(alg.unit, unit_vector(h), dh))));
    return g;
}

CheckReport kappa_relations(const GaloisExtensionData& g) {
    CheckReport rep;
    if (!g.galois) {
        rep.add("extension is Galois", false, g.checks.first_failure());
        return rep;
    }
    const AlgebraData& alg = g.ext.algebra;
    const HopfAlgebraData& h = *g.ext.base;
    Index da = alg.dim(), dh = h.dim();
    Quotient hat = balanced_tensor(alg, g.coinvariants, regular_bimodule(alg), 1, true);

    std::string bad1, bad2, bad3;
    for (std::uint32_t x = 0; x < dh; ++x) {
        // sum kappa(x(1)) (x) x(2) = sum kappa1 (x) rho(kappa2)
        SparseVec l1, r1, l2, r2;
        for (const auto& t : h.comult[x]) {
            for (const auto& e : g.kappa[t.left]) l1.push_back(Entry{e.index * dh + t.right, e.value * t.coef});
            SparseVec s = h.antipode.column(t.left);
            for (const auto& e : g.kappa[t.right])
                for (const auto& q : s) l2.push_back(Entry{e.index * dh + q.index, e.value * t.coef * q.value});
        }
        SparseVec k3;
        for (const auto& e : g.kappa[x]) {
            Index k1 = e.index / da, k2 = e.index % da;
            split2(g.ext.coaction[k2], dh, [&](Index y0, Index y1, const Rational& c) {
                r1.push_back(Entry{(k1 * da + y0) * dh + y1, e.value * c});
            });
            split2(g.ext.coaction[k1], dh, [&](Index y0, Index y1, const Rational& c) {
                r2.push_back(Entry{(y0 * da + k2) * dh + y1, e.value * c});
            });
            k3 = axpy(k3, e.value, alg.product(static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k2)));
        }
        normalize(l1);
        normalize(r1);
        normalize(l2);
        normalize(r2);
        if (bad1.empty() && project_first(hat, l1, dh) != project_first(hat, r1, dh)) bad1 = h.basis[x];
        if (bad2.empty() && project_first(hat, l2, dh) != project_first(hat, r2, dh)) bad2 = h.basis[x];
        if (bad3.empty() && k3 != scaled(alg.unit, h.counit[x])) bad3 = h.basis[x];
    }
    rep.add("kappa(h(1)) (x) h(2) = kappa1(h) (x) rho(kappa2(h))", bad1.empty(), bad1);
    rep.add("kappa(h(2)) (x) S h(1) = rho(kappa1(h)) (x) kappa2(h)", bad2.empty(), bad2);
    rep.add("kappa1(h) kappa2(h) = eps(h)", bad3.empty(), bad3);

    // (x (x) y)(x' (x) y') = x x' (x) y' y
    auto mult_env = [&](const SparseVec& u, const SparseVec& v) {
        SparseVec out;
        for (const auto& p : u)
            for (const auto& q : v) {
                SparseVec l = alg.product(static_cast<std::uint32_t>(p.index / da), static_cast<std::uint32_t>(q.index / da));
                SparseVec r = alg.product(static_cast<std::uint32_t>(q.index % da), static_cast<std::uint32_t>(p.index % da));
                out = axpy(out, p.value * q.value, tensor(l, r, da));
            }
        return out;
    };
    std::string bad;
    for (std::uint32_t x = 0; x < dh && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < dh && bad.empty(); ++y)
            if (g.tensor.project(mult_env(g.kappa[x], g.kappa[y])) != g.tensor.project(kappa_of(g, h.product(y, x))))
                bad = "(" + h.basis[x] + ", " + h.basis[y] + ")";
    rep.add("kappa is an algebra anti-morphism", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t x = 0; x < dh && bad.empty(); ++x)
        for (const auto& b : g.coinvariants.basis) {
            SparseVec l, r;
            for (const auto& e : g.kappa[x]) {
                l = axpy(l, e.value, tensor(alg.multiply(b, unit_vector(e.index / da)), unit_vector(e.index % da), da));
                r = axpy(r, e.value, tensor(unit_vector(e.index / da), alg.multiply(unit_vector(e.index % da), b), da));
            }
            if (g.tensor.project(l) != g.tensor.project(r)) {
                bad = h.basis[x];
                break;
            }
        }
    rep.add("kappa takes values in the B-centralizer", bad.empty(), bad);
    return rep;
}

namespace {

// [M, B] quotient and the action h.[m] = [kappa2(h) m kappa1(h)].
ModuleData um_left(const GaloisExtensionData& g, const BimoduleData& m, const Quotient& q, CheckReport& rep) {
    const AlgebraData& alg = g.ext.algebra;
    Index da = alg.dim(), dh = g.ext.base->dim();
    auto act = [&](std::uint32_t h, const SparseVec& v) {
        SparseVec out;
        for (const auto& e : g.kappa[h])
            out = axpy(out, e.value, m.act_left(unit_vector(e.index % da), m.act_right(v, unit_vector(e.index / da))));
        return out;
    };
    std::string bad;
    for (const auto& r : q.relator_basis()) {
        for (std::uint32_t h = 0; h < dh && bad.empty(); ++h)
            if (!q.project(act(h, r)).empty()) bad = g.ext.base->basis[h];
        if (!bad.empty()) break;
    }
    rep.add("Ulbrich-Miyashita action descends to M_B", bad.empty(), bad);
    ModuleData out;
    out.base = g.ext.base;
    out.dim = static_cast<std::uint32_t>(q.dim());
    for (std::uint32_t h = 0; h < dh; ++h)
        for (std::uint32_t j = 0; j < out.dim; ++j) out.action.push_back(q.project(act(h, unit_vector(q.representative(j)))));
    for (std::uint32_t j = 0; j < out.dim; ++j) out.labels.push_back("[" + vec_label(m.labels, q.representative(j)) + "]");
    return out;
}

Quotient commutator_quotient(const SubalgebraData& b, const BimoduleData& m) {
    std::vector<SparseVec> rel;
    for (std::uint32_t v = 0; v < m.dim; ++v)
        for (const auto& bv : b.basis) rel.push_back(axpy(m.act_right(unit_vector(v), bv), -1, m.act_left(bv, unit_vector(v))));
    return Quotient(m.dim, rel);
}

}  // namespace

ABModuleData ab_crossed_module(const GaloisExtensionData& g) {
    ABModuleData r;
    if (!g.galois) throw AxiomViolation("extension is not Galois: " + g.checks.first_failure());
    const AlgebraData& alg = g.ext.algebra;
    BimoduleData reg = regular_bimodule(alg);
    Index dh = g.ext.base->dim();
    r.quotient = commutator_quotient(g.coinvariants, reg);
    ModuleData left = um_left(g, reg, r.quotient, r.checks);
    static_cast<ModuleData&>(r.module) = left;
    std::string bad;
    for (const auto& rel : r.quotient.relator_basis())
        if (!project_first(r.quotient, g.ext.coact(rel), dh).empty()) {
            bad = "relator at index " + std::to_string(rel.front().index);
            break;
        }
    r.checks.add("coaction descends to A_B", bad.empty(), bad);
    for (std::uint32_t j = 0; j < r.module.dim; ++j)
        r.module.coaction.push_back(project_first(r.quotient, g.ext.coaction[r.quotient.representative(j)], dh));
    r.checks.append(verify_crossed(r.module));
    r.checks.append(verify_modular(r.module));
    // sum a(1) . [x a(0)] = [a x]
    bad.clear();
    Index da = alg.dim();
    for (std::uint32_t a = 0; a < da && bad.empty(); ++a)
        for (std::uint32_t x = 0; x < da && bad.empty(); ++x) {
            SparseVec lhs;
            split2(g.ext.coaction[a], dh, [&](Index a0, Index a1, const Rational& c) {
                SparseVec bar = r.quotient.project(alg.product(x, static_cast<std::uint32_t>(a0)));
                lhs = axpy(lhs, c, r.module.act(static_cast<std::uint32_t>(a1), bar));
            });
            if (lhs != r.quotient.project(alg.product(a, x))) bad = "(" + alg.basis[a] + ", " + alg.basis[x] + ")";
        }
    r.checks.add("a(1) . [x a(0)] = [a x]", bad.empty(), bad);
    return r;
}

UMActions um_actions(const GaloisExtensionData& g, const BimoduleData& m) {
    UMActions u;
    if (!g.galois) throw AxiomViolation("extension is not Galois: " + g.checks.first_failure());
    const AlgebraData& alg = g.ext.algebra;
    const HopfAlgebraData& h = *g.ext.base;
    Index da = alg.dim(), dh = h.dim();
    u.coinvariant_quotient = commutator_quotient(g.coinvariants, m);
    u.left = um_left(g, m, u.coinvariant_quotient, u.checks);
    u.checks.append(verify_module(u.left));

    Index nb = g.coinvariants.basis.size();
    std::vector<SparseVec> cols;
    for (std::uint32_t v = 0; v < m.dim; ++v) {
        SparseVec col;
        for (Index k = 0; k < nb; ++k) {
            const SparseVec& b = g.coinvariants.basis[k];
            for (const auto& e : axpy(m.act_left(b, unit_vector(v)), -1, m.act_right(unit_vector(v), b)))
                col.push_back(Entry{k * m.dim + e.index, e.value});
        }
        cols.push_back(col);
    }
    u.invariants = Subspace(m.dim, rank_kernel(SparseMatrix::from_columns(nb * m.dim, cols)).kernel);
    auto act = [&](const SparseVec& v, std::uint32_t x) {
        SparseVec out;
        for (const auto& e : g.kappa[x])
            out = axpy(out, e.value, m.act_right(m.act_left(unit_vector(e.index / da), v), unit_vector(e.index % da)));
        return out;
    };
    std::string bad;
    for (std::uint32_t x = 0; x < dh; ++x) {
        std::vector<SparseVec> mc;
        for (Index j = 0; j < u.invariants.dim(); ++j) {
            auto c = u.invariants.coordinates(act(u.invariants.inclusion().column(j), x));
            if (!c) {
                if (bad.empty()) bad = h.basis[x];
                mc.emplace_back();
            } else {
                mc.push_back(*c);
            }
        }
        u.right.push_back(SparseMatrix::from_columns(u.invariants.dim(), mc));
    }
    u.checks.add("right action preserves M^B", bad.empty(), bad);
    bad.clear();
    Index dimb = u.invariants.dim();
    for (std::uint32_t x = 0; x < dh && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < dh && bad.empty(); ++y) {
            SparseMatrix prod(dimb, dimb);
            for (const auto& e : h.product(x, y)) prod = prod + u.right[e.index].scaled(e.value);
            if (!(u.right[y] * u.right[x] == prod)) bad = "(" + h.basis[x] + ", " + h.basis[y] + ")";
        }
    SparseMatrix one(dimb, dimb);
    for (const auto& e : h.unit) one = one + u.right[e.index].scaled(e.value);
    if (bad.empty() && !(one == SparseMatrix::identity(dimb))) bad = "unit";
    u.checks.add("right module axioms on M^B", bad.empty(), bad);
    return u;
}

RelativeCyclicData relative_cyclic(const AlgebraData& a, const SubalgebraData& b, const BimoduleData& m, int top,
                                   bool with_cyclic) {
    if (with_cyclic && !is_regular(a, m)) throw InputError("the cyclic operator needs M = A");
    RelativeCyclicData r;
    Index da = a.dim();
    for (int n = 0; n <= top; ++n) r.carriers.push_back(balanced_tensor(a, b, m, n, true));
    auto radices = [&](int n) {
        std::vector<Index> rad{m.dim};
        for (int k = 0; k < n; ++k) rad.push_back(da);
        return rad;
    };
    // Operators on ambient basis tensors.
    auto face = [&](int n, int i, Index idx) {
        auto rad = radices(n), low = radices(n - 1);
        auto s = unpack(idx, rad);
        SparseVec out;
        std::vector<SparseVec> f;
        if (i == 0) {
            f.push_back(m.act_right(unit_vector(s[0]), unit_vector(s[1])));
            for (int k = 2; k <= n; ++k) f.push_back(unit_vector(s[k]));
        } else if (i < n) {
            f.push_back(unit_vector(s[0]));
            for (int k = 1; k <= n; ++k) {
                if (k == i)
                    f.push_back(a.product(s[i], s[i + 1]));
                else if (k != i + 1)
                    f.push_back(unit_vector(s[k]));
            }
        } else {
            f.push_back(m.act_left(unit_vector(s[n]), unit_vector(s[0])));
            for (int k = 1; k < n; ++k) f.push_back(unit_vector(s[k]));
        }
        std::vector<const SparseVec*> ptr;
        for (const auto& x : f) ptr.push_back(&x);
        add_tensor(out, 1, ptr, low);
        normalize(out);
        return out;
    };
    auto degeneracy = [&](int n, int i, Index idx) {
        auto s = unpack(idx, radices(n));
        std::vector<SparseVec> f;
        for (int k = 0; k <= n; ++k) {
            f.push_back(unit_vector(s[k]));
            if (k == i) f.push_back(a.unit);
        }
        std::vector<const SparseVec*> ptr;
        for (const auto& x : f) ptr.push_back(&x);
        SparseVec out;
        add_tensor(out, 1, ptr, radices(n + 1));
        normalize(out);
        return out;
    };
    auto rotate = [&](int n, Index idx) {
        auto rad = radices(n);
        auto s = unpack(idx, rad);
        std::rotate(s.begin(), s.end() - 1, s.end());
        return unit_vector(pack(s, rad));
    };
    auto apply_lin = [](const SparseVec& v, auto op) {
        SparseVec out;
        for (const auto& e : v) out = axpy(out, e.value, op(e.index));
        return out;
    };

    CyclicObjectData& z = r.object;
    for (int n = 0; n <= top; ++n) z.dims.push_back(r.carriers[n].dim());
    z.faces.resize(top + 1);
    z.degeneracies.resize(top + 1);
    std::string bad;
    for (int n = 0; n <= top; ++n) {
        const Quotient& src = r.carriers[n];
        auto relators = src.relator_basis();
        for (int i = 0; n >= 1 && i <= n; ++i) {
            auto op = [&](Index idx) { return face(n, i, idx); };
            z.faces[n].push_back(assemble(z.dims[n - 1], z.dims[n], [&](Index k) {
                return r.carriers[n - 1].project(op(src.representative(k)));
            }));
            for (const auto& rel : relators)
                if (bad.empty() && !r.carriers[n - 1].project(apply_lin(rel, op)).empty())
                    bad = "face " + std::to_string(i) + " in degree " + std::to_string(n);
        }
        for (int i = 0; n < top && i <= n; ++i) {
            auto op = [&](Index idx) { return degeneracy(n, i, idx); };
            z.degeneracies[n].push_back(assemble(z.dims[n + 1], z.dims[n], [&](Index k) {
                return r.carriers[n + 1].project(op(src.representative(k)));
            }));
            for (const auto& rel : relators)
                if (bad.empty() && !r.carriers[n + 1].project(apply_lin(rel, op)).empty())
                    bad = "degeneracy " + std::to_string(i) + " in degree " + std::to_string(n);
        }
        if (with_cyclic) {
            auto op = [&](Index idx) { return rotate(n, idx); };
            z.cyclic.push_back(
                assemble(z.dims[n], z.dims[n], [&](Index k) { return src.project(op(src.representative(k))); }));
            for (const auto& rel : relators)
                if (bad.empty() && !src.project(apply_lin(rel, op)).empty())
                    bad = "cyclic operator in degree " + std::to_string(n);
        }
    }
    r.checks.add("operators preserve the relator spans", bad.empty(), bad);
    return r;
}

namespace {

// Column map for lambda and gamma: beta_power, then a linear map on the
// M factor, then the flip into H^{(x)n} (x) N.
SparseVec flip_after(const SparseVec& beta, int n, Index dh, Index target_dim,
                     const std::function<SparseVec(Index)>& on_m) {
    Index hpow = ipow(dh, n);
    SparseVec out;
    for (const auto& e : beta) {
        Index mi = e.index / hpow, hs = e.index % hpow;
        for (const auto& p : on_m(mi)) out.push_back(Entry{hs * target_dim + p.index, e.value * p.value});
    }
    normalize(out);
    return out;
}

}  // namespace

LambdaReport lambda_iso(const GaloisExtensionData& g, const BimoduleData& m, int top) {
    LambdaReport r;
    if (!g.galois) throw AxiomViolation("extension is not Galois: " + g.checks.first_failure());
    const AlgebraData& alg = g.ext.algebra;
    Index dh = g.ext.base->dim();
    bool regular = is_regular(alg, m);
    Quotient mb;
    if (regular) {
        ABModuleData ab = ab_crossed_module(g);
        r.checks.append(ab.checks);
        mb = ab.quotient;
        r.target = build_cyclic(ab.module, top);
    } else {
        UMActions u = um_actions(g, m);
        r.checks.append(u.checks);
        mb = u.coinvariant_quotient;
        r.target = build_simplicial(u.left, top);
    }
    r.source = relative_cyclic(alg, g.coinvariants, m, top, regular);
    r.checks.append(r.source.checks);
    std::string bad_wd, bad_inv;
    for (int n = 0; n <= top; ++n) {
        const Quotient& src = r.source.carriers[n];
        auto col = [&](Index idx) {
            return flip_after(beta_power(g.ext, m, n, idx), n, dh, mb.dim(), [&](Index mi) { return mb.project_basis(mi); });
        };
        r.maps.push_back(assemble(r.target.dims[n], src.dim(), [&](Index k) { return col(src.representative(k)); }));
        for (const auto& rel : src.relator_basis()) {
            SparseVec v;
            for (const auto& e : rel) v = axpy(v, e.value, col(e.index));
            if (!v.empty()) {
                if (bad_wd.empty()) bad_wd = "degree " + std::to_string(n);
                break;
            }
        }
        if (bad_inv.empty() && (src.dim() != r.target.dims[n] || rank(r.maps[n]) != src.dim()))
            bad_inv = "degree " + std::to_string(n) + " (" + std::to_string(src.dim()) + " -> " +
                      std::to_string(r.target.dims[n]) + ")";
    }
    r.checks.add("lambda is well defined on the cyclic tensor products", bad_wd.empty(), bad_wd);
    r.checks.add("lambda is invertible", bad_inv.empty(), bad_inv);
    r.checks.append(commutation_suite(r.maps, r.source.object, r.target, "lambda"));
    return r;
}

GaloisHomologyReport galois_homology(const GaloisExtensionData& g, int hi) {
    GaloisHomologyReport r;
    r.lambda = lambda_iso(g, regular_bimodule(g.ext.algebra), hi + 1);
    r.hh_direct = hochschild(r.lambda.source.object, 0, hi);
    r.hh_transported = hochschild(r.lambda.target, 0, hi);
    r.hc_direct = cyclic_connes(r.lambda.source.object, 0, hi);
    r.hc_transported = cyclic_connes(r.lambda.target, 0, hi);
    return r;
}

std::optional<SparseVec> separability_element(const AlgebraData& a, const SubalgebraData& b, const SubalgebraData& c) {
    // B in its own coordinates.
    AlgebraData balg;
    Index db = b.basis.size();
    for (Index i = 0; i < db; ++i) balg.basis.push_back("b" + std::to_string(i));
    for (Index i = 0; i < db; ++i)
        for (Index j = 0; j < db; ++j) {
            auto co = b.space.coordinates(a.multiply(b.basis[i], b.basis[j]));
            if (!co) throw AxiomViolation("B is not closed under multiplication");
            balg.mult.push_back(*co);
        }
    balg.unit = *b.space.coordinates(a.unit);
    std::vector<SparseVec> cinb;
    for (const auto& v : c.basis) {
        auto co = b.space.coordinates(v);
        if (!co) throw AxiomViolation("C is not contained in B");
        cinb.push_back(*co);
    }
    SubalgebraData csub = subalgebra(balg, cinb);
    BimoduleData reg = regular_bimodule(balg);
    Quotient q = balanced_tensor(balg, csub, reg, 1, false);
    Index nq = q.dim();
    auto left = [&](const SparseVec& x, Index idx) { return tensor(balg.multiply(x, unit_vector(idx / db)), unit_vector(idx % db), db); };
    auto right = [&](Index idx, const SparseVec& x) { return tensor(unit_vector(idx / db), balg.multiply(unit_vector(idx % db), x), db); };
    std::vector<SparseVec> cols;
    for (Index k = 0; k < nq; ++k) {
        Index rep = q.representative(k);
        SparseVec col = balg.product(static_cast<std::uint32_t>(rep / db), static_cast<std::uint32_t>(rep % db));
        for (Index i = 0; i < db; ++i)
            for (const auto& e : q.project(axpy(left(unit_vector(i), rep), -1, right(rep, unit_vector(i)))))
                col.push_back(Entry{db + i * nq + e.index, e.value});
        normalize(col);
        cols.push_back(col);
    }
    auto sol = solve(SparseMatrix::from_columns(db + db * nq, cols), balg.unit);
    if (!sol) return std::nullopt;
    return q.section().apply(*sol);
}

BaseChangeReport separable_base_change(const AlgebraData& a, const SubalgebraData& b, const SubalgebraData& c,
                                       const BimoduleData& m, int hi) {
    BaseChangeReport r;
    r.separable = separability_element(a, b, c).has_value();
    r.checks.add("B is separable over C", r.separable);
    bool regular = is_regular(a, m);
    RelativeCyclicData small = relative_cyclic(a, c, m, hi + 1, regular);
    RelativeCyclicData large = relative_cyclic(a, b, m, hi + 1, regular);
    r.checks.append(small.checks);
    r.checks.append(large.checks);
    ChainMapData f;
    for (int n = 0; n <= hi + 1; ++n) {
        const Quotient& s = small.carriers[n];
        const Quotient& l = large.carriers[n];
        f.maps.push_back(assemble(l.dim(), s.dim(), [&](Index k) { return l.project_basis(s.representative(k)); }));
    }
    r.quasi_iso = quasi_iso_check(hochschild_complex(small.object), hochschild_complex(large.object), f, 0, hi);
    r.hh_small = r.quasi_iso.source_dims;
    r.hh_large = r.quasi_iso.target_dims;
    if (regular && c.basis.size() == 1) {
        r.hc_small = cyclic_connes(small.object, 0, hi);
        r.hc_large = cyclic_connes(large.object, 0, hi);
        CheckReport s1 = sbi_check(r.hh_small, r.hc_small), s2 = sbi_check(r.hh_large, r.hc_large);
        r.checks.add("SBI bounds relative to C", s1.ok(), s1.first_failure());
        r.checks.add("SBI bounds relative to B", s2.ok(), s2.first_failure());
        r.checks.add("cyclic homology agrees", r.hc_small == r.hc_large);
    }
    return r;
}

CheckReport verify_cocycle(const FiniteGroupData& gamma, const std::vector<Rational>& omega) {
    CheckReport rep;
    std::uint32_t n = gamma.order();
    if (omega.size() != Index(n) * n) {
        rep.add("cocycle shape", false, "expected " + std::to_string(n * n) + " values");
        return rep;
    }
    auto w = [&](std::uint32_t x, std::uint32_t y) { return omega[x * n + y]; };
    std::string bad;
    for (std::uint32_t x = 0; x < n && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < n && bad.empty(); ++y)
            if (sgn(w(x, y)) == 0) bad = "(" + gamma.names[x] + ", " + gamma.names[y] + ")";
    rep.add("cocycle values are invertible", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t x = 0; x < n && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < n && bad.empty(); ++y)
            for (std::uint32_t z = 0; z < n && bad.empty(); ++z)
                if (w(x, y) * w(gamma.mul(x, y), z) != w(y, z) * w(x, gamma.mul(y, z)))
                    bad = "(" + gamma.names[x] + ", " + gamma.names[y] + ", " + gamma.names[z] + ")";
    rep.add("cocycle condition", bad.empty(), bad);
    return rep;
}

ComoduleAlgebraData strongly_graded(const FiniteGroupData& gamma, const AlgebraData& a,
                                    const std::vector<std::uint32_t>& degree) {
    if (degree.size() != a.dim()) throw InputError("one degree per basis element is required");
    for (auto d : degree)
        if (d >= gamma.order()) throw InputError("degree out of range");
    CheckReport alg = verify_algebra(a);
    if (!alg.ok()) throw AxiomViolation(alg.first_failure());
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j)
            for (const auto& e : a.product(i, j))
                if (degree[e.index] != gamma.mul(degree[i], degree[j]))
                    throw AxiomViolation("product leaves the grading at (" + a.basis[i] + ", " + a.basis[j] + ")");
    for (const auto& e : a.unit)
        if (degree[e.index] != gamma.identity()) throw AxiomViolation("unit is not of degree e");
    ComoduleAlgebraData out;
    out.algebra = a;
    out.base = group_algebra(gamma);
    Index dh = gamma.order();
    for (std::uint32_t i = 0; i < a.dim(); ++i) out.coaction.push_back(unit_vector(i * dh + degree[i]));
    return out;
}

namespace {

// Homogeneous components A_x = {a : rho(a) = a (x) x} for a group algebra base.
std::vector<Subspace> graded_components(const ComoduleAlgebraData& a) {
    Index dh = a.base->dim(), da = a.algebra.dim();
    std::vector<Subspace> out;
    for (std::uint32_t x = 0; x < dh; ++x) {
        std::vector<SparseVec> cols;
        for (std::uint32_t i = 0; i < da; ++i)
            cols.push_back(axpy(a.coaction[i], -1, unit_vector(i * dh + x)));
        out.emplace_back(da, rank_kernel(SparseMatrix::from_columns(da * dh, cols)).kernel);
    }
    return out;
}

}  // namespace

CheckReport verify_strong_grading(const ComoduleAlgebraData& a) {
    CheckReport rep;
    const FiniteGroupData* g = a.base->group.get();
    if (!g) {
        rep.add("grading group", false, "base is not a group algebra");
        return rep;
    }
    auto comp = graded_components(a);
    std::string bad;
    for (std::uint32_t x = 0; x < g->order() && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < g->order() && bad.empty(); ++y) {
            std::vector<SparseVec> prods;
            for (Index i = 0; i < comp[x].dim(); ++i)
                for (Index j = 0; j < comp[y].dim(); ++j)
                    prods.push_back(a.algebra.multiply(comp[x].inclusion().column(i), comp[y].inclusion().column(j)));
            if (Subspace(a.algebra.dim(), prods).dim() != comp[g->mul(x, y)].dim())
                bad = "(" + g->names[x] + ", " + g->names[y] + ")";
        }
    rep.add("A_x A_y = A_xy", bad.empty(), bad);
    return rep;
}

ComoduleAlgebraData twisted_group_algebra(const FiniteGroupData& gamma, const std::vector<Rational>& omega) {
    CheckReport c = verify_cocycle(gamma, omega);
    if (!c.ok()) throw AxiomViolation(c.first_failure());
    std::uint32_t n = gamma.order();
    AlgebraData a;
    for (const auto& name : gamma.names) a.basis.push_back("e_" + name);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) a.mult.push_back(unit_vector(gamma.mul(x, y), omega[x * n + y]));
    std::uint32_t e = gamma.identity();
    a.unit = unit_vector(e, 1 / omega[e * n + e]);
    std::vector<std::uint32_t> degree(n);
    for (std::uint32_t x = 0; x < n; ++x) degree[x] = x;
    return strongly_graded(gamma, a, degree);
}

ComoduleAlgebraData crossed_product(const AlgebraData& b, const FiniteGroupData& gamma,
                                    const std::vector<SparseMatrix>& action, const std::vector<Rational>& omega) {
    CheckReport c = verify_cocycle(gamma, omega);
    if (!c.ok()) throw AxiomViolation(c.first_failure());
    std::uint32_t n = gamma.order(), db = b.dim();
    if (action.size() != n) throw InputError("one automorphism per group element is required");
    for (std::uint32_t x = 0; x < n; ++x) {
        const SparseMatrix& f = action[x];
        if (f.rows() != db || f.cols() != db) throw InputError("automorphism has the wrong shape");
        if (f.apply(b.unit) != b.unit) throw AxiomViolation("action of " + gamma.names[x] + " is not unital");
        for (std::uint32_t i = 0; i < db; ++i)
            for (std::uint32_t j = 0; j < db; ++j)
                if (f.apply(b.product(i, j)) != b.multiply(f.column(i), f.column(j)))
                    throw AxiomViolation("action of " + gamma.names[x] + " is not multiplicative at (" + b.basis[i] +
                                         ", " + b.basis[j] + ")");
        for (std::uint32_t y = 0; y < n; ++y)
            if (!(action[x] * action[y] == action[gamma.mul(x, y)]))
                throw AxiomViolation("action is not a group action at (" + gamma.names[x] + ", " + gamma.names[y] + ")");
    }
    AlgebraData a;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t i = 0; i < db; ++i) a.basis.push_back(b.basis[i] + " e_" + gamma.names[x]);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t i = 0; i < db; ++i)
            for (std::uint32_t y = 0; y < n; ++y)
                for (std::uint32_t j = 0; j < db; ++j) {
                    SparseVec v = b.multiply(unit_vector(i), action[x].column(j));
                    SparseVec out;
                    Index xy = gamma.mul(x, y);
                    for (const auto& e : v) out.push_back(Entry{xy * db + e.index, e.value * omega[x * n + y]});
                    a.mult.push_back(out);
                }
    std::uint32_t e = gamma.identity();
    for (const auto& u : b.unit) a.unit.push_back(Entry{e * db + u.index, u.value / omega[e * n + e]});
    std::vector<std::uint32_t> degree;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t i = 0; i < db; ++i) degree.push_back(x);
    return strongly_graded(gamma, a, degree);
}

std::optional<ComoduleAlgebraData> builtin_extension(const std::string& name) {
    if (name == "s3_over_a3") {
        FiniteGroupData s3 = symmetric_group3();
        FiniteGroupData z2 = cyclic_group(2);
        std::uint32_t even = z2.identity(), odd = 1 - even;
        std::vector<std::uint32_t> degree;
        for (int s : s3.sign) degree.push_back(s > 0 ? even : odd);
        return strongly_graded(z2, underlying_algebra(*group_algebra(s3)), degree);
    }
    if (name == "z4_over_z2") {
        FiniteGroupData z4 = cyclic_group(4);
        FiniteGroupData z2 = cyclic_group(2);
        // element k of Z/4 is g^k
        std::vector<std::uint32_t> degree;
        for (std::uint32_t k = 0; k < 4; ++k) degree.push_back(k % 2 ? 1 - z2.identity() : z2.identity());
        return strongly_graded(z2, underlying_algebra(*group_algebra(z4)), degree);
    }
    if (name == "twisted_z2xz2") {
        FiniteGroupData v = direct_product(cyclic_group(2), cyclic_group(2));
        std::uint32_t n = v.order();
        // omega(x, y) = (-1)^{x_2 y_1}, coordinates read from the product indexing
        std::vector<Rational> omega(n * n);
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) omega[x * n + y] = (x % 2 == 1 && y / 2 == 1) ? -1 : 1;
        return twisted_group_algebra(v, omega);
    }
    return std::nullopt;
}

std::vector<std::string> builtin_extension_names() { return {"s3_over_a3", "z4_over_z2", "twisted_z2xz2"}; }

GradedBurgheleaReport burghelea_graded(const GaloisExtensionData& g, int hi) {
    GradedBurgheleaReport r;
    if (!g.galois) throw AxiomViolation("extension is not Galois: " + g.checks.first_failure());
    const FiniteGroupData* gamma = g.ext.base->group.get();
    if (!gamma) throw InputError("graded Burghelea formula needs a group algebra");
    const AlgebraData& alg = g.ext.algebra;
    Index da = alg.dim();
    auto comp = graded_components(g.ext);
    std::vector<Index> total(hi + 1, 0);
    bool descends = true, stable = true;
    for (const auto& cls : conjugacy_data(*gamma)) {
        std::uint32_t x = cls.representative;
        const Subspace& ax = comp[x];
        std::vector<SparseVec> rel;
        for (Index i = 0; i < ax.dim(); ++i)
            for (const auto& b : g.coinvariants.basis) {
                SparseVec a = ax.inclusion().column(i);
                auto co = ax.coordinates(axpy(alg.multiply(a, b), -1, alg.multiply(b, a)));
                if (!co) {
                    stable = false;
                    continue;
                }
                rel.push_back(*co);
            }
        Quotient q(ax.dim(), rel);
        auto matrix_of = [&](std::uint32_t gl) {  // gl: element of the centralizer, as an element of gamma
            std::vector<SparseVec> cols;
            for (Index j = 0; j < q.dim(); ++j) {
                SparseVec a = ax.inclusion().column(q.representative(j));
                SparseVec v;
                for (const auto& e : g.kappa[gl])
                    v = axpy(v, e.value, alg.multiply(alg.multiply(unit_vector(e.index % da), a), unit_vector(e.index / da)));
                auto co = ax.coordinates(v);
                if (!co) {
                    stable = false;
                    cols.emplace_back();
                    continue;
                }
                cols.push_back(q.project(*co));
            }
            return SparseMatrix::from_columns(q.dim(), cols);
        };
        std::uint32_t dim = static_cast<std::uint32_t>(q.dim());
        if (!(matrix_of(x) == SparseMatrix::identity(dim))) descends = false;
        GroupModule gm{cls.reduced, dim, {}};
        for (std::uint32_t c = 0; c < cls.reduced.order(); ++c)
            gm.act.push_back(matrix_of(cls.centralizer.embedding[cls.coset_rep[c]]));
        std::vector<Index> hx = dim ? group_homology(gm, 0, hi) : std::vector<Index>(hi + 1, 0);
        for (int n = 0; n <= hi; ++n) total[n] += hx[n];
        r.representatives.push_back(x);
        r.component_dims.push_back(dim);
        r.group_homology.push_back(hx);
    }
    r.checks.add("centralizers preserve the components", stable);
    r.checks.add("x acts trivially on its component", descends);
    r.formula = fold_periodic(total);
    RelativeCyclicData z = relative_cyclic(alg, g.coinvariants, regular_bimodule(alg), hi + 1, true);
    r.checks.append(z.checks);
    r.direct = cyclic_connes(z.object, 0, hi);
    return r;
}

CheckReport verify_trace(const ComoduleAlgebraData& a, const CrossedModuleData& m, const SparseMatrix& tr) {
    CheckReport rep;
    const AlgebraData& alg = a.algebra;
    Index da = alg.dim(), dh = a.base->dim();
    if (tr.rows() != m.dim || tr.cols() != da) {
        rep.add("trace shape", false, "expected a " + std::to_string(m.dim) + " x " + std::to_string(da) + " matrix");
        return rep;
    }
    std::string bad;
    for (std::uint32_t x = 0; x < da && bad.empty(); ++x) {
        SparseVec rhs;
        split2(a.coaction[x], dh, [&](Index y, Index h, const Rational& c) {
            for (const auto& e : tr.column(y)) rhs.push_back(Entry{e.index * dh + h, c * e.value});
        });
        normalize(rhs);
        if (m.coact(tr.column(x)) != rhs) bad = alg.basis[x];
    }
    rep.add("trace is colinear", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t p = 0; p < da && bad.empty(); ++p)
        for (std::uint32_t x = 0; x < da && bad.empty(); ++x) {
            SparseVec rhs;
            split2(a.coaction[p], dh, [&](Index a0, Index a1, const Rational& c) {
                rhs = axpy(rhs, c, m.act(static_cast<std::uint32_t>(a1), tr.apply(alg.product(x, static_cast<std::uint32_t>(a0)))));
            });
            if (tr.apply(alg.product(p, x)) != rhs) bad = "(" + alg.basis[p] + ", " + alg.basis[x] + ")";
        }
    rep.add("tr(a x) = a(1) tr(x a(0))", bad.empty(), bad);
    return rep;
}

TraceReport trace_map(const ComoduleAlgebraData& a, const CrossedModuleData& m, const SparseMatrix& tr, int top) {
    TraceReport r;
    r.checks = verify_trace(a, m, tr);
    if (!r.checks.ok()) throw AxiomViolation("not a coinvariant trace: " + r.checks.first_failure());
    const AlgebraData& alg = a.algebra;
    Index dh = a.base->dim();
    BimoduleData reg = regular_bimodule(alg);
    RelativeCyclicData src = relative_cyclic(alg, ground_field(alg), reg, top, true);
    CyclicObjectData tgt = build_cyclic(m, top);
    for (int n = 0; n <= top; ++n) {
        const Quotient& q = src.carriers[n];
        r.maps.push_back(assemble(tgt.dims[n], q.dim(), [&](Index k) {
            return flip_after(beta_power(a, reg, n, q.representative(k)), n, dh, m.dim,
                              [&](Index x) { return tr.column(x); });
        }));
    }
    r.checks.append(commutation_suite(r.maps, src.object, tgt, "gamma"));
    return r;
}

}  // namespace hopfcyc
