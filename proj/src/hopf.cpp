#include "hopfcyc/hopf.hpp"

#include "hopfcyc/tensor.hpp"

#include <map>

namespace hopfcyc {

SparseVec HopfAlgebraData::multiply(const SparseVec& a, const SparseVec& b) const {
    SparseVec out;
    for (const auto& x : a)
        for (const auto& y : b)
            for (const auto& z : product(static_cast<std::uint32_t>(x.index), static_cast<std::uint32_t>(y.index)))
                out.push_back(Entry{z.index, x.value * y.value * z.value});
    normalize(out);
    return out;
}

Rational HopfAlgebraData::apply_counit(const SparseVec& a) const {
    Rational r = 0;
    for (const auto& x : a) r += x.value * counit[x.index];
    return r;
}

SparseVec HopfAlgebraData::coproduct(const SparseVec& a) const {
    SparseVec out;
    for (const auto& x : a)
        for (const auto& t : comult[x.index])
            out.push_back(Entry{Index(t.left) * dim() + t.right, x.value * t.coef});
    normalize(out);
    return out;
}

bool HopfAlgebraData::cocommutative() const {
    for (std::uint32_t i = 0; i < dim(); ++i) {
        SparseVec d = coproduct(unit_vector(i));
        SparseVec flipped;
        for (const auto& e : d) flipped.push_back(Entry{(e.index % dim()) * dim() + e.index / dim(), e.value});
        normalize(flipped);
        if (axpy(d, -1, flipped).size() != 0) return false;
    }
    return true;
}

bool HopfAlgebraData::commutative() const {
    for (std::uint32_t i = 0; i < dim(); ++i)
        for (std::uint32_t j = i + 1; j < dim(); ++j)
            if (!axpy(product(i, j), -1, product(j, i)).empty()) return false;
    return true;
}

CoproductTable::CoproductTable(const HopfAlgebraData& h, int k) : k_(k), terms_(h.dim()) {
    for (std::uint32_t b = 0; b < h.dim(); ++b) {
        std::vector<LegTerm> cur{LegTerm{{b}, 1}};
        for (int step = 0; step < k; ++step) {
            std::map<std::vector<std::uint32_t>, Rational> next;
            for (const auto& t : cur) {
                for (const auto& c : h.comult[t.legs[0]]) {
                    std::vector<std::uint32_t> legs{c.left, c.right};
                    legs.insert(legs.end(), t.legs.begin() + 1, t.legs.end());
                    next[legs] += t.coef * c.coef;
                }
            }
            cur.clear();
            for (auto& [legs, c] : next)
                if (sgn(c) != 0) cur.push_back(LegTerm{legs, c});
        }
        terms_[b] = std::move(cur);
    }
}

namespace {

std::string name_of(const HopfAlgebraData& h, std::initializer_list<std::uint32_t> idx) {
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) s += ",";
        s += h.basis[i];
        first = false;
    }
    return s + ")";
}

bool same(const SparseVec& a, const SparseVec& b) { return axpy(a, -1, b).empty(); }

// (f (x) g) applied to a vector of H (x) H, as a vector of H (x) H.
SparseVec apply_pair(const HopfAlgebraData& h, const SparseVec& v, const SparseMatrix* f, const SparseMatrix* g) {
    Index d = h.dim();
    SparseVec out;
    for (const auto& e : v) {
        SparseVec l = unit_vector(e.index / d), r = unit_vector(e.index % d);
        if (f) l = f->apply(l);
        if (g) r = g->apply(r);
        for (const auto& x : l)
            for (const auto& y : r) out.push_back(Entry{x.index * d + y.index, e.value * x.value * y.value});
    }
    normalize(out);
    return out;
}

SparseVec multiply_pairs(const HopfAlgebraData& h, const SparseVec& v) {
    Index d = h.dim();
    SparseVec out;
    for (const auto& e : v)
        for (const auto& z : h.product(static_cast<std::uint32_t>(e.index / d), static_cast<std::uint32_t>(e.index % d)))
            out.push_back(Entry{z.index, e.value * z.value});
    normalize(out);
    return out;
}

}  // namespace

CheckReport verify_hopf(const HopfAlgebraData& h) {
    CheckReport rep;
    std::uint32_t d = h.dim();
    Index d2 = Index(d) * d;

    std::string bad;
    if (h.mult.size() != d2 || h.comult.size() != d || h.counit.size() != d || h.antipode.rows() != d ||
        h.antipode.cols() != d)
        bad = "structure tensors have inconsistent sizes";
    rep.add("shape", bad.empty(), bad);
    if (!bad.empty()) return rep;

    bad.clear();
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i)
        for (std::uint32_t j = 0; j < d && bad.empty(); ++j)
            for (std::uint32_t k = 0; k < d && bad.empty(); ++k)
                if (!same(h.multiply(h.product(i, j), unit_vector(k)), h.multiply(unit_vector(i), h.product(j, k))))
                    bad = name_of(h, {i, j, k});
    rep.add("associativity", bad.empty(), bad);

    bad.clear();
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i) {
        SparseVec e = unit_vector(i);
        if (!same(h.multiply(h.unit, e), e) || !same(h.multiply(e, h.unit), e)) bad = name_of(h, {i});
    }
    rep.add("unit", bad.empty(), bad);

    bad.clear();
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i) {
        SparseVec left, right;  // (Delta (x) id) Delta and (id (x) Delta) Delta in H^{(x)3}
        for (const auto& t : h.comult[i]) {
            for (const auto& s : h.comult[t.left])
                left.push_back(Entry{(Index(s.left) * d + s.right) * d + t.right, t.coef * s.coef});
            for (const auto& s : h.comult[t.right])
                right.push_back(Entry{(Index(t.left) * d + s.left) * d + s.right, t.coef * s.coef});
        }
        normalize(left);
        normalize(right);
        if (!same(left, right)) bad = name_of(h, {i});
    }
    rep.add("coassociativity", bad.empty(), bad);

    bad.clear();
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i) {
        SparseVec l, r;
        for (const auto& t : h.comult[i]) {
            l.push_back(Entry{t.right, t.coef * h.counit[t.left]});
            r.push_back(Entry{t.left, t.coef * h.counit[t.right]});
        }
        normalize(l);
        normalize(r);
        if (!same(l, unit_vector(i)) || !same(r, unit_vector(i))) bad = name_of(h, {i});
    }
    rep.add("counit", bad.empty(), bad);

    // Delta is an algebra map: Delta(xy) = Delta(x) Delta(y), Delta(1) = 1 (x) 1.
    bad.clear();
    auto mult2 = [&](const SparseVec& a, const SparseVec& b) {
        SparseVec out;
        for (const auto& x : a)
            for (const auto& y : b) {
                const auto& l = h.product(static_cast<std::uint32_t>(x.index / d), static_cast<std::uint32_t>(y.index / d));
                const auto& r = h.product(static_cast<std::uint32_t>(x.index % d), static_cast<std::uint32_t>(y.index % d));
                for (const auto& p : l)
                    for (const auto& q : r) out.push_back(Entry{p.index * d + q.index, x.value * y.value * p.value * q.value});
            }
        normalize(out);
        return out;
    };
    if (!same(h.coproduct(h.unit), tensor(h.unit, h.unit, d))) bad = "Delta(1)";
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i)
        for (std::uint32_t j = 0; j < d && bad.empty(); ++j)
            if (!same(h.coproduct(h.product(i, j)), mult2(h.coproduct(unit_vector(i)), h.coproduct(unit_vector(j)))))
                bad = name_of(h, {i, j});
    rep.add("comultiplication is multiplicative", bad.empty(), bad);

    bad.clear();
    if (h.apply_counit(h.unit) != 1) bad = "counit(1) != 1";
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i)
        for (std::uint32_t j = 0; j < d && bad.empty(); ++j)
            if (h.apply_counit(h.product(i, j)) != h.counit[i] * h.counit[j]) bad = name_of(h, {i, j});
    rep.add("counit is multiplicative", bad.empty(), bad);

    bad.clear();
    for (std::uint32_t i = 0; i < d && bad.empty(); ++i) {
        SparseVec delta = h.coproduct(unit_vector(i));
        SparseVec target = scaled(h.unit, h.counit[i]);
        if (!same(multiply_pairs(h, apply_pair(h, delta, &h.antipode, nullptr)), target) ||
            !same(multiply_pairs(h, apply_pair(h, delta, nullptr, &h.antipode)), target))
            bad = name_of(h, {i});
    }
    rep.add("antipode", bad.empty(), bad);
    return rep;
}

HopfPtr group_algebra(const FiniteGroupData& g) {
    std::string err = validate_group(g);
    if (!err.empty()) throw InputError("invalid group: " + err);
    auto h = std::make_shared<HopfAlgebraData>();
    std::uint32_t n = g.order();
    h->basis = g.names;
    h->mult.resize(Index(n) * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) h->mult[x * n + y] = unit_vector(g.mul(x, y));
    h->unit = unit_vector(g.identity());
    h->comult.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) h->comult[x] = {CoproductTerm{x, x, 1}};
    h->counit.assign(n, 1);
    std::vector<SparseVec> s;
    for (std::uint32_t x = 0; x < n; ++x) s.push_back(unit_vector(g.inverse(x)));
    h->antipode = SparseMatrix::from_columns(n, s);
    h->group = std::make_shared<FiniteGroupData>(g);
    return h;
}

HopfPtr op_cop(const HopfAlgebraData& h) {
    auto o = std::make_shared<HopfAlgebraData>(h);
    std::uint32_t d = h.dim();
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) o->mult[i * d + j] = h.product(j, i);
    for (auto& terms : o->comult)
        for (auto& t : terms) std::swap(t.left, t.right);
    o->group.reset();
    return o;
}

namespace {

// e_i S(e_b) for all i, b.
std::vector<SparseVec> times_antipode_table(const HopfAlgebraData& h) {
    std::uint32_t d = h.dim();
    std::vector<SparseVec> t(Index(d) * d);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t b = 0; b < d; ++b) t[i * d + b] = h.multiply(unit_vector(i), h.antipode.column(b));
    return t;
}

}  // namespace

std::vector<SparseMatrix> diagonal_power(const HopfAlgebraData& h, int n) {
    std::uint32_t d = h.dim();
    CoproductTable legs(h, n);
    auto radices = power_radices(d, n, d);
    Index size = ipow(d, n + 1);
    std::vector<SparseMatrix> out;
    for (std::uint32_t b = 0; b < d; ++b) {
        out.push_back(assemble(size, size, [&](Index col) {
            auto u = unpack(col, radices);
            SparseVec v;
            for (const auto& t : legs(b)) {
                std::vector<const SparseVec*> f;
                for (int s = 0; s <= n; ++s) f.push_back(&h.product(u[s], t.legs[s]));
                add_tensor(v, t.coef, f, radices);
            }
            return v;
        }));
    }
    return out;
}

CheckReport verify_right_module(const HopfAlgebraData& h, const std::vector<SparseMatrix>& action) {
    CheckReport rep;
    std::uint32_t d = h.dim();
    auto combo = [&](const SparseVec& x) {
        SparseMatrix m(action[0].rows(), action[0].cols());
        for (const auto& e : x) m = m + action[e.index].scaled(e.value);
        return m;
    };
    std::string bad;
    for (std::uint32_t a = 0; a < d && bad.empty(); ++a)
        for (std::uint32_t b = 0; b < d && bad.empty(); ++b)
            if (!(action[b] * action[a] == combo(h.product(a, b)))) bad = "(" + h.basis[a] + "," + h.basis[b] + ")";
    rep.add("right action associativity", bad.empty(), bad);
    rep.add("right action unit", combo(h.unit) == SparseMatrix::identity(action[0].rows()));
    return rep;
}

HopfModuleIso hopf_module_phi(const HopfAlgebraData& h, int n) {
    std::uint32_t d = h.dim();
    CoproductTable legs(h, n);
    auto radices = power_radices(d, n, d);
    Index size = ipow(d, n + 1);
    auto hs = times_antipode_table(h);
    HopfModuleIso iso;
    iso.forward = assemble(size, size, [&](Index col) {
        auto u = unpack(col, radices);
        SparseVec v;
        for (const auto& t : legs(u[n])) {
            std::vector<const SparseVec*> f;
            for (int s = 0; s < n; ++s) f.push_back(&h.product(u[s], t.legs[s]));
            SparseVec last = unit_vector(t.legs[n]);
            f.push_back(&last);
            add_tensor(v, t.coef, f, radices);
        }
        return v;
    });
    iso.backward = assemble(size, size, [&](Index col) {
        auto u = unpack(col, radices);
        SparseVec v;
        for (const auto& t : legs(u[n])) {
            std::vector<const SparseVec*> f;
            for (int s = 0; s < n; ++s) f.push_back(&hs[u[s] * d + t.legs[n - 1 - s]]);
            SparseVec last = unit_vector(t.legs[n]);
            f.push_back(&last);
            add_tensor(v, t.coef, f, radices);
        }
        return v;
    });
    return iso;
}

HopfSubalgebraData hopf_subalgebra(const HopfPtr& parent, const std::vector<SparseVec>& spanning) {
    const HopfAlgebraData& h = *parent;
    std::uint32_t d = h.dim();
    Subspace sp(d, spanning);
    auto sub = std::make_shared<HopfAlgebraData>();
    std::uint32_t m = static_cast<std::uint32_t>(sp.dim());
    const SparseMatrix& inc = sp.inclusion();
    auto coords = [&](const SparseVec& v, const char* what) {
        auto c = sp.coordinates(v);
        if (!c) throw AxiomViolation(std::string("span is not closed under ") + what);
        return *c;
    };
    for (std::uint32_t i = 0; i < m; ++i) {
        const SparseVec& col = inc.column(i);
        sub->basis.push_back(col.size() == 1 && col[0].value == 1 ? h.basis[col[0].index] : "b" + std::to_string(i));
    }
    sub->mult.resize(Index(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            sub->mult[i * m + j] = coords(h.multiply(inc.column(i), inc.column(j)), "multiplication");
    sub->unit = coords(h.unit, "the unit");
    sub->comult.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        SparseVec w = h.coproduct(inc.column(i));
        SparseVec rebuilt;
        for (std::uint32_t a = 0; a < m; ++a)
            for (std::uint32_t b = 0; b < m; ++b) {
                Rational c = coefficient(w, sp.pivots()[a] * d + sp.pivots()[b]);
                if (sgn(c) == 0) continue;
                sub->comult[i].push_back(CoproductTerm{a, b, c});
                for (const auto& x : inc.column(a))
                    for (const auto& y : inc.column(b)) rebuilt.push_back(Entry{x.index * d + y.index, c * x.value * y.value});
            }
        normalize(rebuilt);
        if (!axpy(rebuilt, -1, w).empty()) throw AxiomViolation("span is not closed under comultiplication");
    }
    for (std::uint32_t i = 0; i < m; ++i) sub->counit.push_back(h.apply_counit(inc.column(i)));
    std::vector<SparseVec> s;
    for (std::uint32_t i = 0; i < m; ++i) s.push_back(coords(h.apply_antipode(inc.column(i)), "the antipode"));
    sub->antipode = SparseMatrix::from_columns(m, s);
    return HopfSubalgebraData{sub, parent, inc};
}

HopfSubalgebraData subgroup_algebra(const HopfPtr& parent, const std::vector<std::uint32_t>& elements) {
    if (!parent->group) throw InputError("subgroup algebra needs a group algebra");
    SubgroupData sg = subgroup(*parent->group, elements);
    HopfPtr sub = group_algebra(sg.group);
    std::vector<SparseVec> cols;
    for (auto x : sg.embedding) cols.push_back(unit_vector(x));
    return HopfSubalgebraData{sub, parent, SparseMatrix::from_columns(parent->dim(), cols)};
}

HopfSubalgebraData ground_field_subalgebra(const HopfPtr& parent) { return hopf_subalgebra(parent, {parent->unit}); }

NormalQuotientData quotient_by_normal(const HopfSubalgebraData& k) {
    const HopfAlgebraData& h = *k.parent;
    const HopfAlgebraData& kk = *k.sub;
    std::uint32_t d = h.dim();
    // Augmentation ideal of K, as vectors of H.
    std::vector<SparseVec> kplus;
    {
        std::vector<SparseVec> eps_cols;
        for (std::uint32_t i = 0; i < kk.dim(); ++i) eps_cols.push_back(unit_vector(0, kk.counit[i]));
        for (const auto& v : rank_kernel(SparseMatrix::from_columns(1, eps_cols)).kernel)
            kplus.push_back(k.inclusion.apply(v));
    }
    std::vector<SparseVec> left, right;
    for (const auto& x : kplus)
        for (std::uint32_t i = 0; i < d; ++i) {
            left.push_back(h.multiply(x, unit_vector(i)));
            right.push_back(h.multiply(unit_vector(i), x));
        }
    std::vector<SparseVec> both = left;
    both.insert(both.end(), right.begin(), right.end());
    NormalQuotientData out;
    out.dim_left = Subspace(d, left).dim();
    out.dim_right = Subspace(d, right).dim();
    out.dim_sum = Subspace(d, both).dim();
    out.normal = out.dim_left == out.dim_right && out.dim_left == out.dim_sum;
    if (!out.normal) return out;

    out.carrier = Quotient(d, left);
    const Quotient& q = out.carrier;
    out.projection = q.projection();
    std::uint32_t m = static_cast<std::uint32_t>(q.dim());
    auto hb = std::make_shared<HopfAlgebraData>();
    for (std::uint32_t i = 0; i < m; ++i) hb->basis.push_back("[" + h.basis[q.representative(i)] + "]");
    hb->mult.resize(Index(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            hb->mult[i * m + j] = q.project(h.product(static_cast<std::uint32_t>(q.representative(i)),
                                                      static_cast<std::uint32_t>(q.representative(j))));
    hb->unit = q.project(h.unit);
    auto project2 = [&](const SparseVec& w) {
        SparseVec out2;
        for (const auto& e : w) {
            SparseVec a = q.project_basis(e.index / d), b = q.project_basis(e.index % d);
            for (const auto& x : a)
                for (const auto& y : b) out2.push_back(Entry{x.index * m + y.index, e.value * x.value * y.value});
        }
        normalize(out2);
        return out2;
    };
    for (const auto& r : q.relator_basis()) {
        if (!project2(h.coproduct(r)).empty()) throw AxiomViolation("K+H is not a coideal");
        if (sgn(h.apply_counit(r)) != 0) throw AxiomViolation("counit does not vanish on K+H");
        if (!q.project(h.apply_antipode(r)).empty()) throw AxiomViolation("K+H is not stable under the antipode");
    }
    hb->comult.resize(m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (const auto& e : project2(h.coproduct(unit_vector(q.representative(i)))))
            hb->comult[i].push_back(CoproductTerm{static_cast<std::uint32_t>(e.index / m),
                                                  static_cast<std::uint32_t>(e.index % m), e.value});
    for (std::uint32_t i = 0; i < m; ++i) hb->counit.push_back(h.counit[q.representative(i)]);
    std::vector<SparseVec> s;
    for (std::uint32_t i = 0; i < m; ++i) s.push_back(q.project(h.antipode.column(q.representative(i))));
    hb->antipode = SparseMatrix::from_columns(m, s);

    // Quotients of group algebras by normal subgroups are group algebras.
    if (h.group) {
        const FiniteGroupData& g = *h.group;
        std::vector<std::int64_t> image(g.order(), -1);
        bool ok = true;
        for (std::uint32_t x = 0; x < g.order() && ok; ++x) {
            SparseVec p = q.project_basis(x);
            if (p.size() == 1 && p[0].value == 1)
                image[x] = static_cast<std::int64_t>(p[0].index);
            else
                ok = false;
        }
        if (ok) {
            FiniteGroupData qg;
            qg.names = hb->basis;
            qg.table.assign(Index(m) * m, 0);
            for (std::uint32_t x = 0; x < g.order(); ++x)
                for (std::uint32_t y = 0; y < g.order(); ++y)
                    qg.table[image[x] * m + image[y]] = static_cast<std::uint32_t>(image[g.mul(x, y)]);
            if (validate_group(qg).empty()) hb->group = std::make_shared<FiniteGroupData>(qg);
        }
    }
    out.quotient = hb;
    return out;
}

bool is_grouplike(const HopfAlgebraData& h, const SparseVec& v) {
    if (v.empty()) return false;
    return axpy(h.coproduct(v), -1, tensor(v, v, h.dim())).empty();
}

std::optional<SparseVec> separability_idempotent(const HopfAlgebraData& k) {
    std::uint32_t d = k.dim();
    Index d2 = Index(d) * d;
    // Unknown e = sum x_{ab} e_a (x) e_b.  Equations: (e_k (x) 1) e - e (1 (x) e_k) = 0 for every k,
    // then m(e) = 1.
    std::vector<SparseVec> cols(d2);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) {
            SparseVec col;
            for (std::uint32_t kk = 0; kk < d; ++kk) {
                for (const auto& x : k.product(kk, a)) col.push_back(Entry{kk * d2 + x.index * d + b, x.value});
                for (const auto& y : k.product(b, kk)) col.push_back(Entry{kk * d2 + Index(a) * d + y.index, -y.value});
            }
            for (const auto& z : k.product(a, b)) col.push_back(Entry{Index(d) * d2 + z.index, z.value});
            cols[a * d + b] = col;
        }
    SparseMatrix sys = SparseMatrix::from_columns(Index(d) * d2 + d, cols);
    SparseVec rhs;
    for (const auto& u : k.unit) rhs.push_back(Entry{Index(d) * d2 + u.index, u.value});
    return solve(sys, rhs);
}

}  // namespace hopfcyc
