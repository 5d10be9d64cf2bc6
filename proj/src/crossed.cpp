#include "hopfcyc/crossed.hpp"

#include "hopfcyc/tensor.hpp"

#include <functional>

namespace hopfcyc {

namespace {

bool same(const SparseVec& a, const SparseVec& b) { return axpy(a, -1, b).empty(); }

std::string pair_name(const HopfAlgebraData& h, std::uint32_t x, const ModuleData& m, Index y) {
    return "(" + h.basis[x] + ", " + m.label(y) + ")";
}

// e_a v S(e_c)
SparseVec sandwich(const HopfAlgebraData& h, std::uint32_t a, const SparseVec& v, std::uint32_t c) {
    return h.multiply(h.multiply(unit_vector(a), v), h.antipode.column(c));
}

// Coordinates of w in (W (x) H) where W is a subspace of the ambient space;
// w is indexed ambient*dH + h.
std::optional<SparseVec> coords_tensor_h(const Subspace& w, const SparseVec& v, Index dh) {
    std::map<Index, SparseVec> parts;
    for (const auto& e : v) parts[e.index % dh].push_back(Entry{e.index / dh, e.value});
    SparseVec out;
    for (auto& [h, part] : parts) {
        normalize(part);
        auto c = w.coordinates(part);
        if (!c) return std::nullopt;
        for (const auto& e : *c) out.push_back(Entry{e.index * dh + h, e.value});
    }
    normalize(out);
    return out;
}

SparseVec project_tensor_h(const Quotient& q, const SparseVec& v, Index dh) {
    SparseVec out;
    for (const auto& e : v)
        for (const auto& p : q.project_basis(e.index / dh)) out.push_back(Entry{p.index * dh + e.index % dh, e.value * p.value});
    normalize(out);
    return out;
}

using AmbientAction = std::function<SparseVec(std::uint32_t h, Index basis)>;
using AmbientCoaction = std::function<SparseVec(Index basis)>;

SparseVec extend(const std::function<SparseVec(Index)>& f, const SparseVec& v) {
    SparseVec out;
    for (const auto& e : v)
        for (const auto& x : f(e.index)) out.push_back(Entry{x.index, e.value * x.value});
    normalize(out);
    return out;
}

CrossedModuleData descend_to_quotient(const HopfPtr& base, const Quotient& q, const AmbientAction& act,
                                      const AmbientCoaction* coact, const std::vector<std::string>& ambient_labels) {
    const HopfAlgebraData& h = *base;
    Index dh = h.dim();
    for (const auto& r : q.relator_basis()) {
        for (std::uint32_t x = 0; x < h.dim(); ++x)
            if (!q.project(extend([&](Index b) { return act(x, b); }, r)).empty())
                throw AxiomViolation("relator span is not stable under the action of " + h.basis[x]);
        if (coact && !project_tensor_h(q, extend(*coact, r), dh).empty())
            throw AxiomViolation("relator span is not a subcomodule");
    }
    CrossedModuleData out;
    out.base = base;
    out.dim = static_cast<std::uint32_t>(q.dim());
    out.action.resize(Index(h.dim()) * out.dim);
    for (std::uint32_t x = 0; x < h.dim(); ++x)
        for (std::uint32_t i = 0; i < out.dim; ++i) out.action[x * out.dim + i] = q.project(act(x, q.representative(i)));
    if (coact)
        for (std::uint32_t i = 0; i < out.dim; ++i)
            out.coaction.push_back(project_tensor_h(q, (*coact)(q.representative(i)), dh));
    for (std::uint32_t i = 0; i < out.dim; ++i) {
        Index r = q.representative(i);
        out.labels.push_back("[" + (r < ambient_labels.size() ? ambient_labels[r] : std::to_string(r)) + "]");
    }
    return out;
}

CrossedModuleData restrict_to_subspace(const HopfPtr& base, const Subspace& w, const AmbientAction& act,
                                       const AmbientCoaction* coact) {
    const HopfAlgebraData& h = *base;
    Index dh = h.dim();
    CrossedModuleData out;
    out.base = base;
    out.dim = static_cast<std::uint32_t>(w.dim());
    out.action.resize(Index(h.dim()) * out.dim);
    for (std::uint32_t x = 0; x < h.dim(); ++x)
        for (std::uint32_t i = 0; i < out.dim; ++i) {
            auto c = w.coordinates(extend([&](Index b) { return act(x, b); }, w.inclusion().column(i)));
            if (!c) throw AxiomViolation("subspace is not stable under the action of " + h.basis[x]);
            out.action[x * out.dim + i] = *c;
        }
    if (coact)
        for (std::uint32_t i = 0; i < out.dim; ++i) {
            auto c = coords_tensor_h(w, extend(*coact, w.inclusion().column(i)), dh);
            if (!c) throw AxiomViolation("subspace is not a subcomodule");
            out.coaction.push_back(*c);
        }
    return out;
}

}  // namespace

SparseVec ModuleData::act(std::uint32_t h, const SparseVec& m) const {
    SparseVec out;
    for (const auto& e : m)
        for (const auto& x : action[h * dim + e.index]) out.push_back(Entry{x.index, e.value * x.value});
    normalize(out);
    return out;
}

SparseVec ModuleData::act(const SparseVec& h, const SparseVec& m) const {
    SparseVec out;
    for (const auto& e : h) out = axpy(out, e.value, act(static_cast<std::uint32_t>(e.index), m));
    return out;
}

SparseVec CrossedModuleData::coact(const SparseVec& m) const {
    SparseVec out;
    for (const auto& e : m)
        for (const auto& x : coaction[e.index]) out.push_back(Entry{x.index, e.value * x.value});
    normalize(out);
    return out;
}

CheckReport verify_module(const ModuleData& m) {
    CheckReport rep;
    const HopfAlgebraData& h = *m.base;
    bool shape = m.action.size() == Index(h.dim()) * m.dim;
    rep.add("module shape", shape, shape ? "" : "action table has the wrong size");
    if (!shape) return rep;
    std::string bad;
    for (std::uint32_t a = 0; a < h.dim() && bad.empty(); ++a)
        for (std::uint32_t b = 0; b < h.dim() && bad.empty(); ++b)
            for (std::uint32_t x = 0; x < m.dim && bad.empty(); ++x)
                if (!same(m.act(h.product(a, b), unit_vector(x)), m.act(a, m.act(b, unit_vector(x)))))
                    bad = "(" + h.basis[a] + ", " + h.basis[b] + ", " + m.label(x) + ")";
    rep.add("module associativity", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t x = 0; x < m.dim && bad.empty(); ++x)
        if (!same(m.act(h.unit, unit_vector(x)), unit_vector(x))) bad = m.label(x);
    rep.add("module unit", bad.empty(), bad);
    return rep;
}

CheckReport verify_comodule(const ComoduleData& m) {
    CheckReport rep;
    const HopfAlgebraData& h = *m.base;
    Index dh = h.dim();
    bool shape = m.coaction.size() == m.dim;
    rep.add("comodule shape", shape, shape ? "" : "coaction table has the wrong size");
    if (!shape) return rep;
    std::string bad;
    for (std::uint32_t x = 0; x < m.dim && bad.empty(); ++x) {
        SparseVec left, right;
        for (const auto& e : m.coaction[x]) {
            Index mp = e.index / dh, hh = e.index % dh;
            for (const auto& f : m.coaction[mp]) left.push_back(Entry{f.index * dh + hh, e.value * f.value});
            for (const auto& t : h.comult[hh])
                right.push_back(Entry{(mp * dh + t.left) * dh + t.right, e.value * t.coef});
        }
        normalize(left);
        normalize(right);
        if (!same(left, right)) bad = "m" + std::to_string(x);
    }
    rep.add("comodule coassociativity", bad.empty(), bad);
    bad.clear();
    for (std::uint32_t x = 0; x < m.dim && bad.empty(); ++x) {
        SparseVec v;
        for (const auto& e : m.coaction[x]) v.push_back(Entry{e.index / dh, e.value * h.counit[e.index % dh]});
        normalize(v);
        if (!same(v, unit_vector(x))) bad = "m" + std::to_string(x);
    }
    rep.add("comodule counit", bad.empty(), bad);
    return rep;
}

CheckReport verify_crossed(const CrossedModuleData& m) {
    CheckReport rep = verify_module(m);
    rep.append(verify_comodule(m.comodule()));
    if (!rep.ok()) return rep;
    const HopfAlgebraData& h = *m.base;
    Index dh = h.dim();
    CoproductTable legs(h, 2);
    std::string bad;
    for (std::uint32_t x = 0; x < h.dim() && bad.empty(); ++x)
        for (std::uint32_t y = 0; y < m.dim && bad.empty(); ++y) {
            SparseVec lhs = m.coact(m.act(x, unit_vector(y)));
            SparseVec rhs;
            for (const auto& t : legs(x))
                for (const auto& c : m.coaction[y]) {
                    SparseVec left = m.act(t.legs[1], unit_vector(c.index / dh));
                    SparseVec right = sandwich(h, t.legs[2], unit_vector(c.index % dh), t.legs[0]);
                    for (const auto& a : left)
                        for (const auto& b : right)
                            rhs.push_back(Entry{a.index * dh + b.index, t.coef * c.value * a.value * b.value});
                }
            normalize(rhs);
            if (!same(lhs, rhs)) bad = pair_name(h, x, m, y);
        }
    rep.add("crossed condition", bad.empty(), bad);
    return rep;
}

CheckReport verify_modular(const CrossedModuleData& m) {
    CheckReport rep;
    Index dh = m.base->dim();
    SparseMatrix u = u_map(m);
    std::string bad;
    for (std::uint32_t y = 0; y < m.dim && bad.empty(); ++y)
        if (!same(u.column(y), unit_vector(y))) bad = m.label(y);
    (void)dh;
    rep.add("modular condition", bad.empty(), bad);
    return rep;
}

SparseMatrix u_map(const CrossedModuleData& m) {
    Index dh = m.base->dim();
    return assemble_serial(m.dim, m.dim, [&](Index y) {
        SparseVec out;
        for (const auto& c : m.coaction[y])
            out = axpy(out, c.value, m.act(static_cast<std::uint32_t>(c.index % dh), unit_vector(c.index / dh)));
        return out;
    });
}

CrossedModuleData adjoint_module(const HopfPtr& hp) {
    const HopfAlgebraData& h = *hp;
    Index d = h.dim();
    CrossedModuleData m;
    m.base = hp;
    m.dim = h.dim();
    m.labels = h.basis;
    m.action.resize(d * d);
    for (std::uint32_t x = 0; x < d; ++x)
        for (std::uint32_t y = 0; y < d; ++y) {
            SparseVec v;
            for (const auto& t : h.comult[x]) v = axpy(v, t.coef, sandwich(h, t.right, unit_vector(y), t.left));
            m.action[x * d + y] = v;
        }
    for (std::uint32_t y = 0; y < d; ++y) m.coaction.push_back(h.coproduct(unit_vector(y)));
    return m;
}

CrossedModuleData coadjoint_module(const HopfPtr& hp) {
    const HopfAlgebraData& h = *hp;
    Index d = h.dim();
    CrossedModuleData m;
    m.base = hp;
    m.dim = h.dim();
    m.labels = h.basis;
    m.action.resize(d * d);
    for (std::uint32_t x = 0; x < d; ++x)
        for (std::uint32_t y = 0; y < d; ++y) m.action[x * d + y] = h.product(x, y);
    CoproductTable legs(h, 2);
    for (std::uint32_t y = 0; y < d; ++y) {
        SparseVec v;
        for (const auto& t : legs(y)) {
            SparseVec right = h.multiply(unit_vector(t.legs[2]), h.antipode.column(t.legs[0]));
            for (const auto& b : right) v.push_back(Entry{Index(t.legs[1]) * d + b.index, t.coef * b.value});
        }
        normalize(v);
        m.coaction.push_back(v);
    }
    return m;
}

CrossedModuleData character_module(const HopfPtr& hp, const std::vector<Rational>& character, const SparseVec& grouplike) {
    const HopfAlgebraData& h = *hp;
    CrossedModuleData m;
    m.base = hp;
    m.dim = 1;
    m.labels = {"1"};
    for (std::uint32_t x = 0; x < h.dim(); ++x) m.action.push_back(unit_vector(0, character.at(x)));
    m.coaction.push_back(grouplike);
    return m;
}

CrossedModuleData trivial_module(const HopfPtr& h) { return character_module(h, h->counit, h->unit); }

CrossedModuleData sign_module(const HopfPtr& h) {
    if (!h->group || h->group->sign.empty()) throw InputError("sign module needs a group with a sign character");
    std::vector<Rational> chi;
    for (int s : h->group->sign) chi.push_back(s);
    return character_module(h, chi, h->unit);
}

std::optional<CrossedModuleData> builtin_module(const HopfPtr& h, const std::string& name) {
    if (name == "adjoint" || name == "ad") return adjoint_module(h);
    if (name == "coadjoint" || name == "coad") return coadjoint_module(h);
    if (name == "trivial") return trivial_module(h);
    if (name == "sign") return sign_module(h);
    return std::nullopt;
}

ModularPairReport modular_pair_module(const HopfPtr& hp, const SparseVec& sigma, const std::vector<Rational>& delta) {
    const HopfAlgebraData& h = *hp;
    Index d = h.dim();
    ModularPairReport r;
    bool character = delta.size() == d;
    if (character) {
        SparseVec dv;
        for (std::uint32_t x = 0; x < d; ++x) dv.push_back(Entry{x, delta[x]});
        normalize(dv);
        auto chi = [&](const SparseVec& v) {
            Rational s = 0;
            for (const auto& e : v) s += e.value * delta[e.index];
            return s;
        };
        character = chi(h.unit) == 1;
        for (std::uint32_t a = 0; a < d && character; ++a)
            for (std::uint32_t b = 0; b < d && character; ++b) character = chi(h.product(a, b)) == delta[a] * delta[b];
        Rational ds = chi(sigma);
        r.pair_data_valid = character && is_grouplike(h, sigma) && ds == 1;
    }
    if (!character) return r;
    HopfPtr oc = op_cop(h);
    r.module = character_module(oc, delta, sigma);
    r.crossed = verify_crossed(r.module).ok();
    r.modular = r.crossed && verify_modular(r.module).ok();
    // S_delta(h) = delta(h(1)) S(h(2)); test (L_{sigma^{-1}} S_delta)^2 = Id.
    SparseVec sigma_inv = h.apply_antipode(sigma);
    SparseMatrix twisted = assemble_serial(d, d, [&](Index x) {
        SparseVec v;
        for (const auto& t : h.comult[x]) v = axpy(v, t.coef * delta[t.left], h.antipode.column(t.right));
        return h.multiply(sigma_inv, v);
    });
    r.twisted_antipode_involutive = twisted * twisted == SparseMatrix::identity(d);
    return r;
}

bool antipode_is_involutive(const HopfAlgebraData& h) {
    return h.antipode * h.antipode == SparseMatrix::identity(h.dim());
}

CheckReport verify_yetter_drinfeld(const YetterDrinfeldData& y) {
    ModuleData mod{y.base, y.dim, y.action, {}};
    CheckReport rep = verify_module(mod);
    const HopfAlgebraData& h = *y.base;
    Index d = h.dim(), n = y.dim;
    auto lam = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& e : v)
            for (const auto& x : y.left_coaction[e.index]) out.push_back(Entry{x.index, e.value * x.value});
        normalize(out);
        return out;
    };
    std::string bad;
    for (std::uint32_t m = 0; m < n && bad.empty(); ++m) {
        SparseVec left, right;  // in H (x) H (x) M
        for (const auto& e : y.left_coaction[m]) {
            Index hh = e.index / n, mp = e.index % n;
            for (const auto& t : h.comult[hh]) left.push_back(Entry{(Index(t.left) * d + t.right) * n + mp, e.value * t.coef});
            for (const auto& f : y.left_coaction[mp]) right.push_back(Entry{hh * d * n + f.index, e.value * f.value});
        }
        normalize(left);
        normalize(right);
        SparseVec c;
        for (const auto& e : y.left_coaction[m]) c.push_back(Entry{e.index % n, e.value * h.counit[e.index / n]});
        normalize(c);
        if (!same(left, right) || !same(c, unit_vector(m))) bad = "m" + std::to_string(m);
    }
    rep.add("left comodule", bad.empty(), bad);
    bad.clear();
    CoproductTable legs(h, 2);
    for (std::uint32_t x = 0; x < d && bad.empty(); ++x)
        for (std::uint32_t m = 0; m < n && bad.empty(); ++m) {
            SparseVec lhs = lam(mod.act(x, unit_vector(m)));
            SparseVec rhs;
            for (const auto& t : legs(x))
                for (const auto& e : y.left_coaction[m]) {
                    SparseVec hpart = sandwich(h, t.legs[0], unit_vector(e.index / n), t.legs[2]);
                    SparseVec mpart = mod.act(t.legs[1], unit_vector(e.index % n));
                    for (const auto& a : hpart)
                        for (const auto& b : mpart) rhs.push_back(Entry{a.index * n + b.index, t.coef * e.value * a.value * b.value});
                }
            normalize(rhs);
            if (!same(lhs, rhs)) bad = "(" + h.basis[x] + ", m" + std::to_string(m) + ")";
        }
    rep.add("Yetter-Drinfeld condition", bad.empty(), bad);
    return rep;
}

CrossedModuleData from_yetter_drinfeld(const YetterDrinfeldData& y) {
    if (!antipode_is_involutive(*y.base)) throw AxiomViolation("antipode is not involutive");
    const HopfAlgebraData& h = *y.base;
    Index d = h.dim(), n = y.dim;
    CrossedModuleData m;
    m.base = y.base;
    m.dim = y.dim;
    m.action = y.action;
    for (std::uint32_t x = 0; x < n; ++x) {
        SparseVec v;
        for (const auto& e : y.left_coaction[x])
            for (const auto& s : h.antipode.column(e.index / n)) v.push_back(Entry{(e.index % n) * d + s.index, e.value * s.value});
        normalize(v);
        m.coaction.push_back(v);
    }
    return m;
}

YetterDrinfeldData to_yetter_drinfeld(const CrossedModuleData& m) {
    if (!antipode_is_involutive(*m.base)) throw AxiomViolation("antipode is not involutive");
    const HopfAlgebraData& h = *m.base;
    Index d = h.dim(), n = m.dim;
    YetterDrinfeldData y{m.base, m.dim, m.action, {}};
    for (std::uint32_t x = 0; x < n; ++x) {
        SparseVec v;
        for (const auto& e : m.coaction[x])
            for (const auto& s : h.antipode.column(e.index % d)) v.push_back(Entry{s.index * n + e.index / d, e.value * s.value});
        normalize(v);
        y.left_coaction.push_back(v);
    }
    return y;
}

CrossedModuleData crossed_submodule(const CrossedModuleData& m, const Subspace& w) {
    AmbientAction act = [&](std::uint32_t h, Index b) { return m.action[h * m.dim + b]; };
    AmbientCoaction coact = [&](Index b) { return m.coaction[b]; };
    return restrict_to_subspace(m.base, w, act, m.coaction.empty() ? nullptr : &coact);
}

CrossedModuleData crossed_quotient(const CrossedModuleData& m, const Quotient& q) {
    AmbientAction act = [&](std::uint32_t h, Index b) { return m.action[h * m.dim + b]; };
    AmbientCoaction coact = [&](Index b) { return m.coaction[b]; };
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < m.dim; ++i) labels.push_back(m.label(i));
    return descend_to_quotient(m.base, q, act, m.coaction.empty() ? nullptr : &coact, labels);
}

ModuleData module_quotient(const ModuleData& m, const Quotient& q) {
    AmbientAction act = [&](std::uint32_t h, Index b) { return m.action[h * m.dim + b]; };
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < m.dim; ++i) labels.push_back(m.label(i));
    return descend_to_quotient(m.base, q, act, nullptr, labels);
}

bool is_module_map(const ModuleData& m, const ModuleData& n, const SparseMatrix& f) {
    for (std::uint32_t x = 0; x < m.base->dim(); ++x)
        for (std::uint32_t y = 0; y < m.dim; ++y)
            if (!same(f.apply(m.act(x, unit_vector(y))), n.act(x, f.column(y)))) return false;
    return true;
}

bool is_comodule_map(const ComoduleData& m, const ComoduleData& n, const SparseMatrix& f) {
    Index dh = m.base->dim();
    for (std::uint32_t y = 0; y < m.dim; ++y) {
        SparseVec lhs;
        for (const auto& e : m.coaction[y])
            for (const auto& x : f.column(e.index / dh)) lhs.push_back(Entry{x.index * dh + e.index % dh, e.value * x.value});
        normalize(lhs);
        SparseVec rhs;
        for (const auto& e : f.column(y))
            for (const auto& x : n.coaction[e.index]) rhs.push_back(Entry{x.index, e.value * x.value});
        normalize(rhs);
        if (!same(lhs, rhs)) return false;
    }
    return true;
}

InductionData induce(const HopfSubalgebraData& k, const CrossedModuleData& n) {
    const HopfAlgebraData& h = *k.parent;
    const HopfAlgebraData& kk = *k.sub;
    Index dh = h.dim(), dn = n.dim;
    std::vector<SparseVec> relators;
    for (std::uint32_t x = 0; x < dh; ++x)
        for (std::uint32_t a = 0; a < kk.dim(); ++a) {
            SparseVec xa = h.multiply(unit_vector(x), k.inclusion.column(a));
            for (std::uint32_t y = 0; y < dn; ++y) {
                SparseVec r;
                for (const auto& e : xa) r.push_back(Entry{e.index * dn + y, e.value});
                for (const auto& e : n.act(a, unit_vector(y))) r.push_back(Entry{Index(x) * dn + e.index, -e.value});
                normalize(r);
                if (!r.empty()) relators.push_back(std::move(r));
            }
        }
    InductionData out;
    out.carrier = Quotient(dh * dn, relators);
    CoproductTable legs(h, 2);
    AmbientAction act = [&](std::uint32_t x, Index b) {
        SparseVec v;
        for (const auto& e : h.product(x, static_cast<std::uint32_t>(b / dn))) v.push_back(Entry{e.index * dn + b % dn, e.value});
        return v;
    };
    AmbientCoaction coact = [&](Index b) {
        std::uint32_t x = static_cast<std::uint32_t>(b / dn);
        Index y = b % dn;
        SparseVec v;
        Index dk = kk.dim();
        for (const auto& t : legs(x))
            for (const auto& c : n.coaction[y]) {
                SparseVec right = sandwich(h, t.legs[2], k.inclusion.column(c.index % dk), t.legs[0]);
                Index left = Index(t.legs[1]) * dn + c.index / dk;
                for (const auto& r : right) v.push_back(Entry{left * dh + r.index, t.coef * c.value * r.value});
            }
        normalize(v);
        return v;
    };
    std::vector<std::string> labels;
    for (std::uint32_t x = 0; x < dh; ++x)
        for (std::uint32_t y = 0; y < dn; ++y) labels.push_back(h.basis[x] + "*" + n.label(y));
    out.module = descend_to_quotient(k.parent, out.carrier, act, &coact, labels);
    out.free_rank_matches = dh % kk.dim() == 0 && out.module.dim == dh / kk.dim() * dn;
    return out;
}

RestrictionData restrict_module(const HopfSubalgebraData& k, const CrossedModuleData& m) {
    const HopfAlgebraData& h = *k.parent;
    const HopfAlgebraData& kk = *k.sub;
    Index dh = h.dim(), dk = kk.dim(), dm = m.dim;
    // Phi(m (x) x) = rho(m) (x) x - m (x) f(x(1)) (x) x(2), in M (x) H (x) K.
    SparseMatrix phi = assemble_serial(dm * dh * dk, dm * dk, [&](Index b) {
        Index y = b / dk, x = b % dk;
        SparseVec v;
        for (const auto& c : m.coaction[y]) v.push_back(Entry{c.index * dk + x, c.value});
        for (const auto& t : kk.comult[x])
            for (const auto& f : k.inclusion.column(t.left))
                v.push_back(Entry{(y * dh + f.index) * dk + t.right, -t.coef * f.value});
        return v;
    });
    RestrictionData out;
    out.carrier = Subspace(dm * dk, rank_kernel(phi).kernel);
    CoproductTable legs(kk, 2);
    AmbientAction act = [&](std::uint32_t a, Index b) {
        Index y = b / dk;
        std::uint32_t x = static_cast<std::uint32_t>(b % dk);
        SparseVec v;
        for (const auto& t : legs(a)) {
            SparseVec left = m.act(k.inclusion.column(t.legs[1]), unit_vector(y));
            SparseVec right = sandwich(kk, t.legs[2], unit_vector(x), t.legs[0]);
            for (const auto& l : left)
                for (const auto& r : right) v.push_back(Entry{l.index * dk + r.index, t.coef * l.value * r.value});
        }
        normalize(v);
        return v;
    };
    AmbientCoaction coact = [&](Index b) {
        Index y = b / dk, x = b % dk;
        SparseVec v;
        for (const auto& t : kk.comult[x]) v.push_back(Entry{(y * dk + t.left) * dk + t.right, t.coef});
        normalize(v);
        return v;
    };
    out.module = restrict_to_subspace(k.sub, out.carrier, act, &coact);
    return out;
}

HgData hg_construction(const ModuleData& n) {
    const HopfAlgebraData& h = *n.base;
    Index dh = h.dim(), dn = n.dim;
    CoproductTable legs(h, 2);
    HgData out;
    CrossedModuleData& g = out.ambient;
    g.base = n.base;
    g.dim = static_cast<std::uint32_t>(dn * dh);
    g.action.resize(dh * g.dim);
    for (std::uint32_t a = 0; a < dh; ++a)
        for (Index b = 0; b < g.dim; ++b) {
            Index y = b / dh;
            std::uint32_t x = static_cast<std::uint32_t>(b % dh);
            SparseVec v;
            for (const auto& t : legs(a)) {
                SparseVec left = n.act(t.legs[1], unit_vector(y));
                SparseVec right = sandwich(h, t.legs[2], unit_vector(x), t.legs[0]);
                for (const auto& l : left)
                    for (const auto& r : right) v.push_back(Entry{l.index * dh + r.index, t.coef * l.value * r.value});
            }
            normalize(v);
            g.action[a * g.dim + b] = v;
        }
    for (Index b = 0; b < g.dim; ++b) {
        Index y = b / dh, x = b % dh;
        SparseVec v;
        for (const auto& t : h.comult[x]) v.push_back(Entry{(y * dh + t.left) * dh + t.right, t.coef});
        normalize(v);
        g.coaction.push_back(v);
    }
    for (Index b = 0; b < g.dim; ++b) g.labels.push_back(n.label(b / dh) + "*" + h.basis[b % dh]);
    SparseMatrix fixed = u_map(g) - SparseMatrix::identity(g.dim);
    out.module = crossed_submodule(g, Subspace(g.dim, rank_kernel(fixed).kernel));
    return out;
}

GhData gh_construction(const ComoduleData& n) {
    const HopfAlgebraData& h = *n.base;
    Index dh = h.dim(), dn = n.dim;
    CoproductTable legs(h, 2);
    GhData out;
    CrossedModuleData& g = out.ambient;
    g.base = n.base;
    g.dim = static_cast<std::uint32_t>(dh * dn);
    g.action.resize(dh * g.dim);
    for (std::uint32_t a = 0; a < dh; ++a)
        for (Index b = 0; b < g.dim; ++b) {
            SparseVec v;
            for (const auto& e : h.product(a, static_cast<std::uint32_t>(b / dn))) v.push_back(Entry{e.index * dn + b % dn, e.value});
            g.action[a * g.dim + b] = v;
        }
    for (Index b = 0; b < g.dim; ++b) {
        std::uint32_t x = static_cast<std::uint32_t>(b / dn);
        Index y = b % dn;
        SparseVec v;
        for (const auto& t : legs(x))
            for (const auto& c : n.coaction[y]) {
                SparseVec right = sandwich(h, t.legs[2], unit_vector(c.index % dh), t.legs[0]);
                Index left = Index(t.legs[1]) * dn + c.index / dh;
                for (const auto& r : right) v.push_back(Entry{left * dh + r.index, t.coef * c.value * r.value});
            }
        normalize(v);
        g.coaction.push_back(v);
    }
    for (Index b = 0; b < g.dim; ++b) g.labels.push_back(h.basis[b / dn] + "*n" + std::to_string(b % dn));
    SparseMatrix moved = u_map(g) - SparseMatrix::identity(g.dim);
    out.module = crossed_quotient(g, Quotient(g.dim, moved.columns()));
    return out;
}

GroupDecomposition decompose_group_case(const CrossedModuleData& m) {
    const HopfAlgebraData& h = *m.base;
    if (!h.group) throw InputError("group decomposition needs a group algebra");
    const FiniteGroupData& g = *h.group;
    Index dh = h.dim(), dm = m.dim;
    GroupDecomposition out;
    Index total = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        SparseMatrix f = assemble_serial(dm * dh, dm, [&](Index y) {
            return axpy(m.coaction[y], -1, unit_vector(y * dh + x));
        });
        out.components.emplace_back(dm, rank_kernel(f).kernel);
        total += out.components.back().dim();
    }
    out.checks.add("components span M", total == dm,
                   total == dm ? "" : "sum of component dimensions " + std::to_string(total) + " != " + std::to_string(dm));
    std::string bad;
    for (std::uint32_t a = 0; a < g.order() && bad.empty(); ++a)
        for (std::uint32_t x = 0; x < g.order() && bad.empty(); ++x) {
            std::uint32_t conj = g.mul(g.mul(a, x), g.inverse(a));
            for (Index i = 0; i < out.components[x].dim() && bad.empty(); ++i)
                if (!out.components[conj].contains(m.act(a, out.components[x].inclusion().column(i))))
                    bad = g.names[a] + " . M_" + g.names[x];
        }
    out.checks.add("g M_x inside M_{gxg^-1}", bad.empty(), bad);

    out.modular_by_components = true;
    for (std::uint32_t x = 0; x < g.order(); ++x)
        for (Index i = 0; i < out.components[x].dim(); ++i) {
            const SparseVec& v = out.components[x].inclusion().column(i);
            if (!same(m.act(x, v), v)) out.modular_by_components = false;
        }

    if (total != dm) return out;
    SparseMatrix assembled(dm, 0);
    bool maps_ok = true;
    for (const auto& cls : conjugacy_data(g)) {
        std::uint32_t x = cls.representative;
        out.representatives.push_back(x);
        HopfSubalgebraData k = subgroup_algebra(m.base, cls.centralizer.embedding);
        const Subspace& comp = out.components[x];
        CrossedModuleData piece;
        piece.base = k.sub;
        piece.dim = static_cast<std::uint32_t>(comp.dim());
        std::uint32_t xl = 0;
        for (std::uint32_t i = 0; i < cls.centralizer.embedding.size(); ++i) {
            std::uint32_t gi = cls.centralizer.embedding[i];
            if (gi == x) xl = i;
        }
        for (std::uint32_t i = 0; i < k.sub->dim(); ++i)
            for (Index j = 0; j < piece.dim; ++j) {
                auto c = comp.coordinates(m.act(cls.centralizer.embedding[i], comp.inclusion().column(j)));
                if (!c) throw AxiomViolation("centralizer does not preserve M_x");
                piece.action.push_back(*c);
            }
        for (Index j = 0; j < piece.dim; ++j) piece.coaction.push_back(unit_vector(j * k.sub->dim() + xl));
        InductionData ind = induce(k, piece);
        Index pd = piece.dim;
        SparseMatrix phi = assemble_serial(dm, ind.module.dim, [&](Index i) {
            Index b = ind.carrier.representative(i);
            return m.act(static_cast<std::uint32_t>(b / pd), comp.inclusion().column(b % pd));
        });
        for (const auto& r : ind.carrier.relator_basis()) {
            SparseVec img;
            for (const auto& e : r)
                img = axpy(img, e.value, m.act(static_cast<std::uint32_t>(e.index / pd), comp.inclusion().column(e.index % pd)));
            if (!img.empty()) maps_ok = false;
        }
        if (!is_module_map(ind.module, m, phi) || !is_comodule_map(ind.module.comodule(), m.comodule(), phi)) maps_ok = false;
        assembled = assembled.hstack(phi);
        out.centralizers.push_back(k);
        out.pieces.push_back(std::move(piece));
    }
    out.checks.add("induced pieces map to M as crossed modules", maps_ok);
    bool iso = assembled.cols() == dm && rank_kernel(assembled).rank == dm;
    out.checks.add("sum of induced pieces is isomorphic to M", iso);
    return out;
}

FiltrationData coinvariants_filtration(const CrossedModuleData& m) {
    const HopfAlgebraData& h = *m.base;
    Index dh = h.dim(), dm = m.dim;
    FiltrationData out;
    Subspace current(dm, {});
    for (int p = 0;; ++p) {
        Quotient q(dm, current.inclusion().columns());
        SparseMatrix f = assemble_serial(q.dim() * dh, dm, [&](Index y) {
            SparseVec v = axpy(m.coaction[y], -1, tensor(unit_vector(y), h.unit, dh));
            return project_tensor_h(q, v, dh);
        });
        Subspace next(dm, rank_kernel(f).kernel);
        if (p > 0 && next.dim() == current.dim()) {
            out.stabilized_at = p - 1;
            break;
        }
        out.levels.push_back(next);
        current = next;
        if (current.dim() == dm) {
            out.stabilized_at = p;
            break;
        }
    }
    out.exhaustive = current.dim() == dm;
    std::string bad;
    for (std::size_t p = 0; p < out.levels.size() && bad.empty(); ++p) {
        try {
            crossed_submodule(m, out.levels[p]);
        } catch (const AxiomViolation& e) {
            bad = "F_" + std::to_string(p) + ": " + e.what();
        }
    }
    out.checks.add("filtration pieces are crossed submodules", bad.empty(), bad);
    return out;
}

std::vector<CrossedModuleData> associated_graded(const CrossedModuleData& m, const FiltrationData& f) {
    std::vector<CrossedModuleData> out;
    for (std::size_t p = 0; p < f.levels.size(); ++p) {
        CrossedModuleData fp = crossed_submodule(m, f.levels[p]);
        if (p == 0) {
            out.push_back(fp);
            continue;
        }
        std::vector<SparseVec> rel;
        for (const auto& v : f.levels[p - 1].inclusion().columns()) rel.push_back(*f.levels[p].coordinates(v));
        out.push_back(crossed_quotient(fp, Quotient(fp.dim, rel)));
    }
    return out;
}

}  // namespace hopfcyc
