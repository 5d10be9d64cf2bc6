#include "hopfcyc/cyclic.hpp"

#include "hopfcyc/rank.hpp"
#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace {

// Structure shared by the operator builders of Z(H, M).
struct Engine {
    const HopfAlgebraData& h;
    const ModuleData& m;
    Index d, dm;
    std::vector<SparseVec> hs;  // e_i S(e_b)
    std::vector<CoproductTable> legs;

    Engine(const ModuleData& mod, int maxk) : h(*mod.base), m(mod), d(mod.base->dim()), dm(mod.dim) {
        hs.resize(d * d);
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t b = 0; b < d; ++b) hs[i * d + b] = h.multiply(unit_vector(i), h.antipode.column(b));
        for (int k = 0; k <= maxk; ++k) legs.emplace_back(h, k);
    }

    // Adds c * nu_k((slots) (x) e_mi) to out; slots has k+1 entries.
    void nu(int k, const std::vector<std::uint32_t>& slots, Index mi, const Rational& c, SparseVec& out) const {
        auto radices = power_radices(d, k, dm);
        std::vector<const SparseVec*> f(static_cast<std::size_t>(k) + 1);
        for (const auto& t : legs.at(k)(slots[k])) {
            for (int j = 0; j < k; ++j) f[j] = &hs[slots[j] * d + t.legs[k - 1 - j]];
            f[k] = &m.action[t.legs[k] * dm + mi];
            add_tensor(out, c * t.coef, f, radices);
        }
    }

    // Section: basis vector of H^{(x)n} (x) M to representatives with unit in the last slot.
    template <class Fn>
    void for_each_lift(int n, Index col, Fn fn) const {
        auto digits = unpack(col, power_radices(d, n, dm));
        Index mi = digits[n];
        std::vector<std::uint32_t> slots(digits.begin(), digits.begin() + n);
        slots.push_back(0);
        for (const auto& u : h.unit) {
            slots[n] = static_cast<std::uint32_t>(u.index);
            fn(slots, mi, u.value);
        }
    }

    SparseVec face(int n, int i, Index col) const {
        SparseVec out;
        for_each_lift(n, col, [&](const std::vector<std::uint32_t>& slots, Index mi, const Rational& c) {
            const Rational& e = h.counit[slots[i]];
            if (sgn(e) == 0) return;
            std::vector<std::uint32_t> s = slots;
            s.erase(s.begin() + i);
            nu(n - 1, s, mi, c * e, out);
        });
        return out;
    }

    SparseVec degeneracy(int n, int i, Index col) const {
        SparseVec out;
        for_each_lift(n, col, [&](const std::vector<std::uint32_t>& slots, Index mi, const Rational& c) {
            for (const auto& t : h.comult[slots[i]]) {
                std::vector<std::uint32_t> s = slots;
                s[i] = t.left;
                s.insert(s.begin() + i + 1, t.right);
                nu(n + 1, s, mi, c * t.coef, out);
            }
        });
        return out;
    }

    // tau on a representative: (h^0..h^n) (x) m -> (h^n m(1), h^0..h^{n-1}) (x) m(0)
    void tau_rep(int n, const std::vector<std::uint32_t>& slots, Index mi, const Rational& c,
                 const std::vector<SparseVec>& coaction, SparseVec& out) const {
        for (const auto& e : coaction[mi]) {
            Index m0 = e.index / d;
            auto hh = static_cast<std::uint32_t>(e.index % d);
            for (const auto& p : h.product(slots[n], hh)) {
                std::vector<std::uint32_t> s{static_cast<std::uint32_t>(p.index)};
                s.insert(s.end(), slots.begin(), slots.begin() + n);
                nu(n, s, m0, c * e.value * p.value, out);
            }
        }
    }

    SparseVec tau(int n, Index col, const std::vector<SparseVec>& coaction) const {
        SparseVec out;
        for_each_lift(n, col, [&](const std::vector<std::uint32_t>& slots, Index mi, const Rational& c) {
            tau_rep(n, slots, mi, c, coaction, out);
        });
        return out;
    }
};

std::string at_degree(int n) { return "degree " + std::to_string(n); }

// Deterministic sample of at most cap indices out of total.
std::vector<Index> sample_indices(Index total, Index cap) {
    std::vector<Index> out;
    if (total <= cap) {
        for (Index i = 0; i < total; ++i) out.push_back(i);
        return out;
    }
    Index stride = total / cap;
    for (Index i = 0; i < cap; ++i) out.push_back((i * stride + i * 7919) % total);
    return out;
}

}  // namespace

SparseVec normal_form(const ModuleData& m, int n, const std::vector<std::uint32_t>& slots, std::uint32_t mi) {
    Engine e(m, n);
    SparseVec out;
    e.nu(n, slots, mi, 1, out);
    normalize(out);
    return out;
}

CheckReport verify_normal_form(const ModuleData& m, int n) {
    Engine e(m, n);
    CheckReport rep;
    Index d = e.d, dm = e.dm;
    Index usize = ipow(d, n + 1);
    auto radices = power_radices(d, n, d);
    std::string bad;
    for (Index ui : sample_indices(usize * d * dm, 20000)) {
        Index mi = ui % dm;
        auto hh = static_cast<std::uint32_t>((ui / dm) % d);
        auto u = unpack(ui / dm / d, radices);
        SparseVec left, right;
        for (const auto& t : e.legs[n](hh)) {
            // (u . h) via the diagonal action, expanded into basis slots.
            std::vector<std::pair<std::vector<std::uint32_t>, Rational>> terms{{{}, t.coef}};
            for (int s = 0; s <= n; ++s) {
                std::vector<std::pair<std::vector<std::uint32_t>, Rational>> next;
                for (const auto& [sl, c] : terms)
                    for (const auto& p : e.h.product(u[s], t.legs[s])) {
                        auto sl2 = sl;
                        sl2.push_back(static_cast<std::uint32_t>(p.index));
                        next.emplace_back(sl2, c * p.value);
                    }
                terms.swap(next);
            }
            for (const auto& [sl, c] : terms) e.nu(n, sl, mi, c, left);
        }
        for (const auto& x : m.action[hh * dm + mi]) e.nu(n, u, x.index, x.value, right);
        normalize(left);
        normalize(right);
        if (!axpy(left, -1, right).empty()) {
            bad = "basis tuple " + std::to_string(ui / dm / d) + ", h=" + e.h.basis[hh] + ", m=" + m.label(mi);
            break;
        }
    }
    rep.add("normal form is H-balanced in " + at_degree(n), bad.empty(), bad);
    return rep;
}

CheckReport verify_cyclic_well_defined(const CrossedModuleData& m, int n) {
    Engine e(m, n);
    CheckReport rep;
    Index d = e.d, dm = e.dm;
    for (int k = 0; k <= n; ++k) {
        auto radices = power_radices(d, k, d);
        std::string bad;
        for (Index ui : sample_indices(ipow(d, k + 1) * d * dm, 20000)) {
            Index mi = ui % dm;
            auto hh = static_cast<std::uint32_t>((ui / dm) % d);
            auto u = unpack(ui / dm / d, radices);
            SparseVec left, right;
            for (const auto& t : e.legs[k](hh)) {
                std::vector<std::pair<std::vector<std::uint32_t>, Rational>> terms{{{}, t.coef}};
                for (int s = 0; s <= k; ++s) {
                    std::vector<std::pair<std::vector<std::uint32_t>, Rational>> next;
                    for (const auto& [sl, c] : terms)
                        for (const auto& p : e.h.product(u[s], t.legs[s])) {
                            auto sl2 = sl;
                            sl2.push_back(static_cast<std::uint32_t>(p.index));
                            next.emplace_back(sl2, c * p.value);
                        }
                    terms.swap(next);
                }
                for (const auto& [sl, c] : terms) e.tau_rep(k, sl, mi, c, m.coaction, left);
            }
            for (const auto& x : m.action[hh * dm + mi]) e.tau_rep(k, u, x.index, x.value, m.coaction, right);
            normalize(left);
            normalize(right);
            if (!axpy(left, -1, right).empty()) {
                bad = at_degree(k) + ", h=" + e.h.basis[hh] + ", m=" + m.label(mi);
                break;
            }
        }
        rep.add("cyclic operator is well defined in " + at_degree(k), bad.empty(), bad);
    }
    return rep;
}

namespace {

CyclicObjectData build_object(const ModuleData& m, const std::vector<SparseVec>* coaction, int top) {
    if (top < 0) throw std::invalid_argument("negative truncation");
    Engine e(m, top + 1);
    CyclicObjectData z;
    for (int n = 0; n <= top; ++n) z.dims.push_back(ipow(e.d, n) * e.dm);
    z.faces.resize(top + 1);
    z.degeneracies.resize(top + 1);
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            z.faces[n].push_back(assemble(z.dims[n - 1], z.dims[n], [&](Index c) { return e.face(n, i, c); }));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            z.degeneracies[n].push_back(assemble(z.dims[n + 1], z.dims[n], [&](Index c) { return e.degeneracy(n, i, c); }));
    if (coaction)
        for (int n = 0; n <= top; ++n)
            z.cyclic.push_back(assemble(z.dims[n], z.dims[n], [&](Index c) { return e.tau(n, c, *coaction); }));
    return z;
}

}  // namespace

CyclicObjectData build_cyclic(const CrossedModuleData& m, int top, BuildOptions opts) {
    CheckReport crossed = verify_crossed(m);
    if (!crossed.ok()) throw AxiomViolation("not a crossed module: " + crossed.first_failure());
    if (opts.require_modular) {
        CheckReport modular = verify_modular(m);
        if (!modular.ok()) throw AxiomViolation("cyclic operator refused: " + modular.first_failure());
    }
    CheckReport wd = verify_cyclic_well_defined(m, std::min(top, 1));
    if (!wd.ok()) throw AxiomViolation(wd.first_failure());
    return build_object(m, &m.coaction, top);
}

CyclicObjectData build_simplicial(const ModuleData& m, int top) {
    CheckReport mod = verify_module(m);
    if (!mod.ok()) throw AxiomViolation("not a module: " + mod.first_failure());
    return build_object(m, nullptr, top);
}

CyclicObjectData aux_cyclic(const HopfAlgebraData& h, int top) {
    Index d = h.dim();
    CyclicObjectData z;
    for (int n = 0; n <= top; ++n) z.dims.push_back(ipow(d, n + 1));
    z.faces.resize(top + 1);
    z.degeneracies.resize(top + 1);
    for (int n = 1; n <= top; ++n) {
        auto radices = std::vector<Index>(n + 1, d);
        auto lower = std::vector<Index>(n, d);
        for (int i = 0; i <= n; ++i)
            z.faces[n].push_back(assemble(z.dims[n - 1], z.dims[n], [&](Index c) {
                auto s = unpack(c, radices);
                Rational e = h.counit[s[i]];
                s.erase(s.begin() + i);
                return unit_vector(pack(s, lower), e);
            }));
    }
    for (int n = 0; n < top; ++n) {
        auto radices = std::vector<Index>(n + 1, d);
        auto upper = std::vector<Index>(n + 2, d);
        for (int i = 0; i <= n; ++i)
            z.degeneracies[n].push_back(assemble(z.dims[n + 1], z.dims[n], [&](Index c) {
                auto s = unpack(c, radices);
                SparseVec v;
                for (const auto& t : h.comult[s[i]]) {
                    auto s2 = s;
                    s2[i] = t.left;
                    s2.insert(s2.begin() + i + 1, t.right);
                    v.push_back(Entry{pack(s2, upper), t.coef});
                }
                return v;
            }));
    }
    for (int n = 0; n <= top; ++n) {
        auto radices = std::vector<Index>(n + 1, d);
        z.cyclic.push_back(assemble(z.dims[n], z.dims[n], [&](Index c) {
            auto s = unpack(c, radices);
            std::rotate(s.begin(), s.end() - 1, s.end());
            return unit_vector(pack(s, radices));
        }));
    }
    return z;
}

CheckReport verify_cyclic_object(const CyclicObjectData& z) {
    CheckReport rep;
    int top = z.top();
    auto tag = [](int n, int i, int j) {
        return at_degree(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
    };
    const auto& F = z.faces;
    const auto& D = z.degeneracies;

    std::string bad;
    for (int n = 2; n <= top && bad.empty(); ++n)
        for (int j = 1; j <= n && bad.empty(); ++j)
            for (int i = 0; i < j && bad.empty(); ++i)
                if (!(F[n - 1][i] * F[n][j] == F[n - 1][j - 1] * F[n][i])) bad = tag(n, i, j);
    rep.add("face relations", bad.empty(), bad);

    bad.clear();
    for (int n = 0; n + 2 <= top && bad.empty(); ++n)
        for (int j = 0; j <= n && bad.empty(); ++j)
            for (int i = 0; i <= j && bad.empty(); ++i)
                if (!(D[n + 1][i] * D[n][j] == D[n + 1][j + 1] * D[n][i])) bad = tag(n, i, j);
    rep.add("degeneracy relations", bad.empty(), bad);

    bad.clear();
    for (int n = 0; n + 1 <= top && bad.empty(); ++n)
        for (int j = 0; j <= n && bad.empty(); ++j)
            for (int i = 0; i <= n + 1 && bad.empty(); ++i) {
                SparseMatrix lhs = F[n + 1][i] * D[n][j];
                bool ok;
                if (i < j)
                    ok = lhs == D[n - 1][j - 1] * F[n][i];
                else if (i == j || i == j + 1)
                    ok = lhs == SparseMatrix::identity(z.dims[n]);
                else
                    ok = lhs == D[n - 1][j] * F[n][i - 1];
                if (!ok) bad = tag(n, i, j);
            }
    rep.add("face-degeneracy relations", bad.empty(), bad);

    if (!z.has_cyclic()) return rep;
    const auto& T = z.cyclic;
    bad.clear();
    for (int n = 1; n <= top && bad.empty(); ++n) {
        if (!(F[n][0] * T[n] == F[n][n])) bad = tag(n, 0, 0);
        for (int i = 1; i <= n && bad.empty(); ++i)
            if (!(F[n][i] * T[n] == T[n - 1] * F[n][i - 1])) bad = tag(n, i, i - 1);
    }
    rep.add("face-cyclic relations", bad.empty(), bad);

    bad.clear();
    for (int n = 0; n + 1 <= top && bad.empty(); ++n) {
        if (!(D[n][0] * T[n] == T[n + 1] * T[n + 1] * D[n][n])) bad = tag(n, 0, n);
        for (int i = 1; i <= n && bad.empty(); ++i)
            if (!(D[n][i] * T[n] == T[n + 1] * D[n][i - 1])) bad = tag(n, i, i - 1);
    }
    rep.add("degeneracy-cyclic relations", bad.empty(), bad);

    bad.clear();
    for (int n = 0; n <= top && bad.empty(); ++n) {
        SparseMatrix p = T[n];
        for (int k = 1; k <= n; ++k) p = T[n] * p;
        if (!(p == SparseMatrix::identity(z.dims[n]))) bad = at_degree(n);
    }
    rep.add("cyclic order", bad.empty(), bad);
    return rep;
}

namespace {

SparseMatrix alternating_sum(const std::vector<SparseMatrix>& maps, int count, Index rows, Index cols) {
    SparseMatrix b(rows, cols);
    for (int i = 0; i < count; ++i) b = b + (i % 2 ? maps[i].scaled(-1) : maps[i]);
    return b;
}

SparseMatrix signed_cyclic(const CyclicObjectData& z, int n) {
    return n % 2 ? z.cyclic[n].scaled(-1) : z.cyclic[n];
}

}  // namespace

ChainComplexData hochschild_complex(const CyclicObjectData& z) {
    ChainComplexData c;
    c.dims = z.dims;
    c.diff.resize(z.dims.size());
    for (int n = 1; n <= z.top(); ++n) c.diff[n] = alternating_sum(z.faces[n], n + 1, z.dims[n - 1], z.dims[n]);
    return c;
}

ChainComplexData bar_prime_complex(const CyclicObjectData& z) {
    ChainComplexData c;
    c.dims = z.dims;
    c.diff.resize(z.dims.size());
    for (int n = 1; n <= z.top(); ++n) c.diff[n] = alternating_sum(z.faces[n], n, z.dims[n - 1], z.dims[n]);
    return c;
}

std::vector<Index> hochschild(const CyclicObjectData& z, int lo, int hi, Field field) {
    if (hi + 1 > z.top())
        throw InsufficientTruncation("HH in degree " + std::to_string(hi) + " needs the object through degree " +
                                     std::to_string(hi + 1) + ", materialized only through " + std::to_string(z.top()));
    return homology_dims(hochschild_complex(z), lo, hi, field);
}

std::vector<Index> cyclic_connes(const CyclicObjectData& z, int lo, int hi) {
    if (!z.has_cyclic()) throw AxiomViolation("cyclic homology needs a cyclic operator");
    if (hi + 1 > z.top())
        throw InsufficientTruncation("HC in degree " + std::to_string(hi) + " needs the object through degree " +
                                     std::to_string(hi + 1) + ", materialized only through " + std::to_string(z.top()));
    ChainComplexData b = hochschild_complex(z);
    int first = std::max(lo - 1, 0);
    std::vector<SparseMatrix> u;  // u[k - first] = 1 - (-1)^k tau_k
    for (int k = first; k <= hi + 1; ++k) u.push_back(SparseMatrix::identity(z.dims[k]) - signed_cyclic(z, k));
    std::vector<SparseMatrix> stacked;  // [b_k | u_{k-1}] for k = max(lo,1) .. hi+1
    int sfirst = std::max(lo, 1);
    for (int k = sfirst; k <= hi + 1; ++k) stacked.push_back(b.d(k).hstack(u[k - 1 - first]));
    std::vector<const SparseMatrix*> ms;
    for (const auto& x : u) ms.push_back(&x);
    for (const auto& x : stacked) ms.push_back(&x);
    auto ranks = differential_ranks(ms, Field{});
    auto rank_u = [&](int k) { return ranks[k - first]; };
    auto rank_bar = [&](int k) -> std::size_t {  // rank of the induced b_k on the quotients
        if (k < sfirst) return 0;
        return ranks[u.size() + (k - sfirst)] - rank_u(k - 1);
    };
    std::vector<Index> out;
    for (int n = lo; n <= hi; ++n) out.push_back(z.dims[n] - rank_u(n) - rank_bar(n) - rank_bar(n + 1));
    return out;
}

BicomplexData tsygan_bicomplex(const CyclicObjectData& z) {
    if (!z.has_cyclic()) throw AxiomViolation("cyclic bicomplex needs a cyclic operator");
    int top = z.top();
    ChainComplexData b = hochschild_complex(z);
    ChainComplexData bp = bar_prime_complex(z);
    std::vector<SparseMatrix> one_minus_t, norm;
    for (int q = 0; q <= top; ++q) {
        SparseMatrix t = signed_cyclic(z, q);
        one_minus_t.push_back(SparseMatrix::identity(z.dims[q]) - t);
        SparseMatrix sum = SparseMatrix::identity(z.dims[q]);
        SparseMatrix power = SparseMatrix::identity(z.dims[q]);
        for (int i = 1; i <= q; ++i) {
            power = t * power;
            sum = sum + power;
        }
        norm.push_back(sum);
    }
    BicomplexData bc;
    for (int p = 0; p <= top; ++p) {
        bc.dims.emplace_back();
        bc.vertical.emplace_back();
        bc.horizontal.emplace_back();
        for (int q = 0; p + q <= top; ++q) {
            bc.dims[p].push_back(z.dims[q]);
            bc.vertical[p].push_back(q == 0 ? SparseMatrix() : (p % 2 ? bp.d(q).scaled(-1) : b.d(q)));
            bc.horizontal[p].push_back(p == 0 ? SparseMatrix() : (p % 2 ? one_minus_t[q] : norm[q]));
        }
    }
    return bc;
}

std::vector<Index> cyclic_bicomplex(const CyclicObjectData& z, int lo, int hi) {
    if (hi + 1 > z.top())
        throw InsufficientTruncation("HC in degree " + std::to_string(hi) + " needs the object through degree " +
                                     std::to_string(hi + 1) + ", materialized only through " + std::to_string(z.top()));
    return homology_dims(total_complex(tsygan_bicomplex(z), hi + 1), lo, hi);
}

ChainComplexData tor_bar_complex(const ModuleData& m, int top) {
    const HopfAlgebraData& h = *m.base;
    Index d = h.dim(), dm = m.dim;
    ChainComplexData c;
    for (int n = 0; n <= top; ++n) c.dims.push_back(ipow(d, n) * dm);
    c.diff.resize(top + 1);
    for (int n = 1; n <= top; ++n) {
        auto radices = power_radices(d, n, dm);
        auto lower = power_radices(d, n - 1, dm);
        c.diff[n] = assemble(c.dims[n - 1], c.dims[n], [&](Index col) {
            auto s = unpack(col, radices);
            SparseVec out;
            std::vector<SparseVec> f(n);
            std::vector<const SparseVec*> fp(n);
            // counit on the first factor
            if (sgn(h.counit[s[0]]) != 0) {
                std::vector<std::uint32_t> t(s.begin() + 1, s.end());
                out.push_back(Entry{pack(t, lower), h.counit[s[0]]});
            }
            for (int i = 1; i < n; ++i) {
                std::vector<SparseVec> parts;
                std::vector<const SparseVec*> ptr;
                std::vector<SparseVec> singles;
                singles.reserve(n);
                for (int k = 0; k < n - 1; ++k) {
                    if (k == i - 1)
                        singles.push_back(h.product(s[i - 1], s[i]));
                    else
                        singles.push_back(unit_vector(s[k < i - 1 ? k : k + 1]));
                }
                singles.push_back(unit_vector(s[n]));
                for (const auto& x : singles) ptr.push_back(&x);
                add_tensor(out, i % 2 ? Rational(-1) : Rational(1), ptr, lower);
            }
            {
                std::vector<SparseVec> singles;
                std::vector<const SparseVec*> ptr;
                singles.reserve(n);
                for (int k = 0; k < n - 1; ++k) singles.push_back(unit_vector(s[k]));
                singles.push_back(m.action[s[n - 1] * dm + s[n]]);
                for (const auto& x : singles) ptr.push_back(&x);
                add_tensor(out, n % 2 ? Rational(-1) : Rational(1), ptr, lower);
            }
            return out;
        });
    }
    return c;
}

std::vector<Index> tor_oracle(const ModuleData& m, int lo, int hi, Field field) {
    return homology_dims(tor_bar_complex(m, hi + 1), lo, hi, field);
}

std::vector<Index> group_homology(const GroupModule& gm, int lo, int hi, Field field) {
    const FiniteGroupData& g = gm.group;
    Index n_g = g.order(), dm = gm.dim;
    int top = hi + 1;
    ChainComplexData c;
    for (int n = 0; n <= top; ++n) c.dims.push_back(ipow(n_g, n) * dm);
    c.diff.resize(top + 1);
    for (int n = 1; n <= top; ++n) {
        auto radices = power_radices(n_g, n, dm);
        auto lower = power_radices(n_g, n - 1, dm);
        c.diff[n] = assemble(c.dims[n - 1], c.dims[n], [&](Index col) {
            auto s = unpack(col, radices);
            SparseVec out;
            std::vector<std::uint32_t> t(s.begin() + 1, s.end());
            out.push_back(Entry{pack(t, lower), 1});
            for (int i = 1; i < n; ++i) {
                std::vector<std::uint32_t> u;
                for (int k = 0; k < n; ++k) {
                    if (k == i - 1)
                        u.push_back(g.mul(s[k], s[k + 1]));
                    else if (k != i)
                        u.push_back(s[k]);
                }
                u.push_back(s[n]);
                out.push_back(Entry{pack(u, lower), i % 2 ? -1 : 1});
            }
            std::vector<std::uint32_t> u(s.begin(), s.begin() + (n - 1));
            u.push_back(0);
            for (const auto& e : gm.act[s[n - 1]].column(s[n])) {
                u[n - 1] = static_cast<std::uint32_t>(e.index);
                out.push_back(Entry{pack(u, lower), n % 2 ? -e.value : e.value});
            }
            return out;
        });
    }
    return homology_dims(c, lo, hi, field);
}

std::vector<Index> fold_periodic(const std::vector<Index>& x) {
    std::vector<Index> out(x.size(), 0);
    for (std::size_t n = 0; n < x.size(); ++n)
        for (std::size_t k = n % 2; k <= n; k += 2) out[n] += x[k];
    return out;
}

CheckReport sbi_check(const std::vector<Index>& hh, const std::vector<Index>& hc) {
    CheckReport rep;
    // Terms from the right end: HC_0, HH_0, HC_{-1}, HC_1, HH_1, HC_0, HC_2, HH_2, HC_1, ...
    // K(A) = dim ker of the outgoing map, K(last) = dim, K(A_i) = dim A_i - K(A_{i+1}).
    auto val = [](const std::vector<Index>& v, int n) -> std::optional<long long> {
        if (n < 0) return 0;
        if (n >= static_cast<int>(v.size())) return std::nullopt;
        return static_cast<long long>(v[n]);
    };
    long long k_next = 0;
    std::string bad;
    bool first = true;
    for (int n = 0; bad.empty(); ++n) {
        struct Term {
            std::string name;
            std::optional<long long> dim;
        };
        std::vector<Term> block{{"HC_" + std::to_string(n), val(hc, n)},
                                {"HH_" + std::to_string(n), val(hh, n)},
                                {"HC_" + std::to_string(n - 1), val(hc, n - 1)}};
        bool stop = false;
        for (const auto& t : block) {
            if (!t.dim) {
                stop = true;
                break;
            }
            long long k = first ? *t.dim : *t.dim - k_next;
            first = false;
            if (k < 0 || k > *t.dim) {
                bad = "kernel bound violated at " + t.name + " (degree window ending at " + t.name + ")";
                break;
            }
            k_next = k;
        }
        if (stop) break;
    }
    rep.add("SBI exactness bounds", bad.empty(), bad);
    return rep;
}

BurgheleaResult burghelea_finite(const CrossedModuleData& m, int hi) {
    BurgheleaResult r;
    GroupDecomposition dec = decompose_group_case(m);
    r.checks.append(dec.checks);
    if (!dec.checks.ok()) return r;
    std::vector<Index> total(hi + 1, 0);
    const FiniteGroupData& g = *m.base->group;
    auto classes = conjugacy_data(g);
    bool descends = true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        const CrossedModuleData& piece = dec.pieces[c];
        std::uint32_t dim = piece.dim;
        std::uint32_t xl = 0;
        for (std::uint32_t i = 0; i < cls.centralizer.embedding.size(); ++i)
            if (cls.centralizer.embedding[i] == cls.representative) xl = i;
        auto matrix_of = [&](std::uint32_t k) {
            std::vector<SparseVec> cols;
            for (std::uint32_t j = 0; j < dim; ++j) cols.push_back(piece.action[k * dim + j]);
            return SparseMatrix::from_columns(dim, cols);
        };
        if (!(matrix_of(xl) == SparseMatrix::identity(dim))) descends = false;
        GroupModule gm{cls.reduced, dim, {}};
        for (std::uint32_t coset = 0; coset < cls.reduced.order(); ++coset) gm.act.push_back(matrix_of(cls.coset_rep[coset]));
        std::vector<Index> hx = dim ? group_homology(gm, 0, hi) : std::vector<Index>(hi + 1, 0);
        for (int n = 0; n <= hi; ++n) total[n] += hx[n];
        r.representatives.push_back(cls.representative);
        r.group_homology.push_back(hx);
    }
    r.checks.add("action of G_x on M_x descends to G_x/<x>", descends);
    r.folded = fold_periodic(total);
    return r;
}

namespace {

bool trivial_coaction(const CrossedModuleData& m) {
    Index dh = m.base->dim();
    for (std::uint32_t y = 0; y < m.dim; ++y)
        if (!axpy(m.coaction[y], -1, tensor(unit_vector(y), m.base->unit, dh)).empty()) return false;
    return true;
}

}  // namespace

ComparisonReport folded_tor_check(const CrossedModuleData& m, int hi) {
    ComparisonReport r;
    if (!m.base->cocommutative()) {
        r.applicable = false;
        r.reason = "Hopf algebra is not cocommutative";
        return r;
    }
    if (!trivial_coaction(m)) {
        r.applicable = false;
        r.reason = "coaction is not trivial";
        return r;
    }
    r.left = cyclic_connes(build_cyclic(m, hi + 1), 0, hi);
    r.right = fold_periodic(tor_oracle(m, 0, hi));
    return r;
}

ShapiroReport shapiro_check(const HopfSubalgebraData& k, const CrossedModuleData& n, int hi) {
    ShapiroReport r;
    InductionData ind = induce(k, n);
    r.free_rank_matches = ind.free_rank_matches;
    CyclicObjectData big = build_cyclic(ind.module, hi + 1);
    CyclicObjectData small = build_cyclic(n, hi + 1);
    r.hh.left = hochschild(big, 0, hi);
    r.hh.right = hochschild(small, 0, hi);
    r.hc.left = cyclic_connes(big, 0, hi);
    r.hc.right = cyclic_connes(small, 0, hi);
    return r;
}

CrossedModuleData reduce_module(const NormalQuotientData& q, const HopfSubalgebraData& k, const CrossedModuleData& m) {
    const HopfAlgebraData& h = *k.parent;
    const HopfAlgebraData& hb = *q.quotient;
    Index dm = m.dim, dhb = hb.dim();
    std::vector<SparseVec> rel;
    for (const auto& r : q.carrier.relator_basis())
        for (std::uint32_t y = 0; y < dm; ++y) rel.push_back(m.act(r, unit_vector(y)));
    // K+H M equals K+ M, which is what the relator span above produces.
    Quotient qm(dm, rel);
    for (const auto& r : qm.relator_basis())
        for (std::uint32_t x = 0; x < h.dim(); ++x)
            if (!qm.project(m.act(x, r)).empty()) throw AxiomViolation("K+M is not a submodule");
    CrossedModuleData out;
    out.base = q.quotient;
    out.dim = static_cast<std::uint32_t>(qm.dim());
    for (std::uint32_t i = 0; i < dhb; ++i)
        for (std::uint32_t j = 0; j < out.dim; ++j)
            out.action.push_back(qm.project(m.act(static_cast<std::uint32_t>(q.carrier.representative(i)),
                                                  unit_vector(qm.representative(j)))));
    Index dh = h.dim();
    auto project2 = [&](const SparseVec& v) {
        SparseVec res;
        for (const auto& e : v) {
            SparseVec a = qm.project_basis(e.index / dh), b = q.carrier.project_basis(e.index % dh);
            for (const auto& x : a)
                for (const auto& y : b) res.push_back(Entry{x.index * dhb + y.index, e.value * x.value * y.value});
        }
        normalize(res);
        return res;
    };
    for (const auto& r : qm.relator_basis())
        if (!project2(m.coact(r)).empty()) throw AxiomViolation("K+M is not a subcomodule modulo K+H");
    for (std::uint32_t j = 0; j < out.dim; ++j) out.coaction.push_back(project2(m.coaction[qm.representative(j)]));
    for (std::uint32_t j = 0; j < out.dim; ++j) out.labels.push_back("[" + m.label(qm.representative(j)) + "]");
    return out;
}

ReductionReport semisimple_reduction(const HopfSubalgebraData& k, const CrossedModuleData& m, int hi) {
    ReductionReport r;
    NormalQuotientData q = quotient_by_normal(k);
    r.normal = q.normal;
    r.semisimple = separability_idempotent(*k.sub).has_value();
    if (!r.normal || !r.semisimple) {
        r.hh.applicable = r.hc.applicable = false;
        r.hh.reason = r.hc.reason = !r.normal ? "subalgebra is not normal" : "subalgebra is not semisimple";
        return r;
    }
    r.quotient = q.quotient;
    r.reduced = reduce_module(q, k, m);
    r.hh.checks.append(verify_crossed(r.reduced));
    CyclicObjectData big = build_cyclic(m, hi + 1);
    CyclicObjectData small = build_cyclic(r.reduced, hi + 1);
    r.hh.left = hochschild(big, 0, hi);
    r.hh.right = hochschild(small, 0, hi);
    r.hc.left = cyclic_connes(big, 0, hi);
    r.hc.right = cyclic_connes(small, 0, hi);
    return r;
}

FiltrationReport filtration_report(const CrossedModuleData& m, int hi) {
    FiltrationReport r;
    r.filtration = coinvariants_filtration(m);
    for (const auto& l : r.filtration.levels) r.level_dims.push_back(l.dim());
    std::vector<CrossedModuleData> gr = associated_graded(m, r.filtration);
    r.e1_total.assign(hi + 1, 0);
    bool cocomm = m.base->cocommutative();
    for (const auto& piece : gr) {
        if (!trivial_coaction(piece)) r.graded_trivial_coaction = false;
        std::vector<Index> hc = piece.dim ? cyclic_connes(build_cyclic(piece, hi + 1), 0, hi) : std::vector<Index>(hi + 1, 0);
        for (int n = 0; n <= hi; ++n) r.e1_total[n] += hc[n];
        if (cocomm && piece.dim && fold_periodic(tor_oracle(piece, 0, hi)) != hc) r.matches_folding = false;
        r.graded_hc.push_back(hc);
    }
    r.hc = cyclic_connes(build_cyclic(m, hi + 1), 0, hi);
    return r;
}

}  // namespace hopfcyc
