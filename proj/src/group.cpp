#include "hopfcyc/group.hpp"

#include "hopfcyc/scalar.hpp"

#include <algorithm>
#include <map>

namespace hopfcyc {

std::uint32_t FiniteGroupData::identity() const {
    for (std::uint32_t e = 0; e < order(); ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < order() && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) return e;
    }
    throw InputError("group has no identity element");
}

std::uint32_t FiniteGroupData::inverse(std::uint32_t x) const {
    std::uint32_t e = identity();
    for (std::uint32_t y = 0; y < order(); ++y)
        if (mul(x, y) == e) return y;
    throw InputError("element " + names[x] + " has no inverse");
}

std::uint32_t FiniteGroupData::element(const std::string& name) const {
    for (std::uint32_t x = 0; x < order(); ++x)
        if (names[x] == name) return x;
    throw InputError("unknown group element '" + name + "'");
}

std::string validate_group(const FiniteGroupData& g) {
    std::uint32_t n = g.order();
    if (n == 0) return "empty group";
    if (g.table.size() != static_cast<std::size_t>(n) * n) return "table has wrong size";
    for (auto v : g.table)
        if (v >= n) return "table entry out of range";
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z)
                if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
                    return "not associative at (" + g.names[x] + "," + g.names[y] + "," + g.names[z] + ")";
    try {
        std::uint32_t e = g.identity();
        for (std::uint32_t x = 0; x < n; ++x) {
            std::uint32_t y = g.inverse(x);
            if (g.mul(y, x) != e) return "element " + g.names[x] + " has no two-sided inverse";
        }
    } catch (const InputError& err) {
        return err.what();
    }
    if (!g.sign.empty()) {
        if (g.sign.size() != n) return "sign character has wrong length";
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y)
                if (g.sign[g.mul(x, y)] != g.sign[x] * g.sign[y]) return "sign is not a homomorphism";
    }
    return {};
}

FiniteGroupData cyclic_group(std::uint32_t n) {
    FiniteGroupData g;
    for (std::uint32_t k = 0; k < n; ++k) g.names.push_back(k == 0 ? "e" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    g.table.resize(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) g.table[x * n + y] = (x + y) % n;
    if (n % 2 == 0)
        for (std::uint32_t k = 0; k < n; ++k) g.sign.push_back(k % 2 ? -1 : 1);
    return g;
}

FiniteGroupData direct_product(const FiniteGroupData& a, const FiniteGroupData& b) {
    FiniteGroupData g;
    std::uint32_t na = a.order(), nb = b.order();
    for (std::uint32_t x = 0; x < na; ++x)
        for (std::uint32_t y = 0; y < nb; ++y) g.names.push_back("(" + a.names[x] + "," + b.names[y] + ")");
    std::uint32_t n = na * nb;
    g.table.resize(n * n);
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
            g.table[p * n + q] = a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb);
    if (!a.sign.empty())
        for (std::uint32_t p = 0; p < n; ++p) g.sign.push_back(a.sign[p / nb]);
    return g;
}

FiniteGroupData permutation_group(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& generators) {
    using Perm = std::vector<std::uint32_t>;
    Perm id(degree);
    for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
    std::vector<Perm> elems{id};
    std::map<Perm, std::uint32_t> index{{id, 0}};
    auto compose = [&](const Perm& p, const Perm& q) {  // (p q)(i) = p(q(i))
        Perm r(degree);
        for (std::uint32_t i = 0; i < degree; ++i) r[i] = p[q[i]];
        return r;
    };
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& gen : generators) {
            Perm r = compose(elems[k], gen);
            if (!index.count(r)) {
                index.emplace(r, static_cast<std::uint32_t>(elems.size()));
                elems.push_back(r);
            }
        }
    }
    FiniteGroupData g;
    std::uint32_t n = static_cast<std::uint32_t>(elems.size());
    for (const auto& p : elems) {
        std::string name;
        for (auto v : p) name += std::to_string(v + 1);
        g.names.push_back(name);
        // Parity by counting inversions.
        int inv = 0;
        for (std::uint32_t i = 0; i < degree; ++i)
            for (std::uint32_t j = i + 1; j < degree; ++j)
                if (p[i] > p[j]) ++inv;
        g.sign.push_back(inv % 2 ? -1 : 1);
    }
    g.table.resize(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) g.table[x * n + y] = index.at(compose(elems[x], elems[y]));
    return g;
}

FiniteGroupData symmetric_group3() { return permutation_group(3, {{1, 0, 2}, {1, 2, 0}}); }

FiniteGroupData dihedral_group8() { return permutation_group(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

std::optional<FiniteGroupData> builtin_group(std::string name) {
    if (!name.empty() && (name[0] == 'k' || name[0] == 'K')) name = name.substr(1);
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);
    if (name == "z2") return cyclic_group(2);
    if (name == "z3") return cyclic_group(3);
    if (name == "z4") return cyclic_group(4);
    if (name == "z2xz2") return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "s3") return symmetric_group3();
    if (name == "d4") return dihedral_group8();
    return std::nullopt;
}

std::vector<std::string> builtin_group_names() { return {"z2", "z3", "z4", "z2xz2", "s3", "d4"}; }

SubgroupData subgroup(const FiniteGroupData& g, std::vector<std::uint32_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t k = 0; k < elements.size(); ++k) pos[elements[k]] = k;
    SubgroupData s;
    s.embedding = elements;
    std::uint32_t n = static_cast<std::uint32_t>(elements.size());
    for (auto x : elements) {
        s.group.names.push_back(g.names[x]);
        if (!g.sign.empty()) s.group.sign.push_back(g.sign[x]);
    }
    s.group.table.resize(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            auto it = pos.find(g.mul(elements[a], elements[b]));
            if (it == pos.end()) throw InputError("subset is not closed under multiplication");
            s.group.table[a * n + b] = it->second;
        }
    std::string err = validate_group(s.group);
    if (!err.empty()) throw InputError("not a subgroup: " + err);
    return s;
}

std::vector<ConjugacyClassData> conjugacy_data(const FiniteGroupData& g) {
    std::uint32_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<ConjugacyClassData> out;
    // Identity class first, then by element index.
    std::vector<std::uint32_t> order_list{g.identity()};
    for (std::uint32_t x = 0; x < n; ++x)
        if (x != g.identity()) order_list.push_back(x);
    for (auto x : order_list) {
        if (seen[x]) continue;
        ConjugacyClassData c;
        c.representative = x;
        for (std::uint32_t h = 0; h < n; ++h) {
            std::uint32_t y = g.mul(g.mul(h, x), g.inverse(h));
            if (!seen[y]) {
                seen[y] = true;
                c.members.push_back(y);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        std::vector<std::uint32_t> cent;
        for (std::uint32_t h = 0; h < n; ++h)
            if (g.mul(h, x) == g.mul(x, h)) cent.push_back(h);
        c.centralizer = subgroup(g, cent);
        const FiniteGroupData& gx = c.centralizer.group;
        std::uint32_t m = gx.order();
        std::uint32_t xl = 0;
        for (std::uint32_t k = 0; k < m; ++k)
            if (c.centralizer.embedding[k] == x) xl = k;
        std::vector<std::uint32_t> powers;
        std::uint32_t p = gx.identity();
        do {
            powers.push_back(p);
            p = gx.mul(p, xl);
        } while (p != gx.identity());
        c.reduced_of.assign(m, UINT32_MAX);
        for (std::uint32_t k = 0; k < m; ++k) {
            if (c.reduced_of[k] != UINT32_MAX) continue;
            auto coset = static_cast<std::uint32_t>(c.coset_rep.size());
            c.coset_rep.push_back(k);
            std::string name = "[" + gx.names[k] + "]";
            c.reduced.names.push_back(name);
            for (auto q : powers) c.reduced_of[gx.mul(k, q)] = coset;
        }
        std::uint32_t r = c.reduced.order();
        c.reduced.table.resize(r * r);
        for (std::uint32_t a = 0; a < r; ++a)
            for (std::uint32_t b = 0; b < r; ++b)
                c.reduced.table[a * r + b] = c.reduced_of[gx.mul(c.coset_rep[a], c.coset_rep[b])];
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace hopfcyc
