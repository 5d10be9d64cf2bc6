#include "hopfcyc/io.hpp"

#include <fstream>
#include <sstream>

namespace hopfcyc {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::uint64_t parse_index(const Json& j, std::uint64_t bound, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer index");
    if (j.is_number_unsigned() || j.get<std::int64_t>() >= 0) {
        auto v = j.get<std::uint64_t>();
        if (v < bound) return v;
    }
    fail(where, "index " + j.dump() + " out of range [0," + std::to_string(bound) + ")");
}

const Json& array_at(const Json& j, const std::string& where, std::size_t size = SIZE_MAX) {
    if (!j.is_array()) fail(where, "expected an array");
    if (size != SIZE_MAX && j.size() != size)
        fail(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    return j;
}

std::vector<Rational> dense_vector(const Json& j, std::size_t size, const std::string& where) {
    array_at(j, where, size);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < size; ++i) v.push_back(parse_scalar(j[i], where + "/" + std::to_string(i)));
    return v;
}

SparseVec sparse_of(const std::vector<Rational>& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(Entry{i, v[i]});
    return s;
}

SparseMatrix dense_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    array_at(j, where, rows);
    std::vector<std::vector<Rational>> m;
    for (std::size_t i = 0; i < rows; ++i)
        m.push_back(dense_vector(j[i], cols, where + "/" + std::to_string(i)));
    if (rows == 0) return SparseMatrix(0, cols);
    return SparseMatrix::from_dense(m);
}

Json dense_rows(const SparseMatrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json dense_json(const SparseVec& v, Index size) {
    Json out = Json::array();
    for (Index i = 0; i < size; ++i) out.push_back(scalar_json(coefficient(v, i)));
    return out;
}

std::vector<std::string> parse_names(const Json& j, std::size_t size, const std::string& where, const char* prefix) {
    std::vector<std::string> names;
    if (j.is_null()) {
        for (std::size_t i = 0; i < size; ++i) names.push_back(prefix + std::to_string(i));
        return names;
    }
    array_at(j, where, size);
    for (std::size_t i = 0; i < size; ++i) {
        if (!j[i].is_string()) fail(where + "/" + std::to_string(i), "expected a string");
        names.push_back(j[i].get<std::string>());
    }
    return names;
}

std::uint32_t parse_dim(const Json& j, const std::string& where) {
    const Json& d = field(j, "dim", where);
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1 || d.get<std::int64_t>() > 4096)
        fail(where + "/dim", "expected an integer in [1,4096]");
    return d.get<std::uint32_t>();
}

// [[i, j, k, c], ...] accumulated into out[i*stride+j] at k.
void parse_triples(const Json& j, std::uint64_t bi, std::uint64_t bj, std::uint64_t bk, std::vector<SparseVec>& out,
                   const std::string& where) {
    array_at(j, where);
    for (std::size_t t = 0; t < j.size(); ++t) {
        std::string w = where + "/" + std::to_string(t);
        array_at(j[t], w, 4);
        auto a = parse_index(j[t][0], bi, w + "/0");
        auto b = parse_index(j[t][1], bj, w + "/1");
        auto c = parse_index(j[t][2], bk, w + "/2");
        Rational q = parse_scalar(j[t][3], w + "/3");
        out[a * bj + b] = axpy(out[a * bj + b], q, unit_vector(c));
    }
}

Json triples_json(const std::vector<SparseVec>& v, Index stride) {
    Json out = Json::array();
    for (Index x = 0; x < v.size(); ++x)
        for (const auto& e : v[x]) out.push_back(Json::array({x / stride, x % stride, e.index, scalar_json(e.value)}));
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_inline(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && s[p] == '{';
}

}  // namespace

Json load_document(const std::string& source) {
    std::string text = looks_inline(source) ? source : slurp(source);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string name = looks_inline(source) ? "<inline>" : source;
        throw InputError(name + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
}

Rational parse_scalar(const Json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a rational string, found " + j.dump());
}

Json scalar_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(q.get_str());
}

FiniteGroupData parse_group(const Json& j, const std::string& where) {
    if (j.is_string()) {
        auto g = builtin_group(j.get<std::string>());
        if (!g) fail(where, "unknown group '" + j.get<std::string>() + "'");
        return *g;
    }
    const Json& el = array_at(field(j, "elements", where), where + "/elements");
    FiniteGroupData g;
    std::size_t n = el.size();
    if (n == 0) fail(where + "/elements", "empty group");
    g.names = parse_names(el, n, where + "/elements", "g");
    std::map<std::string, std::uint32_t> by_name;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!by_name.emplace(g.names[i], i).second) fail(where + "/elements", "duplicate element '" + g.names[i] + "'");
    const Json& t = array_at(field(j, "table", where), where + "/table", n);
    g.table.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        std::string wr = where + "/table/" + std::to_string(x);
        array_at(t[x], wr, n);
        for (std::size_t y = 0; y < n; ++y) {
            const Json& e = t[x][y];
            std::string w = wr + "/" + std::to_string(y);
            if (e.is_string()) {
                auto it = by_name.find(e.get<std::string>());
                if (it == by_name.end()) fail(w, "unknown element '" + e.get<std::string>() + "'");
                g.table[x * n + y] = it->second;
            } else {
                g.table[x * n + y] = static_cast<std::uint32_t>(parse_index(e, n, w));
            }
        }
    }
    if (auto s = j.find("sign"); s != j.end()) {
        array_at(*s, where + "/sign", n);
        for (std::size_t x = 0; x < n; ++x) {
            if (!(*s)[x].is_number_integer() || ((*s)[x] != 1 && (*s)[x] != -1))
                fail(where + "/sign/" + std::to_string(x), "expected +1 or -1");
            g.sign.push_back((*s)[x].get<int>());
        }
    }
    std::string err = validate_group(g);
    if (!err.empty()) fail(where + "/table", err);
    return g;
}

Json group_json(const FiniteGroupData& g) {
    Json out;
    out["elements"] = g.names;
    Json t = Json::array();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        Json row = Json::array();
        for (std::uint32_t y = 0; y < g.order(); ++y) row.push_back(g.names[g.mul(x, y)]);
        t.push_back(row);
    }
    out["table"] = t;
    if (!g.sign.empty()) out["sign"] = g.sign;
    return out;
}

AlgebraData parse_algebra(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("group"))
        return underlying_algebra(*group_algebra(parse_group(j["group"], where + "/group")));
    AlgebraData a;
    std::uint32_t d = parse_dim(j, where);
    a.basis = parse_names(j.contains("basis") ? j["basis"] : Json(), d, where + "/basis", "e");
    a.mult.assign(static_cast<std::size_t>(d) * d, {});
    parse_triples(field(j, "mult", where), d, d, d, a.mult, where + "/mult");
    a.unit = sparse_of(dense_vector(field(j, "unit", where), d, where + "/unit"));
    return a;
}

HopfPtr parse_hopf(const Json& j, const std::string& where) {
    if (j.is_string()) {
        auto g = builtin_group(j.get<std::string>());
        if (!g) fail(where, "unknown Hopf algebra '" + j.get<std::string>() + "'");
        return group_algebra(*g);
    }
    if (j.is_object() && j.contains("group")) return group_algebra(parse_group(j["group"], where + "/group"));
    AlgebraData a = parse_algebra(j, where);
    std::uint32_t d = a.dim();
    auto h = std::make_shared<HopfAlgebraData>();
    h->basis = a.basis;
    h->mult = a.mult;
    h->unit = a.unit;
    std::vector<SparseVec> co(static_cast<std::size_t>(d), SparseVec{});
    {
        // comult triples [i, j, k, c]: stored per i as a vector of H (x) H
        const Json& c = array_at(field(j, "comult", where), where + "/comult");
        for (std::size_t t = 0; t < c.size(); ++t) {
            std::string w = where + "/comult/" + std::to_string(t);
            array_at(c[t], w, 4);
            auto i = parse_index(c[t][0], d, w + "/0");
            auto l = parse_index(c[t][1], d, w + "/1");
            auto r = parse_index(c[t][2], d, w + "/2");
            co[i] = axpy(co[i], parse_scalar(c[t][3], w + "/3"), unit_vector(l * d + r));
        }
    }
    h->comult.resize(d);
    for (std::uint32_t i = 0; i < d; ++i)
        for (const auto& e : co[i])
            h->comult[i].push_back(CoproductTerm{static_cast<std::uint32_t>(e.index / d),
                                                 static_cast<std::uint32_t>(e.index % d), e.value});
    h->counit = dense_vector(field(j, "counit", where), d, where + "/counit");
    h->antipode = dense_matrix(field(j, "antipode", where), d, d, where + "/antipode");
    return h;
}

Json hopf_json(const HopfAlgebraData& h, bool explicit_constants) {
    if (h.group && !explicit_constants) return Json{{"group", group_json(*h.group)}};
    Json out;
    out["dim"] = h.dim();
    out["basis"] = h.basis;
    out["mult"] = triples_json(h.mult, h.dim());
    out["unit"] = dense_json(h.unit, h.dim());
    Json co = Json::array();
    for (std::uint32_t i = 0; i < h.dim(); ++i)
        for (const auto& t : h.comult[i]) co.push_back(Json::array({i, t.left, t.right, scalar_json(t.coef)}));
    out["comult"] = co;
    Json cu = Json::array();
    for (const auto& c : h.counit) cu.push_back(scalar_json(c));
    out["counit"] = cu;
    out["antipode"] = dense_rows(h.antipode);
    return out;
}

CrossedModuleData parse_crossed(const Json& j, const std::string& where) {
    const char* key = j.is_object() && j.contains("base") ? "base" : "hopf";
    HopfPtr h = parse_hopf(field(j, key, where), where + "/" + key);
    if (auto b = j.find("module"); b != j.end()) {
        if (!b->is_string()) fail(where + "/module", "expected a builtin module name");
        return resolve_module(h, b->get<std::string>());
    }
    std::uint32_t dh = h->dim();
    if (auto mp = j.find("modular_pair"); mp != j.end()) {
        std::string w = where + "/modular_pair";
        SparseVec sigma = sparse_of(dense_vector(field(*mp, "sigma", w), dh, w + "/sigma"));
        std::vector<Rational> delta = dense_vector(field(*mp, "delta", w), dh, w + "/delta");
        ModularPairReport r = modular_pair_module(h, sigma, delta);
        if (!r.pair_data_valid) fail(w, "sigma must be grouplike, delta a character with delta(sigma) = 1");
        return r.module;
    }
    std::uint32_t d = parse_dim(j, where);
    CrossedModuleData m;
    m.base = h;
    m.dim = d;
    m.labels = parse_names(j.contains("labels") ? j["labels"] : Json(), d, where + "/labels", "m");
    m.action.assign(static_cast<std::size_t>(dh) * d, {});
    parse_triples(field(j, "action", where), dh, d, d, m.action, where + "/action");
    // coaction triples [m, m', h, c] land in rho(e_m) at m'*dimH + h
    std::vector<SparseVec> co(d);
    const Json& c = array_at(field(j, "coaction", where), where + "/coaction");
    for (std::size_t t = 0; t < c.size(); ++t) {
        std::string w = where + "/coaction/" + std::to_string(t);
        array_at(c[t], w, 4);
        auto x = parse_index(c[t][0], d, w + "/0");
        auto y = parse_index(c[t][1], d, w + "/1");
        auto z = parse_index(c[t][2], dh, w + "/2");
        co[x] = axpy(co[x], parse_scalar(c[t][3], w + "/3"), unit_vector(y * dh + z));
    }
    m.coaction = std::move(co);
    return m;
}

Json crossed_json(const CrossedModuleData& m, bool explicit_constants) {
    Json out;
    out["hopf"] = hopf_json(*m.base, explicit_constants);
    out["dim"] = m.dim;
    std::vector<std::string> labels;
    for (Index i = 0; i < m.dim; ++i) labels.push_back(m.label(i));
    out["labels"] = labels;
    out["action"] = triples_json(m.action, m.dim);
    Json co = Json::array();
    Index dh = m.base->dim();
    for (Index x = 0; x < m.dim; ++x)
        for (const auto& e : m.coaction[x])
            co.push_back(Json::array({x, e.index / dh, e.index % dh, scalar_json(e.value)}));
    out["coaction"] = co;
    return out;
}

ComoduleAlgebraData parse_extension(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    std::string at = where;  // where a structure failure is reported
    try {
        if (auto b = j.find("builtin"); b != j.end()) {
            if (!b->is_string()) fail(where + "/builtin", "expected a name");
            auto e = builtin_extension(b->get<std::string>());
            if (!e) fail(where + "/builtin", "unknown extension '" + b->get<std::string>() + "'");
            return *e;
        }
        if (auto t = j.find("twisted_group_algebra"); t != j.end()) {
            std::string w = where + "/twisted_group_algebra";
            at = w;
            FiniteGroupData g = parse_group(field(*t, "group", w), w + "/group");
            std::size_t n = g.order();
            return twisted_group_algebra(g, dense_vector(field(*t, "omega", w), n * n, w + "/omega"));
        }
        if (auto c = j.find("crossed_product"); c != j.end()) {
            std::string w = where + "/crossed_product";
            at = w;
            AlgebraData b = parse_algebra(field(*c, "base", w), w + "/base");
            FiniteGroupData g = parse_group(field(*c, "group", w), w + "/group");
            std::size_t n = g.order();
            const Json& act = array_at(field(*c, "action", w), w + "/action", n);
            std::vector<SparseMatrix> action;
            for (std::size_t x = 0; x < n; ++x)
                action.push_back(dense_matrix(act[x], b.dim(), b.dim(), w + "/action/" + std::to_string(x)));
            std::vector<Rational> omega(n * n, Rational(1));
            if (c->contains("omega")) omega = dense_vector((*c)["omega"], n * n, w + "/omega");
            return crossed_product(b, g, action, omega);
        }
        AlgebraData a = parse_algebra(field(j, "algebra", where), where + "/algebra");
        if (auto gr = j.find("grading"); gr != j.end()) {
            std::string w = where + "/grading";
            at = w;
            FiniteGroupData g = parse_group(field(*gr, "group", w), w + "/group");
            const Json& deg = array_at(field(*gr, "degree", w), w + "/degree", a.dim());
            std::vector<std::uint32_t> degree;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                const Json& e = deg[i];
                std::string wi = w + "/degree/" + std::to_string(i);
                if (e.is_string()) {
                    auto it = std::find(g.names.begin(), g.names.end(), e.get<std::string>());
                    if (it == g.names.end()) fail(wi, "unknown element '" + e.get<std::string>() + "'");
                    degree.push_back(static_cast<std::uint32_t>(it - g.names.begin()));
                } else {
                    degree.push_back(static_cast<std::uint32_t>(parse_index(e, g.order(), wi)));
                }
            }
            return strongly_graded(g, a, degree);
        }
        ComoduleAlgebraData ext;
        ext.algebra = a;
        ext.base = parse_hopf(field(j, "hopf", where), where + "/hopf");
        Index dh = ext.base->dim();
        ext.coaction.assign(a.dim(), {});
        const Json& c = array_at(field(j, "coaction", where), where + "/coaction");
        for (std::size_t t = 0; t < c.size(); ++t) {
            std::string w = where + "/coaction/" + std::to_string(t);
            array_at(c[t], w, 4);
            auto x = parse_index(c[t][0], a.dim(), w + "/0");
            auto y = parse_index(c[t][1], a.dim(), w + "/1");
            auto z = parse_index(c[t][2], dh, w + "/2");
            ext.coaction[x] = axpy(ext.coaction[x], parse_scalar(c[t][3], w + "/3"), unit_vector(y * dh + z));
        }
        return ext;
    } catch (const AxiomViolation& e) {
        fail(at, e.what());
    }
}

Json extension_json(const ComoduleAlgebraData& a, bool explicit_constants) {
    Json alg;
    alg["dim"] = a.algebra.dim();
    alg["basis"] = a.algebra.basis;
    alg["mult"] = triples_json(a.algebra.mult, a.algebra.dim());
    alg["unit"] = dense_json(a.algebra.unit, a.algebra.dim());
    Json out;
    out["algebra"] = alg;
    out["hopf"] = hopf_json(*a.base, explicit_constants);
    Json co = Json::array();
    Index dh = a.base->dim();
    for (Index x = 0; x < a.coaction.size(); ++x)
        for (const auto& e : a.coaction[x])
            co.push_back(Json::array({x, e.index / dh, e.index % dh, scalar_json(e.value)}));
    out["coaction"] = co;
    return out;
}

TorusCocycle parse_torus(const Json& j, const std::string& where) {
    TorusCocycle c;
    const Json& r = field(j, "r", where);
    if (!r.is_number_integer() || r.get<std::int64_t>() < 1 || r.get<std::int64_t>() > 64)
        fail(where + "/r", "expected an integer in [1,64]");
    c.r = r.get<std::uint32_t>();
    const Json& a = array_at(field(j, "a", where), where + "/a", c.r);
    for (std::uint32_t i = 0; i < c.r; ++i) {
        std::string w = where + "/a/" + std::to_string(i);
        array_at(a[i], w, c.r);
        std::vector<Integer> row;
        for (std::uint32_t k = 0; k < c.r; ++k) {
            Rational q = parse_scalar(a[i][k], w + "/" + std::to_string(k));
            if (q.get_den() != 1) fail(w + "/" + std::to_string(k), "expected an integer");
            row.push_back(q.get_num());
        }
        c.a.push_back(row);
    }
    const Json& q = field(j, "q_order", where);
    if (q.is_string() && q.get<std::string>() == "infinite") {
        c.q_order.reset();
    } else {
        Rational m = parse_scalar(q, where + "/q_order");
        if (m.get_den() != 1 || m < 1) fail(where + "/q_order", "expected a positive integer or \"infinite\"");
        c.q_order = m.get_num();
    }
    std::string err = validate_torus(c);
    if (!err.empty()) fail(where, err);
    return c;
}

HopfPtr resolve_hopf(const std::string& source) {
    if (auto g = builtin_group(source)) return group_algebra(*g);
    return parse_hopf(load_document(source));
}

CrossedModuleData resolve_module(const HopfPtr& h, const std::string& source) {
    try {
        if (auto m = builtin_module(h, source)) return *m;
    } catch (const std::exception& e) {
        throw InputError("module '" + source + "': " + e.what());
    }
    if (looks_inline(source) || source.find('.') != std::string::npos) {
        CrossedModuleData m = parse_crossed(load_document(source));
        if (m.base->dim() != h->dim()) throw InputError("module document is over a different Hopf algebra");
        return m;
    }
    throw InputError("unknown module '" + source + "' (builtins: adjoint, coadjoint, trivial, sign)");
}

ComoduleAlgebraData resolve_extension(const std::string& source) {
    if (auto e = builtin_extension(source)) return *e;
    return parse_extension(load_document(source));
}

}  // namespace hopfcyc
