#include "coringlab/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "coringlab/linalg.hpp"

namespace coringlab {

Field FieldSpecText::realize() const {
    if (minpoly.empty()) {
        if (characteristic == 0) return Field::rationals();
        return Field::prime_field(characteristic);
    }
    return Field::extension(characteristic, minpoly);
}

// -- lexer/parser --------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_char(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect_char(char c) {
        if (!try_char(c)) throw ParseError(pos, std::string("'") + c + "'", s);
    }
    std::optional<std::string> try_ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            return s.substr(start, pos - start);
        }
        return std::nullopt;
    }
    std::optional<long long> try_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return std::stoll(s.substr(start, pos - start));
        }
        return std::nullopt;
    }
    long long expect_int() {
        auto v = try_int();
        if (!v) throw ParseError(pos, "integer", s);
        return *v;
    }
};

// Univariate polynomial with integer coefficients, e.g. "x^2+x+1" or
// "t^2-2": returns ascending coefficients. The variable name is free.
std::vector<Rat> parse_poly(Lexer& lx, char terminator) {
    std::map<int, long long> coeffs;
    std::string var;
    bool first = true;
    for (;;) {
        long long sign = 1;
        lx.skip_ws();
        if (lx.try_char('+')) {
        } else if (lx.try_char('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        long long c = 1;
        bool saw_coeff = false;
        if (auto n = lx.try_int()) {
            c = *n;
            saw_coeff = true;
        }
        lx.try_char('*');
        int exp = 0;
        if (auto id = lx.try_ident()) {
            if (var.empty()) var = *id;
            if (*id != var) throw ParseError(lx.pos, "single-variable polynomial", lx.s);
            exp = 1;
            if (lx.try_char('^')) exp = static_cast<int>(lx.expect_int());
        } else if (!saw_coeff) {
            throw ParseError(lx.pos, "coefficient or variable", lx.s);
        }
        coeffs[exp] += sign * c;
        lx.skip_ws();
        if (lx.peek() == terminator) break;
    }
    int deg = coeffs.empty() ? 0 : coeffs.rbegin()->first;
    std::vector<Rat> out(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (const auto& [e, c] : coeffs) out[static_cast<std::size_t>(e)] = Rat(c);
    return out;
}

FieldSpecText parse_field(Lexer& lx) {
    auto id = lx.try_ident();
    if (!id) throw ParseError(lx.pos, "field (Q or GF)", lx.s);
    FieldSpecText fs;
    if (*id == "Q") {
        fs.characteristic = 0;
        if (lx.try_char('(')) {
            fs.minpoly = parse_poly(lx, ')');
            lx.expect_char(')');
        }
        return fs;
    }
    if (*id == "GF") {
        lx.expect_char('(');
        fs.characteristic = lx.expect_int();
        if (lx.try_char('^')) {
            long long n = lx.expect_int();
            lx.expect_char(';');
            fs.minpoly = parse_poly(lx, ')');
            if (static_cast<long long>(fs.minpoly.size()) - 1 != n)
                throw ParseError(lx.pos, "minimal polynomial of degree " + std::to_string(n), lx.s);
        }
        lx.expect_char(')');
        return fs;
    }
    throw ParseError(lx.pos - id->size(), "Q or GF", lx.s);
}

}  // namespace

FieldSpecText parse_field_spec(const std::string& text) {
    Lexer lx{text};
    FieldSpecText fs = parse_field(lx);
    if (!lx.eof()) throw ParseError(lx.pos, "end of input", text);
    // Triggers primality/irreducibility validation.
    fs.realize();
    return fs;
}

AlgebraPresentation parse_presentation(const std::string& text) {
    Lexer lx{text};
    PolyQuotientData pq;
    pq.field = parse_field(lx);
    pq.field.realize();  // validate characteristic/minpoly up front
    if (lx.eof()) {
        // A bare field token: zero variables.
        AlgebraPresentation out;
        out.kind = AlgebraPresentation::Kind::PolynomialQuotient;
        out.data = std::move(pq);
        return out;
    }
    lx.expect_char('[');
    for (;;) {
        auto id = lx.try_ident();
        if (!id) throw ParseError(lx.pos, "variable name", text);
        VarSpec v;
        v.name = *id;
        if (lx.try_char(':')) v.degree = static_cast<int>(lx.expect_int());
        if (v.degree < 1) throw ParseError(lx.pos, "variable degree >= 1", text);
        for (const auto& w : pq.vars)
            if (w.name == v.name) throw ParseError(lx.pos, "distinct variable names", text);
        pq.vars.push_back(std::move(v));
        if (!lx.try_char(',')) break;
    }
    lx.expect_char(']');
    if (lx.try_char('/')) {
        lx.expect_char('(');
        for (;;) {
            // one monomial: factor ('*' factor)*
            std::vector<int> expv(pq.vars.size(), 0);
            for (;;) {
                auto id = lx.try_ident();
                if (!id) throw ParseError(lx.pos, "monomial factor", text);
                auto vi = std::find_if(pq.vars.begin(), pq.vars.end(),
                                       [&](const VarSpec& v) { return v.name == *id; });
                if (vi == pq.vars.end()) throw ParseError(lx.pos - id->size(), "declared variable", text);
                int e = 1;
                if (lx.try_char('^')) e = static_cast<int>(lx.expect_int());
                expv[static_cast<std::size_t>(vi - pq.vars.begin())] += e;
                if (!lx.try_char('*')) break;
            }
            lx.skip_ws();
            if (lx.peek() == '+' || lx.peek() == '-')
                throw NonMonomialRelationError("relation at position " + std::to_string(lx.pos) +
                                               " is not a monomial; only monomial/quiver relations supported");
            pq.relations.push_back(std::move(expv));
            if (!lx.try_char(',')) break;
        }
        lx.expect_char(')');
    }
    if (!lx.eof()) throw ParseError(lx.pos, "end of input", text);
    AlgebraPresentation out;
    out.kind = AlgebraPresentation::Kind::PolynomialQuotient;
    out.data = std::move(pq);
    return out;
}

// -- realization ----------------------------------------------------------

namespace {

struct Monomial {
    std::vector<int> exp;
    int degree;
};

// Surviving monomials of degree <= bound, ordered by degree then lex.
std::vector<Monomial> enumerate_monomials(const std::vector<VarSpec>& vars,
                                          const std::vector<std::vector<int>>& relations, int degree_bound) {
    auto killed = [&](const std::vector<int>& exp) {
        for (const auto& r : relations) {
            bool div = true;
            for (std::size_t i = 0; i < exp.size() && div; ++i)
                if (exp[i] < r[i]) div = false;
            if (div) return true;
        }
        return false;
    };
    std::vector<Monomial> basis;
    std::vector<int> cur(vars.size(), 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t v, int deg) {
        if (v == vars.size()) {
            if (!killed(cur)) basis.push_back({cur, deg});
            return;
        }
        int dv = vars[v].degree;
        for (int e = 0; deg + e * dv <= degree_bound; ++e) {
            cur[v] = e;
            walk(v + 1, deg + e * dv);
        }
        cur[v] = 0;
    };
    walk(0, 0);
    std::stable_sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.exp > b.exp;  // lex with earlier variables first: 1, x, y, x*y
    });
    return basis;
}

std::string monomial_label(const std::vector<int>& exp, const std::vector<VarSpec>& vars) {
    std::string out;
    for (std::size_t v = 0; v < exp.size(); ++v) {
        if (exp[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[v].name;
        if (exp[v] > 1) out += "^" + std::to_string(exp[v]);
    }
    return out.empty() ? "1" : out;
}

bool divisible(const std::vector<int>& m, const std::vector<int>& d) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < d[i]) return false;
    return true;
}

GradedAlgebra realize_poly_quotient(const PolyQuotientData& pq, int degree_bound) {
    Field k = pq.field.realize();
    auto killed = [&](const std::vector<int>& exp) {
        for (const auto& r : pq.relations)
            if (divisible(exp, r)) return true;
        return false;
    };
    std::vector<Monomial> basis = enumerate_monomials(pq.vars, pq.relations, degree_bound);
    std::map<std::vector<int>, int> index_of;
    GradedAlgebra A;
    A.field = k;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index_of[basis[i].exp] = static_cast<int>(i);
        A.space.degrees.push_back(basis[i].degree);
        A.space.labels.push_back(monomial_label(basis[i].exp, pq.vars));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (basis[i].degree + basis[j].degree > degree_bound) continue;
            std::vector<int> prod(pq.vars.size());
            for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = basis[i].exp[v] + basis[j].exp[v];
            if (killed(prod)) continue;
            auto it = index_of.find(prod);
            if (it == index_of.end()) continue;  // beyond bound (possible with mixed degrees)
            A.mult[{static_cast<int>(i), static_cast<int>(j)}] = sv_unit(k, it->second);
        }
    A.unit = sv_unit(k, index_of.at(std::vector<int>(pq.vars.size(), 0)));
    A.augmentation = A.unit;  // "coefficient of 1": algebra map for monomial quotients
    A.degree_bound = degree_bound;
    // Infinite-dimensional iff some variable has no pure-power relation.
    A.truncated = false;
    for (std::size_t v = 0; v < pq.vars.size(); ++v) {
        bool bounded = false;
        for (const auto& r : pq.relations) {
            bool pure = r[v] > 0;
            for (std::size_t w = 0; w < r.size() && pure; ++w)
                if (w != v && r[w] > 0) pure = false;
            if (pure) bounded = true;
        }
        if (!bounded) A.truncated = true;
    }
    return A;
}

GradedAlgebra realize_quiver(const QuiverData& q, int degree_bound) {
    Field k = q.field.realize();
    // Validate arrows and relations.
    std::map<std::string, int> arrow_index;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto& ar = q.arrows[a];
        if (ar.from < 0 || ar.from >= q.vertices || ar.to < 0 || ar.to >= q.vertices)
            throw Error("quiver arrow endpoint out of range");
        if (!arrow_index.emplace(ar.name, static_cast<int>(a)).second) throw Error("duplicate arrow name");
    }
    struct Path {
        std::vector<int> arrows;  // traversal order
        int src, tgt;
    };
    auto path_endpoints = [&](const std::vector<int>& arrows, int start_vertex) -> std::pair<int, int> {
        int s = start_vertex, t = start_vertex;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            const auto& ar = q.arrows[static_cast<std::size_t>(arrows[i])];
            if (i == 0) s = ar.from;
            if (static_cast<int>(i) > 0 && ar.from != t) throw Error("relation path is not composable");
            t = ar.to;
        }
        return {s, t};
    };
    for (const auto& rel : q.relations) {
        if (rel.empty()) throw Error("empty quiver relation");
        std::optional<std::pair<int, int>> ep;
        std::optional<std::size_t> len;
        for (const auto& term : rel) {
            if (term.path.empty()) throw Error("quiver relation terms must be paths of length >= 1");
            auto e = path_endpoints(term.path, -1);
            if (ep && *ep != e) throw Error("quiver relation terms are not parallel paths");
            ep = e;
            if (len && *len != term.path.size())
                throw UnsupportedError("quiver relations must be homogeneous in path length (grading by length)");
            len = term.path.size();
        }
    }
    // Enumerate paths by (length, src, lexicographic arrow sequence).
    std::vector<std::vector<Path>> by_len(static_cast<std::size_t>(degree_bound) + 2);
    for (int v = 0; v < q.vertices; ++v) by_len[0].push_back({{}, v, v});
    for (int len = 1; len <= degree_bound + 1; ++len)
        for (const auto& p : by_len[static_cast<std::size_t>(len - 1)])
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].from == p.tgt) {
                    Path np = p;
                    np.arrows.push_back(static_cast<int>(a));
                    np.tgt = q.arrows[a].to;
                    by_len[static_cast<std::size_t>(len)].push_back(std::move(np));
                }
    // Relation span per (length, src, tgt) slice, from u.r.v paddings.
    // Flat path indexing per slice in enumeration order.
    struct Slice {
        std::vector<Path> paths;
        std::map<std::vector<int>, int> index;  // arrows -> position (src/tgt implied)
        RowReducer red;
    };
    std::map<std::tuple<int, int, int>, Slice> slices;  // (len, src, tgt)
    for (int len = 0; len <= degree_bound + 1; ++len)
        for (const auto& p : by_len[static_cast<std::size_t>(len)]) {
            auto key = std::make_tuple(len, p.src, p.tgt);
            auto it = slices.find(key);
            if (it == slices.end()) it = slices.emplace(key, Slice{{}, {}, RowReducer(k, 0)}).first;
            it->second.index[p.arrows] = static_cast<int>(it->second.paths.size());
            it->second.paths.push_back(p);
        }
    for (auto& [key, sl] : slices) sl.red = RowReducer(k, static_cast<int>(sl.paths.size()));
    for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto& rel = q.relations[r];
        auto [rs, rt] = path_endpoints(rel.front().path, -1);
        int rlen = static_cast<int>(rel.front().path.size());
        // pad with u: rt -> t and v: s -> rs, total length <= bound + 1
        for (int len = rlen; len <= degree_bound + 1; ++len)
            for (int lv = 0; lv + rlen <= len; ++lv) {
                int lu = len - rlen - lv;
                for (const auto& v : by_len[static_cast<std::size_t>(lv)]) {
                    if (v.tgt != rs) continue;
                    for (const auto& u : by_len[static_cast<std::size_t>(lu)]) {
                        if (u.src != rt) continue;
                        auto key = std::make_tuple(len, v.src, u.tgt);
                        auto& sl = slices.at(key);
                        SparseVec vec;
                        for (const auto& term : rel) {
                            std::vector<int> arrows = v.arrows;
                            arrows.insert(arrows.end(), term.path.begin(), term.path.end());
                            arrows.insert(arrows.end(), u.arrows.begin(), u.arrows.end());
                            Scalar c = k.from_rat(term.coeff);
                            if (!c.is_zero()) vec.emplace_back(sl.index.at(arrows), c);
                        }
                        sl.red.insert(sv_normalize(k, std::move(vec)));
                    }
                }
            }
    }
    // Surviving basis: free columns of each slice, ordered by slice key.
    GradedAlgebra A;
    A.field = k;
    std::map<std::tuple<int, int, int>, std::map<int, int>> global_of;  // slice -> (slice pos -> global idx)
    auto path_label = [&](const Path& p) {
        if (p.arrows.empty()) return "e" + std::to_string(p.src + 1);
        std::string out;
        for (int a : p.arrows) {
            if (!out.empty()) out += "*";
            out += q.arrows[static_cast<std::size_t>(a)].name;
        }
        return out;
    };
    for (auto& [key, sl] : slices) {
        if (std::get<0>(key) > degree_bound) continue;
        for (int f : sl.red.free_cols()) {
            global_of[key][f] = A.dim();
            A.space.degrees.push_back(std::get<0>(key));
            A.space.labels.push_back(path_label(sl.paths[static_cast<std::size_t>(f)]));
        }
    }
    // Unit = sum of surviving vertex idempotents; error if any died.
    SparseVec unit;
    for (int v = 0; v < q.vertices; ++v) {
        auto key = std::make_tuple(0, v, v);
        auto it = slices.find(key);
        if (it == slices.end()) throw RelationInconsistencyError("vertex " + std::to_string(v + 1) + " has no path");
        auto& sl = it->second;
        SparseVec ev = sv_unit(k, sl.index.at({}));
        if (!sl.red.residue(ev).empty()) {
            auto g = global_of[key].find(sl.index.at({}));
            if (g == global_of[key].end())
                throw RelationInconsistencyError("relations kill the idempotent e" + std::to_string(v + 1));
            unit.emplace_back(g->second, k.one());
        } else {
            throw RelationInconsistencyError("relations force e" + std::to_string(v + 1) + " = 0");
        }
    }
    A.unit = sv_normalize(k, std::move(unit));
    // Structure constants: concatenate representatives, reduce in the slice.
    auto express_in_basis = [&](const std::vector<int>& arrows, int src, int tgt) -> SparseVec {
        int len = static_cast<int>(arrows.size());
        if (len > degree_bound) return {};
        auto key = std::make_tuple(len, src, tgt);
        auto& sl = slices.at(key);
        SparseVec res = sl.red.residue(sv_unit(k, sl.index.at(arrows)));
        SparseVec out;
        for (const auto& [pos, c] : res) out.emplace_back(global_of[key].at(pos), c);
        return sv_normalize(k, std::move(out));
    };
    // Map global basis index back to its path.
    std::vector<Path> basis_path(static_cast<std::size_t>(A.dim()), Path{});
    for (const auto& [key, m] : global_of)
        for (const auto& [pos, g] : m) basis_path[static_cast<std::size_t>(g)] = slices.at(key).paths[static_cast<std::size_t>(pos)];
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            // product i*j = "apply j first, then i": traversal = j.arrows ++ i.arrows
            const Path& pi = basis_path[static_cast<std::size_t>(i)];
            const Path& pj = basis_path[static_cast<std::size_t>(j)];
            if (pj.tgt != pi.src) continue;
            std::vector<int> arrows = pj.arrows;
            arrows.insert(arrows.end(), pi.arrows.begin(), pi.arrows.end());
            SparseVec prod = express_in_basis(arrows, pj.src, pi.tgt);
            if (!prod.empty()) A.mult[{i, j}] = std::move(prod);
        }
    A.degree_bound = degree_bound;
    // Truncated iff some path of length bound+1 survives the relation span.
    A.truncated = false;
    for (auto& [key, sl] : slices) {
        if (std::get<0>(key) != degree_bound + 1) continue;
        if (static_cast<int>(sl.paths.size()) > sl.red.rank()) A.truncated = true;
    }
    // Path algebras with several vertices are not augmented.
    if (q.vertices == 1 && q.arrows.empty()) A.augmentation = A.unit;
    return A;
}

}  // namespace

std::pair<GradedAlgebra, HopfStructure> elementary_abelian_hopf(std::int64_t p, int rank, bool graded) {
    if (rank < 1) throw Error("rank must be >= 1");
    Field k = Field::prime_field(p);
    PolyQuotientData pq;
    pq.field.characteristic = p;
    for (int i = 0; i < rank; ++i) pq.vars.push_back({"x" + std::to_string(i + 1), 1});
    for (int i = 0; i < rank; ++i) {
        std::vector<int> r(static_cast<std::size_t>(rank), 0);
        r[static_cast<std::size_t>(i)] = static_cast<int>(p);
        pq.relations.push_back(std::move(r));
    }
    int top = static_cast<int>(p - 1) * rank;
    GradedAlgebra A = realize_poly_quotient(pq, top);
    A.truncated = false;
    if (!graded) {
        for (auto& d : A.space.degrees) d = 0;
        A.degree_bound = 0;
    }
    std::vector<std::vector<int>> exps;
    for (const auto& m : enumerate_monomials(pq.vars, pq.relations, top)) exps.push_back(m.exp);
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < exps.size(); ++i) idx[exps[i]] = static_cast<int>(i);
    int n = A.dim();
    HopfStructure H;
    H.comult.resize(static_cast<std::size_t>(n));
    // Binomial table mod p (exponents < p, so ordinary binomials reduced mod p).
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int i = 0; i < n; ++i) {
        const auto& a = exps[static_cast<std::size_t>(i)];
        // Delta(x^a) = sum_{b <= a} prod binom(a_v, b_v) x^b (x) x^(a-b)
        std::vector<int> b(static_cast<std::size_t>(rank), 0);
        SparseVec out;
        std::function<void(int, long long)> walk = [&](int v, long long coeff) {
            if (v == rank) {
                std::vector<int> c(static_cast<std::size_t>(rank));
                for (int w = 0; w < rank; ++w)
                    c[static_cast<std::size_t>(w)] = a[static_cast<std::size_t>(w)] - b[static_cast<std::size_t>(w)];
                Scalar s = k.from_int(coeff);
                if (!s.is_zero()) out.emplace_back(tensor_index(idx.at(b), idx.at(c), n), s);
                return;
            }
            for (int e = 0; e <= a[static_cast<std::size_t>(v)]; ++e) {
                b[static_cast<std::size_t>(v)] = e;
                walk(v + 1, coeff * binom(a[static_cast<std::size_t>(v)], e));
            }
            b[static_cast<std::size_t>(v)] = 0;
        };
        walk(0, 1);
        H.comult[static_cast<std::size_t>(i)] = sv_normalize(k, std::move(out));
    }
    H.antipode = SparseMatrix(k, n, n);
    for (int i = 0; i < n; ++i) {
        int total = 0;
        for (int x : exps[static_cast<std::size_t>(i)]) total += x;
        H.antipode.set(i, i, total % 2 == 0 ? k.one() : k.neg(k.one()));
    }
    H.counit = *A.augmentation;
    return {std::move(A), std::move(H)};
}

std::pair<GradedAlgebra, HopfStructure> exterior_hopf(int n, bool graded, const Field& k) {
    if (n < 0) throw Error("generator count must be >= 0");
    // Basis: subsets of {1..n} as bitmasks, ordered by (popcount, value).
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::map<unsigned, int> idx;
    GradedAlgebra A;
    A.field = k;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        idx[masks[i]] = static_cast<int>(i);
        int pc = __builtin_popcount(masks[i]);
        A.space.degrees.push_back(graded ? pc : 0);
        std::string lab;
        for (int g = 0; g < n; ++g)
            if (masks[i] >> g & 1u) {
                if (!lab.empty()) lab += "*";
                lab += "e" + std::to_string(g + 1);
            }
        A.space.labels.push_back(lab.empty() ? "1" : lab);
    }
    // Wedge sign: number of transpositions to interleave S and T.
    auto wedge = [&](unsigned s, unsigned t) -> std::pair<int, unsigned> {
        if (s & t) return {0, 0};
        int sign = 1;
        for (int g = 0; g < n; ++g)
            if (t >> g & 1u) {
                unsigned higher = s >> (g + 1);
                if (__builtin_popcount(higher) % 2 == 1) sign = -sign;
            }
        return {sign, s | t};
    };
    for (unsigned s : masks)
        for (unsigned t : masks) {
            auto [sign, u] = wedge(s, t);
            if (sign == 0) continue;
            Scalar c = sign > 0 ? k.one() : k.neg(k.one());
            if (c.is_zero()) continue;
            A.mult[{idx.at(s), idx.at(t)}] = SparseVec{{idx.at(u), c}};
        }
    A.unit = sv_unit(k, idx.at(0u));
    A.augmentation = A.unit;
    A.degree_bound = graded ? n : 0;
    HopfStructure H;
    int dim = A.dim();
    H.comult.resize(static_cast<std::size_t>(dim));
    // Delta(e_S) = sum over splits S = T ⊔ U of sign(T, U) e_T (x) e_U,
    // the sign being the wedge shuffle sign (so that Delta is an algebra map).
    for (unsigned s : masks) {
        SparseVec out;
        // enumerate submasks of s
        unsigned t = s;
        for (;;) {
            unsigned u = s & ~t;
            auto [sign, whole] = wedge(t, u);
            (void)whole;
            if (sign != 0) {
                Scalar c = sign > 0 ? k.one() : k.neg(k.one());
                out.emplace_back(tensor_index(idx.at(t), idx.at(u), dim), c);
            }
            if (t == 0) break;
            t = (t - 1) & s;
        }
        H.comult[static_cast<std::size_t>(idx.at(s))] = sv_normalize(k, std::move(out));
    }
    H.antipode = SparseMatrix(k, dim, dim);
    for (unsigned s : masks) {
        int pc = __builtin_popcount(s);
        // Graded: S is a Koszul anti-morphism, so reversing k odd generators
        // gives (-1)^k. Ungraded: plain reversal, (-1)^{k(k+1)/2} (a Hopf
        // algebra only in characteristic 2, where the sign is moot).
        int exp = graded ? pc : pc * (pc + 1) / 2;
        H.antipode.set(idx.at(s), idx.at(s), exp % 2 == 0 ? k.one() : k.neg(k.one()));
    }
    H.counit = *A.augmentation;
    return {std::move(A), std::move(H)};
}

GradedAlgebra realize(const AlgebraPresentation& pres, int degree_bound) {
    if (degree_bound < 0) throw Error("degree bound must be >= 0");
    switch (pres.kind) {
        case AlgebraPresentation::Kind::PolynomialQuotient:
            return realize_poly_quotient(std::get<PolyQuotientData>(pres.data), degree_bound);
        case AlgebraPresentation::Kind::Exterior: {
            const auto& e = std::get<ExteriorData>(pres.data);
            return exterior_hopf(e.generators, e.graded, e.field.realize()).first;
        }
        case AlgebraPresentation::Kind::GroupAlgebraElementaryAbelian: {
            const auto& g = std::get<GroupAlgebraData>(pres.data);
            return elementary_abelian_hopf(g.p, g.rank, g.graded).first;
        }
        case AlgebraPresentation::Kind::QuiverWithRelations:
            return realize_quiver(std::get<QuiverData>(pres.data), degree_bound);
    }
    throw Error("unreachable");
}

GradedAlgebra realize_text(const std::string& text, int degree_bound) {
    AlgebraPresentation pres = parse_presentation(text);
    if (pres.kind == AlgebraPresentation::Kind::PolynomialQuotient) {
        const auto& pq = std::get<PolyQuotientData>(pres.data);
        if (pq.vars.empty() && !pq.field.minpoly.empty()) return algebra_from_extension(pq.field.realize());
    }
    return realize(pres, degree_bound);
}

}  // namespace coringlab
