#include "coringlab/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coringlab {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error("division by zero in GF(p)");
    return mod_pos(t, p);
}

// Coefficient arithmetic shared by the two extension implementations.
struct ModOps {
    std::int64_t p;
    using T = std::int64_t;
    T zero() const { return 0; }
    T one() const { return 1 % p; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const { return mod_pos(a + b, p); }
    T sub(T a, T b) const { return mod_pos(a - b, p); }
    T mul(T a, T b) const { return mod_pos(a * b, p); }
    T neg(T a) const { return mod_pos(-a, p); }
    T inv(T a) const { return mod_inv(a, p); }
};

struct RatOps {
    using T = Rat;
    T zero() const { return Rat(0); }
    T one() const { return Rat(1); }
    bool is_zero(const T& a) const { return a == 0; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const {
        if (a == 0) throw Error("division by zero in Q");
        return 1 / a;
    }
};

template <class Ops>
using PolyOf = std::vector<typename Ops::T>;

template <class Ops>
void poly_trim(PolyOf<Ops>& f, const Ops& ops) {
    while (!f.empty() && ops.is_zero(f.back())) f.pop_back();
}

// f mod g with g monic.
template <class Ops>
PolyOf<Ops> poly_mod(PolyOf<Ops> f, const PolyOf<Ops>& g, const Ops& ops) {
    poly_trim(f, ops);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        auto c = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (!ops.is_zero(c))
            for (std::size_t i = 0; i + 1 < g.size(); ++i) f[shift + i] = ops.sub(f[shift + i], ops.mul(c, g[i]));
        f.pop_back();
        poly_trim(f, ops);
    }
    return f;
}

template <class Ops>
PolyOf<Ops> poly_mul(const PolyOf<Ops>& a, const PolyOf<Ops>& b, const Ops& ops) {
    if (a.empty() || b.empty()) return {};
    PolyOf<Ops> out(a.size() + b.size() - 1, ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ops.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ops.add(out[i + j], ops.mul(a[i], b[j]));
    }
    return out;
}

// (quotient, remainder) of f by g, g nonzero (not necessarily monic).
template <class Ops>
std::pair<PolyOf<Ops>, PolyOf<Ops>> poly_divmod(PolyOf<Ops> f, const PolyOf<Ops>& g, const Ops& ops) {
    poly_trim(f, ops);
    const std::size_t dg = g.size() - 1;
    auto lg_inv = ops.inv(g.back());
    PolyOf<Ops> q;
    if (f.size() > dg) q.assign(f.size() - dg, ops.zero());
    while (f.size() > dg) {
        auto c = ops.mul(f.back(), lg_inv);
        std::size_t shift = f.size() - 1 - dg;
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = ops.sub(f[shift + i], ops.mul(c, g[i]));
        poly_trim(f, ops);
        if (f.size() <= dg) break;
    }
    poly_trim(f, ops);
    return {std::move(q), std::move(f)};
}

// Inverse of a modulo monic m, via extended Euclid. Throws on non-units.
template <class Ops>
PolyOf<Ops> poly_inv_mod(PolyOf<Ops> a, const PolyOf<Ops>& m, const Ops& ops) {
    PolyOf<Ops> r0 = m, r1 = poly_mod(std::move(a), m, ops);
    PolyOf<Ops> t0, t1 = {ops.one()};
    if (r1.empty()) throw Error("division by zero in extension field");
    while (!r1.empty() && r1.size() > 1) {
        auto [q, r2] = poly_divmod(r0, r1, ops);
        // t2 = t0 - q*t1
        PolyOf<Ops> qt = poly_mul(q, t1, ops);
        PolyOf<Ops> t2(std::max(t0.size(), qt.size()), ops.zero());
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = ops.sub(t2[i], qt[i]);
        poly_trim(t2, ops);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw Error("element is a zero divisor; minimal polynomial not irreducible");
    // r1 is a nonzero constant: scale t1 by its inverse.
    auto c = ops.inv(r1[0]);
    for (auto& x : t1) x = ops.mul(x, c);
    return poly_mod(std::move(t1), m, ops);
}

template <class Ops>
typename Ops::T poly_eval(const PolyOf<Ops>& f, const typename Ops::T& x, const Ops& ops) {
    auto acc = ops.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = ops.add(ops.mul(acc, x), f[i]);
    return acc;
}

std::vector<BigInt> divisors_of(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    if (n == 0) return out;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
        if (d > 1000000) break;  // degree-4 checks only make sense for small inputs
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::int64_t>)
                return v == 0;
            else if constexpr (std::is_same_v<V, Rat>)
                return v == 0;
            else {
                for (const auto& c : v)
                    if (!(c == typename V::value_type{})) return false;
                return true;
            }
        },
        payload_);
}

// -- Field internals ----------------------------------------------------

struct Field::Data {
    std::int64_t p = 0;               // characteristic, 0 for Q
    int deg = 1;                      // extension degree
    std::vector<Rat> minpoly;         // ascending, monic; empty if deg == 1
    std::vector<std::int64_t> mp_i;   // minpoly as residues when p > 0
    std::uint64_t fkey = 0;
};

namespace {

std::uint64_t compute_fkey(std::int64_t p, const std::vector<Rat>& minpoly) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, static_cast<std::uint64_t>(p));
    for (const auto& c : minpoly) {
        std::ostringstream os;
        os << c;
        for (char ch : os.str()) h = fnv1a(h, static_cast<std::uint64_t>(static_cast<unsigned char>(ch)));
        h = fnv1a(h, 0x2cULL);
    }
    return h;
}

// Irreducibility over GF(p): roots for degree <= 3, plus monic quadratic
// divisors for degree 4. Enumeration is feasible because the fields in play
// are tiny.
bool irreducible_mod_p(const std::vector<std::int64_t>& f, std::int64_t p) {
    ModOps ops{p};
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return true;
    if (p > 100000) return true;  // out of enumeration range; accept unchecked
    for (std::int64_t x = 0; x < p; ++x)
        if (ops.is_zero(poly_eval<ModOps>(f, x, ops))) return false;
    if (deg <= 3) return true;
    // Degree 4: no roots, so reducibility means a product of two monic quadratics.
    for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c) {
            std::vector<std::int64_t> g = {c, b, 1};
            auto [q, r] = poly_divmod<ModOps>(f, g, ops);
            (void)q;
            if (r.empty()) return false;
        }
    return true;
}

// Rational roots of a monic polynomial with rational coefficients.
bool has_rational_root(const std::vector<Rat>& f) {
    // Clear denominators: g = D*f has integer coefficients.
    BigInt den_lcm = 1;
    for (const auto& c : f) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    std::vector<BigInt> g;
    g.reserve(f.size());
    for (const auto& c : f) g.push_back(boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c)));
    if (g.front() == 0) return true;  // root 0
    auto nums = divisors_of(g.front());
    auto dens = divisors_of(g.back());
    RatOps ops;
    for (const auto& n : nums)
        for (const auto& d : dens)
            for (int sign : {1, -1}) {
                Rat cand(sign * n, d);
                if (ops.is_zero(poly_eval<RatOps>(f, cand, ops))) return true;
            }
    return false;
}

bool irreducible_over_q(const std::vector<Rat>& f) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return true;
    if (has_rational_root(f)) return false;
    if (deg <= 3) return true;
    if (deg == 4) {
        // Quadratic-factor search; needs integer coefficients (monic), which
        // by Gauss's lemma is where integer quadratic factors live.
        std::vector<BigInt> e;
        for (const auto& c : f) {
            if (boost::multiprecision::denominator(c) != 1)
                throw UnsupportedError("degree-4 irreducibility over Q implemented for integer coefficients only");
            e.push_back(boost::multiprecision::numerator(c));
        }
        // f = x^4 + e3 x^3 + e2 x^2 + e1 x + e0 = (x^2+a x+b)(x^2+c x+d)
        auto check_pair = [&](const BigInt& a, const BigInt& b, const BigInt& d) {
            BigInt c = e[3] - a;
            return a * c + b + d == e[2] && a * d + b * c == e[1] && b * d == e[0];
        };
        for (const auto& babs : divisors_of(e[0]))
            for (int bs : {1, -1}) {
                BigInt b = bs * babs;
                if (b == 0 || e[0] % b != 0) continue;
                BigInt d = e[0] / b;
                if (d != b) {
                    // a(d - b) = e1 - e3*b forces a exactly
                    BigInt rhs = e[1] - e[3] * b;
                    if (rhs % (d - b) != 0) continue;
                    BigInt a = rhs / (d - b);
                    if (check_pair(a, b, d)) return false;
                } else {
                    // a + c = e3, a*c = e2 - 2b: integer roots of t^2 - e3 t + m
                    BigInt m = e[2] - 2 * b;
                    BigInt disc = e[3] * e[3] - 4 * m;
                    if (disc < 0) continue;
                    BigInt s = boost::multiprecision::sqrt(disc);
                    if (s * s != disc) continue;
                    if ((e[3] + s) % 2 != 0) continue;
                    BigInt a = (e[3] + s) / 2;
                    if (check_pair(a, b, d)) return false;
                }
            }
        return true;
    }
    return true;  // degree > 4: accepted unchecked (documented)
}

}  // namespace

Field Field::rationals() {
    auto d = std::make_shared<Data>();
    d->p = 0;
    d->deg = 1;
    d->fkey = compute_fkey(0, {});
    return Field(std::move(d));
}

Field Field::prime_field(std::int64_t p) {
    if (!is_prime_i64(p)) throw NonPrimeCharacteristicError("characteristic " + std::to_string(p) + " is not prime");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->deg = 1;
    d->fkey = compute_fkey(p, {});
    return Field(std::move(d));
}

Field Field::extension(std::int64_t p, const std::vector<Rat>& minpoly) {
    if (p != 0 && !is_prime_i64(p))
        throw NonPrimeCharacteristicError("characteristic " + std::to_string(p) + " is not prime");
    if (minpoly.size() < 3) throw UnsupportedError("extension requires a minimal polynomial of degree >= 2");
    if (minpoly.back() != 1) throw UnsupportedError("minimal polynomial must be monic");
    auto d = std::make_shared<Data>();
    d->p = p;
    d->deg = static_cast<int>(minpoly.size()) - 1;
    d->minpoly = minpoly;
    if (p > 0) {
        d->mp_i.reserve(minpoly.size());
        for (const auto& c : minpoly) {
            if (boost::multiprecision::denominator(c) != 1)
                throw UnsupportedError("minimal polynomial over GF(p) must have integer coefficients");
            d->mp_i.push_back(mod_pos(static_cast<std::int64_t>(boost::multiprecision::numerator(c) % p), p));
        }
        if (d->deg <= 4 && !irreducible_mod_p(d->mp_i, p))
            throw Error("minimal polynomial is reducible over GF(" + std::to_string(p) + ")");
    } else {
        if (d->deg <= 4 && !irreducible_over_q(minpoly)) throw Error("minimal polynomial is reducible over Q");
    }
    d->fkey = compute_fkey(p, minpoly);
    return Field(std::move(d));
}

std::int64_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->deg; }
const std::vector<Rat>& Field::minpoly() const { return data_->minpoly; }
std::uint64_t Field::fkey() const { return data_->fkey; }

std::optional<std::uint64_t> Field::order() const {
    if (data_->p == 0) return std::nullopt;
    std::uint64_t n = 1;
    for (int i = 0; i < data_->deg; ++i) {
        n *= static_cast<std::uint64_t>(data_->p);
        if (n > (1ull << 40)) return std::nullopt;
    }
    return n;
}

void Field::require_own(const Scalar& a) const {
    if (a.fkey() != data_->fkey) throw MixedFieldError("scalar does not belong to " + describe());
}

Scalar Field::zero() const {
    if (data_->deg == 1) {
        if (data_->p > 0) return Scalar(std::int64_t{0}, data_->fkey);
        return Scalar(Rat(0), data_->fkey);
    }
    if (data_->p > 0) return Scalar(std::vector<std::int64_t>(data_->deg, 0), data_->fkey);
    return Scalar(std::vector<Rat>(data_->deg, Rat(0)), data_->fkey);
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
    if (data_->deg == 1) {
        if (data_->p > 0) return Scalar(mod_pos(n, data_->p), data_->fkey);
        return Scalar(Rat(n), data_->fkey);
    }
    if (data_->p > 0) {
        std::vector<std::int64_t> v(data_->deg, 0);
        v[0] = mod_pos(n, data_->p);
        return Scalar(std::move(v), data_->fkey);
    }
    std::vector<Rat> v(data_->deg, Rat(0));
    v[0] = Rat(n);
    return Scalar(std::move(v), data_->fkey);
}

Scalar Field::from_rat(const Rat& r) const {
    if (data_->p == 0) {
        if (data_->deg == 1) return Scalar(r, data_->fkey);
        std::vector<Rat> v(data_->deg, Rat(0));
        v[0] = r;
        return Scalar(std::move(v), data_->fkey);
    }
    BigInt num = boost::multiprecision::numerator(r) % data_->p;
    BigInt den = boost::multiprecision::denominator(r) % data_->p;
    std::int64_t n = mod_pos(static_cast<std::int64_t>(num), data_->p);
    std::int64_t d = mod_pos(static_cast<std::int64_t>(den), data_->p);
    std::int64_t val = mod_pos(n * mod_inv(d, data_->p), data_->p);
    if (data_->deg == 1) return Scalar(val, data_->fkey);
    std::vector<std::int64_t> v(data_->deg, 0);
    v[0] = val;
    return Scalar(std::move(v), data_->fkey);
}

Scalar Field::generator() const {
    if (data_->deg == 1) throw Error("prime fields have no extension generator");
    if (data_->p > 0) {
        std::vector<std::int64_t> v(data_->deg, 0);
        v[1] = 1;
        return Scalar(std::move(v), data_->fkey);
    }
    std::vector<Rat> v(data_->deg, Rat(0));
    v[1] = Rat(1);
    return Scalar(std::move(v), data_->fkey);
}

Scalar Field::from_coeffs(const std::vector<Rat>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > data_->deg) throw Error("coefficient vector longer than extension degree");
    if (data_->deg == 1) return from_rat(coeffs.empty() ? Rat(0) : coeffs[0]);
    if (data_->p > 0) {
        std::vector<std::int64_t> v(data_->deg, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (boost::multiprecision::denominator(coeffs[i]) != 1) {
                BigInt den = boost::multiprecision::denominator(coeffs[i]) % data_->p;
                BigInt num = boost::multiprecision::numerator(coeffs[i]) % data_->p;
                v[i] = mod_pos(static_cast<std::int64_t>(num) * mod_inv(static_cast<std::int64_t>(den), data_->p),
                               data_->p);
            } else {
                v[i] = mod_pos(static_cast<std::int64_t>(boost::multiprecision::numerator(coeffs[i]) % data_->p),
                               data_->p);
            }
        }
        return Scalar(std::move(v), data_->fkey);
    }
    std::vector<Rat> v(data_->deg, Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = coeffs[i];
    return Scalar(std::move(v), data_->fkey);
}

std::vector<Rat> Field::coeffs(const Scalar& a) const {
    require_own(a);
    std::vector<Rat> out;
    std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::int64_t>)
                out.push_back(Rat(v));
            else if constexpr (std::is_same_v<V, Rat>)
                out.push_back(v);
            else if constexpr (std::is_same_v<V, std::vector<std::int64_t>>)
                for (auto c : v) out.push_back(Rat(c));
            else
                for (const auto& c : v) out.push_back(c);
        },
        a.payload());
    return out;
}

namespace {

template <class Ops>
std::vector<typename Ops::T> get_vec(const Scalar& s) {
    return std::get<std::vector<typename Ops::T>>(s.payload());
}

}  // namespace

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    require_own(a);
    require_own(b);
    if (data_->deg == 1) {
        if (data_->p > 0)
            return Scalar(mod_pos(std::get<std::int64_t>(a.payload()) + std::get<std::int64_t>(b.payload()), data_->p),
                          data_->fkey);
        return Scalar(std::get<Rat>(a.payload()) + std::get<Rat>(b.payload()), data_->fkey);
    }
    if (data_->p > 0) {
        ModOps ops{data_->p};
        auto va = get_vec<ModOps>(a), vb = get_vec<ModOps>(b);
        for (int i = 0; i < data_->deg; ++i) va[i] = ops.add(va[i], vb[i]);
        return Scalar(std::move(va), data_->fkey);
    }
    RatOps ops;
    auto va = get_vec<RatOps>(a), vb = get_vec<RatOps>(b);
    for (int i = 0; i < data_->deg; ++i) va[i] = ops.add(va[i], vb[i]);
    return Scalar(std::move(va), data_->fkey);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
    require_own(a);
    if (data_->deg == 1) {
        if (data_->p > 0) return Scalar(mod_pos(-std::get<std::int64_t>(a.payload()), data_->p), data_->fkey);
        return Scalar(-std::get<Rat>(a.payload()), data_->fkey);
    }
    if (data_->p > 0) {
        auto v = get_vec<ModOps>(a);
        for (auto& c : v) c = mod_pos(-c, data_->p);
        return Scalar(std::move(v), data_->fkey);
    }
    auto v = get_vec<RatOps>(a);
    for (auto& c : v) c = -c;
    return Scalar(std::move(v), data_->fkey);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    require_own(a);
    require_own(b);
    if (data_->deg == 1) {
        if (data_->p > 0)
            return Scalar(mod_pos(std::get<std::int64_t>(a.payload()) * std::get<std::int64_t>(b.payload()), data_->p),
                          data_->fkey);
        return Scalar(std::get<Rat>(a.payload()) * std::get<Rat>(b.payload()), data_->fkey);
    }
    if (data_->p > 0) {
        ModOps ops{data_->p};
        auto prod = poly_mod<ModOps>(poly_mul<ModOps>(get_vec<ModOps>(a), get_vec<ModOps>(b), ops), data_->mp_i, ops);
        prod.resize(data_->deg, 0);
        return Scalar(std::move(prod), data_->fkey);
    }
    RatOps ops;
    auto prod = poly_mod<RatOps>(poly_mul<RatOps>(get_vec<RatOps>(a), get_vec<RatOps>(b), ops), data_->minpoly, ops);
    prod.resize(data_->deg, Rat(0));
    return Scalar(std::move(prod), data_->fkey);
}

Scalar Field::inv(const Scalar& a) const {
    require_own(a);
    if (is_zero(a)) throw Error("division by zero in " + describe());
    if (data_->deg == 1) {
        if (data_->p > 0) return Scalar(mod_inv(std::get<std::int64_t>(a.payload()), data_->p), data_->fkey);
        return Scalar(Rat(1) / std::get<Rat>(a.payload()), data_->fkey);
    }
    if (data_->p > 0) {
        ModOps ops{data_->p};
        auto v = poly_inv_mod<ModOps>(get_vec<ModOps>(a), data_->mp_i, ops);
        v.resize(data_->deg, 0);
        return Scalar(std::move(v), data_->fkey);
    }
    RatOps ops;
    auto v = poly_inv_mod<RatOps>(get_vec<RatOps>(a), data_->minpoly, ops);
    v.resize(data_->deg, Rat(0));
    return Scalar(std::move(v), data_->fkey);
}

bool Field::is_zero(const Scalar& a) const {
    require_own(a);
    return a.is_zero();
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    require_own(a);
    require_own(b);
    return a == b;
}

std::vector<Scalar> Field::elements(std::uint64_t cap) const {
    auto n = order();
    if (!n || *n > cap) throw UnsupportedError("field enumeration requires a small finite field");
    std::vector<Scalar> out;
    out.reserve(*n);
    if (data_->deg == 1) {
        for (std::int64_t x = 0; x < data_->p; ++x) out.push_back(Scalar(x, data_->fkey));
        return out;
    }
    std::vector<std::int64_t> v(data_->deg, 0);
    for (std::uint64_t i = 0; i < *n; ++i) {
        out.push_back(Scalar(v, data_->fkey));
        for (int j = 0; j < data_->deg; ++j) {
            if (++v[j] < data_->p) break;
            v[j] = 0;
        }
    }
    return out;
}

Scalar Field::random(Rng& rng) const {
    if (data_->p > 0) {
        if (data_->deg == 1) return Scalar(static_cast<std::int64_t>(rng.below(data_->p)), data_->fkey);
        std::vector<std::int64_t> v(data_->deg);
        for (auto& c : v) c = static_cast<std::int64_t>(rng.below(data_->p));
        return Scalar(std::move(v), data_->fkey);
    }
    auto small = [&rng]() {
        long long num = rng.range(-4, 4);
        long long den = 1 + static_cast<long long>(rng.below(3));
        return Rat(num, den);
    };
    if (data_->deg == 1) return Scalar(small(), data_->fkey);
    std::vector<Rat> v(data_->deg);
    for (auto& c : v) c = small();
    return Scalar(std::move(v), data_->fkey);
}

Scalar Field::random_nonzero(Rng& rng) const {
    for (;;) {
        Scalar s = random(rng);
        if (!s.is_zero()) return s;
    }
}

std::vector<Scalar> Field::minpoly_roots_in_self() const {
    if (data_->deg == 1) return {};
    if (data_->p > 0) {
        std::vector<Scalar> roots;
        for (const auto& cand : elements()) {
            // evaluate minpoly at cand
            Scalar acc = zero();
            Scalar pw = one();
            for (int i = 0; i <= data_->deg; ++i) {
                Scalar coeff = from_int(data_->mp_i[static_cast<std::size_t>(i)]);
                acc = add(acc, mul(coeff, pw));
                pw = mul(pw, cand);
            }
            if (acc.is_zero()) roots.push_back(cand);
        }
        return roots;
    }
    if (data_->deg == 2) {
        // x^2 + b x + c: the generator y is one root, -b - y the other.
        Scalar y = generator();
        Scalar other = sub(neg(from_rat(data_->minpoly[1])), y);
        if (equal(other, y)) return {y};
        return {y, other};
    }
    throw UnsupportedError("root enumeration over Q implemented for degree 2 only");
}

std::string Field::to_string(const Scalar& a) const {
    require_own(a);
    std::ostringstream os;
    std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, std::int64_t>)
                os << v;
            else if constexpr (std::is_same_v<V, Rat>)
                os << v;
            else {
                os << "(";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i) os << ",";
                    os << v[i];
                }
                os << ")";
            }
        },
        a.payload());
    return os.str();
}

std::string Field::describe() const {
    std::ostringstream os;
    if (data_->p == 0)
        os << "Q";
    else
        os << "GF(" << data_->p << ")";
    if (data_->deg > 1) {
        os << "[deg " << data_->deg << " ext: ";
        for (std::size_t i = 0; i < data_->minpoly.size(); ++i) {
            if (i) os << ",";
            os << data_->minpoly[i];
        }
        os << "]";
    }
    return os.str();
}

}  // namespace coringlab
