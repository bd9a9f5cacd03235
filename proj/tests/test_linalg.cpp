#include "doctest.h"

#include <set>

#include "coringlab/graded.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/rng.hpp"

using namespace coringlab;

namespace {

// Independent rank oracle over GF(2): the span of the rows has 2^rank
// elements; enumerate all subset sums.
int rank_by_row_enumeration_gf2(const std::vector<std::vector<long long>>& rows) {
    std::set<std::vector<long long>> span;
    std::size_t n = rows.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<long long> acc(rows[0].size(), 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = (acc[j] + rows[i][j]) % 2;
        span.insert(acc);
    }
    int r = 0;
    while ((1u << r) < span.size()) ++r;
    return r;
}

}  // namespace

TEST_CASE("rank: zero and identity") {
    Field Q = Field::rationals();
    CHECK(rank(SparseMatrix(Q, 3, 3)) == 0);
    Field F2 = Field::prime_field(2);
    CHECK(rank(SparseMatrix::identity(F2, 4)) == 4);
}

TEST_CASE("rank over GF(2) matches row-enumeration oracle") {
    Field F2 = Field::prime_field(2);
    std::vector<std::vector<long long>> rows = {{1, 1, 0}, {1, 1, 1}};
    CHECK(rank_by_row_enumeration_gf2(rows) == 2);
    CHECK(rank(SparseMatrix::from_dense(F2, rows)) == 2);

    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng.below(5)), c = 1 + static_cast<int>(rng.below(5));
        std::vector<std::vector<long long>> m(static_cast<std::size_t>(r),
                                              std::vector<long long>(static_cast<std::size_t>(c)));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng.below(2));
        CHECK(rank(SparseMatrix::from_dense(F2, m)) == rank_by_row_enumeration_gf2(m));
    }
}

TEST_CASE("rank-nullity on random matrices over several fields") {
    Rng rng(11);
    std::vector<Field> fields = {Field::rationals(), Field::prime_field(2), Field::prime_field(5),
                                 Field::extension(2, {Rat(1), Rat(1), Rat(1)}),
                                 Field::extension(0, {Rat(1), Rat(0), Rat(1)})};
    for (const auto& F : fields) {
        for (int trial = 0; trial < 10; ++trial) {
            int r = 1 + static_cast<int>(rng.below(6)), c = 1 + static_cast<int>(rng.below(6));
            SparseMatrix m(F, r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    if (rng.below(2)) m.set(i, j, F.random(rng));
            CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == c);
            for (const auto& k : kernel_basis(m)) CHECK(m.apply(k).empty());
        }
    }
}

TEST_CASE("elimination determinism") {
    Field F3 = Field::prime_field(3);
    Rng rng(5);
    SparseMatrix m(F3, 6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (rng.below(2)) m.set(i, j, F3.random(rng));
    auto k1 = kernel_basis(m);
    auto k2 = kernel_basis(m);
    CHECK(k1 == k2);
    RowReducer r1(F3, 6), r2(F3, 6);
    for (int i = 0; i < 6; ++i) {
        auto a = r1.insert(m.row(i));
        auto b = r2.insert(m.row(i));
        CHECK(a.novel == b.novel);
        CHECK(a.pivot == b.pivot);
    }
    CHECK(r1.pivot_cols() == r2.pivot_cols());
}

TEST_CASE("field axioms on random scalars, exactly") {
    std::vector<Field> fields = {Field::rationals(),
                                 Field::prime_field(2),
                                 Field::prime_field(7),
                                 Field::extension(2, {Rat(1), Rat(1), Rat(1)}),           // GF(4)
                                 Field::extension(0, {Rat(1), Rat(0), Rat(1)}),           // Q(i)
                                 Field::extension(3, {Rat(1), Rat(2), Rat(0), Rat(1)})};  // GF(27)
    Rng rng(42);
    for (const auto& F : fields) {
        for (int trial = 0; trial < 50; ++trial) {
            Scalar a = F.random(rng), b = F.random(rng), c = F.random(rng);
            CHECK(F.equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
            CHECK(F.equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
            CHECK(F.equal(F.add(a, b), F.add(b, a)));
            if (!F.is_zero(a)) CHECK(F.equal(F.mul(a, F.inv(a)), F.one()));
            CHECK(F.equal(F.mul(a, F.one()), a));
            CHECK(F.equal(F.add(a, F.neg(a)), F.zero()));
        }
    }
}

TEST_CASE("mixed-field scalars are rejected") {
    Field F2 = Field::prime_field(2), F3 = Field::prime_field(3);
    CHECK_THROWS_AS(F2.add(F2.one(), F3.one()), MixedFieldError);
    SparseMatrix m(F2, 1, 1);
    CHECK_THROWS_AS(m.set(0, 0, F3.one()), MixedFieldError);
}

TEST_CASE("non-prime characteristic and reducible minpolys are rejected") {
    CHECK_THROWS_AS(Field::prime_field(6), NonPrimeCharacteristicError);
    // x^2 - 1 = (x-1)(x+1)
    CHECK_THROWS_AS(Field::extension(0, {Rat(-1), Rat(0), Rat(1)}), Error);
    // x^2 + 1 is reducible over GF(2)
    CHECK_THROWS_AS(Field::extension(2, {Rat(1), Rat(0), Rat(1)}), Error);
}

TEST_CASE("homology: zero differentials and exact complexes") {
    Field Q = Field::rationals();
    HomologySlice h0(SparseMatrix(Q, 3, 0), SparseMatrix(Q, 0, 3));
    CHECK(h0.dim() == 3);
    HomologySlice h1(SparseMatrix::identity(Q, 3), SparseMatrix(Q, 0, 3));
    CHECK(h1.dim() == 0);
}

TEST_CASE("homology: multiplication-by-x slices of k[x]/(x^2)") {
    // Degree slices of the periodic complex ... -x-> k[x]/(x^2) -x-> ...
    // Multiplication by x is zero on the top degree slice and on the socle,
    // giving homology of dimension 1 per slice; where one map is an
    // isomorphism there is no homology.
    Field F2 = Field::prime_field(2);
    SparseMatrix zero11(F2, 1, 1);
    HomologySlice h(zero11, zero11);
    CHECK(h.dim() == 1);
    SparseMatrix id11 = SparseMatrix::identity(F2, 1);
    HomologySlice h2(id11, zero11);
    CHECK(h2.dim() == 0);
}

TEST_CASE("homology: alternating-sum consistency on random three-term complexes") {
    Rng rng(3);
    Field F5 = Field::prime_field(5);
    for (int trial = 0; trial < 15; ++trial) {
        int b = 1 + static_cast<int>(rng.below(5)), c = 1 + static_cast<int>(rng.below(4));
        SparseMatrix g(F5, c, b);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < b; ++j)
                if (rng.below(2)) g.set(i, j, F5.random(rng));
        auto ker = kernel_basis(g);
        int a = static_cast<int>(ker.size()) + static_cast<int>(rng.below(2));
        SparseMatrix f(F5, b, a);
        for (int j = 0; j < a; ++j) {
            SparseVec col;
            for (const auto& kv : ker) col = sv_axpy(F5, col, F5.random(rng), kv);
            for (const auto& [i, v] : col) f.set(i, j, v);
        }
        HomologySlice h_left(SparseMatrix(F5, a, 0), f);
        HomologySlice h_mid(f, g);
        HomologySlice h_right(g, SparseMatrix(F5, 0, c));
        CHECK(a - b + c == h_left.dim() - h_mid.dim() + h_right.dim());
    }
}

TEST_CASE("homology: NotAComplex and cycle expression") {
    Field Q = Field::rationals();
    SparseMatrix id2 = SparseMatrix::identity(Q, 2);
    CHECK_THROWS_AS(HomologySlice(id2, id2), NotAComplexError);

    SparseMatrix din(Q, 2, 1);
    din.set(0, 0, Q.one());
    din.set(1, 0, Q.one());
    HomologySlice h(din, SparseMatrix(Q, 0, 2));
    REQUIRE(h.dim() == 1);
    auto e = h.express(sv_unit(Q, 0));
    SparseVec rebuilt;
    for (const auto& [i, c] : e.class_coeffs) rebuilt = sv_axpy(Q, rebuilt, c, h.reps()[static_cast<std::size_t>(i)]);
    for (const auto& [j, c] : e.boundary_combo) rebuilt = sv_axpy(Q, rebuilt, c, din.col(j));
    CHECK(sv_equal(rebuilt, sv_unit(Q, 0)));
}

TEST_CASE("graded shift") {
    GradedVectorSpace v;
    v.degrees = {0};
    v.labels = {"a"};
    CHECK(v.shifted(0) == v);
    GradedVectorSpace w = v.shifted(2);
    CHECK(w.degrees == std::vector<int>{2});
    CHECK(v.shifted(1).shifted(-1) == v);
    GradedVectorSpace u;
    u.degrees = {0, 1, 1, 3};
    u.labels = {"a", "b", "c", "d"};
    CHECK(u.shifted(1).shifted(2) == u.shifted(3));
    auto dims = u.shifted(2).dims_by_degree();
    CHECK(dims[2] == 1);
    CHECK(dims[3] == 2);
    CHECK(dims[5] == 1);
}

TEST_CASE("solve and inconsistency detection") {
    Field Q = Field::rationals();
    SparseMatrix a = SparseMatrix::from_dense(Q, {{1, 2}, {3, 4}});
    SparseVec b = {{0, Q.from_int(5)}, {1, Q.from_int(11)}};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(sv_equal(a.apply(*x), b));
    SparseMatrix s = SparseMatrix::from_dense(Q, {{1, 1}, {1, 1}});
    SparseVec rhs = {{0, Q.one()}};
    CHECK(!solve(s, rhs).has_value());
}
