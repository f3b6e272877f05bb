#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieclass/linalg.hpp"
#include "lieclass/matrix.hpp"
#include "lieclass/polynomial.hpp"
#include "lieclass/zoo.hpp"

using namespace lieclass;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long num = static_cast<long>(rng() % 9) - 4;
            const long den = 1 + static_cast<long>(rng() % 2);
            m(i, j) = Rational(num, den);
        }
    return m;
}

} // namespace

TEST_CASE("rational parsing round trip") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(rational_to_string(Rational(-2, 3)) == "-2/3");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
}

TEST_CASE("nullspace: identity has trivial kernel") {
    CHECK(nullspace_basis({{1, 0}, {0, 1}}).empty());
}

TEST_CASE("nullspace: single relation is canonicalized with leading 1") {
    const auto basis = nullspace_basis({{1, 1}});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Vector{1, -1});
}

TEST_CASE("nullspace: ragged rows rejected") {
    CHECK_THROWS_AS(nullspace_basis({{1, 0}, {1}}), ValidationError);
}

TEST_CASE("nullspace of the so(3) commutation system is spanned by vec(Id)") {
    const auto so3 = zoo::make("so", {0, 3});
    const Matrix sys = invariance_system(so3.generators, InvarianceMode::commute);
    CHECK(sys.rows() == 27);
    CHECK(sys.cols() == 9);
    const auto kernel = nullspace(sys);
    REQUIRE(kernel.size() == 1);
    CHECK(Matrix::from_vec(kernel[0], 3, 3) == Matrix::identity(3));
}

TEST_CASE("nullspace vectors re-multiplied give exactly zero") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(3, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                a(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        for (const auto& v : nullspace(a))
            CHECK(is_zero_vector(a * v));
    }
}

TEST_CASE("minimal polynomial examples") {
    CHECK(minimal_polynomial(Matrix::identity(4)) == Polynomial({-1, 1}));
    const Matrix j{{0, -1}, {1, 0}};
    CHECK(minimal_polynomial(j) == Polynomial({1, 0, 1}));
    const Matrix a{{0, -2}, {1, 0}};
    CHECK(minimal_polynomial(a) == Polynomial({2, 0, 1}));
}

TEST_CASE("minimal polynomial sees Jordan structure across seed chains") {
    // nilpotent Jordan block: mu = x^3
    Matrix j3(3, 3);
    j3(0, 1) = 1;
    j3(1, 2) = 1;
    CHECK(minimal_polynomial(j3) == Polynomial({0, 0, 0, 1}));

    // J_2(0) + fixed line: mu = x^2 (x - 1), needs the lcm over seeds
    Matrix mixed(3, 3);
    mixed(0, 1) = 1;
    mixed(2, 2) = 1;
    CHECK(minimal_polynomial(mixed) == Polynomial({0, 0, -1, 1}));

    // diagonalizable with repeated eigenvalues: mu = (x-2)(x+2), degree 2
    Matrix d(4, 4);
    d(0, 0) = 2;
    d(1, 1) = 2;
    d(2, 2) = -2;
    d(3, 3) = -2;
    CHECK(minimal_polynomial(d) == Polynomial({-4, 0, 1}));
}

TEST_CASE("congruence signature agrees with the Descartes-rule oracle") {
    // For a symmetric matrix the characteristic polynomial has only real
    // roots, so Descartes' rule counts positive eigenvalues exactly: an
    // independent oracle for the inertia.
    auto descartes_signature = [](const Matrix& s) {
        const Polynomial chi = char_poly(s);
        const auto& c = chi.coefficients();
        std::size_t zero = 0;
        while (zero < c.size() && c[zero] == 0) ++zero;
        std::size_t pos = 0;
        int last_sign = 0;
        for (std::size_t k = zero; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            const int sgn = c[k] > 0 ? 1 : -1;
            if (last_sign != 0 && sgn != last_sign) ++pos;
            last_sign = sgn;
        }
        return Signature{s.rows() - pos - zero, pos, zero};
    };

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        // random symmetric, sometimes deliberately rank-deficient
        Matrix a = random_matrix(rng, 4);
        if (trial % 3 == 0) {
            for (std::size_t j = 0; j < 4; ++j) a(3, j) = a(0, j) + a(1, j);
        }
        Matrix s = a.transpose() * a;                 // PSD, possibly singular
        if (trial % 2 == 0) {
            const Matrix b = random_matrix(rng, 4);
            s = s - b.transpose() * b;                // indefinite mix
        }
        CHECK(congruence_signature(s) == descartes_signature(s));
    }
}

TEST_CASE("minimal polynomial divides the characteristic polynomial") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        const Matrix a = random_matrix(rng, 5);
        const Polynomial mu = minimal_polynomial(a);
        const Polynomial chi = char_poly(a);
        CHECK(mu.divides(chi));
        CHECK(mu.eval(a).is_zero());
    }
}

TEST_CASE("char poly constant term is the determinant up to sign") {
    std::mt19937_64 rng(3);
    const Matrix a = random_matrix(rng, 4);
    const Polynomial chi = char_poly(a);
    CHECK(chi.coeff(0) == det(a));  // det(xI - A) at x=0 is (-1)^4 det(A)
}

TEST_CASE("congruence signature examples") {
    Matrix d(3, 3);
    d(0, 0) = -1;
    d(1, 1) = 1;
    d(2, 2) = 1;
    CHECK(congruence_signature(d) == Signature{1, 2, 0});

    const Matrix hyperbolic{{0, 1}, {1, 0}};
    CHECK(congruence_signature(hyperbolic) == Signature{1, 1, 0});

    Matrix degenerate(2, 2);
    degenerate(0, 0) = 1;
    CHECK(congruence_signature(degenerate) == Signature{0, 1, 1});

    Matrix notsym{{0, 1}, {2, 0}};
    CHECK_THROWS_AS(congruence_signature(notsym), ValidationError);
}

TEST_CASE("congruence signature is invariant under congruence") {
    std::mt19937_64 rng(19);
    Matrix s(4, 4);
    s(0, 0) = 2;
    s(1, 1) = -3;
    s(2, 3) = 1;
    s(3, 2) = 1;
    const Signature expected = congruence_signature(s);
    CHECK(expected.n_minus + expected.n_plus + expected.n_zero == 4);
    int done = 0;
    while (done < 6) {
        const Matrix p = random_matrix(rng, 4);
        if (det(p) == 0) continue;
        CHECK(congruence_signature(p.transpose() * s * p) == expected);
        ++done;
    }
}

TEST_CASE("invariance system: commute mode for a rotation generator") {
    const Matrix j{{0, -1}, {1, 0}};
    const auto kernel = invariant_matrices({j}, InvarianceMode::commute);
    CHECK(kernel.size() == 2);
}

TEST_CASE("invariance system: so(1,2) has a one-dimensional form space") {
    const auto so12 = zoo::make("so", {1, 2});
    const auto kernel = invariant_matrices(so12.generators, InvarianceMode::algebra_form);
    REQUIRE(kernel.size() == 1);
    for (const auto& g : so12.generators)
        CHECK((g.transpose() * kernel[0] + kernel[0] * g).is_zero());
}

TEST_CASE("invariance system: group form for diag(2, 1/2)") {
    Matrix a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = Rational(1, 2);
    const auto kernel = invariant_matrices({a}, InvarianceMode::group_form);
    REQUIRE(kernel.size() == 2);
    SpanTracker t(4);
    for (const auto& m : kernel) t.insert(m.vec());
    Matrix e12(2, 2), e21(2, 2);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    CHECK(t.contains(e12.vec()));
    CHECK(t.contains(e21.vec()));
}

TEST_CASE("invariance system: empty generator list rejected") {
    CHECK_THROWS_WITH_AS(invariance_system({}, InvarianceMode::commute),
                         doctest::Contains("unconstrained"), ValidationError);
}

TEST_CASE("solve and inverse") {
    const Matrix a{{2, 1}, {1, 1}};
    const Matrix inv = inverse(a);
    CHECK(a * inv == Matrix::identity(2));
    const auto x = solve(a, Vector{3, 2});
    REQUIRE(x.has_value());
    CHECK(a * *x == Vector{3, 2});
    CHECK_THROWS_AS(inverse(Matrix{{1, 1}, {1, 1}}), ValidationError);
}

TEST_CASE("span tracker coordinates") {
    SpanTracker t(3);
    CHECK(t.insert({1, 1, 0}));
    CHECK(t.insert({0, 1, 1}));
    CHECK_FALSE(t.insert({1, 2, 1}));
    const auto coords = t.coordinates({2, 3, 1});
    REQUIRE(coords.has_value());
    CHECK(*coords == Vector{2, 1});
    CHECK_FALSE(t.coordinates({0, 0, 1}).has_value());
}
