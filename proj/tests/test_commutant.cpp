#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lieclass/commutant.hpp"
#include "lieclass/irreducibility.hpp"
#include "lieclass/zoo.hpp"

using namespace lieclass;

namespace {

Representation u1_on_R2() {
    Representation rep;
    rep.name = "u(1)";
    rep.n = 2;
    rep.level = Level::lie_algebra;
    rep.generators = {Matrix{{0, -1}, {1, 0}}};
    return rep;
}

CommutantAlgebra classified(const Representation& rep) {
    CommutantAlgebra comm = commutant_basis(rep);
    classify_type(comm, false);
    return comm;
}

} // namespace

TEST_CASE("commutant of a rotation generator is span{Id, J}") {
    const auto comm = commutant_basis(u1_on_R2());
    CHECK(comm.dim() == 2);
    SpanTracker t(4);
    for (const auto& b : comm.basis) t.insert(b.vec());
    CHECK(t.contains(Matrix::identity(2).vec()));
    CHECK(t.contains(Matrix{{0, -1}, {1, 0}}.vec()));
}

TEST_CASE("commutant of so(3) is the scalars") {
    const auto comm = commutant_basis(zoo::make("so", {0, 3}));
    REQUIRE(comm.dim() == 1);
    CHECK(comm.basis[0] == Matrix::identity(3));
}

TEST_CASE("commutant of right quaternion multiplications is the left ones") {
    const auto comm = commutant_basis(zoo::make("gl1H_right", {}));
    CHECK(comm.dim() == 4);
    SpanTracker t(16);
    for (const auto& b : comm.basis) t.insert(b.vec());
    for (const auto& l : zoo::gl1H_left_basis()) CHECK(t.contains(l.vec()));
}

TEST_CASE("every commutant element commutes with every generator") {
    for (const char* key : {"so_C", "sp_C"}) {
        const auto rep = zoo::make(key, key == std::string("so_C") ? std::vector<long>{3}
                                                                   : std::vector<long>{1});
        const auto comm = commutant_basis(rep);
        for (const auto& b : comm.basis)
            for (const auto& g : rep.generators)
                CHECK(bracket(b, g).is_zero());
    }
}

TEST_CASE("classify_type: scalars give R") {
    const auto comm = classified(zoo::make("so", {1, 2}));
    CHECK(comm.type == CommutantType::R);
}

TEST_CASE("classify_type: rotation commutant gives C with lambda 1") {
    auto comm = classified(u1_on_R2());
    CHECK(comm.type == CommutantType::C);
    REQUIRE(comm.complex_structure.has_value());
    const auto& s = *comm.complex_structure;
    CHECK(s.lambda == 1);
    CHECK(s.J * s.J == -Matrix::identity(2));
}

TEST_CASE("classify_type: left multiplication algebra of H gives H") {
    auto comm = classified(zoo::make("gl1H_right", {}));
    CHECK(comm.type == CommutantType::H);
    REQUIRE(comm.quaternion_frame.has_value());
    const auto& f = *comm.quaternion_frame;
    Matrix l1(4, 4), l2(4, 4);
    l1 = f.I * f.I;
    CHECK(l1 == -f.lambda1 * Matrix::identity(4));
    l2 = f.J * f.J;
    CHECK(l2 == -f.lambda2 * Matrix::identity(4));
    CHECK((f.I * f.J + f.J * f.I).is_zero());
    CHECK(f.lambda1 > 0);
    CHECK(f.lambda2 > 0);
    // Id, I, J, IJ are linearly independent
    SpanTracker t(16);
    CHECK(t.insert(Matrix::identity(4).vec()));
    CHECK(t.insert(f.I.vec()));
    CHECK(t.insert(f.J.vec()));
    CHECK(t.insert((f.I * f.J).vec()));
}

TEST_CASE("classify_type: split commutants are flagged NonDivision") {
    auto comm = classified(zoo::make("block_diag_so2_so2", {}));
    CHECK(comm.type == CommutantType::NonDivision);

    // irreducible flag turns the same situation into an internal error
    CommutantAlgebra comm2 = commutant_basis(zoo::make("block_diag_so2_so2", {}));
    CHECK_THROWS_AS(classify_type(comm2, true), InternalCheckError);
}

TEST_CASE("classify_type: nilpotent 2-dim commutant is NonDivision") {
    Representation rep;
    rep.name = "E12";
    rep.n = 2;
    rep.level = Level::lie_algebra;
    Matrix e12(2, 2);
    e12(0, 1) = 1;
    rep.generators = {e12};
    auto comm = classified(rep);
    CHECK(comm.dim() == 2);
    CHECK(comm.type == CommutantType::NonDivision);
}

TEST_CASE("commutant type is a division algebra on every irreducible zoo entry") {
    for (const auto& entry : zoo::catalog()) {
        const auto res = is_irreducible(entry.rep);
        if (res.irreducible)
            CHECK(res.commutant_type != CommutantType::NonDivision);
    }
}

TEST_CASE("complex structures commute with all generators") {
    for (const char* key : {"u", "so_C", "sp_C"}) {
        std::vector<long> params = key == std::string("u") ? std::vector<long>{1, 1}
                                  : key == std::string("so_C") ? std::vector<long>{3}
                                                               : std::vector<long>{1};
        const auto rep = zoo::make(key, params);
        auto comm = classified(rep);
        REQUIRE(comm.type == CommutantType::C);
        const auto& s = *comm.complex_structure;
        CHECK(s.J * s.J == -s.lambda * Matrix::identity(rep.n));
        for (const auto& g : rep.generators) CHECK(bracket(s.J, g).is_zero());
    }
}

TEST_CASE("decompose_endomorphism: identity and explicit combinations") {
    auto comm = classified(u1_on_R2());
    const auto dec_id = decompose_endomorphism(Matrix::identity(2), comm);
    CHECK(dec_id.alpha == 1);
    CHECK(dec_id.beta == 0);

    const Matrix j{{0, -1}, {1, 0}};
    Matrix a = 3 * j;
    a(0, 0) += 2;
    a(1, 1) += 2;
    const auto dec = decompose_endomorphism(a, comm);
    CHECK(dec.alpha == 2);
    CHECK(dec.beta == 3);
    REQUIRE(dec.J_used.has_value());
    CHECK(dec.J_used->lambda == 1);
    CHECK(dec.reconstruct(2) == a);
}

TEST_CASE("decompose_endomorphism: beta stays non-negative") {
    auto comm = classified(u1_on_R2());
    const Matrix j{{0, -1}, {1, 0}};
    Matrix a = Rational(-5) * j;
    a(0, 0) += 1;
    a(1, 1) += 1;
    const auto dec = decompose_endomorphism(a, comm);
    CHECK(dec.alpha == 1);
    CHECK(dec.beta == 5);
    CHECK(dec.reconstruct(2) == a);
}

TEST_CASE("decompose_endomorphism: quaternion combination reconstructs exactly") {
    auto comm = classified(zoo::make("gl1H_right", {}));
    REQUIRE(comm.type == CommutantType::H);
    std::mt19937_64 rng(5);
    const auto lefts = zoo::gl1H_left_basis();
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(4, 4);
        Rational b_norm_sq(0);
        for (std::size_t k = 0; k < 4; ++k) {
            const Rational c(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
            a = a + c * lefts[k];
            if (k > 0) b_norm_sq += c * c;
        }
        const auto dec = decompose_endomorphism(a, comm);
        CHECK(dec.reconstruct(4) == a);
        if (dec.beta != 0) {
            // mu_A = x^2 - 2 alpha x + (alpha^2 + |imaginary|^2)
            CHECK(dec.beta * dec.beta * dec.J_used->lambda == b_norm_sq);
        }
    }
}

TEST_CASE("decompose_endomorphism rejects matrices outside the commutant") {
    auto comm = classified(u1_on_R2());
    Matrix outside(2, 2);
    outside(0, 1) = 1;
    CHECK_THROWS_AS(decompose_endomorphism(outside, comm), ValidationError);
}

TEST_CASE("decompose_endomorphism rejects non-division commutants") {
    auto comm = classified(zoo::make("block_diag_so2_so2", {}));
    CHECK_THROWS_AS(decompose_endomorphism(Matrix::identity(4), comm), ValidationError);
}
