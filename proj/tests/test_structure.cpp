#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieclass/analyze.hpp"
#include "lieclass/structure.hpp"
#include "lieclass/zoo.hpp"

using namespace lieclass;

namespace {

MatrixAlgebraSpan closed_span(const Representation& rep) { return lie_closure(rep); }

Representation two_dim_nonabelian() {
    // [x, y] = y realized by x = E11, y = E12.
    Representation rep;
    rep.name = "affine line algebra";
    rep.n = 2;
    rep.level = Level::lie_algebra;
    Matrix x(2, 2), y(2, 2);
    x(0, 0) = 1;
    y(0, 1) = 1;
    rep.generators = {x, y};
    return rep;
}

Representation abelian_R2() {
    Representation rep;
    rep.name = "R^2 abelian";
    rep.n = 2;
    rep.level = Level::lie_algebra;
    Matrix a(2, 2), b(2, 2);
    a(0, 0) = 1;
    b(1, 1) = 1;
    rep.generators = {a, b};
    return rep;
}

} // namespace

TEST_CASE("center: abelian co(2) is its own center") {
    Representation rep;
    rep.name = "co(2)";
    rep.n = 2;
    rep.level = Level::lie_algebra;
    rep.generators = {Matrix::identity(2), Matrix{{0, -1}, {1, 0}}};
    CHECK(center_of(closed_span(rep)).size() == 2);
}

TEST_CASE("center: so(3) is centerless") {
    CHECK(center_of(closed_span(zoo::make("so", {0, 3}))).empty());
}

TEST_CASE("center: realified u(2) has the central complex structure") {
    const auto center = center_of(closed_span(zoo::make("u", {0, 2})));
    REQUIRE(center.size() == 1);
    const Matrix& z = center[0];
    CHECK(z.trace() == 0);
    const Matrix z2 = z * z;
    CHECK(z2(0, 0) < 0);  // negative multiple of the identity
}

TEST_CASE("derived algebra and Killing form of so(3)") {
    const auto g = closed_span(zoo::make("so", {0, 3}));
    const auto dk = derived_and_killing(g);
    CHECK(dk.derived_basis.size() == 3);
    CHECK(dk.killing_rank == 3);
    CHECK(congruence_signature(dk.killing) == Signature{3, 0, 0});  // compact: negative definite
}

TEST_CASE("derived algebra and Killing form of abelian co(2)") {
    Representation rep;
    rep.name = "co(2)";
    rep.n = 2;
    rep.level = Level::lie_algebra;
    rep.generators = {Matrix::identity(2), Matrix{{0, -1}, {1, 0}}};
    const auto dk = derived_and_killing(closed_span(rep));
    CHECK(dk.derived_basis.empty());
    CHECK(dk.killing_rank == 0);
}

TEST_CASE("realified u(2): derived is su(2), not semisimple") {
    const auto g = closed_span(zoo::make("u", {0, 2}));
    const auto dk = derived_and_killing(g);
    CHECK(g.dim() == 4);
    CHECK(dk.derived_basis.size() == 3);
    CHECK(dk.killing_rank == 3);
}

TEST_CASE("structure report: reductive split holds on irreducible entries") {
    for (const char* key : {"so", "u", "spiral"}) {
        std::vector<long> params = key == std::string("so") ? std::vector<long>{1, 2}
                                  : key == std::string("u") ? std::vector<long>{1, 1}
                                                            : std::vector<long>{3};
        const auto rep = zoo::make(key, params);
        auto comm = commutant_basis(rep);
        classify_type(comm, false);
        const auto g = closed_span(rep);
        const auto s = analyze_structure(g, comm, true);
        CHECK(s.reductive_split_ok);
        CHECK(s.dim_center + s.dim_derived == s.dim_g);
        CHECK(s.semisimple == (s.dim_center == 0));
    }
}

TEST_CASE("center shapes across the catalog") {
    for (const auto& entry : zoo::catalog()) {
        if (!entry.expected || !entry.expected->center_shape) continue;
        const auto report = run_analysis(entry.rep);
        REQUIRE(report.structure.has_value());
        CHECK(report.structure->center_shape.shape == *entry.expected->center_shape);
        if (entry.expected->center_dim)
            CHECK(report.structure->dim_center == *entry.expected->center_dim);
    }
}

TEST_CASE("center shape: conformal so(3) + scalings is a real scaling") {
    Representation rep;
    rep.name = "co(3)";
    rep.n = 3;
    rep.level = Level::lie_algebra;
    rep.generators = zoo::so_pq_basis(0, 3);
    rep.generators.push_back(Matrix::identity(3));
    const auto report = run_analysis(rep);
    CHECK(report.irreducibility.irreducible);
    REQUIRE(report.structure.has_value());
    CHECK(report.structure->dim_center == 1);
    CHECK(report.structure->center_shape.shape == CenterShape::real_scaling);
    CHECK_FALSE(report.forms.self_dual);  // the scaling kills every form
}

TEST_CASE("non-real center shapes only appear in even ambient dimension") {
    for (const auto& entry : zoo::catalog()) {
        const auto report = run_analysis(entry.rep);
        if (!report.structure || !report.irreducibility.irreducible) continue;
        const auto shape = report.structure->center_shape.shape;
        if (shape == CenterShape::full_complex || shape == CenterShape::circle ||
            shape == CenterShape::spiral)
            CHECK(entry.rep.n % 2 == 0);
    }
}

TEST_CASE("closedness verdicts") {
    CHECK(closedness_verdict(true) == Closedness::closed_by_irreducibility);
    CHECK(closedness_verdict(false) == Closedness::undetermined_reducible);
    const auto spiral = run_analysis(zoo::make("spiral", {3}));
    REQUIRE(spiral.structure.has_value());
    CHECK(spiral.structure->closedness == Closedness::closed_by_irreducibility);
    const auto blocks = run_analysis(zoo::make("block_diag_so2_so2", {}));
    REQUIRE(blocks.structure.has_value());
    CHECK(blocks.structure->closedness == Closedness::undetermined_reducible);
}

TEST_CASE("orthogonal center check: u(1,1) passes with even parities") {
    const auto report = run_analysis(zoo::make("u", {1, 1}));
    REQUIRE(report.orthogonal_center.has_value());
    const auto& oc = *report.orthogonal_center;
    REQUIRE(oc.applicable);
    CHECK(oc.passed);
    CHECK(oc.p == 2);
    CHECK(oc.q == 2);
    CHECK(oc.parities_even);
    CHECK(oc.center_structure_commutes);
    CHECK(oc.generators_skew_for_form);
}

TEST_CASE("orthogonal center check: semisimple cases are not applicable") {
    for (const auto key : {"so", "sp_R"}) {
        const auto rep = zoo::make(key, key == std::string("so") ? std::vector<long>{1, 2}
                                                                 : std::vector<long>{1});
        const auto report = run_analysis(rep);
        REQUIRE(report.orthogonal_center.has_value());
        CHECK_FALSE(report.orthogonal_center->applicable);
    }
}

TEST_CASE("lorentz maximality: the full so(1,2) is irreducible and full") {
    const auto lr = lorentz_maximality_check(zoo::make("so", {1, 2}));
    CHECK(lr.outcome == LorentzOutcome::irreducible_and_full);
    CHECK(lr.closure_dim == 3);
    CHECK(lr.full_dim == 3);
}

TEST_CASE("lorentz maximality: parabolic reports its null-line witness") {
    const auto lr = lorentz_maximality_check(zoo::make("parabolic_so1n", {2}));
    CHECK(lr.outcome == LorentzOutcome::reducible_with_witness);
    REQUIRE(lr.witness.has_value());
}

TEST_CASE("lorentz maximality: so(2) inside so(1,2) fixes the timelike axis") {
    Representation rep;
    rep.name = "so(2) in so(1,2)";
    rep.n = 3;
    rep.level = Level::lie_algebra;
    Matrix r(3, 3);
    r(1, 2) = -1;
    r(2, 1) = 1;
    rep.generators = {r};
    const auto lr = lorentz_maximality_check(rep);
    CHECK(lr.outcome == LorentzOutcome::reducible_with_witness);
}

TEST_CASE("lorentz maximality rejects generators outside so(1,n)") {
    Representation rep;
    rep.name = "not lorentz";
    rep.n = 3;
    rep.level = Level::lie_algebra;
    rep.generators = {Matrix::identity(3)};
    CHECK_THROWS_AS(lorentz_maximality_check(rep), ValidationError);
}

TEST_CASE("lorentz scan: deterministic by seed and violation-free") {
    const auto a = lorentz_scan(2, 25, 99);
    const auto b = lorentz_scan(2, 25, 99);
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].outcome == b.results[i].outcome);
        CHECK(a.results[i].closure_dim == b.results[i].closure_dim);
    }
    CHECK(a.violations == 0);
    CHECK_THROWS_AS(lorentz_scan(7, 10, 1), ValidationError);
    CHECK_THROWS_AS(lorentz_scan(2, 0, 1), ValidationError);
}

TEST_CASE("adjoint form criteria: sl(2,R) has the Killing form and no skew") {
    const auto report = adjoint_form_criteria(closed_span(zoo::make("sp_R", {1})));
    CHECK(report.codim_derived == 0);
    CHECK(report.has_nondegenerate_symmetric);
    CHECK_FALSE(report.has_nonzero_skew);
    CHECK(report.self_dual);
    CHECK(report.symmetric_criterion_consistent);
    CHECK(report.skew_criterion_consistent);
}

TEST_CASE("adjoint form criteria: the 2-dim nonabelian algebra has codim 1, no skew") {
    const auto report = adjoint_form_criteria(closed_span(two_dim_nonabelian()));
    CHECK(report.dim_g == 2);
    CHECK(report.codim_derived == 1);
    CHECK_FALSE(report.has_nonzero_skew);
    CHECK_FALSE(report.has_nondegenerate_symmetric);
    CHECK_FALSE(report.self_dual);
    CHECK(report.symmetric_criterion_consistent);
    CHECK(report.skew_criterion_consistent);
}

TEST_CASE("adjoint form criteria: abelian R^2 has codim 2 and skew forms") {
    const auto report = adjoint_form_criteria(closed_span(abelian_R2()));
    CHECK(report.codim_derived == 2);
    CHECK(report.has_nonzero_skew);
    CHECK(report.has_nondegenerate_symmetric);
    CHECK(report.self_dual);
    CHECK(report.skew_criterion_consistent);
}
