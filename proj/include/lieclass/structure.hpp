#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieclass/commutant.hpp"
#include "lieclass/forms.hpp"
#include "lieclass/irreducibility.hpp"
#include "lieclass/linalg.hpp"
#include "lieclass/realify.hpp"
#include "lieclass/representation.hpp"
#include "lieclass/span.hpp"

namespace lieclass {

enum class CenterShape { trivial, real_scaling, full_complex, circle, spiral };

inline std::string center_shape_to_string(CenterShape s) {
    switch (s) {
    case CenterShape::trivial: return "trivial";
    case CenterShape::real_scaling: return "real_scaling";
    case CenterShape::full_complex: return "full_complex";
    case CenterShape::circle: return "circle";
    default: return "spiral";
    }
}

enum class Closedness { closed_by_irreducibility, undetermined_reducible };

inline std::string closedness_to_string(Closedness c) {
    return c == Closedness::closed_by_irreducibility ? "closed_by_irreducibility"
                                                     : "undetermined_reducible";
}

/// Basis of {z in g : [z, x] = 0 for all x in g}, solved over the
/// coefficient vectors of the span basis.
inline std::vector<Matrix> center_of(const MatrixAlgebraSpan& g) {
    if (g.kind != SpanKind::lie_span)
        throw ValidationError("center_of expects a bracket-closed lie span");
    const std::size_t d = g.dim();
    const std::size_t nn = g.n * g.n;
    if (d == 0) return {};
    Matrix sys(d * nn, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            const Matrix br = bracket(g.basis[i], g.basis[j]);
            const Vector v = br.vec();
            for (std::size_t r = 0; r < nn; ++r) sys(j * nn + r, i) += v[r];
        }
    std::vector<Matrix> center;
    for (const auto& c : nullspace(sys)) {
        Matrix z(g.n, g.n);
        for (std::size_t i = 0; i < d; ++i)
            if (c[i] != 0) z = z + c[i] * g.basis[i];
        center.push_back(std::move(z));
    }
    return center;
}

/// Structure constants of the span basis: [b_i, b_j] = sum_k c[i][j][k] b_k.
inline std::vector<std::vector<Vector>> structure_constants(const MatrixAlgebraSpan& g) {
    const std::size_t d = g.dim();
    SpanTracker t(g.n * g.n);
    for (const auto& b : g.basis)
        if (!t.insert(b.vec()))
            throw ValidationError("structure_constants: basis is linearly dependent");
    std::vector<std::vector<Vector>> c(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto coords = t.coordinates(bracket(g.basis[i], g.basis[j]).vec());
            if (!coords)
                throw ValidationError("structure_constants: span is not bracket-closed");
            c[i][j] = *coords;
        }
    return c;
}

/// ad matrices over the span basis; the adjoint representation of g on itself.
inline Representation adjoint_representation(const MatrixAlgebraSpan& g) {
    const auto c = structure_constants(g);
    const std::size_t d = g.dim();
    Representation ad;
    ad.name = "adjoint";
    ad.n = d;
    ad.level = Level::lie_algebra;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix m(d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) m(k, j) = c[i][j][k];
        ad.generators.push_back(std::move(m));
    }
    return ad;
}

struct DerivedAndKilling {
    std::vector<Matrix> derived_basis;
    Matrix killing;          // over the span basis
    std::size_t killing_rank = 0;
};

/// Derived algebra = span of all brackets; Killing form K(x,y) = tr(ad x ad y)
/// over the abstract structure constants.
inline DerivedAndKilling derived_and_killing(const MatrixAlgebraSpan& g) {
    DerivedAndKilling out;
    const std::size_t d = g.dim();
    SpanTracker t(g.n * g.n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const Matrix br = bracket(g.basis[i], g.basis[j]);
            if (!br.is_zero() && t.insert(br.vec())) out.derived_basis.push_back(br);
        }

    const Representation ad = adjoint_representation(g);
    out.killing = Matrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const Rational k = (ad.generators[i] * ad.generators[j]).trace();
            out.killing(i, j) = k;
            out.killing(j, i) = k;
        }
    out.killing_rank = rank(out.killing);
    return out;
}

struct CenterShapeResult {
    CenterShape shape = CenterShape::trivial;
    bool outside_hypothesis = false;  // reducible input: classification nominal
    std::optional<Rational> scaling_coeff;   // a in z = a Id + b J (dim-1 center)
    std::optional<Matrix> rotation_part;     // trace-zero part of the center element
};

/// Classifies the connected center through the commutant: dim 0 trivial;
/// a 1-dim center a Id + b J is a real scaling (b = 0), a circle (a = 0) or
/// a logarithmic spiral (both nonzero); a 2-dim center is all of C*. The
/// non-real shapes require even ambient dimension.
inline CenterShapeResult center_shape(const std::vector<Matrix>& center,
                                      const CommutantAlgebra& comm, bool irreducible) {
    CenterShapeResult res;
    res.outside_hypothesis = !irreducible;
    if (center.empty()) {
        res.shape = CenterShape::trivial;
        return res;
    }
    const std::size_t n = comm.n;
    if (irreducible)
        for (const auto& z : center)
            if (!coordinates_in_span(comm.basis, z))
                throw InternalCheckError("center element outside the commutant span");

    if (center.size() == 1) {
        const Matrix& z = center.front();
        const Rational a = z.trace() / Rational(static_cast<long>(n));
        const Matrix z0 = detail::trace_zero_part(z);
        res.scaling_coeff = a;
        if (z0.is_zero()) {
            res.shape = CenterShape::real_scaling;
            return res;
        }
        res.rotation_part = z0;
        res.shape = a == 0 ? CenterShape::circle : CenterShape::spiral;
    } else if (center.size() == 2) {
        res.shape = CenterShape::full_complex;
    } else {
        if (irreducible)
            throw InternalCheckError("irreducible representation with center of dim > 2");
        res.shape = CenterShape::full_complex;  // nominal label, flagged above
    }
    if (irreducible && res.shape != CenterShape::real_scaling && n % 2 != 0)
        throw InternalCheckError("non-real center shape in odd ambient dimension");
    return res;
}

inline Closedness closedness_verdict(bool irreducible) {
    return irreducible ? Closedness::closed_by_irreducibility
                       : Closedness::undetermined_reducible;
}

/// Aggregated structure record for algebra-level input.
struct StructureReport {
    std::size_t dim_g = 0;
    std::size_t dim_center = 0;
    std::size_t dim_derived = 0;
    std::size_t killing_rank = 0;
    bool semisimple = false;
    bool reductive_split_ok = false;
    CenterShapeResult center_shape;
    Closedness closedness = Closedness::undetermined_reducible;
};

inline StructureReport analyze_structure(const MatrixAlgebraSpan& g,
                                         const CommutantAlgebra& comm, bool irreducible) {
    StructureReport rep;
    rep.dim_g = g.dim();
    const auto center = center_of(g);
    rep.dim_center = center.size();
    const auto dk = derived_and_killing(g);
    rep.dim_derived = dk.derived_basis.size();
    rep.killing_rank = dk.killing_rank;
    rep.semisimple = dk.killing_rank == g.dim();

    // Reductive split: center + derived spans g with zero intersection.
    SpanTracker t(g.n * g.n);
    std::size_t inserted = 0;
    for (const auto& z : center) inserted += t.insert(z.vec()) ? 1 : 0;
    for (const auto& b : dk.derived_basis) inserted += t.insert(b.vec()) ? 1 : 0;
    rep.reductive_split_ok = inserted == rep.dim_center + rep.dim_derived &&
                             t.dim() == rep.dim_g;

    rep.center_shape = center_shape(center, comm, irreducible);
    rep.closedness = closedness_verdict(irreducible);

    if (irreducible) {
        if (!rep.reductive_split_ok)
            throw InternalCheckError("irreducible representation without reductive split");
        if (rep.semisimple != (rep.dim_center == 0))
            throw InternalCheckError("Cartan criterion disagrees with the center dimension");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Orthogonal center check
// ---------------------------------------------------------------------------

struct OrthogonalCenterReport {
    bool applicable = false;
    std::string reason;            // when not applicable
    std::size_t p = 0, q = 0;      // distinguished symmetric signature
    bool parities_even = false;
    bool center_structure_commutes = false;
    bool generators_skew_for_form = false;
    bool passed = false;
};

/// For an irreducible, orthogonal, non-semisimple representation: p and q of
/// the distinguished symmetric form are even, the center supplies a complex
/// structure commuting with every generator, and the generators are skew for
/// the form (the unitary intersection conditions).
inline OrthogonalCenterReport orthogonal_center_check(const Representation& rep,
                                                      const FormSpace& forms,
                                                      const StructureReport& structure,
                                                      const std::vector<Matrix>& center) {
    OrthogonalCenterReport out;
    if (rep.level != Level::lie_algebra) {
        out.reason = "requires algebra-level input";
        return out;
    }
    if (structure.closedness != Closedness::closed_by_irreducibility) {
        out.reason = "representation is not irreducible";
        return out;
    }
    if (forms.dim_sym() == 0) {
        out.reason = "no invariant symmetric form (not orthogonal)";
        return out;
    }
    if (structure.semisimple) {
        out.reason = "algebra is semisimple";
        return out;
    }
    out.applicable = true;

    const auto [p, q] = detail::normalized_signature(forms);
    out.p = p;
    out.q = q;
    out.parities_even = p % 2 == 0 && q % 2 == 0;

    // The center cannot meet the scalings (orthogonality kills the trace
    // part), so some center element has a nonzero rotation part: the J.
    std::optional<Matrix> j;
    for (const auto& z : center) {
        const Matrix z0 = detail::trace_zero_part(z);
        if (!z0.is_zero()) { j = z0; break; }
    }
    if (!j)
        throw InternalCheckError(
            "non-semisimple orthogonal irreducible representation without a central complex structure");
    out.center_structure_commutes = true;
    for (const auto& g : rep.generators)
        if (!bracket(*j, g).is_zero()) out.center_structure_commutes = false;

    const Matrix a = detail::distinguished_form(forms, true);
    out.generators_skew_for_form = true;
    for (const auto& g : rep.generators)
        if (!(g.transpose() * a + a * g).is_zero()) out.generators_skew_for_form = false;

    out.passed = out.parities_even && out.center_structure_commutes && out.generators_skew_for_form;
    if (!out.passed)
        throw InternalCheckError("orthogonal center criterion failed on an irreducible input");
    return out;
}

// ---------------------------------------------------------------------------
// Lorentz maximality
// ---------------------------------------------------------------------------

enum class LorentzOutcome { irreducible_and_full, reducible_with_witness, reducible_no_rational_witness };

inline std::string lorentz_outcome_to_string(LorentzOutcome o) {
    switch (o) {
    case LorentzOutcome::irreducible_and_full: return "irreducible_and_full";
    case LorentzOutcome::reducible_with_witness: return "reducible_with_witness";
    default: return "reducible_no_rational_witness";
    }
}

struct LorentzReport {
    LorentzOutcome outcome = LorentzOutcome::reducible_no_rational_witness;
    std::size_t closure_dim = 0;
    std::size_t full_dim = 0;
    std::optional<std::vector<Vector>> witness;
};

/// For generators inside so(1,n): an irreducible action must close to the
/// full so(1,n). An irreducible-but-proper closure is an internal
/// inconsistency and fails loudly.
inline LorentzReport lorentz_maximality_check(const Representation& rep) {
    if (rep.level != Level::lie_algebra)
        throw ValidationError("lorentz_maximality_check requires algebra-level input");
    if (rep.n < 2)
        throw ValidationError("lorentz_maximality_check needs ambient dimension >= 2");
    const std::size_t q = rep.n - 1;
    const Matrix form = ipq(1, q);
    for (std::size_t k = 0; k < rep.generators.size(); ++k)
        if (!(rep.generators[k].transpose() * form + form * rep.generators[k]).is_zero())
            throw ValidationError("generator " + std::to_string(k) + " is not in so(1," +
                                  std::to_string(q) + ")");

    LorentzReport out;
    out.full_dim = rep.n * (rep.n - 1) / 2;
    const MatrixAlgebraSpan closure = lie_closure(rep);
    out.closure_dim = closure.dim();

    Representation closed = rep;
    closed.generators = closure.basis;
    const IrreducibilityResult irr = is_irreducible(closed);
    if (irr.irreducible) {
        if (closure.dim() != out.full_dim)
            throw InternalCheckError(
                "irreducible proper subalgebra of so(1,n): Lorentz maximality violated");
        out.outcome = LorentzOutcome::irreducible_and_full;
    } else if (irr.witness) {
        out.outcome = LorentzOutcome::reducible_with_witness;
        out.witness = irr.witness;
    } else {
        out.outcome = LorentzOutcome::reducible_no_rational_witness;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Adjoint-representation form criteria
// ---------------------------------------------------------------------------

struct AdjointFormReport {
    std::size_t dim_g = 0;
    std::size_t codim_derived = 0;
    bool has_nondegenerate_symmetric = false;
    bool has_nonzero_skew = false;
    bool self_dual = false;  // invertible intertwiner adjoint -> coadjoint exists
    bool symmetric_criterion_consistent = false;  // nondeg sym <-> self-dual
    bool skew_criterion_consistent = false;       // nonzero skew <-> codim >= 2
};

namespace detail {

/// Whether a linear space of square matrices contains a nondegenerate
/// element: det is a polynomial of degree <= n on the coefficient space, so
/// evaluating on the grid {0..n}^dim decides exactly.
inline bool space_contains_nondegenerate(const std::vector<Matrix>& basis, std::size_t n) {
    if (basis.empty()) return false;
    const std::size_t d = basis.size();
    std::vector<std::size_t> idx(d, 0);
    for (;;) {
        Matrix combo(n, n);
        for (std::size_t i = 0; i < d; ++i)
            if (idx[i] != 0) combo = combo + Rational(static_cast<long>(idx[i])) * basis[i];
        if (det(combo) != 0) return true;
        std::size_t pos = 0;
        while (pos < d && idx[pos] == n) idx[pos++] = 0;
        if (pos == d) return false;
        ++idx[pos];
    }
}

} // namespace detail

/// Self-duality criteria on a given bracket-closed span: the adjoint
/// representation admits a nondegenerate invariant symmetric form iff the
/// algebra is self-dual, and a nonzero invariant skew form iff the derived
/// algebra has codimension >= 2. Both equivalences are checked exactly on
/// the instance.
inline AdjointFormReport adjoint_form_criteria(const MatrixAlgebraSpan& g) {
    AdjointFormReport out;
    out.dim_g = g.dim();
    const auto dk = derived_and_killing(g);
    out.codim_derived = g.dim() - dk.derived_basis.size();

    const Representation ad = adjoint_representation(g);
    const FormSpace forms = invariant_forms(ad);
    out.has_nonzero_skew = forms.dim_skew() > 0;
    out.has_nondegenerate_symmetric =
        detail::space_contains_nondegenerate(forms.sym_basis, g.dim());

    std::vector<Matrix> whole = forms.sym_basis;
    whole.insert(whole.end(), forms.skew_basis.begin(), forms.skew_basis.end());
    out.self_dual = detail::space_contains_nondegenerate(whole, g.dim());

    out.symmetric_criterion_consistent = out.has_nondegenerate_symmetric == out.self_dual;
    out.skew_criterion_consistent = out.has_nonzero_skew == (out.codim_derived >= 2);
    if (!out.symmetric_criterion_consistent || !out.skew_criterion_consistent)
        throw InternalCheckError("adjoint form criteria equivalence failed");
    return out;
}

} // namespace lieclass
