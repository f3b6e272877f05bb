#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieclass/commutant.hpp"
#include "lieclass/linalg.hpp"
#include "lieclass/representation.hpp"
#include "lieclass/span.hpp"

namespace lieclass {

struct IrreducibilityResult {
    bool irreducible = false;
    std::size_t hull_dim = 0;
    std::size_t commutant_dim = 0;
    CommutantType commutant_type = CommutantType::NonDivision;
    /// Canonical basis of a proper invariant subspace, when one was found.
    std::optional<std::vector<Vector>> witness;
    std::string note;
};

namespace detail {

/// Checks that the span of the given vectors is invariant under every
/// generator (exact).
inline bool subspace_invariant(const Representation& rep, const std::vector<Vector>& basis) {
    SpanTracker t(rep.n);
    for (const auto& v : basis) t.insert(v);
    for (const auto& v : basis)
        for (const auto& g : rep.generators)
            if (!t.contains(g * v)) return false;
    return true;
}

inline std::optional<std::vector<Vector>> kernel_witness(const Representation& rep, const Matrix& c) {
    if (c.is_zero()) return std::nullopt;
    const auto ker = nullspace(c);
    if (ker.empty() || ker.size() == rep.n) return std::nullopt;
    if (!subspace_invariant(rep, ker))
        throw InternalCheckError("kernel of a commutant element is not invariant");
    return canonical_span_basis(ker);
}

} // namespace detail

/// Reducibility witness search over the documented seed set: spins from every
/// standard basis vector, then takes kernels of singular commutant elements
/// (basis elements, their trace-zero parts, and rational-eigenvalue shifts
/// from degree <= 2 minimal polynomials). A non-division commutant always
/// supplies a singular element over R, but its kernel need not be rational;
/// in that case no witness is produced.
inline std::optional<std::vector<Vector>> spinning_witness(const Representation& rep,
                                                           const CommutantAlgebra& comm) {
    for (std::size_t s = 0; s < rep.n; ++s) {
        Vector seed(rep.n, Rational(0));
        seed[s] = 1;
        const auto spun = spin_subspace(rep, seed);
        if (spun.size() < rep.n) return canonical_span_basis(spun);
    }

    std::vector<Matrix> candidates;
    for (const auto& b : comm.basis) {
        candidates.push_back(b);
        candidates.push_back(detail::trace_zero_part(b));
    }
    for (const auto& c : candidates) {
        if (auto w = detail::kernel_witness(rep, c)) return w;
        if (c.is_zero()) continue;
        const Polynomial mu = minimal_polynomial(c);
        for (const Rational& alpha : rational_roots(mu)) {
            Matrix shifted = c;
            for (std::size_t i = 0; i < rep.n; ++i) shifted(i, i) -= alpha;
            if (auto w = detail::kernel_witness(rep, shifted)) return w;
        }
        // Minimal polynomials of so(p,q)-style elements are even; the square
        // is also a commutant element whose rational eigenvalues split V.
        bool even = true;
        for (long k = 1; k <= mu.degree(); k += 2)
            if (mu.coeff(static_cast<std::size_t>(k)) != 0) even = false;
        if (even && mu.degree() >= 2) {
            std::vector<Rational> half;
            for (long k = 0; k <= mu.degree(); k += 2)
                half.push_back(mu.coeff(static_cast<std::size_t>(k)));
            const Matrix csq = c * c;
            for (const Rational& alpha : rational_roots(Polynomial(half))) {
                Matrix shifted = csq;
                for (std::size_t i = 0; i < rep.n; ++i) shifted(i, i) -= alpha;
                if (auto w = detail::kernel_witness(rep, shifted)) return w;
            }
        }
        if (even && mu.degree() == 4) {
            // Biquadratic split (x^2 - 2ax + m)(x^2 + 2ax + m) with m^2 = c0
            // and 4a^2 = 2m - c2; two rational square tests, no factorization.
            const Rational coef2 = mu.coeff(2), coef0 = mu.coeff(0);
            Rational m;
            if (rational_sqrt(coef0, m)) {
                const Rational ms[2] = {m, Rational(-m)};
                for (const Rational& mm : ms) {
                    const Rational a_sq((2 * mm - coef2) / 4);
                    Rational a;
                    if (a_sq > 0 && rational_sqrt(a_sq, a)) {
                        for (int sign : {1, -1}) {
                            Matrix qb = c * c - Rational(2 * sign * a) * c;
                            for (std::size_t i = 0; i < rep.n; ++i) qb(i, i) += mm;
                            if (auto w = detail::kernel_witness(rep, qb)) return w;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// Irreducibility by the double-centralizer criterion: irreducible iff the
/// commutant is a division algebra and dim(hull) * dim(commutant) = n^2.
/// The spinning oracle cross-checks the decision; a witness found against an
/// irreducible verdict is an internal inconsistency.
inline IrreducibilityResult is_irreducible(const Representation& rep,
                                           const MatrixAlgebraSpan& hull,
                                           CommutantAlgebra& comm) {
    IrreducibilityResult res;
    res.hull_dim = hull.dim();
    res.commutant_dim = comm.dim();
    res.commutant_type = classify_type(comm, /*rep_irreducible=*/false);

    const bool division = res.commutant_type != CommutantType::NonDivision;
    const bool algebra_decision = division && hull.dim() * comm.dim() == rep.n * rep.n;

    res.witness = spinning_witness(rep, comm);
    if (algebra_decision && res.witness)
        throw InternalCheckError(
            "double-centralizer criterion says irreducible but spinning found an invariant subspace");
    res.irreducible = algebra_decision;
    if (!algebra_decision && !res.witness)
        res.note = "reducible by the double-centralizer criterion; no rational invariant "
                   "subspace arises from the documented seed set";
    return res;
}

inline IrreducibilityResult is_irreducible(const Representation& rep) {
    const MatrixAlgebraSpan hull = associative_hull(rep);
    CommutantAlgebra comm = commutant_basis(rep);
    return is_irreducible(rep, hull, comm);
}

} // namespace lieclass
