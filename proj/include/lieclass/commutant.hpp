#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieclass/linalg.hpp"
#include "lieclass/matrix.hpp"
#include "lieclass/polynomial.hpp"
#include "lieclass/representation.hpp"
#include "lieclass/span.hpp"

namespace lieclass {

enum class CommutantType { R, C, H, NonDivision };

inline std::string commutant_type_to_string(CommutantType t) {
    switch (t) {
    case CommutantType::R: return "R";
    case CommutantType::C: return "C";
    case CommutantType::H: return "H";
    default: return "NonDivision";
    }
}

/// A rational matrix J with J^2 = -lambda Id for a positive rational lambda.
/// Stands in for a unit complex structure; normalizing to J^2 = -Id would
/// need sqrt(lambda), which is irrational in general.
struct ScaledComplexStructure {
    Matrix J;
    Rational lambda;
};

/// Anticommuting pair of scaled complex structures spanning, together with
/// Id and I*J, a quaternion algebra.
struct QuaternionFrame {
    Matrix I;
    Rational lambda1;
    Matrix J;
    Rational lambda2;
};

struct CommutantAlgebra {
    std::size_t n = 0;
    std::vector<Matrix> basis;  // canonical kernel order
    CommutantType type = CommutantType::NonDivision;
    std::optional<ScaledComplexStructure> complex_structure;
    std::optional<QuaternionFrame> quaternion_frame;

    std::size_t dim() const { return basis.size(); }
};

/// Kernel of the commute-mode invariance system, canonical order. Every
/// element is re-verified to commute exactly with every generator, and Id is
/// checked to lie in the span.
inline CommutantAlgebra commutant_basis(const Representation& rep) {
    CommutantAlgebra comm;
    comm.n = rep.n;
    comm.basis = invariant_matrices(rep.generators, InvarianceMode::commute);

    SpanTracker span(rep.n * rep.n);
    for (const auto& b : comm.basis) {
        for (const auto& g : rep.generators)
            if (!bracket(b, g).is_zero())
                throw InternalCheckError("commutant element fails to commute with a generator");
        span.insert(b.vec());
    }
    if (!span.contains(Matrix::identity(rep.n).vec()))
        throw InternalCheckError("identity missing from commutant span");
    return comm;
}

namespace detail {

/// Trace-zero projection b - (tr b / n) Id.
inline Matrix trace_zero_part(const Matrix& b) {
    Matrix r = b;
    const Rational shift = b.trace() / Rational(static_cast<long>(b.rows()));
    for (std::size_t i = 0; i < b.rows(); ++i) r(i, i) -= shift;
    return r;
}

} // namespace detail

/// Classifies the commutant as R, C, H or NonDivision and extracts the
/// scaled complex structure / quaternion frame. Division types can only
/// occur in dimensions 1, 2, 4; when the representation is irreducible any
/// other dimension is an internal inconsistency.
inline CommutantType classify_type(CommutantAlgebra& comm, bool rep_irreducible) {
    const std::size_t n = comm.n;
    const Matrix id = Matrix::identity(n);
    comm.complex_structure.reset();
    comm.quaternion_frame.reset();

    auto non_division = [&]() {
        comm.type = CommutantType::NonDivision;
        if (rep_irreducible)
            throw InternalCheckError(
                "irreducible representation with non-division commutant of dim " +
                std::to_string(comm.dim()));
        return comm.type;
    };

    if (comm.dim() == 1) {
        // Id is in the span, so a 1-dim commutant is exactly R Id.
        comm.type = CommutantType::R;
        return comm.type;
    }

    if (comm.dim() == 2) {
        // Pick a basis {Id, B}; complete the square of mu_B.
        Matrix b = detail::trace_zero_part(comm.basis[0]);
        if (b.is_zero()) b = detail::trace_zero_part(comm.basis[1]);
        if (b.is_zero()) return non_division();
        const Polynomial mu = minimal_polynomial(b);
        if (mu.degree() != 2) return non_division();
        // mu = x^2 + p x + q with b trace-adjusted, so p = 0 up to the shift;
        // work with the general quadratic anyway.
        const Rational p = mu.coeff(1), q = mu.coeff(0);
        const Rational alpha = -p / 2;
        const Rational c = q - p * p / 4;
        if (c <= 0) return non_division();
        Matrix j = b;
        for (std::size_t i = 0; i < n; ++i) j(i, i) -= alpha;
        comm.type = CommutantType::C;
        comm.complex_structure = ScaledComplexStructure{std::move(j), c};
        return comm.type;
    }

    if (comm.dim() == 4) {
        // Trace-zero complement of Id; in the quaternionic case each element
        // x there satisfies x^2 = q(x) Id with q negative definite.
        std::vector<Matrix> u;
        SpanTracker t(n * n);
        t.insert(id.vec());
        for (const auto& b : comm.basis) {
            Matrix z = detail::trace_zero_part(b);
            if (!z.is_zero() && t.insert(z.vec())) u.push_back(std::move(z));
        }
        if (u.size() != 3) return non_division();

        Matrix gram(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                const Matrix p = Rational(1, 2) * (u[i] * u[j] + u[j] * u[i]);
                const Rational s = p(0, 0);
                Matrix scaled_id = id;
                for (std::size_t d = 0; d < n; ++d) scaled_id(d, d) = s;
                if (p != scaled_id) return non_division();
                gram(i, j) = gram(j, i) = s;
            }
        const Signature sig = congruence_signature(gram);
        if (sig.n_minus != 3) return non_division();

        // Gram-Schmidt (no normalization) gives an anticommuting pair.
        const Matrix i_str = u[0];
        const Rational l1 = -gram(0, 0);
        Matrix j_str = u[1] - (gram(0, 1) / gram(0, 0)) * u[0];
        const Matrix j_sq = j_str * j_str;
        const Rational l2 = -j_sq(0, 0);
        if (!(i_str * j_str + j_str * i_str).is_zero())
            throw InternalCheckError("quaternion frame candidates fail to anticommute");
        comm.type = CommutantType::H;
        comm.quaternion_frame = QuaternionFrame{i_str, l1, std::move(j_str), l2};
        return comm.type;
    }

    return non_division();
}

/// alpha, beta >= 0 and the scaled structure with A = alpha Id + beta J.
struct EndoDecomposition {
    Rational alpha;
    Rational beta;
    std::optional<ScaledComplexStructure> J_used;

    Matrix reconstruct(std::size_t n) const {
        Matrix r = J_used ? beta * J_used->J : Matrix(n, n);
        for (std::size_t i = 0; i < n; ++i) r(i, i) += alpha;
        return r;
    }
};

/// Writes A = alpha Id + beta J with beta >= 0 (the sign is absorbed into J).
/// For complex-type commutants the stored structure is reused so that the
/// reported J matches the commutant's; otherwise the trace-zero part of A
/// itself serves with beta = 1.
inline EndoDecomposition decompose_endomorphism(const Matrix& a, const CommutantAlgebra& comm) {
    if (comm.type == CommutantType::NonDivision)
        throw ValidationError("decompose_endomorphism requires a division-type commutant");
    if (!coordinates_in_span(comm.basis, a))
        throw ValidationError("decompose_endomorphism: matrix not in the commutant span");

    const std::size_t n = comm.n;
    const Rational alpha = a.trace() / Rational(static_cast<long>(n));
    const Matrix a0 = detail::trace_zero_part(a);

    EndoDecomposition dec;
    dec.alpha = alpha;
    if (a0.is_zero()) {
        dec.beta = 0;
        return dec;
    }
    const Polynomial mu = minimal_polynomial(a);
    if (mu.degree() > 2)
        throw InternalCheckError("division commutant element with minimal polynomial degree > 2");

    if (comm.type == CommutantType::C) {
        const auto coords = coordinates_in_span({Matrix::identity(n), comm.complex_structure->J}, a);
        if (!coords)
            throw InternalCheckError("complex commutant element outside span{Id, J}");
        Rational beta = (*coords)[1];
        ScaledComplexStructure s = *comm.complex_structure;
        if (beta < 0) {
            beta = -beta;
            s.J = -s.J;
        }
        dec.beta = beta;
        dec.J_used = std::move(s);
        return dec;
    }

    // Quaternionic (or plain) case: A0 itself is a scaled complex structure.
    const Matrix a0_sq = a0 * a0;
    const Rational lambda = -a0_sq(0, 0);
    Matrix check = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) check(i, i) = -lambda;
    if (a0_sq != check || lambda <= 0)
        throw InternalCheckError("trace-zero part of a division commutant element is not a scaled complex structure");
    dec.beta = 1;
    dec.J_used = ScaledComplexStructure{a0, lambda};
    return dec;
}

} // namespace lieclass
