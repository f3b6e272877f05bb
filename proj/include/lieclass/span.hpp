#pragma once

#include <optional>
#include <vector>

#include "lieclass/linalg.hpp"
#include "lieclass/matrix.hpp"
#include "lieclass/representation.hpp"

namespace lieclass {

enum class SpanKind { lie_span, associative_hull };

/// A linearly independent spanning set of matrices inside gl(n,R), closed
/// under bracket (lie_span) or product (associative_hull, contains Id).
struct MatrixAlgebraSpan {
    std::size_t n = 0;
    SpanKind kind = SpanKind::lie_span;
    std::vector<Matrix> basis;

    std::size_t dim() const { return basis.size(); }
};

namespace detail {

struct SpanBuilder {
    explicit SpanBuilder(std::size_t n) : tracker(n * n) {}

    bool add(std::vector<Matrix>& basis, const Matrix& m) {
        if (!tracker.insert(m.vec())) return false;
        basis.push_back(m);
        return true;
    }

    SpanTracker tracker;
};

} // namespace detail

/// Smallest bracket-closed span containing the generators. Iterates pair
/// brackets until the dimension stabilizes; dimension <= n^2 guarantees
/// termination, exceeding the cap is an internal error.
inline MatrixAlgebraSpan lie_closure(const Representation& rep) {
    if (rep.level != Level::lie_algebra)
        throw ValidationError("lie_closure requires algebra-level input");
    MatrixAlgebraSpan span;
    span.n = rep.n;
    span.kind = SpanKind::lie_span;

    detail::SpanBuilder b(rep.n);
    for (const auto& g : rep.generators) b.add(span.basis, g);

    std::size_t processed = 0;
    while (processed < span.basis.size()) {
        const std::size_t upto = span.basis.size();
        for (std::size_t i = 0; i < upto; ++i) {
            const std::size_t jstart = i >= processed ? i + 1 : std::max(processed, i + 1);
            for (std::size_t j = jstart; j < upto; ++j) {
                b.add(span.basis, bracket(span.basis[i], span.basis[j]));
                if (span.basis.size() > rep.n * rep.n)
                    throw InternalCheckError("lie_closure exceeded the n^2 dimension cap");
            }
        }
        processed = upto;
    }
    return span;
}

/// Smallest product-closed span containing Id and the generators. For
/// group-level input the inverses come for free: each invertible generator's
/// inverse is a polynomial in it, hence already in the hull.
inline MatrixAlgebraSpan associative_hull(const Representation& rep) {
    MatrixAlgebraSpan span;
    span.n = rep.n;
    span.kind = SpanKind::associative_hull;

    detail::SpanBuilder b(rep.n);
    b.add(span.basis, Matrix::identity(rep.n));
    for (const auto& g : rep.generators) b.add(span.basis, g);

    std::size_t processed = 1;  // products with Id are no-ops
    while (processed < span.basis.size()) {
        const std::size_t upto = span.basis.size();
        for (std::size_t i = 1; i < upto; ++i) {
            const std::size_t jstart = i >= processed ? 1 : processed;
            for (std::size_t j = jstart; j < upto; ++j) {
                b.add(span.basis, span.basis[i] * span.basis[j]);
                if (span.basis.size() > rep.n * rep.n)
                    throw InternalCheckError("associative_hull exceeded the n^2 dimension cap");
            }
        }
        processed = upto;
    }
    return span;
}

inline bool span_contains(const MatrixAlgebraSpan& span, const Matrix& m) {
    SpanTracker t(span.n * span.n);
    for (const auto& b : span.basis) t.insert(b.vec());
    return t.contains(m.vec());
}

/// Coordinates of m over the span basis, when m lies in the span.
inline std::optional<Vector> coordinates_in_span(const std::vector<Matrix>& basis, const Matrix& m) {
    if (basis.empty()) return std::nullopt;
    SpanTracker t(m.rows() * m.cols());
    for (const auto& b : basis)
        if (!t.insert(b.vec()))
            throw ValidationError("coordinates_in_span: basis is linearly dependent");
    return t.coordinates(m.vec());
}

/// Basis of the smallest invariant subspace containing the seed: closure of
/// span{seed} under all generators, breadth-first in discovery order.
inline std::vector<Vector> spin_subspace(const Representation& rep, const Vector& seed) {
    if (seed.size() != rep.n)
        throw ValidationError("spin_subspace: seed has wrong length");
    if (is_zero_vector(seed))
        throw ValidationError("spin_subspace: seed must be nonzero");

    SpanTracker t(rep.n);
    std::vector<Vector> basis;
    t.insert(seed);
    basis.push_back(seed);
    std::size_t next = 0;
    while (next < basis.size()) {
        const Vector v = basis[next++];
        for (const auto& g : rep.generators) {
            Vector w = g * v;
            if (t.insert(w)) basis.push_back(std::move(w));
        }
    }
    return basis;
}

} // namespace lieclass
