#pragma once

#include <optional>
#include <vector>

#include "lieclass/matrix.hpp"
#include "lieclass/polynomial.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

struct EchelonForm {
    Matrix mat;                       // reduced row echelon form, zero rows kept at bottom
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
    std::size_t rank = 0;
};

/// Reduced row echelon form with leading-one pivots; fully deterministic
/// (first nonzero entry in column order is the pivot).
inline EchelonForm rref(Matrix a) {
    EchelonForm e;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a(piv, col) == 0) ++piv;
        if (piv == m) continue;
        a.swap_rows(row, piv);
        const Rational lead = a(row, col);
        if (lead != 1)
            for (std::size_t j = col; j < n; ++j) a(row, j) /= lead;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = row;
    e.mat = std::move(a);
    return e;
}

inline std::size_t rank(const Matrix& a) { return rref(a).rank; }

/// Canonical right-kernel basis. Vectors are produced per free column in
/// ascending order and scaled so the first nonzero coordinate is 1 (the
/// pivot convention used throughout for reproducible output).
inline std::vector<Vector> nullspace(const Matrix& a) {
    const EchelonForm e = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.rank; ++r)
            v[e.pivots[r]] = -e.mat(r, f);
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k] != 0) {
                if (v[k] != 1) {
                    const Rational lead = v[k];
                    for (auto& x : v) x /= lead;
                }
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// List-of-rows variant; rejects ragged input.
inline std::vector<Vector> nullspace_basis(const std::vector<Vector>& rows) {
    if (rows.empty())
        throw ValidationError("nullspace_basis: empty row list");
    const std::size_t n = rows.front().size();
    if (n == 0)
        throw ValidationError("nullspace_basis: rows must have length >= 1");
    Matrix a(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n)
            throw ValidationError("nullspace_basis: ragged input rows");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
    }
    return nullspace(a);
}

inline Rational det(Matrix a) {
    if (!a.is_square())
        throw ValidationError("det: matrix not square");
    const std::size_t n = a.rows();
    Rational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            a.swap_rows(col, piv);
            d = -d;
        }
        d *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

inline Matrix inverse(const Matrix& a) {
    if (!a.is_square())
        throw ValidationError("inverse: matrix not square");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix::identity(n));
    const EchelonForm e = rref(aug);
    if (e.rank < n || e.pivots[n - 1] >= n)
        throw ValidationError("inverse: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.mat(i, n + j);
    return inv;
}

/// One solution of A x = b, or nullopt if inconsistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size())
        throw ValidationError("solve: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
    const EchelonForm e = rref(aug);
    for (std::size_t r = 0; r < e.rank; ++r)
        if (e.pivots[r] == a.cols()) return std::nullopt;
    Vector x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < e.rank; ++r)
        x[e.pivots[r]] = e.mat(r, a.cols());
    return x;
}

/// Incremental row-space tracker: membership tests and coordinates relative
/// to the vectors accepted so far. Each stored row is fully reduced against
/// the rows stored before it, so a single forward reduction pass suffices.
class SpanTracker {
public:
    explicit SpanTracker(std::size_t width) : width_(width) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Inserts v if independent of the current span; returns true when added.
    bool insert(const Vector& v) {
        Vector r, combo;
        reduce(v, r, combo);
        if (is_zero_vector(r)) return false;
        std::size_t p = 0;
        while (r[p] == 0) ++p;
        const Rational lead = r[p];
        // r = v - sum combo_k row_k, so the stored row r/lead expands over the
        // accepted vectors (including v) by folding each row's own expansion.
        Vector expansion(rows_.size() + 1, Rational(0));
        for (std::size_t k = 0; k < combo.size(); ++k) {
            if (combo[k] == 0) continue;
            for (std::size_t t = 0; t < expansions_[k].size(); ++t)
                expansion[t] -= combo[k] * expansions_[k][t] / lead;
        }
        expansion.back() = Rational(1) / lead;
        for (auto& x : r) x /= lead;
        rows_.push_back(std::move(r));
        expansions_.push_back(std::move(expansion));
        pivots_.push_back(p);
        return true;
    }

    bool contains(const Vector& v) const {
        Vector r, combo;
        reduce(v, r, combo);
        return is_zero_vector(r);
    }

    /// Coordinates of v over the accepted vectors (insertion order), when v
    /// lies in the span.
    std::optional<Vector> coordinates(const Vector& v) const {
        Vector r, combo;
        reduce(v, r, combo);
        if (!is_zero_vector(r)) return std::nullopt;
        Vector coords(rows_.size(), Rational(0));
        // v = sum_k combo_k row_k and row_k = sum_t expansions_[k][t] accepted_t.
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (combo[k] == 0) continue;
            for (std::size_t t = 0; t < expansions_[k].size(); ++t)
                coords[t] += combo[k] * expansions_[k][t];
        }
        return coords;
    }

private:
    // r := v - sum combo_k row_k, eliminating each stored pivot in turn.
    void reduce(const Vector& v, Vector& r, Vector& combo) const {
        if (v.size() != width_)
            throw ValidationError("SpanTracker: vector width mismatch");
        r = v;
        combo.assign(rows_.size(), Rational(0));
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational f = r[pivots_[k]];
            if (f == 0) continue;
            combo[k] = f;
            for (std::size_t j = 0; j < width_; ++j)
                if (rows_[k][j] != 0) r[j] -= f * rows_[k][j];
        }
    }

    std::size_t width_;
    std::vector<Vector> rows_;        // reduced rows, leading entry 1
    std::vector<Vector> expansions_;  // row_k over accepted vectors
    std::vector<std::size_t> pivots_;
};

/// Unique reduced basis of the span of the given vectors (RREF rows),
/// ordered by leading index. Canonical representation of a subspace.
inline std::vector<Vector> canonical_span_basis(const std::vector<Vector>& vecs) {
    if (vecs.empty()) return {};
    Matrix a(vecs.size(), vecs.front().size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i].size() != vecs.front().size())
            throw ValidationError("canonical_span_basis: ragged input");
        for (std::size_t j = 0; j < vecs[i].size(); ++j) a(i, j) = vecs[i][j];
    }
    const EchelonForm e = rref(a);
    std::vector<Vector> basis;
    for (std::size_t r = 0; r < e.rank; ++r) {
        Vector v(a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) v[j] = e.mat(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Characteristic polynomial via the Faddeev-LeVerrier recurrence (exact).
inline Polynomial char_poly(const Matrix& a) {
    if (!a.is_square())
        throw ValidationError("char_poly: matrix not square");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix prev = m;
        for (std::size_t i = 0; i < n; ++i) prev(i, i) += c[n - k + 1];
        m = a * prev;
        c[n - k] = -m.trace() / Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(c));
}

/// Minimal polynomial, computed deterministically: Krylov spans seeded by
/// e1, e2, ... until the whole space is exhausted, lcm of the local minimal
/// polynomials along the way.
inline Polynomial minimal_polynomial(const Matrix& a) {
    if (!a.is_square())
        throw ValidationError("minimal_polynomial: matrix not square");
    const std::size_t n = a.rows();
    SpanTracker global(n);
    Polynomial m = Polynomial::constant(Rational(1));
    for (std::size_t s = 0; s < n && global.dim() < n; ++s) {
        Vector seed(n, Rational(0));
        seed[s] = 1;
        if (global.contains(seed)) continue;

        SpanTracker local(n);
        std::vector<Vector> krylov;
        Vector v = seed;
        local.insert(v);
        krylov.push_back(v);
        for (;;) {
            Vector w = a * krylov.back();
            if (const auto coords = local.coordinates(w)) {
                // A^k v = sum coords_j A^j v  =>  local poly x^k - sum coords_j x^j
                std::vector<Rational> pc(krylov.size() + 1, Rational(0));
                pc.back() = 1;
                for (std::size_t j = 0; j < coords->size(); ++j) pc[j] = -(*coords)[j];
                m = poly_lcm(m, Polynomial(std::move(pc)));
                break;
            }
            local.insert(w);
            krylov.push_back(std::move(w));
        }
        for (const auto& k : krylov) global.insert(k);
    }
    return m.monic();
}

struct Signature {
    std::size_t n_minus = 0;
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;

    bool operator==(const Signature&) const = default;
    bool neutral() const { return n_minus == n_plus; }
};

/// Sylvester inertia of a symmetric matrix by exact symmetric congruence
/// elimination. Pivot choice: first nonzero diagonal entry in index order;
/// when the whole trailing diagonal is zero, the lowest-index nonzero
/// off-diagonal pair repairs a pivot by adding its partner row/column.
inline Signature congruence_signature(Matrix s) {
    if (!s.is_square() || !s.is_symmetric())
        throw ValidationError("congruence_signature: matrix not symmetric");
    const std::size_t n = s.rows();
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (s(k, k) == 0) {
            std::size_t m = k + 1;
            while (m < n && s(m, m) == 0) ++m;
            if (m < n) {
                s.swap_rows(k, m);
                s.swap_cols(k, m);
            } else {
                // trailing diagonal all zero: find lowest-index nonzero pair
                std::size_t pi = n, pj = n;
                for (std::size_t i = k; i < n && pi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (s(i, j) != 0) { pi = i; pj = j; break; }
                if (pi == n) {
                    sig.n_zero += n - k;
                    return sig;
                }
                for (std::size_t j = 0; j < n; ++j) s(pi, j) += s(pj, j);
                for (std::size_t i = 0; i < n; ++i) s(i, pi) += s(i, pj);
                if (pi != k) {
                    s.swap_rows(k, pi);
                    s.swap_cols(k, pi);
                }
            }
        }
        const Rational pivot = s(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s(i, k) == 0) continue;
            const Rational f = s(i, k) / pivot;
            for (std::size_t j = 0; j < n; ++j) s(i, j) -= f * s(k, j);
            for (std::size_t j = 0; j < n; ++j) s(j, i) -= f * s(j, k);
        }
        if (pivot < 0) ++sig.n_minus; else ++sig.n_plus;
    }
    return sig;
}

enum class InvarianceMode { commute, algebra_form, group_form };

/// Stacked linear system over the n^2 unknowns vec(X), row-major:
///   commute:      X g - g X = 0
///   algebra_form: g^t X + X g = 0
///   group_form:   g^t X g - X = 0
/// for every generator g. The kernel of the returned matrix is the space of
/// invariant endomorphisms resp. invariant bilinear forms.
inline Matrix invariance_system(const std::vector<Matrix>& gens, InvarianceMode mode) {
    if (gens.empty())
        throw ValidationError("invariance_system: unconstrained system (no generators)");
    const std::size_t n = gens.front().rows();
    for (const auto& g : gens)
        if (!g.is_square() || g.rows() != n)
            throw ValidationError("invariance_system: generators must be square of equal dimension");

    const std::size_t nn = n * n;
    Matrix sys(gens.size() * nn, nn);
    std::size_t row = 0;
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row) {
                switch (mode) {
                case InvarianceMode::commute:
                    // (X g)_{ij} - (g X)_{ij}
                    for (std::size_t k = 0; k < n; ++k) {
                        sys(row, i * n + k) += g(k, j);
                        sys(row, k * n + j) -= g(i, k);
                    }
                    break;
                case InvarianceMode::algebra_form:
                    // (g^t X)_{ij} + (X g)_{ij}
                    for (std::size_t k = 0; k < n; ++k) {
                        sys(row, k * n + j) += g(k, i);
                        sys(row, i * n + k) += g(k, j);
                    }
                    break;
                case InvarianceMode::group_form:
                    // (g^t X g)_{ij} - X_{ij}
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t l = 0; l < n; ++l)
                            sys(row, k * n + l) += g(k, i) * g(l, j);
                    sys(row, i * n + j) -= 1;
                    break;
                }
            }
    }
    return sys;
}

/// Kernel of the invariance system, unflattened to matrices in canonical order.
inline std::vector<Matrix> invariant_matrices(const std::vector<Matrix>& gens, InvarianceMode mode) {
    const std::size_t n = gens.front().rows();
    std::vector<Matrix> out;
    for (const auto& v : nullspace(invariance_system(gens, mode)))
        out.push_back(Matrix::from_vec(v, n, n));
    return out;
}

/// Canonical basis of {X in gl(n,R) : [X,M] = 0 for all M, X^t F + F X = 0
/// for all F}. The workhorse for cutting out classical subalgebras as joint
/// solution spaces of centralizer and isometry conditions.
inline std::vector<Matrix> solve_matrix_conditions(std::size_t n,
                                                   const std::vector<Matrix>& commute_with,
                                                   const std::vector<Matrix>& invariant_forms) {
    const std::size_t nn = n * n;
    const std::size_t rows = (commute_with.size() + invariant_forms.size()) * nn;
    if (rows == 0)
        throw ValidationError("solve_matrix_conditions: no conditions given");
    Matrix sys(rows, nn);
    std::size_t row = 0;
    for (const auto& m : commute_with) {
        if (!m.is_square() || m.rows() != n)
            throw ValidationError("solve_matrix_conditions: condition matrix has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, i * n + k) += m(k, j);   // (X m)_{ij}
                    sys(row, k * n + j) -= m(i, k);   // (m X)_{ij}
                }
    }
    for (const auto& f : invariant_forms) {
        if (!f.is_square() || f.rows() != n)
            throw ValidationError("solve_matrix_conditions: condition matrix has wrong shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, k * n + i) += f(k, j);   // (X^t f)_{ij}
                    sys(row, k * n + j) += f(i, k);   // (f X)_{ij}
                }
    }
    std::vector<Matrix> out;
    for (const auto& v : nullspace(sys))
        out.push_back(Matrix::from_vec(v, n, n));
    return out;
}

} // namespace lieclass
