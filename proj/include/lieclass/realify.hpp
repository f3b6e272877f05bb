#pragma once

#include <vector>

#include "lieclass/matrix.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

/// Complex m x m matrix stored as an exact pair of rational matrices.
struct CMatrix {
    Matrix re, im;

    CMatrix() = default;
    CMatrix(Matrix r, Matrix i) : re(std::move(r)), im(std::move(i)) {}
    explicit CMatrix(std::size_t m) : re(m, m), im(m, m) {}

    std::size_t size() const { return re.rows(); }

    CMatrix conj() const { return {re, -im}; }
    CMatrix transpose() const { return {re.transpose(), im.transpose()}; }

    /// Multiplication by the imaginary unit.
    CMatrix times_i() const { return {-im, re}; }

    CMatrix operator*(const CMatrix& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CMatrix operator+(const CMatrix& o) const { return {re + o.re, im + o.im}; }
    CMatrix operator-() const { return {-re, -im}; }
};

/// Standard realification A + iB -> [[A, -B], [B, A]]; multiplication by i
/// becomes the block matrix std_J below.
inline Matrix realify(const CMatrix& c) {
    const std::size_t m = c.size();
    Matrix r(2 * m, 2 * m);
    r.set_block(0, 0, c.re);
    r.set_block(0, m, -c.im);
    r.set_block(m, 0, c.im);
    r.set_block(m, m, c.re);
    return r;
}

/// [[0, -Id_m], [Id_m, 0]]: the complex structure of the realification.
inline Matrix std_J(std::size_t m) {
    Matrix j(2 * m, 2 * m);
    j.set_block(0, m, -Matrix::identity(m));
    j.set_block(m, 0, Matrix::identity(m));
    return j;
}

/// diag(-Id_p, Id_q).
inline Matrix ipq(std::size_t p, std::size_t q) {
    Matrix m(p + q, p + q);
    for (std::size_t i = 0; i < p; ++i) m(i, i) = -1;
    for (std::size_t i = p; i < p + q; ++i) m(i, i) = 1;
    return m;
}

/// For each complex basis element Z the real span of the realified algebra
/// is spanned by realify(Z) and realify(iZ).
inline std::vector<Matrix> realified_complex_span(const std::vector<CMatrix>& complex_basis) {
    std::vector<Matrix> out;
    for (const auto& z : complex_basis) {
        out.push_back(realify(z));
        out.push_back(realify(z.times_i()));
    }
    return out;
}

/// Real part of the realified complex-bilinear form z^t M w.
inline Matrix re_of_bilinear(const CMatrix& m) {
    const std::size_t k = m.size();
    Matrix r(2 * k, 2 * k);
    r.set_block(0, 0, m.re);
    r.set_block(0, k, -m.im);
    r.set_block(k, 0, -m.im);
    r.set_block(k, k, -m.re);
    return r;
}

/// Imaginary part of the realified complex-bilinear form z^t M w.
inline Matrix im_of_bilinear(const CMatrix& m) {
    const std::size_t k = m.size();
    Matrix r(2 * k, 2 * k);
    r.set_block(0, 0, m.im);
    r.set_block(0, k, m.re);
    r.set_block(k, 0, m.re);
    r.set_block(k, k, -m.im);
    return r;
}

/// Real part of the realified sesquilinear form conj(z)^t H w; symmetric
/// when H is Hermitian.
inline Matrix re_of_hermitian(const CMatrix& h) {
    const std::size_t k = h.size();
    Matrix r(2 * k, 2 * k);
    r.set_block(0, 0, h.re);
    r.set_block(0, k, -h.im);
    r.set_block(k, 0, h.im);
    r.set_block(k, k, h.re);
    return r;
}

/// Imaginary part of the realified sesquilinear form; skew when H is Hermitian.
inline Matrix im_of_hermitian(const CMatrix& h) {
    const std::size_t k = h.size();
    Matrix r(2 * k, 2 * k);
    r.set_block(0, 0, h.im);
    r.set_block(0, k, h.re);
    r.set_block(k, 0, -h.re);
    r.set_block(k, k, h.im);
    return r;
}

struct Quaternion {
    Rational w, x, y, z;

    Quaternion(Rational w_ = 0, Rational x_ = 0, Rational y_ = 0, Rational z_ = 0)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    Quaternion conj() const { return {w, -x, -y, -z}; }

    Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    bool operator==(const Quaternion&) const = default;
};

using QMatrix = std::vector<std::vector<Quaternion>>;

/// Writes Q = U + V j and returns the complex 2m x 2m matrix
/// [[U, -V], [conj(V), conj(U)]]; an algebra homomorphism.
inline CMatrix quaternion_complex_pair(const QMatrix& q) {
    const std::size_t m = q.size();
    CMatrix u(m), v(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            u.re(i, j) = q[i][j].w;
            u.im(i, j) = q[i][j].x;
            v.re(i, j) = q[i][j].y;
            v.im(i, j) = q[i][j].z;
        }
    CMatrix c(2 * m);
    c.re.set_block(0, 0, u.re);
    c.im.set_block(0, 0, u.im);
    c.re.set_block(0, m, -v.re);
    c.im.set_block(0, m, -v.im);
    c.re.set_block(m, 0, v.re);
    c.im.set_block(m, 0, -v.im);
    c.re.set_block(m, m, u.re);
    c.im.set_block(m, m, -u.im);
    return c;
}

/// Quaternionic matrix realified to 4m x 4m through the complex pair recipe.
inline Matrix realify_quaternion(const QMatrix& q) {
    return realify(quaternion_complex_pair(q));
}

} // namespace lieclass
