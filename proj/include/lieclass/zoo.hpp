#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieclass/forms.hpp"
#include "lieclass/realify.hpp"
#include "lieclass/representation.hpp"
#include "lieclass/structure.hpp"

namespace lieclass {

/// Expected analysis record for a catalog entry; reproduced by the analyzer
/// in the master golden test.
struct ZooExpected {
    bool irreducible = false;
    std::optional<CommutantType> type;
    std::optional<std::size_t> commutant_dim;
    std::optional<bool> self_dual;
    std::optional<std::size_t> dim_sym, dim_skew;
    std::optional<std::pair<std::size_t, std::size_t>> signature;  // normalized p <= q
    std::optional<StabilizerFamily> family;
    std::optional<std::string> stabilizer;
    std::optional<CenterShape> center_shape;
    std::optional<std::size_t> center_dim;
    std::optional<bool> semisimple;
};

struct ZooEntry {
    std::string key;
    std::vector<long> params;
    std::string display;
    Representation rep;
    std::optional<ZooExpected> expected;
};

namespace zoo {

namespace detail_zoo {

inline void guard(bool ok, const std::string& message) {
    if (!ok) throw ValidationError(message);
}

inline std::string param_suffix(const std::vector<long>& params) {
    if (params.empty()) return "";
    std::string s = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(params[i]);
    }
    return s + ")";
}

} // namespace detail_zoo

/// so(p,q): X^t I_{p,q} + I_{p,q} X = 0. Same-sign index pairs give
/// rotations E_ij - E_ji, mixed pairs give boosts E_ij + E_ji.
inline std::vector<Matrix> so_pq_basis(std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix m(n, n);
            const bool same_sign = (i < p) == (j < p);
            m(i, j) = 1;
            m(j, i) = same_sign ? -1 : 1;
            basis.push_back(std::move(m));
        }
    return basis;
}

/// sp(m,R) on R^{2m}: blocks [[A, B], [C, -A^t]] with B, C symmetric.
inline std::vector<Matrix> sp_R_basis(std::size_t m) {
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Matrix a(2 * m, 2 * m);
            a(i, j) = 1;
            a(m + j, m + i) = -1;
            basis.push_back(std::move(a));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Matrix b(2 * m, 2 * m), c(2 * m, 2 * m);
            b(i, m + j) = 1;
            b(j, m + i) = 1;
            c(m + i, j) = 1;
            c(m + j, i) = 1;
            basis.push_back(std::move(b));
            basis.push_back(std::move(c));
        }
    return basis;
}

/// Quaternionic unitary algebra sp(p,q) on H^{p+q}, built from an explicit
/// quaternion basis through the complex-pair recipe U + Vj.
inline std::vector<Matrix> sp_H_basis(std::size_t p, std::size_t q) {
    const std::size_t m = p + q;
    auto eps = [&](std::size_t i) { return i < p ? -1 : 1; };
    const Quaternion units[3] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::vector<Matrix> basis;
    for (std::size_t d = 0; d < m; ++d)
        for (const auto& u : units) {
            QMatrix qm(m, std::vector<Quaternion>(m));
            qm[d][d] = u;
            basis.push_back(realify_quaternion(qm));
        }
    const Quaternion all[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (const auto& u : all) {
                QMatrix qm(m, std::vector<Quaternion>(m));
                qm[i][j] = u;
                // Q_{ji} = -(eps_i / eps_j) conj(Q_{ij})
                Quaternion v = u.conj();
                if (eps(i) == eps(j)) v = Quaternion(0) - v;
                qm[j][i] = v;
                basis.push_back(realify_quaternion(qm));
            }
    return basis;
}

/// Right multiplications R_q(p) = p q on H = R^4 in the basis {1, i, j, k}.
inline std::vector<Matrix> gl1H_right_basis() {
    const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::vector<Matrix> basis;
    for (const auto& q : units) {
        Matrix m(4, 4);
        for (std::size_t c = 0; c < 4; ++c) {
            const Quaternion prod = units[c] * q;
            m(0, c) = prod.w;
            m(1, c) = prod.x;
            m(2, c) = prod.y;
            m(3, c) = prod.z;
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

/// Left multiplications L_q(p) = q p; the commutant of the right action.
inline std::vector<Matrix> gl1H_left_basis() {
    const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::vector<Matrix> basis;
    for (const auto& q : units) {
        Matrix m(4, 4);
        for (std::size_t c = 0; c < 4; ++c) {
            const Quaternion prod = q * units[c];
            m(0, c) = prod.w;
            m(1, c) = prod.x;
            m(2, c) = prod.y;
            m(3, c) = prod.z;
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

inline Representation make(const std::string& key, const std::vector<long>& params) {
    using detail_zoo::guard;
    Representation rep;
    rep.level = Level::lie_algebra;
    rep.name = key + detail_zoo::param_suffix(params);

    auto want_params = [&](std::size_t k) {
        guard(params.size() == k, "key '" + key + "' takes " + std::to_string(k) + " parameter(s)");
        for (long v : params) guard(v >= 0, "parameters must be non-negative");
    };

    if (key == "so") {
        want_params(2);
        const std::size_t p = params[0], q = params[1];
        guard(p + q >= 2, "so(p,q) needs p+q >= 2");
        rep.n = p + q;
        rep.generators = so_pq_basis(p, q);
    } else if (key == "sp_R") {
        want_params(1);
        const std::size_t m = params[0];
        guard(m >= 1, "sp_R(m) needs m >= 1");
        rep.n = 2 * m;
        rep.generators = sp_R_basis(m);
    } else if (key == "u") {
        want_params(2);
        const std::size_t p = params[0], q = params[1];
        guard(p + q >= 1, "u(p,q) needs p+q >= 1");
        rep.n = 2 * (p + q);
        for (const auto& z : detail::complex_u_basis(p, q)) rep.generators.push_back(realify(z));
    } else if (key == "so_C") {
        want_params(1);
        const std::size_t m = params[0];
        guard(m >= 3, "so_C(m) with m < 3: reducible or guard case");
        rep.n = 2 * m;
        rep.generators = realified_complex_span(detail::complex_so_basis(m));
    } else if (key == "sp_C") {
        want_params(1);
        const std::size_t m = params[0];
        guard(m >= 1, "sp_C(m) needs m >= 1");
        rep.n = 4 * m;
        rep.generators = realified_complex_span(detail::complex_sp_basis(m));
    } else if (key == "sp_H") {
        want_params(2);
        const std::size_t p = params[0], q = params[1];
        guard(p + q >= 1, "sp_H(p,q) needs p+q >= 1");
        rep.n = 4 * (p + q);
        rep.generators = sp_H_basis(p, q);
    } else if (key == "o_star") {
        want_params(1);
        const std::size_t m = params[0];
        guard(m >= 2, "o_star(m) with m < 2: reducible or guard case");
        rep.n = 4 * m;
        // Common kernel of the u(m,m) condition and the o(2m,C) condition,
        // realified: the identification is the implementable definition.
        CMatrix h(2 * m), s(2 * m);
        h.re.set_block(0, 0, Matrix::identity(m));
        h.re.set_block(m, m, -Matrix::identity(m));
        s.re.set_block(0, m, Matrix::identity(m));
        s.re.set_block(m, 0, Matrix::identity(m));
        rep.generators = solve_matrix_conditions(
            rep.n, {std_J(2 * m)},
            {re_of_hermitian(h), im_of_hermitian(h), re_of_bilinear(s), im_of_bilinear(s)});
    } else if (key == "gl1H_right") {
        want_params(0);
        rep.n = 4;
        rep.generators = gl1H_right_basis();
    } else if (key == "conformal_circle") {
        want_params(1);
        const std::size_t m = params[0];
        guard(m >= 3, "conformal_circle(n) with n < 3: reducible or guard case (co(n) is abelian)");
        rep.n = 2 * m;
        for (const auto& s : so_pq_basis(0, m)) {
            Matrix g(rep.n, rep.n);
            g.set_block(0, 0, s);
            g.set_block(m, m, s);
            rep.generators.push_back(std::move(g));
        }
        rep.generators.push_back(Matrix::identity(rep.n));
        Matrix k(rep.n, rep.n);
        k.set_block(0, m, Matrix::identity(m));
        k.set_block(m, 0, -Matrix::identity(m));
        rep.generators.push_back(std::move(k));
    } else if (key == "spiral") {
        want_params(1);
        const std::size_t m = params[0];
        guard(m >= 3, "spiral(n) with n < 3: reducible or guard case (so(n) is abelian)");
        rep.n = 2 * m;
        for (const auto& s : so_pq_basis(0, m)) {
            Matrix g(rep.n, rep.n);
            g.set_block(0, 0, s);
            g.set_block(m, m, s);
            rep.generators.push_back(std::move(g));
        }
        Matrix sp(rep.n, rep.n);
        sp.set_block(0, 0, Matrix::identity(m));
        sp.set_block(0, m, Matrix::identity(m));
        sp.set_block(m, 0, -Matrix::identity(m));
        sp.set_block(m, m, Matrix::identity(m));
        rep.generators.push_back(std::move(sp));
    } else if (key == "parabolic_so1n") {
        want_params(1);
        const std::size_t q = params[0];
        guard(q >= 2, "parabolic_so1n(n) needs n >= 2");
        rep.n = 1 + q;
        // Elements of so(1,q) stabilizing the null line through e1 + e2:
        // so(1,q) form rows plus the linear conditions (Xv) wedge v = 0.
        const std::size_t n = rep.n, nn = n * n;
        Vector v(n, Rational(0));
        v[0] = 1;
        v[1] = 1;
        const Matrix form = ipq(1, q);
        const std::size_t pair_rows = n * (n - 1) / 2;
        Matrix sys(nn + pair_rows, nn);
        std::size_t row = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, k * n + i) += form(k, j);
                    sys(row, k * n + j) += form(i, k);
                }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++row)
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, i * n + k) += v[k] * v[j];
                    sys(row, j * n + k) -= v[k] * v[i];
                }
        for (const auto& x : nullspace(sys))
            rep.generators.push_back(Matrix::from_vec(x, n, n));
    } else if (key == "block_diag_so2_so2") {
        want_params(0);
        rep.n = 4;
        Matrix a(4, 4), b(4, 4);
        a(0, 1) = -1; a(1, 0) = 1;
        b(2, 3) = -1; b(3, 2) = 1;
        rep.generators = {a, b};
    } else {
        throw ValidationError("unknown zoo key '" + key + "'");
    }

    rep.validate();
    return rep;
}

/// Machine-readable catalog: every classification table row is covered by at
/// least one entry, plus the worked examples and two reducible fixtures.
inline std::vector<ZooEntry> catalog() {
    std::vector<ZooEntry> entries;
    auto add = [&](const std::string& key, std::vector<long> params, ZooExpected exp) {
        ZooEntry e;
        e.key = key;
        e.params = params;
        e.rep = make(key, params);
        e.display = e.rep.name;
        e.expected = std::move(exp);
        entries.push_back(std::move(e));
    };

    ZooExpected exp;

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::R;
    exp.commutant_dim = 1;
    exp.self_dual = true;
    exp.dim_sym = 1;
    exp.dim_skew = 0;
    exp.signature = {{1, 2}};
    exp.family = StabilizerFamily::O_pq;
    exp.stabilizer = "O(1,2)";
    exp.center_shape = CenterShape::trivial;
    exp.center_dim = 0;
    exp.semisimple = true;
    add("so", {1, 2}, exp);

    exp.signature = {{0, 3}};
    exp.stabilizer = "O(0,3)";
    add("so", {0, 3}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::R;
    exp.commutant_dim = 1;
    exp.self_dual = true;
    exp.dim_sym = 0;
    exp.dim_skew = 1;
    exp.family = StabilizerFamily::Sp_R;
    exp.stabilizer = "Sp(1,R)";
    exp.center_shape = CenterShape::trivial;
    exp.center_dim = 0;
    exp.semisimple = true;
    add("sp_R", {1}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::C;
    exp.commutant_dim = 2;
    exp.self_dual = true;
    exp.dim_sym = 1;
    exp.dim_skew = 1;
    exp.signature = {{0, 2}};
    exp.family = StabilizerFamily::U_pq;
    exp.stabilizer = "U(0,1)";
    exp.center_shape = CenterShape::circle;
    exp.center_dim = 1;
    exp.semisimple = false;
    add("u", {0, 1}, exp);

    exp.signature = {{0, 4}};
    exp.stabilizer = "U(0,2)";
    add("u", {0, 2}, exp);

    exp.signature = {{2, 2}};
    exp.stabilizer = "U(1,1)";
    add("u", {1, 1}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::C;
    exp.commutant_dim = 2;
    exp.self_dual = true;
    exp.dim_sym = 2;
    exp.dim_skew = 0;
    exp.family = StabilizerFamily::O_C;
    exp.stabilizer = "O(3,C)";
    exp.center_shape = CenterShape::trivial;
    exp.center_dim = 0;
    exp.semisimple = true;
    add("so_C", {3}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::C;
    exp.commutant_dim = 2;
    exp.self_dual = true;
    exp.dim_sym = 0;
    exp.dim_skew = 2;
    exp.family = StabilizerFamily::Sp_C;
    exp.stabilizer = "Sp(1,C)";
    exp.center_shape = CenterShape::trivial;
    exp.center_dim = 0;
    exp.semisimple = true;
    add("sp_C", {1}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::H;
    exp.commutant_dim = 4;
    exp.self_dual = true;
    exp.dim_sym = 1;
    exp.dim_skew = 3;
    exp.signature = {{0, 4}};
    exp.family = StabilizerFamily::Sp_pq;
    exp.stabilizer = "Sp(0,1)";
    exp.center_shape = CenterShape::trivial;
    exp.center_dim = 0;
    exp.semisimple = true;
    add("sp_H", {0, 1}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::H;
    exp.commutant_dim = 4;
    exp.self_dual = true;
    exp.dim_sym = 3;
    exp.dim_skew = 1;
    exp.family = StabilizerFamily::O_star;
    exp.stabilizer = "O*(2)";
    exp.center_shape = CenterShape::trivial;
    exp.center_dim = 0;
    exp.semisimple = true;
    add("o_star", {2}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::H;
    exp.commutant_dim = 4;
    exp.self_dual = false;
    exp.dim_sym = 0;
    exp.dim_skew = 0;
    exp.family = StabilizerFamily::NotSelfDual;
    exp.stabilizer = "NotSelfDual";
    exp.center_shape = CenterShape::real_scaling;
    exp.center_dim = 1;
    exp.semisimple = false;
    add("gl1H_right", {}, exp);

    exp = {};
    exp.irreducible = true;
    exp.type = CommutantType::C;
    exp.commutant_dim = 2;
    exp.self_dual = false;
    exp.dim_sym = 0;
    exp.dim_skew = 0;
    exp.family = StabilizerFamily::NotSelfDual;
    exp.stabilizer = "NotSelfDual";
    exp.center_shape = CenterShape::full_complex;
    exp.center_dim = 2;
    exp.semisimple = false;
    add("conformal_circle", {3}, exp);

    exp.center_shape = CenterShape::spiral;
    exp.center_dim = 1;
    add("spiral", {3}, exp);

    exp = {};
    exp.irreducible = false;
    add("parabolic_so1n", {2}, exp);

    exp = {};
    exp.irreducible = false;
    add("block_diag_so2_so2", {}, exp);

    return entries;
}

inline std::vector<std::string> key_list() {
    return {"so", "sp_R", "u", "so_C", "sp_C", "sp_H", "o_star",
            "gl1H_right", "conformal_circle", "spiral", "parabolic_so1n",
            "block_diag_so2_so2"};
}

} // namespace zoo
} // namespace lieclass
