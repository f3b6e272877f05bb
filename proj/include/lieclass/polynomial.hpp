#pragma once

#include <string>
#include <vector>

#include "lieclass/matrix.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree order. The zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& v) {
        return v == 0 ? Polynomial() : Polynomial({v});
    }

    static Polynomial x_power(std::size_t k, const Rational& lead = Rational(1)) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = lead;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < c_.size() ? c_[k] : zero;
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial p = *this;
        const Rational l = p.c_.back();
        for (auto& v : p.c_) v /= l;
        return p;
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    /// Exact euclidean division; returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero())
            throw ValidationError("polynomial division by zero");
        Polynomial r = *this;
        std::vector<Rational> q;
        if (r.degree() >= d.degree())
            q.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            const Rational f = r.leading() / d.leading();
            q[shift] = f;
            r = r - Polynomial::x_power(shift, f) * d;
        }
        return {Polynomial(std::move(q)), r};
    }

    bool divides(const Polynomial& p) const {
        return p.divmod(*this).second.is_zero();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Matrix eval(const Matrix& a) const {
        if (!a.is_square())
            throw ValidationError("polynomial evaluation needs a square matrix");
        Matrix acc(a.rows(), a.cols());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * a;
            for (std::size_t d = 0; d < a.rows(); ++d) acc(d, d) += c_[i];
        }
        return acc;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += rational_to_string(c_[i]);
            } else {
                if (c_[i] != 1) s += rational_to_string(c_[i]) + "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// All rational roots, by the rational root theorem on the integer-cleared
/// coefficients. Divisor enumeration is skipped for huge endpoints, so the
/// result is best-effort there (used only for witness search).
inline std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;

    Integer den_lcm = 1;
    for (const auto& c : p.coefficients())
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    std::vector<Integer> ic;
    for (const auto& c : p.coefficients())
        ic.push_back(boost::multiprecision::numerator(Rational(c * den_lcm)));

    std::size_t shift = 0;
    while (shift < ic.size() && ic[shift] == 0) ++shift;
    if (shift > 0) roots.push_back(Rational(0));
    if (shift + 1 >= ic.size()) return roots;

    auto divisors = [](Integer a) {
        std::vector<Integer> out;
        if (a < 0) a = -a;
        if (a == 0 || a > Integer("1000000000000")) return out;
        for (Integer i = 1; i * i <= a; ++i)
            if (a % i == 0) {
                out.push_back(i);
                out.push_back(a / i);
            }
        return out;
    };
    const auto ps = divisors(ic[shift]);
    const auto qs = divisors(ic.back());
    for (const Integer& num : ps)
        for (const Integer& den : qs)
            for (int sign : {1, -1}) {
                const Rational cand(sign * num, den);
                if (p.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

inline Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    const Polynomial g = poly_gcd(a, b);
    return (a * b).divmod(g).first.monic();
}

} // namespace lieclass
