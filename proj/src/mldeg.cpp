#include "homaloidal/mldeg.hpp"

#include <algorithm>

namespace homaloidal {

long long eulerian_count(int n) {
    if (n < 3) throw std::domain_error("eulerian_count: n must be >= 3");
    if (n > 62) throw std::domain_error("eulerian_count: n too large");
    return (1LL << (n - 1)) - n;
}

MPoly cycle_poly(int n) {
    MPoly total;
    for (int skip = 1; skip <= n; ++skip) {
        std::vector<std::pair<std::string, int>> powers;
        for (int i = 1; i <= n; ++i)
            if (i != skip) powers.emplace_back("x" + std::to_string(i), 1);
        total = total + MPoly::monomial(Rational(1), powers);
    }
    return total;
}

std::vector<Rational> FiberPoint::coordinates() const {
    std::vector<Rational> out(n);
    for (int i = 1; i <= n; ++i) out[i - 1] = J.count(i) ? b : a;
    return out;
}

QPoint FiberPoint::as_qpoint(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != n)
        throw std::invalid_argument("fiber point: variable count mismatch");
    QPoint pt;
    auto coords = coordinates();
    for (int i = 0; i < n; ++i) pt.assignment[vars[i]] = coords[i];
    return pt;
}

std::vector<FiberPoint> cycle_fiber(int n) {
    if (n < 3) throw std::domain_error("cycle_fiber: n must be >= 3");
    std::vector<FiberPoint> out;
    out.push_back({n, {}, Rational(1), Rational(1)});  // the all-ones point
    // Points a*1_I + b*1_J per subset J of [n-1] with 2 <= |J| <= n-2,
    // normalized to b = 1; the ratio a/b = (|I|-1)/(1-|J|) comes from the
    // vanishing of the shared gradient component.
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        int jsize = __builtin_popcount(mask);
        if (jsize < 2 || jsize > n - 2) continue;
        std::set<int> J;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) J.insert(i);
        int isize = n - jsize;
        Rational a = Rational(isize - 1) / Rational(1 - jsize);
        out.push_back({n, std::move(J), a, Rational(1)});
    }
    if (static_cast<long long>(out.size()) != eulerian_count(n))
        throw VerificationFailed("cycle_fiber: unexpected fiber size");
    return out;
}

bool verify_fiber_point(int n, const FiberPoint& p) {
    MPoly f = cycle_poly(n);
    QPoint pt = p.as_qpoint(f.vars());
    std::vector<Rational> grad;
    for (const auto& v : f.vars()) grad.push_back(f.diff(v).eval(pt));
    if (grad.empty() || grad[0] == 0) return false;
    return std::all_of(grad.begin(), grad.end(),
                       [&](const Rational& g) { return g == grad[0]; });
}

bool verify_regular_value(int n, const FiberPoint& p) {
    MPoly f = cycle_poly(n);
    QPoint pt = p.as_qpoint(f.vars());
    auto h = hessian_at(f, pt);
    QMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = h[i][j];
    Rational det = m.det();
    if (det == 0) return false;

    // Closed-form cross-check: after permuting into I and J blocks the
    // Hessian is block diagonal with constant off-diagonal entries c and d;
    // each block of size s with off-diagonal value t has determinant
    // (-1)^(s-1) (s-1) t^s.
    long isize = n - static_cast<long>(p.J.size());
    long jsize = static_cast<long>(p.J.size());
    const Rational& a = p.a;
    const Rational& b = p.b;
    Rational expected;
    if (jsize == 0) {
        Rational c = Rational(isize - 2) * rational_pow(a, isize - 3);
        expected = rational_pow(Rational(-1), isize - 1) * Rational(isize - 1) *
                   rational_pow(c, isize);
    } else {
        Rational c(0), d(0);
        if (isize != 2)
            c += Rational(isize - 2) * rational_pow(a, isize - 3) * rational_pow(b, jsize);
        c += Rational(jsize) * rational_pow(a, isize - 2) * rational_pow(b, jsize - 1);
        d += Rational(isize) * rational_pow(a, isize - 1) * rational_pow(b, jsize - 2);
        if (jsize != 2)
            d += Rational(jsize - 2) * rational_pow(a, isize) * rational_pow(b, jsize - 3);
        Rational det_i = rational_pow(Rational(-1), isize - 1) * Rational(isize - 1) *
                         rational_pow(c, isize);
        Rational det_j = rational_pow(Rational(-1), jsize - 1) * Rational(jsize - 1) *
                         rational_pow(d, jsize);
        expected = det_i * det_j;
    }
    if (det != expected)
        throw VerificationFailed("Hessian determinant disagrees with block formula");
    return true;
}

long long ml_degree_cycle(int n) {
    auto fiber = cycle_fiber(n);
    for (const auto& p : fiber) {
        if (!verify_fiber_point(n, p))
            throw VerificationFailed("fiber point fails gradient proportionality");
        if (!verify_regular_value(n, p))
            throw VerificationFailed("fiber point fails Hessian regularity");
    }
    long long count = static_cast<long long>(fiber.size());
    if (count != eulerian_count(n))
        throw VerificationFailed("fiber size does not match the closed form");
    return count;
}

ScoreSystem::ScoreSystem(const PencilQ& pencil, const QMat& sample_covariance) {
    f_ = symbolic_det(pencil_symbolic(pencil));
    if (f_.is_zero()) throw SingularPencil();
    vars_ = pencil.variables();
    for (const auto& v : vars_) grad_.push_back(f_.diff(v));
    for (const auto& v : vars_) {
        const QMat& a = pencil.coeffs.at(v);
        Rational tr(0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                tr += sample_covariance(i, j) * a(j, i);
        u_.push_back(tr);
    }
}

std::vector<Rational> ScoreSystem::score(const QPoint& x) const {
    Rational fx = f_.eval(x);
    if (fx == 0) throw std::domain_error("score: f vanishes at the point");
    std::vector<Rational> out;
    out.reserve(grad_.size());
    for (const auto& g : grad_) out.push_back(g.eval(x) / fx);
    return out;
}

std::vector<Rational> ScoreSystem::residual(const QPoint& x) const {
    auto s = score(x);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= u_[i];
    return s;
}

}  // namespace homaloidal
