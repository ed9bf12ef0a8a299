#pragma once

#include <set>
#include <vector>

#include "homaloidal/linalg.hpp"
#include "homaloidal/mpoly.hpp"
#include "homaloidal/pencil.hpp"

namespace homaloidal {

struct VerificationFailed : std::runtime_error {
    explicit VerificationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPencil : std::runtime_error {
    SingularPencil() : std::runtime_error("pencil determinant is identically zero") {}
};

/// A point a*1_I + b*1_J in the fiber of the cycle gradient map over the
/// all-ones vector. J is a subset of {1..n-1}; I is its complement plus n.
/// J empty means the all-ones point itself.
struct FiberPoint {
    int n;
    std::set<int> J;
    Rational a;
    Rational b;

    std::vector<Rational> coordinates() const;
    QPoint as_qpoint(const std::vector<std::string>& vars) const;
};

/// Number of subsets of [n-1] with at least two elements: 2^(n-1) - n.
long long eulerian_count(int n);

/// Spanning tree generating polynomial of the n-cycle, in variables
/// x1..xn (edge i opposite to the monomial missing x_i).
MPoly cycle_poly(int n);

/// All fiber points over the all-ones vector, normalized with b = 1 for
/// nonempty J. List length equals eulerian_count(n).
std::vector<FiberPoint> cycle_fiber(int n);

/// All gradient coordinates equal and nonzero at the point (exact check).
bool verify_fiber_point(int n, const FiberPoint& p);

/// Hessian of the cycle polynomial is nonsingular at the point, and the
/// exact determinant matches the two-block closed form.
bool verify_regular_value(int n, const FiberPoint& p);

/// Recomputes the cycle ML degree by building and verifying the fiber.
/// Throws VerificationFailed if any point fails its checks.
long long ml_degree_cycle(int n);

/// Score equations data for a linear concentration model: f = det K(x)
/// and u_i = tr(S * A_i) per pencil variable.
class ScoreSystem {
public:
    ScoreSystem(const PencilQ& pencil, const QMat& sample_covariance);

    const MPoly& f() const { return f_; }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<Rational>& u() const { return u_; }

    /// grad f(x)/f(x) - u, exact. Throws std::domain_error when f(x) = 0.
    std::vector<Rational> residual(const QPoint& x) const;
    /// grad f(x)/f(x) alone; homogeneous of degree -1.
    std::vector<Rational> score(const QPoint& x) const;

private:
    MPoly f_;
    std::vector<std::string> vars_;
    std::vector<MPoly> grad_;
    std::vector<Rational> u_;
};

}  // namespace homaloidal
