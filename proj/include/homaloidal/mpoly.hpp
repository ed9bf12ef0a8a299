#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "homaloidal/rational.hpp"

namespace homaloidal {

/// Assignment of rationals to variable names; evaluation point for MPoly.
struct QPoint {
    std::map<std::string, Rational> assignment;

    QPoint() = default;
    QPoint(std::initializer_list<std::pair<const std::string, Rational>> init)
        : assignment(init) {}

    const Rational& at(const std::string& var) const;
    bool has(const std::string& var) const { return assignment.count(var) != 0; }
};

struct MissingVariable : std::runtime_error {
    explicit MissingVariable(const std::string& var)
        : std::runtime_error("point does not assign variable '" + var + "'") {}
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Variables are kept sorted by name; exponent vectors are dense over the
/// polynomial's own variable list. Terms are ordered graded-lex, which fixes
/// a canonical form used for equality and serialization. Immutable in use:
/// all operations return new values.
class MPoly {
public:
    using Exponents = std::vector<int>;

    MPoly() = default;                      // zero polynomial
    explicit MPoly(const Rational& c);      // constant
    static MPoly variable(const std::string& name);
    static MPoly monomial(const Rational& coeff,
                          const std::vector<std::pair<std::string, int>>& powers);

    const std::vector<std::string>& vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    /// Constant term (coefficient of the all-zero exponent vector).
    Rational constant_term() const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    /// True iff every exponent is <= 1.
    bool is_multilinear() const;
    /// Degree <= 1 in total.
    bool is_affine() const { return total_degree() <= 1; }

    MPoly operator-() const;
    MPoly operator+(const MPoly& rhs) const;
    MPoly operator-(const MPoly& rhs) const;
    MPoly operator*(const MPoly& rhs) const;
    MPoly operator*(const Rational& c) const;
    bool operator==(const MPoly& rhs) const;
    bool operator!=(const MPoly& rhs) const { return !(*this == rhs); }

    /// Formal partial derivative; zero if v is not a variable of this poly.
    MPoly diff(const std::string& v) const;
    /// Exact evaluation. Throws MissingVariable if pt is incomplete.
    Rational eval(const QPoint& pt) const;
    /// Composition: replaces mapped variables, others pass through.
    MPoly subst(const std::map<std::string, MPoly>& replacements) const;
    /// Coefficient of a monomial, given as {var, power} pairs (0 if absent).
    Rational coefficient(const std::vector<std::pair<std::string, int>>& powers) const;

    std::string str() const;

    nlohmann::json to_json() const;
    static MPoly from_json(const nlohmann::json& j);
    /// Parses expressions like "7/25*x^2 - y^2 - 48/25*x*z".
    static MPoly parse(const std::string& text);

    /// Iteration over canonical (exponents, coefficient) pairs.
    const std::map<Exponents, Rational>& terms() const { return terms_; }

private:
    // vars_ sorted ascending; every exponent vector has size vars_.size();
    // no zero coefficients stored. Term order within the map is plain lex on
    // the exponent vector; canonical graded-lex order is applied on output.
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;

    void insert_term(const Exponents& e, const Rational& c);
    MPoly reindexed(const std::vector<std::string>& new_vars) const;
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);
    friend MPoly mpoly_pow(const MPoly& p, int e);
};

MPoly mpoly_pow(const MPoly& p, int e);

/// List of partials in variable order.
std::vector<MPoly> gradient(const MPoly& p);

/// Symmetric matrix of second partials evaluated at pt (row-major, dense).
std::vector<std::vector<Rational>> hessian_at(const MPoly& p, const QPoint& pt);

}  // namespace homaloidal
