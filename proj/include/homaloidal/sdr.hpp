#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homaloidal/pencil.hpp"

namespace homaloidal {

struct BadShift : std::runtime_error {
    explicit BadShift(const std::string& what) : std::runtime_error(what) {}
};
struct SizeOverflow : std::runtime_error {
    explicit SizeOverflow(std::size_t got, std::size_t limit)
        : std::runtime_error("pencil size " + std::to_string(got) +
                             " exceeds limit " + std::to_string(limit)) {}
};
struct VariableCollision : std::runtime_error {
    explicit VariableCollision(const std::string& v)
        : std::runtime_error("pencils share variable '" + v + "'") {}
};
struct DegreeTooHigh : std::runtime_error {
    explicit DegreeTooHigh(int d)
        : std::runtime_error("expected degree <= 2, got " + std::to_string(d)) {}
};

/// One round of simple substitutions on slot variables u_1, u_2, ...
/// Square{j}: u_j -> u_j^2. Product{j}: u_j -> u_j * u_{j+1}.
struct SimpleSubstitution {
    enum class Kind { Square, Product } kind;
    int slot;  // 1-based index j
};

struct SubstitutionSchedule {
    int degree = 1;
    std::vector<std::vector<SimpleSubstitution>> rounds;

    int round_count() const { return static_cast<int>(rounds.size()); }
    /// Symbolic replay: applies the rounds to the single variable u1 and
    /// renames every u_j to `target`; must give target^degree.
    MPoly replay(const std::string& target = "y") const;
};

/// Builds y^d from a single variable in floor(log2 d) + 1 rounds, with at
/// most i substitutions in round i and at most one product per round.
SubstitutionSchedule substitution_schedule(int d);

/// One square substitution request: variable y of the base pencil is
/// replaced by u^2.
struct SquareSub {
    std::string y;  // existing pencil variable
    std::string u;  // fresh variable
};

/// One product substitution request: z is replaced by v*w.
struct ProductSub {
    std::string z;
    std::string v, w;
};

struct ExpandOptions {
    /// Shift candidates are 0 (when the block is already invertible),
    /// then 1, 2, 3, ... up to this many integers.
    int max_shift_tries = 64;
    std::size_t size_limit = 1u << 14;
};

/// Block expansion: given det(base) = p, returns a pencil whose determinant
/// equals p after the requested substitutions. Bordered with a single
/// normalizer entry 1/det of the constant diagonal blocks.
PencilQ expand_sdr(const PencilQ& base, const std::vector<SquareSub>& squares,
                   const std::vector<ProductSub>& products,
                   const ExpandOptions& opts = {});

struct QuadraticSdr {
    PencilD pencil;
    int rank = 0;                         // r; pencil size is r + 2
    std::vector<double> lambdas;          // nonzero eigenvalues of T
    std::vector<std::map<std::string, double>> forms;  // affine f_i, key "" = constant
    bool rank_deficient = false;          // r < n + 1
};

/// Bordered (r+2)x(r+2) representation of a degree <= 2 polynomial from a
/// float eigendecomposition of its coefficient matrix.
QuadraticSdr quadratic_sdr(const MPoly& q);

/// Power-sum input: p = sum_i lambda_i * f_i^d with affine rational f_i.
struct PowerSumForm {
    int degree = 1;
    std::vector<std::pair<Rational, MPoly>> terms;

    MPoly expand() const;
    nlohmann::json to_json() const;
    static PowerSumForm from_json(const nlohmann::json& j);
};

/// Iterates expand_sdr along substitution_schedule(d), then substitutes the
/// affine forms for the leaf variables.
PencilQ power_sum_sdr(const PowerSumForm& p, const ExpandOptions& opts = {});

/// Block-diagonal pencil; det = det(a) * det(b). Variable sets must be
/// disjoint.
PencilQ product_sdr(const PencilQ& a, const PencilQ& b);

struct SizeBound {
    long long general;                    // 2^(m-1) r^m (m+2)!
    std::optional<long long> power_of_two;  // (2r+2)^(m-1) when d = 2^(m-1)
    int m;
};

SizeBound size_bound(int d, int r);

struct SdrReport {
    bool pass = false;
    bool symbolic = false;     // full symbolic determinant comparison ran
    double max_deviation = 0;  // float mode: max relative error over trials
    int trials = 0;
    std::string detail;
};

/// Checks det(pencil) against p. Exact pencils of size <= symbolic_limit are
/// compared symbolically; larger exact pencils are checked at exact random
/// points, float pencils at random points within relative error 1e-8.
SdrReport verify_sdr(const PencilQ& pencil, const MPoly& p, int trials, unsigned seed,
                     std::size_t symbolic_limit = 8);
SdrReport verify_sdr(const PencilD& pencil, const MPoly& p, int trials, unsigned seed,
                     double rel_tol = 1e-8);

}  // namespace homaloidal
