#pragma once

#include <optional>
#include <string>

#include "homaloidal/pencil.hpp"

namespace homaloidal {

struct NotSymmetric : std::invalid_argument {
    NotSymmetric() : std::invalid_argument("matrix is not symmetric") {}
};

/// Sylvester's criterion: all leading principal minors positive. Exact for
/// rational matrices; floats compare against a small tolerance.
bool sylvester_pd(const QMat& m);
bool sylvester_pd(const DMat& m, double tol = 1e-12);

enum class PDVerdict { NeverPD, ObstructionFound, FeasiblePointFound, Inconclusive };

struct PDReport {
    PDVerdict verdict = PDVerdict::Inconclusive;
    std::optional<QPoint> witness;
    std::optional<std::string> obstruction;
    int samples = 0;
    unsigned seed = 0;
};

std::string pd_verdict_name(PDVerdict v);

/// Diagonal scan: a pair of constant diagonal entries c and -c (c != 0), or
/// a constant entry <= 0 untouched by every coefficient matrix, rules out
/// positive definiteness at every point.
PDReport diagonal_obstruction(const PencilQ& pencil);

/// Seeded search for a point in [-box, box]^n where the pencil is PD; falls
/// back to the diagonal obstruction, else Inconclusive.
PDReport pd_feasibility_sample(const PencilQ& pencil, int samples, unsigned seed,
                               const Rational& box = 10);

}  // namespace homaloidal
