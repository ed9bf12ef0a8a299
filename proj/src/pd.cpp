#include "homaloidal/pd.hpp"

#include <random>

namespace homaloidal {

bool sylvester_pd(const QMat& m) {
    if (!m.is_symmetric()) throw NotSymmetric();
    for (const auto& d : m.leading_principal_minors())
        if (d <= 0) return false;
    return true;
}

bool sylvester_pd(const DMat& m, double tol) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw NotSymmetric();
    for (double d : m.leading_principal_minors())
        if (d <= tol) return false;
    return true;
}

std::string pd_verdict_name(PDVerdict v) {
    switch (v) {
        case PDVerdict::NeverPD: return "NeverPD";
        case PDVerdict::ObstructionFound: return "ObstructionFound";
        case PDVerdict::FeasiblePointFound: return "FeasiblePointFound";
        default: return "Inconclusive";
    }
}

PDReport diagonal_obstruction(const PencilQ& pencil) {
    PDReport rep;
    std::size_t n = pencil.size;
    // Diagonal positions no variable can move.
    std::vector<bool> constant_diag(n, true);
    for (const auto& [v, a] : pencil.coeffs)
        for (std::size_t i = 0; i < n; ++i)
            if (a(i, i) != 0) constant_diag[i] = false;

    for (std::size_t i = 0; i < n; ++i) {
        if (!constant_diag[i]) continue;
        if (pencil.constant(i, i) <= 0) {
            rep.verdict = PDVerdict::NeverPD;
            rep.obstruction = "constant diagonal entry (" + std::to_string(i) + "," +
                              std::to_string(i) + ") = " +
                              rational_to_string(pencil.constant(i, i)) +
                              " is never positive";
            return rep;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!constant_diag[j]) continue;
            if (pencil.constant(i, i) != 0 &&
                pencil.constant(i, i) == -pencil.constant(j, j)) {
                rep.verdict = PDVerdict::NeverPD;
                rep.obstruction = "diagonal carries the constant " +
                                  rational_to_string(pencil.constant(i, i)) +
                                  " at position " + std::to_string(i) +
                                  " and its negative at position " + std::to_string(j);
                return rep;
            }
        }
    }
    return rep;  // Inconclusive: no diagonal obstruction
}

PDReport pd_feasibility_sample(const PencilQ& pencil, int samples, unsigned seed,
                               const Rational& box) {
    PDReport diag = diagonal_obstruction(pencil);
    if (diag.verdict == PDVerdict::NeverPD) {
        diag.samples = 0;
        diag.seed = seed;
        return diag;
    }

    PDReport rep;
    rep.samples = samples;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    // Rational points q/64 with q/64 in [-box, box]: exact but dense enough.
    Rational scaled = box * 64;
    Integer box_num = numerator(scaled) / denominator(scaled);
    long lo = -box_num.convert_to<long>(), hi = box_num.convert_to<long>();
    std::uniform_int_distribution<long> dist(lo, hi);
    auto vars = pencil.variables();

    for (int s = 0; s < samples; ++s) {
        QPoint pt;
        for (const auto& v : vars) pt.assignment[v] = Rational(dist(rng), 64);
        if (sylvester_pd(pencil_at(pencil, pt))) {
            rep.verdict = PDVerdict::FeasiblePointFound;
            rep.witness = std::move(pt);
            return rep;
        }
    }
    return rep;
}

}  // namespace homaloidal
