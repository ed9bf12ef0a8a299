#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "homaloidal/graph.hpp"
#include "homaloidal/linalg.hpp"
#include "homaloidal/mpoly.hpp"

namespace homaloidal {

/// Affine symmetric matrix pencil A_0 + sum_i x_i A_i over scalar T.
template <class Mat>
struct PencilT {
    std::size_t size = 0;
    Mat constant;                         // A_0
    std::map<std::string, Mat> coeffs;    // variable -> A_i

    std::vector<std::string> variables() const {
        std::vector<std::string> out;
        out.reserve(coeffs.size());
        for (const auto& [v, m] : coeffs) out.push_back(v);
        return out;
    }
    bool is_symmetric() const {
        if (!matrix_symmetric(constant)) return false;
        for (const auto& [v, m] : coeffs)
            if (!matrix_symmetric(m)) return false;
        return true;
    }

private:
    static bool matrix_symmetric(const Mat& m) { return m.is_symmetric(); }
};

struct DMatSym : DMat {
    using DMat::DMat;
    bool is_symmetric() const {
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = i + 1; j < cols(); ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
};

using PencilQ = PencilT<QMat>;  // exact rational pencil
using PencilD = PencilT<DMatSym>;  // float pencil

PencilD to_double(const PencilQ& p);

/// Evaluates the pencil matrix at a point (all pencil variables assigned).
QMat pencil_at(const PencilQ& p, const QPoint& pt);
DMat pencil_at(const PencilD& p, const std::map<std::string, double>& pt);

/// The pencil's matrix with symbolic entries, for exact determinants.
SymMatrix pencil_symbolic(const PencilQ& p);

/// A u + c as a polynomial matrix is only defined for exact pencils; float
/// pencils round-trip through JSON instead.
nlohmann::json pencil_to_json(const PencilQ& p);
nlohmann::json pencil_to_json(const PencilD& p);
bool pencil_json_is_exact(const nlohmann::json& j);
PencilQ pencil_q_from_json(const nlohmann::json& j);
PencilD pencil_d_from_json(const nlohmann::json& j);

}  // namespace homaloidal
