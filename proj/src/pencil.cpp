#include "homaloidal/pencil.hpp"

#include <nlohmann/json.hpp>

namespace homaloidal {

PencilD to_double(const PencilQ& p) {
    PencilD out;
    out.size = p.size;
    auto conv = [](const QMat& m) {
        DMatSym d(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                d(i, j) = static_cast<double>(m(i, j));
        return d;
    };
    out.constant = conv(p.constant);
    for (const auto& [v, m] : p.coeffs) out.coeffs.emplace(v, conv(m));
    return out;
}

QMat pencil_at(const PencilQ& p, const QPoint& pt) {
    QMat m = p.constant;
    for (const auto& [v, a] : p.coeffs) {
        const Rational& x = pt.at(v);
        if (x == 0) continue;
        for (std::size_t i = 0; i < p.size; ++i)
            for (std::size_t j = 0; j < p.size; ++j) m(i, j) += x * a(i, j);
    }
    return m;
}

DMat pencil_at(const PencilD& p, const std::map<std::string, double>& pt) {
    DMat m = p.constant;
    for (const auto& [v, a] : p.coeffs) {
        auto it = pt.find(v);
        if (it == pt.end()) throw MissingVariable(v);
        double x = it->second;
        for (std::size_t i = 0; i < p.size; ++i)
            for (std::size_t j = 0; j < p.size; ++j) m(i, j) += x * a(i, j);
    }
    return m;
}

SymMatrix pencil_symbolic(const PencilQ& p) {
    std::vector<int> labels(p.size);
    for (std::size_t i = 0; i < p.size; ++i) labels[i] = static_cast<int>(i) + 1;
    SymMatrix m(p.size, labels);
    for (std::size_t i = 0; i < p.size; ++i)
        for (std::size_t j = 0; j < p.size; ++j) {
            MPoly e(p.constant(i, j));
            for (const auto& [v, a] : p.coeffs)
                if (a(i, j) != 0) e = e + MPoly::variable(v) * MPoly(a(i, j));
            m(i, j) = e;
        }
    return m;
}

namespace {

nlohmann::json qmat_json(const QMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json dmat_json(const DMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

QMat qmat_from_json(const nlohmann::json& j, std::size_t size) {
    QMat m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) {
            const auto& cell = j.at(i).at(k);
            m(i, k) = cell.is_string() ? rational_from_string(cell.get<std::string>())
                                       : Rational(cell.get<long long>());
        }
    return m;
}

DMatSym dmat_from_json(const nlohmann::json& j, std::size_t size) {
    DMatSym m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) {
            const auto& cell = j.at(i).at(k);
            m(i, k) = cell.is_string()
                          ? static_cast<double>(rational_from_string(cell.get<std::string>()))
                          : cell.get<double>();
        }
    return m;
}

}  // namespace

nlohmann::json pencil_to_json(const PencilQ& p) {
    nlohmann::json j;
    j["size"] = p.size;
    j["mode"] = "exact";
    j["A0"] = qmat_json(p.constant);
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [v, m] : p.coeffs) coeffs[v] = qmat_json(m);
    j["coeffs"] = coeffs;
    return j;
}

nlohmann::json pencil_to_json(const PencilD& p) {
    nlohmann::json j;
    j["size"] = p.size;
    j["mode"] = "float";
    j["A0"] = dmat_json(p.constant);
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [v, m] : p.coeffs) coeffs[v] = dmat_json(m);
    j["coeffs"] = coeffs;
    return j;
}

bool pencil_json_is_exact(const nlohmann::json& j) {
    return j.at("mode").get<std::string>() == "exact";
}

PencilQ pencil_q_from_json(const nlohmann::json& j) {
    PencilQ p;
    p.size = j.at("size").get<std::size_t>();
    p.constant = qmat_from_json(j.at("A0"), p.size);
    for (const auto& [v, m] : j.at("coeffs").items())
        p.coeffs.emplace(v, qmat_from_json(m, p.size));
    return p;
}

PencilD pencil_d_from_json(const nlohmann::json& j) {
    PencilD p;
    p.size = j.at("size").get<std::size_t>();
    p.constant = dmat_from_json(j.at("A0"), p.size);
    for (const auto& [v, m] : j.at("coeffs").items())
        p.coeffs.emplace(v, dmat_from_json(m, p.size));
    return p;
}

}  // namespace homaloidal
