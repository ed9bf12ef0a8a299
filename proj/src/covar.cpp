#include "homaloidal/covar.hpp"

#include <algorithm>
#include <random>

namespace homaloidal {

std::string sigma_var(int i, int j) {
    if (i > j) std::swap(i, j);
    return "s_" + std::to_string(i) + "_" + std::to_string(j);
}

SymMatrix sigma_matrix(const Graph& g, int k) {
    std::vector<int> labels;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (v != k) labels.push_back(v);
    SymMatrix s(labels.size(), labels);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j) {
            MPoly e = MPoly::variable(sigma_var(labels[i], labels[j]));
            s(i, j) = e;
            s(j, i) = e;
        }
    return s;
}

namespace {

SymMatrix delete_row_col(const SymMatrix& m, std::size_t row, std::size_t col) {
    std::vector<int> labels;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (i != row) labels.push_back(m.labels()[i]);
    SymMatrix out(m.dim() - 1, labels);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i == row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j == col) continue;
            out(r, c) = m(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

// adj(Sigma)_{i,j} = (-1)^{i+j} det of Sigma with row i, column j deleted
// (positions, 0-based here).
MPoly adjugate_entry(const SymMatrix& sigma, std::size_t i, std::size_t j) {
    MPoly d = symbolic_det(delete_row_col(sigma, i, j));
    if ((i + j) % 2 == 1) d = d * Rational(-1);
    return d;
}

std::size_t position_of(const SymMatrix& m, int label) {
    const auto& l = m.labels();
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
}

// All minors of the given order from a rows x cols matrix of polynomials
// stored row-major.
void collect_minors(const std::vector<std::vector<MPoly>>& m, std::size_t order,
                    std::vector<MPoly>& out) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    if (order > rows || order > cols) return;
    std::vector<std::size_t> rsel(order), csel(order);
    auto next_comb = [](std::vector<std::size_t>& c, std::size_t n) {
        std::size_t k = c.size();
        for (std::size_t i = k; i-- > 0;) {
            if (c[i] + 1 <= n - (k - i)) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < order; ++i) rsel[i] = i;
    do {
        for (std::size_t i = 0; i < order; ++i) csel[i] = i;
        do {
            SymMatrix sub(order, std::vector<int>(order, 0));
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t j = 0; j < order; ++j) sub(i, j) = m[rsel[i]][csel[j]];
            out.push_back(symbolic_det(sub));
        } while (next_comb(csel, cols));
    } while (next_comb(rsel, rows));
}

}  // namespace

std::vector<MPoly> rk_generators(const Graph& g, int k) {
    int n = g.vertex_count();
    SymMatrix sigma = sigma_matrix(g, k);
    std::vector<MPoly> out;
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (j == k || g.has_edge(i, j)) continue;
            out.push_back(adjugate_entry(sigma, position_of(sigma, i), position_of(sigma, j)));
        }
    }
    for (int j = 1; j <= n; ++j) {
        if (j == k || g.has_edge(j, k)) continue;
        std::size_t jp = position_of(sigma, j);
        MPoly sum;
        for (std::size_t i = 0; i < sigma.dim(); ++i)
            sum = sum + adjugate_entry(sigma, i, jp);
        out.push_back(sum);
    }
    return out;
}

std::vector<MPoly> rank_constraint_minors(const Graph& g, int k) {
    int n = g.vertex_count();
    SymMatrix sigma = sigma_matrix(g, k);
    std::vector<int> nei = g.neighbors(k);
    std::vector<MPoly> out;

    MPoly one = MPoly::parse("1");
    if (static_cast<int>(nei.size()) < n - 1) {
        // neighbor rows of Sigma plus an all-ones row
        std::vector<std::vector<MPoly>> m;
        for (int v : nei) {
            std::size_t r = position_of(sigma, v);
            std::vector<MPoly> row;
            for (std::size_t c = 0; c < sigma.dim(); ++c) row.push_back(sigma(r, c));
            m.push_back(std::move(row));
        }
        m.emplace_back(sigma.dim(), one);
        collect_minors(m, nei.size() + 1, out);
    }

    for (int i = 1; i <= n; ++i) {
        if (i == k || g.has_edge(i, k)) continue;
        for (int j = 1; j <= n; ++j) {
            if (j == k || j == i || g.has_edge(i, j)) continue;
            std::size_t ip = position_of(sigma, i), jp = position_of(sigma, j);
            std::vector<std::vector<MPoly>> m;
            for (std::size_t r = 0; r < sigma.dim(); ++r) {
                if (r == ip) continue;
                std::vector<MPoly> row;
                for (std::size_t c = 0; c < sigma.dim(); ++c)
                    if (c != jp) row.push_back(sigma(r, c));
                m.push_back(std::move(row));
            }
            m.emplace_back(sigma.dim() - 1, one);
            collect_minors(m, n - 2, out);
        }
    }
    return out;
}

QPoint ModelSample::as_qpoint() const {
    QPoint pt = x;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j)
            pt.assignment[sigma_var(labels[i], labels[j])] = sigma(i, j);
    return pt;
}

ModelSample sample_model_point(const Graph& g, int k, unsigned seed) {
    constexpr int kMaxTries = 100;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> weight(1, 1000);
    SymMatrix lk = principal_minor(laplacian(g), k);

    for (int attempt = 0; attempt < kMaxTries; ++attempt) {
        QPoint x;
        for (const auto& e : g.edges()) x.assignment[e.var] = weight(rng);
        QMat m(lk.dim(), lk.dim());
        for (std::size_t i = 0; i < lk.dim(); ++i)
            for (std::size_t j = 0; j < lk.dim(); ++j) m(i, j) = lk(i, j).eval(x);
        if (!m.is_invertible()) continue;
        ModelSample s;
        s.x = std::move(x);
        s.sigma = m.inverse();
        s.labels = lk.labels();
        return s;
    }
    throw SingularAfterRetries(kMaxTries);
}

VanishingReport verify_vanishing(const std::vector<MPoly>& polys,
                                 const std::vector<ModelSample>& samples) {
    VanishingReport rep;
    rep.polys = static_cast<int>(polys.size());
    rep.samples = static_cast<int>(samples.size());
    rep.note = "containment direction only: generators vanish on sampled model points; "
               "saturation is not computed";
    for (int pi = 0; pi < rep.polys; ++pi)
        for (int si = 0; si < rep.samples; ++si)
            if (polys[pi].eval(samples[si].as_qpoint()) != 0) {
                rep.all_zero = false;
                rep.violations.emplace_back(pi, si);
            }
    return rep;
}

}  // namespace homaloidal
