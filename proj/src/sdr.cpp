#include "homaloidal/sdr.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

namespace homaloidal {

SubstitutionSchedule substitution_schedule(int d) {
    if (d < 1) throw std::domain_error("substitution_schedule: d must be >= 1");
    // binary expansion d = 2^{p_1} + ... + 2^{p_M}, p_1 > ... > p_M >= 0
    std::vector<int> p;
    for (int bit = 30; bit >= 0; --bit)
        if (d & (1 << bit)) p.push_back(bit);
    int M = static_cast<int>(p.size());
    int m = p[0] + 1;

    SubstitutionSchedule sched;
    sched.degree = d;
    for (int i = 1; i <= m; ++i) {
        std::vector<SimpleSubstitution> round;
        for (int j = 1; j <= std::min(i, M); ++j) {
            if (j == i && M >= j + 1)
                round.push_back({SimpleSubstitution::Kind::Product, j});
            else if (j == M && p[M - 1] >= i - M + 1)
                round.push_back({SimpleSubstitution::Kind::Square, j});
            else if (j < std::min(i, M) && p[j - 1] >= i - j)
                round.push_back({SimpleSubstitution::Kind::Square, j});
        }
        if (!round.empty()) sched.rounds.push_back(std::move(round));
    }
    return sched;
}

MPoly SubstitutionSchedule::replay(const std::string& target) const {
    auto slot_name = [](int j) { return "u" + std::to_string(j); };
    MPoly p = MPoly::variable(slot_name(1));
    int max_slot = 1;
    for (const auto& round : rounds) {
        std::map<std::string, MPoly> subs;
        for (const auto& s : round) {
            MPoly uj = MPoly::variable(slot_name(s.slot));
            if (s.kind == SimpleSubstitution::Kind::Square) {
                subs[slot_name(s.slot)] = uj * uj;
            } else {
                subs[slot_name(s.slot)] = uj * MPoly::variable(slot_name(s.slot + 1));
                max_slot = std::max(max_slot, s.slot + 1);
            }
        }
        p = p.subst(subs);
    }
    std::map<std::string, MPoly> rename;
    for (int j = 1; j <= max_slot; ++j) rename[slot_name(j)] = MPoly::variable(target);
    return p.subst(rename);
}

namespace {

QMat coeff_or_zero(const PencilQ& p, const std::string& v) {
    auto it = p.coeffs.find(v);
    if (it != p.coeffs.end()) return it->second;
    return QMat(p.size, p.size);
}

// Smallest shift in {0, 1, 2, ...} making B - shift*I invertible; 0 is only
// admissible when B itself is invertible.
Rational pick_shift(const QMat& b, int max_tries) {
    if (b.is_invertible()) return 0;
    for (int s = 1; s <= max_tries; ++s) {
        QMat shifted = b;
        for (std::size_t i = 0; i < b.rows(); ++i) shifted(i, i) -= s;
        if (shifted.is_invertible()) return s;
    }
    throw BadShift("no admissible shift found");
}

void embed(QMat& dst, const QMat& src, std::size_t row0, std::size_t col0) {
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) dst(row0 + i, col0 + j) = src(i, j);
}

}  // namespace

PencilQ expand_sdr(const PencilQ& base, const std::vector<SquareSub>& squares,
                   const std::vector<ProductSub>& products, const ExpandOptions& opts) {
    std::size_t k = base.size;

    std::set<std::string> consumed;
    for (const auto& s : squares) consumed.insert(s.y);
    for (const auto& p : products) consumed.insert(p.z);
    auto check_fresh = [&](const std::string& v) {
        if (base.coeffs.count(v) || consumed.count(v)) throw VariableCollision(v);
    };
    for (const auto& s : squares) check_fresh(s.u);
    for (const auto& p : products) {
        check_fresh(p.v);
        check_fresh(p.w);
        if (p.v == p.w) throw VariableCollision(p.v);
    }

    // Per-substitution constant diagonal blocks, in layout order.
    struct DiagBlock {
        QMat mat;
        std::string var;      // variable on the off-diagonal coupling rows
        Rational var_scale;   // its scale (1 for squares, +-1/2 halves of v,w)
        std::string var2;     // second variable for product rows ("" if none)
        Rational var2_scale;
    };
    std::vector<DiagBlock> blocks;
    Rational diag_det(1);

    for (const auto& s : squares) {
        QMat b = coeff_or_zero(base, s.y);
        Rational shift = pick_shift(b, opts.max_shift_tries);
        QMat shifted = b;
        for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= shift;
        QMat inv_block = shifted.inverse() * Rational(-1);
        blocks.push_back({inv_block, s.u, 1, "", 0});
        if (shift != 0) {
            QMat lam = QMat::identity(k) * (Rational(-1) / shift);
            blocks.push_back({lam, s.u, 1, "", 0});
        }
    }
    for (const auto& pr : products) {
        QMat c = coeff_or_zero(base, pr.z);
        Rational shift = pick_shift(c, opts.max_shift_tries);
        QMat shifted = c;
        for (std::size_t i = 0; i < k; ++i) shifted(i, i) -= shift;
        QMat inv_block = shifted.inverse();
        Rational half(1, 2);
        blocks.push_back({inv_block * Rational(-1), pr.v, half, pr.w, half});
        blocks.push_back({inv_block, pr.v, half, pr.w, -half});
        if (shift != 0) {
            QMat g = QMat::identity(k) * (Rational(1) / shift);
            blocks.push_back({g * Rational(-1), pr.v, half, pr.w, half});
            blocks.push_back({g, pr.v, half, pr.w, -half});
        }
    }
    for (const auto& b : blocks) diag_det *= b.mat.det();

    std::size_t size = k * (1 + blocks.size()) + 1;
    if (size > opts.size_limit) throw SizeOverflow(size, opts.size_limit);

    PencilQ out;
    out.size = size;
    out.constant = QMat(size, size);
    embed(out.constant, base.constant, 0, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        embed(out.constant, blocks[b].mat, k * (b + 1), k * (b + 1));
    out.constant(size - 1, size - 1) = Rational(1) / diag_det;

    for (const auto& [v, a] : base.coeffs) {
        if (consumed.count(v)) continue;
        QMat m(size, size);
        embed(m, a, 0, 0);
        out.coeffs.emplace(v, std::move(m));
    }
    auto add_coupling = [&](const std::string& var, std::size_t block, const Rational& scale) {
        auto [it, fresh] = out.coeffs.try_emplace(var, QMat(size, size));
        QMat& m = it->second;
        for (std::size_t i = 0; i < k; ++i) {
            m(k * (block + 1) + i, i) += scale;
            m(i, k * (block + 1) + i) += scale;
        }
    };
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        add_coupling(blocks[b].var, b, blocks[b].var_scale);
        if (!blocks[b].var2.empty()) add_coupling(blocks[b].var2, b, blocks[b].var2_scale);
    }
    return out;
}

QuadraticSdr quadratic_sdr(const MPoly& q) {
    int deg = q.total_degree();
    if (deg > 2) throw DegreeTooHigh(deg);
    const auto& vars = q.vars();
    std::size_t n = vars.size();
    Rational c0 = q.constant_term();

    // Coefficient matrix of p = q - q(0): quadratic block, halved linear
    // border, zero corner.
    DMat t(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = static_cast<double>(q.coefficient({{vars[i], 2}}));
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = static_cast<double>(q.coefficient({{vars[i], 1}, {vars[j], 1}})) / 2.0;
            t(i, j) = v;
            t(j, i) = v;
        }
        double lin = static_cast<double>(q.coefficient({{vars[i], 1}})) / 2.0;
        t(i, n) = lin;
        t(n, i) = lin;
    }

    auto eig = jacobi_eigen(t);
    constexpr double kRankTol = 1e-10;

    QuadraticSdr out;
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
        if (std::fabs(eig.values[i]) <= kRankTol) continue;
        out.lambdas.push_back(eig.values[i]);
        std::map<std::string, double> f;
        for (std::size_t v = 0; v < n; ++v)
            if (eig.vectors[i][v] != 0.0) f[vars[v]] = eig.vectors[i][v];
        f[""] = eig.vectors[i][n];
        out.forms.push_back(std::move(f));
    }
    out.rank = static_cast<int>(out.lambdas.size());
    out.rank_deficient = out.rank < static_cast<int>(n) + 1;

    std::size_t r = out.lambdas.size();
    PencilD m;
    m.size = r + 2;
    m.constant = DMatSym(r + 2, r + 2);
    m.constant(0, 0) = static_cast<double>(c0);
    double prod = 1.0;
    for (std::size_t i = 0; i < r; ++i) {
        m.constant(i + 1, i + 1) = -1.0 / out.lambdas[i];
        m.constant(0, i + 1) = out.forms[i].at("");
        m.constant(i + 1, 0) = out.forms[i].at("");
        prod *= out.lambdas[i];
    }
    m.constant(r + 1, r + 1) = (r % 2 == 0 ? 1.0 : -1.0) * prod;
    for (std::size_t v = 0; v < n; ++v) {
        DMatSym a(r + 2, r + 2);
        bool any = false;
        for (std::size_t i = 0; i < r; ++i) {
            auto it = out.forms[i].find(vars[v]);
            if (it == out.forms[i].end()) continue;
            a(0, i + 1) = it->second;
            a(i + 1, 0) = it->second;
            any = true;
        }
        if (any) m.coeffs.emplace(vars[v], std::move(a));
    }
    out.pencil = std::move(m);
    return out;
}

MPoly PowerSumForm::expand() const {
    MPoly total;
    for (const auto& [lambda, f] : terms) total = total + mpoly_pow(f, degree) * lambda;
    return total;
}

nlohmann::json PowerSumForm::to_json() const {
    nlohmann::json j;
    j["d"] = degree;
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [lambda, f] : terms)
        ts.push_back({{"lambda", lambda.str()}, {"f", f.to_json()}});
    j["terms"] = ts;
    return j;
}

PowerSumForm PowerSumForm::from_json(const nlohmann::json& j) {
    PowerSumForm p;
    p.degree = j.at("d").get<int>();
    for (const auto& t : j.at("terms")) {
        Rational lambda = rational_from_string(t.at("lambda").get<std::string>());
        MPoly f = t.at("f").is_string() ? MPoly::parse(t.at("f").get<std::string>())
                                        : MPoly::from_json(t.at("f"));
        p.terms.emplace_back(lambda, f);
    }
    return p;
}

PencilQ power_sum_sdr(const PowerSumForm& p, const ExpandOptions& opts) {
    if (p.degree < 1) throw std::domain_error("power_sum_sdr: degree must be >= 1");
    if (p.terms.empty()) throw std::domain_error("power_sum_sdr: no terms");
    std::size_t r = p.terms.size();
    std::set<std::string> form_vars;
    for (const auto& [lambda, f] : p.terms) {
        if (lambda == 0) throw std::domain_error("power_sum_sdr: zero coefficient");
        if (!f.is_affine()) throw std::domain_error("power_sum_sdr: form is not affine");
        for (const auto& v : f.vars()) form_vars.insert(v);
    }

    auto leaf_name = [&](std::size_t term, int slot, int round) {
        std::string name = "t" + std::to_string(term + 1) + "_s" + std::to_string(slot) +
                           "_r" + std::to_string(round);
        if (form_vars.count(name)) throw VariableCollision(name);
        return name;
    };

    // slot_var[i][j-1]: current pencil variable occupying slot j of term i
    std::vector<std::vector<std::string>> slot_var(r);
    PencilQ pencil;
    pencil.size = 1;
    pencil.constant = QMat(1, 1);
    for (std::size_t i = 0; i < r; ++i) {
        slot_var[i].push_back(leaf_name(i, 1, 0));
        QMat a(1, 1);
        a(0, 0) = p.terms[i].first;
        pencil.coeffs.emplace(slot_var[i][0], std::move(a));
    }

    SubstitutionSchedule sched = substitution_schedule(p.degree);
    int round_no = 0;
    for (const auto& round : sched.rounds) {
        ++round_no;
        std::vector<SquareSub> squares;
        std::vector<ProductSub> products;
        for (const auto& sub : round) {
            for (std::size_t i = 0; i < r; ++i) {
                int j = sub.slot;
                if (sub.kind == SimpleSubstitution::Kind::Square) {
                    std::string fresh = leaf_name(i, j, round_no);
                    squares.push_back({slot_var[i][j - 1], fresh});
                    slot_var[i][j - 1] = fresh;
                } else {
                    std::string v = leaf_name(i, j, round_no);
                    std::string w = leaf_name(i, j + 1, round_no);
                    products.push_back({slot_var[i][j - 1], v, w});
                    slot_var[i][j - 1] = v;
                    if (static_cast<int>(slot_var[i].size()) < j + 1)
                        slot_var[i].push_back(w);
                    else
                        slot_var[i][j] = w;
                }
            }
        }
        pencil = expand_sdr(pencil, squares, products, opts);
    }

    // Replace every leaf variable of term i by the affine form f_i.
    PencilQ out;
    out.size = pencil.size;
    out.constant = pencil.constant;
    for (std::size_t i = 0; i < r; ++i) {
        const MPoly& f = p.terms[i].second;
        Rational f0 = f.constant_term();
        for (const auto& leaf : slot_var[i]) {
            const QMat& a = pencil.coeffs.at(leaf);
            if (f0 != 0) out.constant = out.constant + a * f0;
            for (const auto& v : f.vars()) {
                Rational cv = f.coefficient({{v, 1}});
                if (cv == 0) continue;
                auto [it, fresh] = out.coeffs.try_emplace(v, QMat(out.size, out.size));
                it->second = it->second + a * cv;
            }
        }
    }
    std::set<std::string> leaves;
    for (const auto& sv : slot_var)
        for (const auto& leaf : sv) leaves.insert(leaf);
    for (const auto& [v, a] : pencil.coeffs) {
        if (leaves.count(v)) continue;
        auto [it, fresh] = out.coeffs.try_emplace(v, QMat(out.size, out.size));
        it->second = it->second + a;
    }
    return out;
}

PencilQ product_sdr(const PencilQ& a, const PencilQ& b) {
    for (const auto& [v, m] : a.coeffs)
        if (b.coeffs.count(v)) throw VariableCollision(v);
    std::size_t ka = a.size, kb = b.size;
    PencilQ out;
    out.size = ka + kb;
    out.constant = QMat(out.size, out.size);
    embed(out.constant, a.constant, 0, 0);
    embed(out.constant, b.constant, ka, ka);
    for (const auto& [v, m] : a.coeffs) {
        QMat e(out.size, out.size);
        embed(e, m, 0, 0);
        out.coeffs.emplace(v, std::move(e));
    }
    for (const auto& [v, m] : b.coeffs) {
        QMat e(out.size, out.size);
        embed(e, m, ka, ka);
        out.coeffs.emplace(v, std::move(e));
    }
    return out;
}

SizeBound size_bound(int d, int r) {
    if (d < 1 || r < 1) throw std::domain_error("size_bound: d, r must be >= 1");
    int m = 1;
    while ((1 << m) <= d) ++m;  // m = floor(log2 d) + 1
    long long general = 1LL << (m - 1);
    for (int i = 0; i < m; ++i) general *= r;
    for (int i = 2; i <= m + 2; ++i) general *= i;
    SizeBound out{general, std::nullopt, m};
    if (d == (1 << (m - 1))) {
        long long b = 1;
        for (int i = 0; i < m - 1; ++i) b *= 2LL * r + 2;
        out.power_of_two = b;
    }
    return out;
}

namespace {

std::set<std::string> all_vars(const std::vector<std::string>& pvars,
                               const std::vector<std::string>& pencil_vars) {
    std::set<std::string> s(pvars.begin(), pvars.end());
    s.insert(pencil_vars.begin(), pencil_vars.end());
    return s;
}

}  // namespace

SdrReport verify_sdr(const PencilQ& pencil, const MPoly& p, int trials, unsigned seed,
                     std::size_t symbolic_limit) {
    SdrReport rep;
    rep.trials = trials;
    if (pencil.size <= symbolic_limit) {
        MPoly det = symbolic_det(pencil_symbolic(pencil));
        rep.symbolic = true;
        rep.pass = (det == p);
        rep.detail = rep.pass ? "symbolic determinant equals target"
                              : "symbolic determinant differs";
        return rep;
    }
    std::mt19937_64 rng(seed);
    auto vars = all_vars(p.vars(), pencil.variables());
    rep.pass = true;
    for (int t = 0; t < trials; ++t) {
        QPoint pt;
        for (const auto& v : vars) pt.assignment[v] = random_rational(rng, 20, 7);
        Rational lhs = pencil_at(pencil, pt).det();
        Rational rhs = p.eval(pt);
        if (lhs != rhs) {
            rep.pass = false;
            rep.detail = "exact point evaluation mismatch at trial " + std::to_string(t);
            return rep;
        }
    }
    rep.detail = "exact evaluation agreed on all trials";
    return rep;
}

SdrReport verify_sdr(const PencilD& pencil, const MPoly& p, int trials, unsigned seed,
                     double rel_tol) {
    SdrReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    auto vars = all_vars(p.vars(), pencil.variables());
    rep.pass = true;
    for (int t = 0; t < trials; ++t) {
        std::map<std::string, double> pt;
        QPoint qpt;
        for (const auto& v : vars) {
            Rational q = random_rational(rng, 20, 7);
            pt[v] = static_cast<double>(q);
            qpt.assignment[v] = q;
        }
        double lhs = pencil_at(pencil, pt).det();
        double rhs = static_cast<double>(p.eval(qpt));
        double err = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
        rep.max_deviation = std::max(rep.max_deviation, err);
        if (err > rel_tol) rep.pass = false;
    }
    rep.detail = rep.pass ? "float evaluation within tolerance"
                          : "float evaluation exceeded tolerance";
    return rep;
}

}  // namespace homaloidal
