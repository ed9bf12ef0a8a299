#include "homaloidal/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace homaloidal {

const Rational& QPoint::at(const std::string& var) const {
    auto it = assignment.find(var);
    if (it == assignment.end()) throw MissingVariable(var);
    return it->second;
}

MPoly::MPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

MPoly MPoly::monomial(const Rational& coeff,
                      const std::vector<std::pair<std::string, int>>& powers) {
    MPoly p(coeff);
    for (const auto& [v, e] : powers) p = p * mpoly_pow(MPoly::variable(v), e);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

Rational MPoly::constant_term() const {
    Exponents zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

bool MPoly::is_multilinear() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x > 1) return false;
    return true;
}

void MPoly::insert_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::string> MPoly::merge_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MPoly MPoly::reindexed(const std::vector<std::string>& new_vars) const {
    if (new_vars == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(new_vars.begin(), new_vars.end(), vars_[i]);
        pos[i] = static_cast<int>(it - new_vars.begin());
    }
    MPoly out;
    out.vars_ = new_vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MPoly MPoly::operator+(const MPoly& rhs) const {
    auto uv = merge_vars(vars_, rhs.vars_);
    MPoly a = reindexed(uv), b = rhs.reindexed(uv);
    for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
    return a;
}

MPoly MPoly::operator-(const MPoly& rhs) const { return *this + (-rhs); }

MPoly MPoly::operator*(const MPoly& rhs) const {
    auto uv = merge_vars(vars_, rhs.vars_);
    MPoly a = reindexed(uv), b = rhs.reindexed(uv);
    MPoly out;
    out.vars_ = uv;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(uv.size());
            for (std::size_t i = 0; i < uv.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    return out;
}

MPoly MPoly::operator*(const Rational& c) const {
    if (c == 0) return MPoly();
    MPoly out = *this;
    for (auto& [e, coeff] : out.terms_) coeff *= c;
    return out;
}

bool MPoly::operator==(const MPoly& rhs) const {
    auto uv = merge_vars(vars_, rhs.vars_);
    return reindexed(uv).terms_ == rhs.reindexed(uv).terms_;
}

MPoly mpoly_pow(const MPoly& p, int e) {
    if (e < 0) throw std::domain_error("mpoly_pow: negative exponent");
    MPoly r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

MPoly MPoly::diff(const std::string& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return MPoly();
    std::size_t idx = it - vars_.begin();
    MPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.insert_term(ne, c * e[idx]);
    }
    return out;
}

Rational MPoly::eval(const QPoint& pt) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) vals.push_back(pt.at(v));
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= rational_pow(vals[i], e[i]);
        total += t;
    }
    return total;
}

MPoly MPoly::subst(const std::map<std::string, MPoly>& replacements) const {
    std::vector<MPoly> images;
    images.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = replacements.find(v);
        images.push_back(it == replacements.end() ? MPoly::variable(v) : it->second);
    }
    MPoly total;
    for (const auto& [e, c] : terms_) {
        MPoly t{c};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * mpoly_pow(images[i], e[i]);
        total = total + t;
    }
    return total;
}

Rational MPoly::coefficient(const std::vector<std::pair<std::string, int>>& powers) const {
    Exponents e(vars_.size(), 0);
    for (const auto& [v, p] : powers) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) {
            if (p != 0) return Rational(0);
            continue;
        }
        e[it - vars_.begin()] = p;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

// Canonical output order: graded lex on the exponent vector.
bool graded_lex_before(const MPoly::Exponents& a, const MPoly::Exponents& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return graded_lex_before(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        Rational c = t->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_vars = std::any_of(t->first.begin(), t->first.end(), [](int e) { return e != 0; });
        bool coeff_written = false;
        if (c != 1 || !has_vars) {
            os << c.str();
            coeff_written = true;
        }
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (coeff_written || os.tellp() > 0) {
                if (coeff_written) os << "*";
            }
            coeff_written = true;
            os << vars_[i];
            if (t->first[i] > 1) os << "^" << t->first[i];
        }
    }
    return os.str();
}

nlohmann::json MPoly::to_json() const {
    nlohmann::json j;
    j["vars"] = vars_;
    nlohmann::json terms = nlohmann::json::array();
    std::vector<const std::pair<const Exponents, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return graded_lex_before(a->first, b->first); });
    for (const auto* t : order) {
        nlohmann::json term;
        term["exp"] = t->first;
        term["num"] = boost::multiprecision::numerator(t->second).str();
        term["den"] = boost::multiprecision::denominator(t->second).str();
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

MPoly MPoly::from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MPoly total;
    for (const auto& term : j.at("terms")) {
        std::vector<int> exp = term.at("exp").get<std::vector<int>>();
        if (exp.size() != vars.size())
            throw std::invalid_argument("polynomial JSON: exponent length mismatch");
        Rational c(Integer(term.at("num").get<std::string>()),
                   Integer(term.at("den").get<std::string>()));
        std::vector<std::pair<std::string, int>> powers;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (exp[i] != 0) powers.emplace_back(vars[i], exp[i]);
        total = total + MPoly::monomial(c, powers);
    }
    return total;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool accept(char c) {
        if (peek(c)) { ++i; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(i) + ": " + msg);
    }

    std::string integer_token() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return s.substr(start, i - start);
    }

    MPoly factor() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = integer_token();
            if (accept('/')) {
                std::string den = integer_token();
                return MPoly(Rational(Integer(num), Integer(den)));
            }
            return MPoly(Rational(Integer(num)));
        }
        if (c == '(') {
            ++i;
            MPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return maybe_power(inner);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            return maybe_power(MPoly::variable(s.substr(start, i - start)));
        }
        fail("unexpected character");
    }

    MPoly maybe_power(MPoly base) {
        if (accept('^')) {
            std::string e = integer_token();
            return mpoly_pow(base, std::stoi(e));
        }
        return base;
    }

    MPoly term() {
        MPoly p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    MPoly expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        MPoly p = term();
        if (neg) p = -p;
        while (true) {
            skip_ws();
            if (accept('+')) p = p + term();
            else if (accept('-')) p = p - term();
            else break;
        }
        return p;
    }
};

}  // namespace

MPoly MPoly::parse(const std::string& text) {
    Parser parser(text);
    MPoly p = parser.expr();
    parser.skip_ws();
    if (parser.i != text.size()) parser.fail("trailing input");
    return p;
}

std::vector<MPoly> gradient(const MPoly& p) {
    std::vector<MPoly> out;
    out.reserve(p.vars().size());
    for (const auto& v : p.vars()) out.push_back(p.diff(v));
    return out;
}

std::vector<std::vector<Rational>> hessian_at(const MPoly& p, const QPoint& pt) {
    const auto& vars = p.vars();
    std::size_t n = vars.size();
    std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        MPoly di = p.diff(vars[i]);
        for (std::size_t j = i; j < n; ++j) {
            Rational v = di.diff(vars[j]).eval(pt);
            h[i][j] = v;
            h[j][i] = v;
        }
    }
    return h;
}

}  // namespace homaloidal
