#include "c235/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace c235 {

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto deg = [](const Monomial& m) {
        return std::accumulate(m.begin(), m.end(), 0u);
    };
    const unsigned da = deg(a), db = deg(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::zero(std::vector<std::string> variables) {
    return Polynomial(std::move(variables));
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
    Polynomial p(std::move(variables));
    if (c != 0) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, const std::string& name) {
    Polynomial p(std::move(variables));
    Monomial m(p.vars_.size(), 0);
    m[p.index_of(name)] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

std::size_t Polynomial::index_of(const std::string& var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        throw std::invalid_argument("unknown variable '" + var + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool Polynomial::has_variable(const std::string& var) const {
    return std::find(vars_.begin(), vars_.end(), var) != vars_.end();
}

bool Polynomial::depends_on(const std::string& var) const {
    if (!has_variable(var)) return false;
    const std::size_t i = index_of(var);
    for (const auto& [m, c] : terms_)
        if (m[i] > 0) return true;
    return false;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0u));
    return d;
}

unsigned Polynomial::degree_in(const std::string& var) const {
    const std::size_t i = index_of(var);
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

void Polynomial::add_term(const Monomial& exps, const Rational& coeff) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_variables(const Polynomial& a, const Polynomial& b) {
    if (a.variables() != b.variables())
        throw std::invalid_argument(
            "variable-list mismatch: operands must be aligned to a common variable list first");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_variables(*this, rhs);
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_variables(*this, rhs);
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_variables(*this, rhs);
    Polynomial out(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(vars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::partial(const std::string& var) const {
    const std::size_t i = index_of(var);
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        out.add_term(d, c * Rational(m[i]));
    }
    return out;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& point) const {
    RationalVector coords(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = point.find(vars_[i]);
        if (it == point.end())
            throw std::invalid_argument("missing binding for variable '" + vars_[i] + "'");
        coords[i] = it->second;
    }
    return eval(coords);
}

Rational Polynomial::eval(const RationalVector& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluation point dimension mismatch");
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= rat_pow(point[i], m[i]);
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::string& var, const Rational& value) const {
    const std::size_t i = index_of(var);
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    Polynomial out(rest);
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        out.add_term(r, m[i] ? c * rat_pow(value, m[i]) : c);
    }
    return out;
}

Polynomial Polynomial::align_to(const std::vector<std::string>& variables) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::find(variables.begin(), variables.end(), vars_[i]);
        if (it == variables.end())
            throw std::invalid_argument("align_to: target lacks variable '" + vars_[i] + "'");
        where[i] = static_cast<std::size_t>(it - variables.begin());
    }
    Polynomial out(variables);
    for (const auto& [m, c] : terms_) {
        Monomial r(variables.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) r[where[i]] = m[i];
        out.add_term(r, c);
    }
    return out;
}

Polynomial Polynomial::restrict_to(const std::vector<std::string>& variables) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (std::find(variables.begin(), variables.end(), vars_[i]) != variables.end()) continue;
        if (depends_on(vars_[i]))
            throw std::invalid_argument("restrict_to: polynomial depends on dropped variable '" +
                                        vars_[i] + "'");
    }
    Polynomial out(variables);
    for (const auto& [m, c] : terms_) {
        Monomial r(variables.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            const auto it = std::find(variables.begin(), variables.end(), vars_[i]);
            r[static_cast<std::size_t>(it - variables.begin())] = m[i];
        }
        out.add_term(r, c);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // graded-lex descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool has_vars =
            std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; });
        bool printed = false;
        if (a != 1 || !has_vars) {
            os << to_string(a);
            printed = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

FloatPoly::FloatPoly(const Polynomial& p) {
    terms_.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.coeff = c.get_d();
        for (std::uint32_t i = 0; i < m.size(); ++i)
            if (m[i]) t.powers.emplace_back(i, m[i]);
        terms_.push_back(std::move(t));
    }
}

double FloatPoly::eval(std::span<const double> point) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (const auto& [i, e] : t.powers) {
            const double x = point[i];
            double xe = x;
            for (std::uint32_t k = 1; k < e; ++k) xe *= x;
            v *= xe;
        }
        sum += v;
    }
    return sum;
}

}  // namespace c235
