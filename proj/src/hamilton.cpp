#include "c235/hamilton.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace c235 {

Chart CotangentChart::full() const {
    std::vector<std::string> vars = base.variables;
    vars.insert(vars.end(), momenta.begin(), momenta.end());
    return Chart{base.name + "*", std::move(vars)};
}

CotangentChart make_cotangent_chart(const Chart& base, std::vector<std::string> momenta) {
    if (momenta.size() != base.dim())
        throw std::invalid_argument("cotangent chart: one momentum per base variable required");
    std::set<std::string> names(base.variables.begin(), base.variables.end());
    for (const auto& m : momenta)
        if (!names.insert(m).second)
            throw std::invalid_argument("cotangent chart: momentum name '" + m +
                                        "' collides with another variable");
    return CotangentChart{base, std::move(momenta)};
}

CotangentFunction h_lift(const VectorField& v, const CotangentChart& cchart) {
    if (!(v.chart == cchart.base))
        throw std::invalid_argument("h_lift: field lives on '" + v.chart.name +
                                    "', cotangent chart over '" + cchart.base.name + "'");
    const Chart full = cchart.full();
    Polynomial h = Polynomial::zero(full.variables);
    for (std::size_t j = 0; j < cchart.base.dim(); ++j) {
        const Polynomial pj = Polynomial::variable(full.variables, cchart.momenta[j]);
        h = h + pj * v.coefficients[j].align_to(full.variables);
    }
    return CotangentFunction{cchart, std::move(h)};
}

VectorField hamilton_field(const CotangentFunction& h) {
    const Chart full = h.chart.full();
    const std::size_t n = h.chart.base.dim();
    std::vector<Polynomial> coeffs(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        coeffs[j] = h.poly.partial(h.chart.momenta[j]);
        coeffs[n + j] = -h.poly.partial(h.chart.base.variables[j]);
    }
    return VectorField{full, std::move(coeffs)};
}

Polynomial poisson_poly(const Polynomial& f, const Polynomial& g,
                        const std::vector<std::string>& base,
                        const std::vector<std::string>& momenta) {
    if (base.size() != momenta.size())
        throw std::invalid_argument("poisson_poly: base/momentum count mismatch");
    Polynomial out = Polynomial::zero(f.variables());
    for (std::size_t j = 0; j < base.size(); ++j)
        out = out + f.partial(momenta[j]) * g.partial(base[j]) -
              f.partial(base[j]) * g.partial(momenta[j]);
    return out;
}

CotangentFunction poisson(const CotangentFunction& f, const CotangentFunction& g) {
    if (!(f.chart.base == g.chart.base) || f.chart.momenta != g.chart.momenta)
        throw std::invalid_argument("poisson: cotangent chart mismatch");
    return CotangentFunction{
        f.chart, poisson_poly(f.poly, g.poly, f.chart.base.variables, f.chart.momenta)};
}

VectorField ab_field(const std::array<VectorField, 5>& etas, const CotangentChart& cchart,
                     const RationalVector& base_point) {
    const struct {
        int target, left, right;
    } certificate[] = {{2, 0, 1}, {3, 0, 2}, {4, 1, 2}};
    for (const auto& [t, l, r] : certificate) {
        if (!(lie_bracket(etas[l], etas[r]) == etas[t])) {
            std::ostringstream os;
            os << "ab_field: bracket identity eta" << t + 1 << " = [eta" << l + 1 << ", eta"
               << r + 1 << "] fails";
            throw std::invalid_argument(os.str());
        }
    }
    RationalMatrix m;
    for (const auto& eta : etas) m.append_row(eta.eval(base_point));
    if (mat_rank(m) != 5)
        throw std::invalid_argument("ab_field: frame is not of rank 5 at the base point");

    const CotangentFunction h4 = h_lift(etas[3], cchart);
    const CotangentFunction h5 = h_lift(etas[4], cchart);
    const VectorField f1 = hamilton_field(h_lift(etas[0], cchart));
    const VectorField f2 = hamilton_field(h_lift(etas[1], cchart));
    return add(scale(f1, h5.poly), scale(f2, -h4.poly));
}

std::vector<std::string> ControlHamiltonian::state_variables() const {
    return chart.full().variables;
}

std::vector<std::string> ControlHamiltonian::constraint_variables() const {
    std::vector<std::string> vars = chart.full().variables;
    vars.insert(vars.end(), params.begin(), params.end());
    return vars;
}

std::vector<std::string> ControlHamiltonian::all_variables() const {
    std::vector<std::string> vars = constraint_variables();
    vars.insert(vars.end(), controls.begin(), controls.end());
    return vars;
}

Polynomial ControlHamiltonian::control_coefficient(const std::string& control) const {
    return poly.partial(control);
}

ControlHamiltonian make_control_hamiltonian(const CotangentChart& chart,
                                            std::vector<std::string> controls,
                                            std::vector<std::string> params,
                                            const Polynomial& poly) {
    ControlHamiltonian h{chart, std::move(controls), std::move(params), Polynomial()};
    if (poly.variables() != h.all_variables())
        throw std::invalid_argument(
            "control hamiltonian: polynomial must be over base+momenta+params+controls");
    for (const auto& u : h.controls)
        if (poly.degree_in(u) > 1)
            throw std::invalid_argument("control hamiltonian: not affine in control '" + u + "'");
    h.poly = poly;
    return h;
}

ControlHamiltonian frame_hamiltonian(const CotangentChart& chart,
                                     const std::vector<std::string>& controls,
                                     const std::vector<VectorField>& frame) {
    if (controls.size() != frame.size())
        throw std::invalid_argument("frame_hamiltonian: one control per frame field required");
    ControlHamiltonian h{chart, controls, {}, Polynomial()};
    const std::vector<std::string> vars = h.all_variables();
    Polynomial sum = Polynomial::zero(vars);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const Polynomial u = Polynomial::variable(vars, controls[i]);
        sum = sum + u * h_lift(frame[i], chart).poly.align_to(vars);
    }
    return make_control_hamiltonian(chart, controls, {}, sum);
}

std::vector<std::vector<Polynomial>> control_hessian(const Polynomial& poly,
                                                     const std::vector<std::string>& controls) {
    std::vector<std::vector<Polynomial>> hess(controls.size());
    for (std::size_t i = 0; i < controls.size(); ++i) {
        hess[i].reserve(controls.size());
        for (std::size_t j = 0; j < controls.size(); ++j)
            hess[i].push_back(poly.partial(controls[i]).partial(controls[j]));
    }
    return hess;
}

std::vector<std::vector<Polynomial>> control_hessian(const ControlHamiltonian& h) {
    return control_hessian(h.poly, h.controls);
}

Polynomial chain_derive(const ControlHamiltonian& h, const Polynomial& g) {
    for (const auto& u : h.controls)
        if (g.has_variable(u) && g.depends_on(u))
            throw std::invalid_argument("chain_derive: g depends on control '" + u + "'");

    std::vector<std::string> vars = h.all_variables();
    for (const auto& p : h.params) vars.push_back(dot_symbol(p));

    const Polynomial gg = g.align_to(vars);
    Polynomial out = poisson_poly(h.poly.align_to(vars), gg, h.chart.base.variables,
                                  h.chart.momenta);
    for (const auto& p : h.params)
        out = out + Polynomial::variable(vars, dot_symbol(p)) * gg.partial(p);
    return out;
}

ConstraintChain make_chain(ControlHamiltonian system, std::vector<ChainLink> links,
                           std::string conclusion) {
    for (std::size_t i = 0; i < links.size(); ++i) {
        const auto& link = links[i];
        const auto& vars = link.raw.variables();
        if (!(link.raw == link.factor.align_to(vars) * link.constraint.align_to(vars)))
            throw std::logic_error("constraint chain link " + std::to_string(i + 1) +
                                   ": raw form does not equal factor * constraint");
    }
    return ConstraintChain{std::move(system), std::move(links), std::move(conclusion)};
}

std::string chain_text(const ConstraintChain& chain) {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const auto& link = chain.links[i];
        os << "link " << i + 1 << " [" << link.source << "]\n";
        os << "  raw:        " << link.raw << "\n";
        os << "  discard:    " << link.factor_text << "\n";
        os << "  constraint: " << link.constraint << " = 0\n";
    }
    os << "conclusion: " << chain.conclusion << "\n";
    return os.str();
}

}  // namespace c235
