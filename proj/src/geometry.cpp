#include "c235/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace c235 {

Chart make_chart(std::string name, std::vector<std::string> variables) {
    std::set<std::string> seen;
    for (const auto& v : variables)
        if (!seen.insert(v).second)
            throw std::invalid_argument("chart '" + name + "': duplicate variable '" + v + "'");
    return Chart{std::move(name), std::move(variables)};
}

RationalVector VectorField::eval(const RationalVector& point) const {
    RationalVector out(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) out[i] = coefficients[i].eval(point);
    return out;
}

Polynomial VectorField::apply(const Polynomial& f) const {
    Polynomial out = Polynomial::zero(chart.variables);
    for (std::size_t i = 0; i < chart.dim(); ++i)
        out = out + coefficients[i] * f.partial(chart.variables[i]);
    return out;
}

bool VectorField::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

VectorField make_field(const Chart& chart, std::vector<Polynomial> coefficients) {
    if (coefficients.size() != chart.dim())
        throw std::invalid_argument("field on '" + chart.name + "': wrong component count");
    for (const auto& c : coefficients)
        if (c.variables() != chart.variables)
            throw std::invalid_argument("field on '" + chart.name +
                                        "': component variable list differs from chart");
    return VectorField{chart, std::move(coefficients)};
}

VectorField coordinate_field(const Chart& chart, const std::string& var) {
    std::vector<Polynomial> coeffs(chart.dim(), Polynomial::zero(chart.variables));
    const auto it = std::find(chart.variables.begin(), chart.variables.end(), var);
    if (it == chart.variables.end())
        throw std::invalid_argument("chart '" + chart.name + "' has no variable '" + var + "'");
    coeffs[static_cast<std::size_t>(it - chart.variables.begin())] =
        Polynomial::constant(chart.variables, 1);
    return VectorField{chart, std::move(coeffs)};
}

VectorField zero_field(const Chart& chart) {
    return VectorField{chart,
                       std::vector<Polynomial>(chart.dim(), Polynomial::zero(chart.variables))};
}

static void require_same_chart(const VectorField& a, const VectorField& b) {
    if (!(a.chart == b.chart))
        throw std::invalid_argument("chart mismatch: '" + a.chart.name + "' vs '" + b.chart.name +
                                    "'");
}

VectorField add(const VectorField& a, const VectorField& b) {
    require_same_chart(a, b);
    std::vector<Polynomial> coeffs(a.coefficients.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = a.coefficients[i] + b.coefficients[i];
    return VectorField{a.chart, std::move(coeffs)};
}

VectorField scale(const VectorField& a, const Rational& c) {
    std::vector<Polynomial> coeffs(a.coefficients.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coefficients[i] * c;
    return VectorField{a.chart, std::move(coeffs)};
}

VectorField scale(const VectorField& a, const Polynomial& f) {
    std::vector<Polynomial> coeffs(a.coefficients.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coefficients[i] * f;
    return VectorField{a.chart, std::move(coeffs)};
}

RationalVector PolyMap::eval(const RationalVector& point) const {
    RationalVector out(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) out[i] = components[i].eval(point);
    return out;
}

bool PolyMap::is_coordinate_projection() const {
    for (const auto& c : components) {
        if (c.terms().size() != 1) return false;
        const auto& [m, coeff] = *c.terms().begin();
        if (coeff != 1) return false;
        unsigned ones = 0;
        for (const auto e : m) {
            if (e > 1) return false;
            ones += e;
        }
        if (ones != 1) return false;
    }
    return true;
}

std::vector<std::string> PolyMap::fiber_variables() const {
    std::vector<std::string> fibers;
    for (const auto& v : source.variables) {
        bool used = false;
        for (const auto& c : components)
            if (c.terms().size() == 1 && c == Polynomial::variable(source.variables, v)) used = true;
        if (!used) fibers.push_back(v);
    }
    return fibers;
}

PolyMap make_map(const Chart& source, const Chart& target, std::vector<Polynomial> components) {
    if (components.size() != target.dim())
        throw std::invalid_argument("map " + source.name + " -> " + target.name +
                                    ": component count differs from target dimension");
    for (const auto& c : components)
        if (c.variables() != source.variables)
            throw std::invalid_argument("map " + source.name + " -> " + target.name +
                                        ": components must be in source variables");
    return PolyMap{source, target, std::move(components)};
}

RationalVector VectorFieldAlongMap::eval(const RationalVector& source_point) const {
    RationalVector out(components.size());
    for (std::size_t i = 0; i < components.size(); ++i)
        out[i] = components[i].eval(source_point);
    return out;
}

VectorField VectorFieldAlongMap::as_field_on_target() const {
    if (!projectable)
        throw std::logic_error("pushforward is not projectable to '" + map.target.name + "'");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(components.size());
    for (const auto& c : components) coeffs.push_back(c.restrict_to(map.target.variables));
    return VectorField{map.target, std::move(coeffs)};
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
    require_same_chart(a, b);
    std::vector<Polynomial> coeffs(a.chart.dim());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        coeffs[j] = a.apply(b.coefficients[j]) - b.apply(a.coefficients[j]);
    return VectorField{a.chart, std::move(coeffs)};
}

VectorFieldAlongMap pushforward(const PolyMap& f, const VectorField& v) {
    if (!(v.chart == f.source))
        throw std::invalid_argument("pushforward: field lives on '" + v.chart.name +
                                    "', map starts at '" + f.source.name + "'");
    std::vector<Polynomial> comps(f.target.dim());
    for (std::size_t j = 0; j < comps.size(); ++j) comps[j] = v.apply(f.components[j]);

    bool projectable = true;
    for (const auto& c : comps)
        for (const auto& var : c.variables())
            if (c.depends_on(var) &&
                std::find(f.target.variables.begin(), f.target.variables.end(), var) ==
                    f.target.variables.end())
                projectable = false;
    return VectorFieldAlongMap{f, std::move(comps), projectable};
}

static RationalMatrix frame_matrix_at(const std::vector<VectorField>& frame,
                                      const RationalVector& point) {
    RationalMatrix m;
    for (const auto& f : frame) m.append_row(f.eval(point));
    return m;
}

Distribution make_distribution(const Chart& chart, std::vector<VectorField> frame,
                               RationalVector base_point) {
    if (base_point.size() != chart.dim())
        throw std::invalid_argument("distribution base point dimension mismatch");
    for (const auto& f : frame)
        if (!(f.chart == chart))
            throw std::invalid_argument("distribution frame field lives on the wrong chart");
    if (mat_rank(frame_matrix_at(frame, base_point)) != frame.size())
        throw std::invalid_argument(
            "distribution frame is dependent at the distinguished base point");
    return Distribution{chart, std::move(frame), std::move(base_point)};
}

Flag derived_flag(const Distribution& d, FlagKind kind, int max_depth) {
    if (max_depth < 1) throw std::invalid_argument("derived_flag: max_depth must be >= 1");
    Flag flag;
    flag.kind = kind;
    flag.levels.push_back(FlagLevel{1, d.frame});

    const std::size_t dim = d.chart.dim();
    std::size_t rank = mat_rank(frame_matrix_at(d.frame, d.base_point));

    while (flag.levels.back().depth < max_depth && rank < dim) {
        const std::vector<VectorField>& prev = flag.levels.back().frame;
        const std::vector<VectorField>& left = kind == FlagKind::Small ? d.frame : prev;

        std::vector<VectorField> next = prev;
        RationalMatrix mat = frame_matrix_at(next, d.base_point);
        std::size_t next_rank = rank;
        for (const auto& a : left) {
            for (const auto& b : prev) {
                VectorField br = lie_bracket(a, b);
                if (br.is_zero()) continue;
                RationalMatrix trial = mat;
                trial.append_row(br.eval(d.base_point));
                if (mat_rank(trial) > next_rank) {
                    next.push_back(std::move(br));
                    mat = std::move(trial);
                    ++next_rank;
                }
                if (next_rank == dim) break;
            }
            if (next_rank == dim) break;
        }

        if (next_rank == rank) {
            flag.stabilized = true;
            break;
        }
        flag.levels.push_back(FlagLevel{flag.levels.back().depth + 1, std::move(next)});
        rank = next_rank;
    }
    return flag;
}

GrowthVector growth_at(const Flag& flag, const RationalVector& point) {
    GrowthVector g;
    g.point = point;
    for (const auto& level : flag.levels)
        g.ranks.push_back(mat_rank(frame_matrix_at(level.frame, point)));
    return g;
}

std::vector<RationalVector> annihilator_at(const std::vector<VectorField>& frame,
                                           const RationalVector& point) {
    if (frame.empty()) throw std::invalid_argument("annihilator_at: empty frame");
    for (const auto& f : frame)
        if (!(f.chart == frame.front().chart))
            throw std::invalid_argument("annihilator_at: frame fields on different charts");
    return mat_nullspace(frame_matrix_at(frame, point));
}

bool ad_injective(const ESplit& split, const RationalVector& point, const RationalVector& v) {
    if (split.L.empty() || split.K.empty() || split.E.empty())
        throw std::invalid_argument("ad_injective: empty frame in splitting");
    const bool vzero = std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
    if (vzero) throw std::invalid_argument("ad_injective: v must be nonzero");

    // decompose v in the L frame at the point (columns = L generators)
    RationalMatrix cols(point.size(), split.L.size());
    for (std::size_t j = 0; j < split.L.size(); ++j) {
        const RationalVector lv = split.L[j].eval(point);
        for (std::size_t i = 0; i < point.size(); ++i) cols.at(i, j) = lv[i];
    }
    const auto coeffs = mat_solve(cols, v);
    if (!coeffs) throw std::invalid_argument("ad_injective: v is not in span of the L frame");

    VectorField vext = zero_field(split.L.front().chart);
    for (std::size_t j = 0; j < split.L.size(); ++j)
        vext = add(vext, scale(split.L[j], (*coeffs)[j]));

    RationalMatrix m = frame_matrix_at(split.E, point);
    const std::size_t rank_e = mat_rank(m);
    for (const auto& kappa : split.K) m.append_row(lie_bracket(vext, kappa).eval(point));
    return mat_rank(m) == rank_e + split.K.size();
}

std::vector<RationalVector> sample_points(const Chart& chart, std::size_t count,
                                          std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<RationalVector> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(rng.point(chart.dim(), 9, 9));
    return pts;
}

}  // namespace c235
