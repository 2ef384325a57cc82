#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c235/linalg.hpp"
#include "c235/polynomial.hpp"
#include "c235/prng.hpp"

namespace c235 {

struct Chart {
    std::string name;
    std::vector<std::string> variables;

    std::size_t dim() const { return variables.size(); }
    bool operator==(const Chart& other) const = default;
};

Chart make_chart(std::string name, std::vector<std::string> variables);  // checks uniqueness

// Polynomial vector field on a chart: one coefficient per chart variable,
// each over exactly the chart's variables.
struct VectorField {
    Chart chart;
    std::vector<Polynomial> coefficients;

    RationalVector eval(const RationalVector& point) const;
    // derivation applied to a function of the chart variables
    Polynomial apply(const Polynomial& f) const;
    bool is_zero() const;
    bool operator==(const VectorField& other) const = default;
};

VectorField make_field(const Chart& chart, std::vector<Polynomial> coefficients);
VectorField coordinate_field(const Chart& chart, const std::string& var);
VectorField zero_field(const Chart& chart);
VectorField add(const VectorField& a, const VectorField& b);
VectorField scale(const VectorField& a, const Rational& c);
VectorField scale(const VectorField& a, const Polynomial& f);

// Polynomial map between charts; components are in source variables.
struct PolyMap {
    Chart source;
    Chart target;
    std::vector<Polynomial> components;

    RationalVector eval(const RationalVector& point) const;
    // true iff components are exactly a subset of the source variables,
    // in which case fiber variables are the dropped ones
    bool is_coordinate_projection() const;
    std::vector<std::string> fiber_variables() const;
};

PolyMap make_map(const Chart& source, const Chart& target, std::vector<Polynomial> components);

// Result of pushing a field through a map: components live in SOURCE
// variables. Only when every component happens to use target-variable
// names alone does it restrict to an honest field on the target.
struct VectorFieldAlongMap {
    PolyMap map;
    std::vector<Polynomial> components;  // one per target variable, in source variables
    bool projectable;

    RationalVector eval(const RationalVector& source_point) const;
    VectorField as_field_on_target() const;  // throws unless projectable
};

VectorField lie_bracket(const VectorField& a, const VectorField& b);
VectorFieldAlongMap pushforward(const PolyMap& f, const VectorField& v);

struct Distribution {
    Chart chart;
    std::vector<VectorField> frame;
    RationalVector base_point;
};

// checks frame independence at the base point
Distribution make_distribution(const Chart& chart, std::vector<VectorField> frame,
                               RationalVector base_point);

enum class FlagKind { Small, Big };

struct FlagLevel {
    int depth = 1;
    std::vector<VectorField> frame;
};

struct Flag {
    FlagKind kind = FlagKind::Small;
    std::vector<FlagLevel> levels;
    bool stabilized = false;  // a level added no rank at the base point
};

struct GrowthVector {
    RationalVector point;
    std::vector<std::size_t> ranks;

    bool operator==(const GrowthVector& other) const = default;
};

// Level i+1 = level i plus the required brackets, pruned to generators that
// grow the rank at the distribution's base point. Stops at full rank,
// stabilization, or max_depth.
Flag derived_flag(const Distribution& d, FlagKind kind, int max_depth = 8);

GrowthVector growth_at(const Flag& flag, const RationalVector& point);

std::vector<RationalVector> annihilator_at(const std::vector<VectorField>& frame,
                                           const RationalVector& point);

// Frames of a subbundle splitting E = L (+) K used by the immersion test.
struct ESplit {
    std::vector<VectorField> L;
    std::vector<VectorField> K;
    std::vector<VectorField> E;
};

// True iff [v-extension, kappa_j](point) mod E(point) are independent over
// the K frame, where v is decomposed in the L frame at the point.
bool ad_injective(const ESplit& split, const RationalVector& point, const RationalVector& v);

// The "generic point" scheme: seeded rational samples, numerators in
// [-9, 9], denominators in [1, 9].
std::vector<RationalVector> sample_points(const Chart& chart, std::size_t count,
                                          std::uint64_t seed);

}  // namespace c235
