#pragma once

#include <array>
#include <string>
#include <vector>

#include "c235/geometry.hpp"

namespace c235 {

// Darboux coordinates on T*(base): base variables followed by their
// conjugate momenta, pairing fixed by position.
struct CotangentChart {
    Chart base;
    std::vector<std::string> momenta;

    Chart full() const;  // chart named "<base>*" with base + momentum variables
    std::size_t dim() const { return 2 * base.dim(); }
};

CotangentChart make_cotangent_chart(const Chart& base, std::vector<std::string> momenta);

struct CotangentFunction {
    CotangentChart chart;
    Polynomial poly;  // over base + momentum variables
};

// H_v(x, p) = <p, v(x)>
CotangentFunction h_lift(const VectorField& v, const CotangentChart& cchart);

// components (dh/dp_j over base slots, -dh/dx_j over momentum slots)
VectorField hamilton_field(const CotangentFunction& h);

// {f, g} = sum_j df/dp_j dg/dx_j - df/dx_j dg/dp_j, so that
// poisson(H_eta, H_xi) = H_[eta,xi].
CotangentFunction poisson(const CotangentFunction& f, const CotangentFunction& g);

// Same bracket on raw polynomials over any aligned variable list containing
// the given base/momentum names; extra variables ride along as symbols.
Polynomial poisson_poly(const Polynomial& f, const Polynomial& g,
                        const std::vector<std::string>& base,
                        const std::vector<std::string>& momenta);

// The field H_{eta5} * Hfield(H_{eta1}) - H_{eta4} * Hfield(H_{eta2}) on the
// cotangent chart. Validates the bracket certificate eta3 = [eta1,eta2],
// eta4 = [eta1,eta3], eta5 = [eta2,eta3] and rank 5 at the base point.
VectorField ab_field(const std::array<VectorField, 5>& etas, const CotangentChart& cchart,
                     const RationalVector& base_point);

// Control-affine Hamiltonian of a control system. `controls` are the affine
// multipliers (degree <= 1 enforced); `params` are determined controls such
// as a cone fiber coordinate, entering polynomially.
struct ControlHamiltonian {
    CotangentChart chart;
    std::vector<std::string> controls;
    std::vector<std::string> params;
    Polynomial poly;  // over base + momenta + params + controls

    std::vector<std::string> state_variables() const;       // base + momenta
    std::vector<std::string> constraint_variables() const;  // base + momenta + params
    std::vector<std::string> all_variables() const;         // + controls
    // coefficient of one control multiplier
    Polynomial control_coefficient(const std::string& control) const;
};

ControlHamiltonian make_control_hamiltonian(const CotangentChart& chart,
                                            std::vector<std::string> controls,
                                            std::vector<std::string> params,
                                            const Polynomial& poly);

// H = sum_i u_i H_{xi_i} for a frame
ControlHamiltonian frame_hamiltonian(const CotangentChart& chart,
                                     const std::vector<std::string>& controls,
                                     const std::vector<VectorField>& frame);

// d^2 H / du_i du_j over the declared control multipliers
std::vector<std::vector<Polynomial>> control_hessian(const ControlHamiltonian& h);
std::vector<std::vector<Polynomial>> control_hessian(const Polynomial& poly,
                                                     const std::vector<std::string>& controls);

// Time derivative of g along the constrained dynamics, controls as formal
// symbols: poisson(H, g) plus "<param>dot" terms for determined controls
// g depends on. g may use base, momentum and param variables only.
Polynomial chain_derive(const ControlHamiltonian& h, const Polynomial& g);

inline std::string dot_symbol(const std::string& param) { return param + "dot"; }

// One elimination step of a constraint chain: `raw` (a criticality condition
// or a chain_derive output) factored as `factor * constraint`, the factor
// being nonzero by the recorded case analysis.
struct ChainLink {
    std::string source;      // e.g. "dH/dmu" or "d/dt of link 2"
    Polynomial raw;          // over the system's chain variables
    Polynomial factor;       //
    std::string factor_text; // human-readable, e.g. "mu"
    Polynomial constraint;   // over constraint variables
};

struct ConstraintChain {
    ControlHamiltonian system;
    std::vector<ChainLink> links;
    std::string conclusion;
};

// verifies raw == factor * constraint exactly for every link
ConstraintChain make_chain(ControlHamiltonian system, std::vector<ChainLink> links,
                           std::string conclusion);

std::string chain_text(const ConstraintChain& chain);  // canonical printable form

}  // namespace c235
