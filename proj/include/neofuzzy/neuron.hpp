#pragma once

#include <span>
#include <vector>

#include "neofuzzy/membership.hpp"

namespace neofuzzy {

/// Stacked membership vector of a two-input node: the first h entries are
/// the memberships of input A, the last h those of input B. Each half sums
/// to 1, so the squared norm lies in (0, 2].
struct Regressor {
    std::vector<double> values;
};

/// Two-input neo-fuzzy node.
///
/// Each input feeds a nonlinear synapse: h B-spline memberships with one
/// scalar weight per membership (zero-order Takagi-Sugeno inference). The
/// node output is the sum of the two synapse outputs, i.e. a dot product
/// of the 2h weights with the stacked membership vector.
///
/// Online learning is a recursive gradient rule with a scalar gain:
///
///   gain   <- forgetting * gain + |phi|^2
///   weights <- weights + (target - prediction) / gain * phi
///
/// which filters noise for forgetting near 1 and tracks drift for small
/// forgetting; with forgetting = 0 each step reduces to the normalized
/// one-step (Kaczmarz) projection and zeroes the posterior residual.
///
/// forward()/regressor() are read-only and safe under concurrent readers;
/// update() requires exclusive access. Nodes are value types.
class NeoFuzzyNode {
public:
    /// Fresh node: zero weights, zero gain. Both synapses share the basis
    /// template. Throws std::invalid_argument for forgetting outside [0,1].
    NeoFuzzyNode(const MembershipBasis& basis_template, double forgetting);

    /// Stacked membership vector (2h values) for the given input pair.
    Regressor regressor(double in_a, double in_b) const;

    /// Node output: weighted sum over both synapses. Because memberships
    /// partition unity, each synapse output is a convex combination of its
    /// weights.
    double forward(double in_a, double in_b) const;

    /// One learning step. Updates the gain, then the weights, and returns
    /// the prediction made *before* the update (honest one-step-ahead
    /// value). The posterior residual never exceeds the prior one in
    /// magnitude. A zero gain (impossible through this interface, since
    /// memberships cannot all vanish) leaves the weights untouched.
    double update(double in_a, double in_b, double target);

    const MembershipBasis& basis() const noexcept { return basis_; }
    int memberships_per_input() const noexcept { return basis_.count(); }
    std::span<const double> weights() const noexcept { return weights_; }
    double gain() const noexcept { return gain_; }
    double forgetting() const noexcept { return forgetting_; }

    /// Direct state access for snapshot restore and test fixtures.
    void set_weights(std::span<const double> w);
    void set_gain(double gain);

private:
    MembershipBasis basis_;  // shared by both synapses
    std::vector<double> weights_;  // 2h: first h for input A, last h for input B
    double gain_ = 0.0;
    double forgetting_;
};

}  // namespace neofuzzy
