#include "neofuzzy/neuron.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace neofuzzy {

namespace {

// Stack storage for one synapse's sparse membership values; covers any
// realistic spline order, with a heap fallback above it.
constexpr int kStackOrder = 16;

struct LocalEval {
    double stack[kStackOrder];
    std::vector<double> heap;

    std::span<double> get(int order) {
        if (order <= kStackOrder) return {stack, static_cast<std::size_t>(order)};
        heap.resize(static_cast<std::size_t>(order));
        return heap;
    }
};

}  // namespace

NeoFuzzyNode::NeoFuzzyNode(const MembershipBasis& basis_template, double forgetting)
    : basis_(basis_template),
      weights_(2 * static_cast<std::size_t>(basis_template.count()), 0.0),
      forgetting_(forgetting) {
    if (!(forgetting >= 0.0 && forgetting <= 1.0)) {
        throw std::invalid_argument("forgetting factor must lie in [0,1], got " +
                                    std::to_string(forgetting));
    }
}

Regressor NeoFuzzyNode::regressor(double in_a, double in_b) const {
    const std::size_t h = static_cast<std::size_t>(basis_.count());
    Regressor phi;
    phi.values.resize(2 * h);
    basis_.evaluate_into(in_a, std::span<double>(phi.values.data(), h));
    basis_.evaluate_into(in_b, std::span<double>(phi.values.data() + h, h));
    return phi;
}

double NeoFuzzyNode::forward(double in_a, double in_b) const {
    const int q = basis_.order();
    const int h = basis_.count();
    LocalEval scratch_a, scratch_b;
    auto va = scratch_a.get(q);
    auto vb = scratch_b.get(q);
    const int fa = basis_.evaluate_local(in_a, va);
    const int fb = basis_.evaluate_local(in_b, vb);

    double acc = 0.0;
    for (int p = 0; p < q; ++p) acc += weights_[static_cast<std::size_t>(fa + p)] * va[static_cast<std::size_t>(p)];
    for (int p = 0; p < q; ++p) acc += weights_[static_cast<std::size_t>(h + fb + p)] * vb[static_cast<std::size_t>(p)];
    return acc;
}

double NeoFuzzyNode::update(double in_a, double in_b, double target) {
    const int q = basis_.order();
    const int h = basis_.count();
    LocalEval scratch_a, scratch_b;
    auto va = scratch_a.get(q);
    auto vb = scratch_b.get(q);
    const int fa = basis_.evaluate_local(in_a, va);
    const int fb = basis_.evaluate_local(in_b, vb);

    double prior = 0.0;
    double norm_sq = 0.0;
    for (int p = 0; p < q; ++p) {
        const double v = va[static_cast<std::size_t>(p)];
        prior += weights_[static_cast<std::size_t>(fa + p)] * v;
        norm_sq += v * v;
    }
    for (int p = 0; p < q; ++p) {
        const double v = vb[static_cast<std::size_t>(p)];
        prior += weights_[static_cast<std::size_t>(h + fb + p)] * v;
        norm_sq += v * v;
    }

    gain_ = forgetting_ * gain_ + norm_sq;
    if (gain_ > 0.0) {
        const double step = (target - prior) / gain_;
        for (int p = 0; p < q; ++p) {
            weights_[static_cast<std::size_t>(fa + p)] += step * va[static_cast<std::size_t>(p)];
        }
        for (int p = 0; p < q; ++p) {
            weights_[static_cast<std::size_t>(h + fb + p)] += step * vb[static_cast<std::size_t>(p)];
        }
    }
    return prior;
}

void NeoFuzzyNode::set_weights(std::span<const double> w) {
    if (w.size() != weights_.size()) {
        throw std::invalid_argument("weight vector size mismatch: expected " +
                                    std::to_string(weights_.size()) + ", got " +
                                    std::to_string(w.size()));
    }
    weights_.assign(w.begin(), w.end());
}

void NeoFuzzyNode::set_gain(double gain) {
    if (!(gain >= 0.0)) {
        throw std::invalid_argument("gain must be non-negative");
    }
    gain_ = gain;
}

}  // namespace neofuzzy
