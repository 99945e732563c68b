#pragma once

#include <span>
#include <vector>

namespace neofuzzy {

/// B-spline membership basis on a closed domain.
///
/// Holds `count` membership functions of order `order` (degree order-1)
/// over a clamped knot vector: the first and last `order` knots repeat the
/// domain endpoints and the interior knots are equally spaced, so the basis
/// forms a partition of unity on the whole domain. order=2 gives the
/// familiar triangular memberships, order=4 cubic splines.
///
/// Knot count is always count + order. Evaluation uses the Cox-de Boor
/// recursion in its triangular form; repeated knots (0/0 spans) contribute
/// zero, and the domain maximum is assigned to the last non-empty span so
/// the partition holds at the right boundary.
///
/// Immutable after construction; safe for unrestricted concurrent reads.
class MembershipBasis {
public:
    /// Builds a clamped uniform basis. Throws std::invalid_argument when
    /// order < 1, count < order, or the domain is degenerate.
    MembershipBasis(int order, int count, double domain_lo, double domain_hi);

    int order() const noexcept { return order_; }
    int count() const noexcept { return count_; }
    double domain_lo() const noexcept { return knots_.front(); }
    double domain_hi() const noexcept { return knots_.back(); }
    const std::vector<double>& knots() const noexcept { return knots_; }

    /// All `count` membership values at x (x clamped into the domain).
    /// Each value lies in [0,1], they sum to 1, and at most `order` of them
    /// are nonzero.
    std::vector<double> evaluate(double x) const;

    /// Same as evaluate() but writes into caller storage (size count).
    void evaluate_into(double x, std::span<double> out) const;

    /// Sparse evaluation: writes the `order` potentially-nonzero values
    /// into `vals` (size >= order) and returns the index of the first one.
    /// All memberships outside [first, first+order) are exactly zero.
    int evaluate_local(double x, std::span<double> vals) const;

private:
    int find_span(double x) const;

    int order_;
    int count_;
    std::vector<double> knots_;  // count_ + order_ entries, non-decreasing
};

}  // namespace neofuzzy
