#include "neofuzzy/membership.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace neofuzzy {

MembershipBasis::MembershipBasis(int order, int count, double domain_lo, double domain_hi)
    : order_(order), count_(count) {
    if (order < 1) {
        throw std::invalid_argument("membership order must be >= 1, got " + std::to_string(order));
    }
    if (count < order) {
        throw std::invalid_argument("membership count must be >= order, got count=" +
                                    std::to_string(count) + " order=" + std::to_string(order));
    }
    if (!(domain_lo < domain_hi)) {
        throw std::invalid_argument("degenerate membership domain [" + std::to_string(domain_lo) +
                                    ", " + std::to_string(domain_hi) + "]");
    }

    // Clamped uniform knot vector: `order` copies of each endpoint,
    // count - order interior knots equally spaced.
    knots_.resize(static_cast<std::size_t>(count) + static_cast<std::size_t>(order));
    const int interior = count - order;
    const double step = (domain_hi - domain_lo) / static_cast<double>(interior + 1);
    for (int i = 0; i < order; ++i) {
        knots_[static_cast<std::size_t>(i)] = domain_lo;
        knots_[knots_.size() - 1 - static_cast<std::size_t>(i)] = domain_hi;
    }
    for (int i = 0; i < interior; ++i) {
        knots_[static_cast<std::size_t>(order + i)] = domain_lo + static_cast<double>(i + 1) * step;
    }
}

int MembershipBasis::find_span(double x) const {
    // Index s with knots[s] <= x < knots[s+1], restricted to non-empty spans;
    // the domain maximum belongs to the last span.
    const int last = count_ - 1;
    if (x >= knots_.back()) return last;
    const int first = order_ - 1;
    if (x <= knots_[static_cast<std::size_t>(first)]) return first;
    auto it = std::upper_bound(knots_.begin() + first, knots_.begin() + last + 1, x);
    return static_cast<int>(it - knots_.begin()) - 1;
}

int MembershipBasis::evaluate_local(double x, std::span<double> vals) const {
    assert(static_cast<int>(vals.size()) >= order_);
    x = std::clamp(x, knots_.front(), knots_.back());
    const int s = find_span(x);
    const int degree = order_ - 1;

    // Triangular Cox-de Boor scheme: after pass j, vals[0..j] hold the
    // order-(j+1) basis values N_{s-j..s}. Denominators are knot spans that
    // contain the non-empty interval [knots[s], knots[s+1]], so they never
    // vanish; degenerate 0/0 terms are excluded by construction.
    vals[0] = 1.0;
    for (int j = 1; j <= degree; ++j) {
        double saved = 0.0;
        for (int r = 0; r < j; ++r) {
            const double right = knots_[static_cast<std::size_t>(s + r + 1)] - x;
            const double left = x - knots_[static_cast<std::size_t>(s + 1 - j + r)];
            const double denom = right + left;  // knots[s+r+1] - knots[s+1-j+r]
            const double temp = vals[static_cast<std::size_t>(r)] / denom;
            vals[static_cast<std::size_t>(r)] = saved + right * temp;
            saved = left * temp;
        }
        vals[static_cast<std::size_t>(j)] = saved;
    }
    return s - degree;
}

void MembershipBasis::evaluate_into(double x, std::span<double> out) const {
    assert(static_cast<int>(out.size()) == count_);
    std::fill(out.begin(), out.end(), 0.0);
    std::vector<double> local(static_cast<std::size_t>(order_));
    const int first = evaluate_local(x, local);
    for (int p = 0; p < order_; ++p) {
        out[static_cast<std::size_t>(first + p)] = local[static_cast<std::size_t>(p)];
    }
}

std::vector<double> MembershipBasis::evaluate(double x) const {
    std::vector<double> out(static_cast<std::size_t>(count_));
    evaluate_into(x, out);
    return out;
}

}  // namespace neofuzzy
