#pragma once

#include <optional>
#include <utility>

namespace basel::series {

/// Closed interval [lo, hi] built so that the limit of the summed series
/// is guaranteed to lie inside it: exact tail bounds plus outward
/// floating-point slop of 1e-15 * |value| on both ends.
class Enclosure {
public:
    Enclosure(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }
    double half_width() const { return 0.5 * (hi_ - lo_); }
    double midpoint() const { return 0.5 * lo_ + 0.5 * hi_; }
    bool contains(double v) const { return lo_ <= v && v <= hi_; }
    bool overlaps(const Enclosure& other) const {
        return lo_ <= other.hi_ && other.lo_ <= hi_;
    }
    /// Endpoint-wise scaling; requires factor > 0.
    Enclosure scaled(double factor) const;

    static std::optional<Enclosure> intersection(const Enclosure& a, const Enclosure& b);

private:
    double lo_;
    double hi_;
};

/// Partial sum of 1/n^2 for n = 1..n_terms with integral-test tail bounds:
/// the limit lies in [S + 1/(n_terms+1), S + 1/n_terms].
Enclosure sum_reciprocal_squares(long long n_terms);

/// Partial sum of 1/(2n+1)^2 for n = 0..n_terms-1 with telescoping tail
/// bounds: the limit lies in [S + 1/(2(2N+1)), S + 1/(4N)] for N = n_terms.
Enclosure sum_odd_reciprocal_squares(long long n_terms);

/// The odd-series enclosure next to 3/4 of the full-series enclosure; the
/// two intervals contain the same limit and must overlap.
std::pair<Enclosure, Enclosure> odd_to_full_relation(long long n_terms);

}  // namespace basel::series
