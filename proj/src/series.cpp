#include <basel/series.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <basel/compensated_sum.hpp>

namespace basel::series {

namespace {

constexpr double kSlopRel = 1e-15;

Enclosure with_outward_slop(double lo, double hi) {
    const double slop = kSlopRel * std::max(std::abs(lo), std::abs(hi));
    return Enclosure(lo - slop, hi + slop);
}

void require_terms(long long n_terms, const char* who) {
    if (n_terms < 1) {
        throw std::domain_error(std::string(who) + ": need at least one term, got " +
                                std::to_string(n_terms));
    }
}

}  // namespace

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) {
        throw std::invalid_argument("Enclosure: lo must be <= hi");
    }
}

Enclosure Enclosure::scaled(double factor) const {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("Enclosure::scaled: factor must be > 0");
    }
    return Enclosure(lo_ * factor, hi_ * factor);
}

std::optional<Enclosure> Enclosure::intersection(const Enclosure& a, const Enclosure& b) {
    const double lo = std::max(a.lo_, b.lo_);
    const double hi = std::min(a.hi_, b.hi_);
    if (lo > hi) return std::nullopt;
    return Enclosure(lo, hi);
}

Enclosure sum_reciprocal_squares(long long n_terms) {
    require_terms(n_terms, "sum_reciprocal_squares");
    CompensatedSum sum;
    for (long long n = 1; n <= n_terms; ++n) {
        const double dn = static_cast<double>(n);
        sum += 1.0 / (dn * dn);
    }
    const double partial = sum.value();
    const double tail_lo = 1.0 / static_cast<double>(n_terms + 1);
    const double tail_hi = 1.0 / static_cast<double>(n_terms);
    return with_outward_slop(partial + tail_lo, partial + tail_hi);
}

Enclosure sum_odd_reciprocal_squares(long long n_terms) {
    require_terms(n_terms, "sum_odd_reciprocal_squares");
    CompensatedSum sum;
    for (long long n = 0; n < n_terms; ++n) {
        const double odd = static_cast<double>(2 * n + 1);
        sum += 1.0 / (odd * odd);
    }
    const double partial = sum.value();
    const double big_n = static_cast<double>(n_terms);
    // telescoping: 1/((2n+1)(2n+3)) < 1/(2n+1)^2 < 1/(2n(2n+2)) for n >= N
    const double tail_lo = 1.0 / (2.0 * (2.0 * big_n + 1.0));
    const double tail_hi = 1.0 / (4.0 * big_n);
    return with_outward_slop(partial + tail_lo, partial + tail_hi);
}

std::pair<Enclosure, Enclosure> odd_to_full_relation(long long n_terms) {
    return {sum_odd_reciprocal_squares(n_terms),
            sum_reciprocal_squares(n_terms).scaled(0.75)};
}

}  // namespace basel::series
