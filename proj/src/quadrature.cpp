#include <basel/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <basel/compensated_sum.hpp>

namespace basel::quadrature {

namespace {

// Gauss-7 / Kronrod-15 pair. All abscissae are strictly interior, so
// panel endpoints are never sampled. Values from the QUADPACK dqk15 rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
    bool splittable = true;
};

double checked_eval(const Integrand& f, double x) {
    const double fx = f(x);
    if (!std::isfinite(fx)) throw NonfiniteSampleError(x, fx);
    return fx;
}

// One G7/K15 evaluation on [a, b] with the QUADPACK error estimate.
Panel eval_panel(const Integrand& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();

    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    std::array<double, 7> flo{};
    std::array<double, 7> fhi{};
    const double fc = checked_eval(f, centr);

    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        flo[j] = checked_eval(f, centr - absc);
        fhi[j] = checked_eval(f, centr + absc);
        const double fsum = flo[j] + fhi[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(flo[j]) + std::abs(fhi[j]));
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * fsum;
    }

    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(flo[j] - reskh) + std::abs(fhi[j] - reskh));
    }
    resabs *= hlgth;
    resasc *= hlgth;

    double err = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > uflow / (50.0 * eps)) {
        err = std::max(eps * 50.0 * resabs, err);
    }

    return Panel{a, b, resk * hlgth, err, true};
}

struct HeapEntry {
    double error;
    std::size_t index;
    unsigned version;
};

struct HeapLess {
    bool operator()(const HeapEntry& l, const HeapEntry& r) const {
        return l.error < r.error;
    }
};

}  // namespace

NonfiniteSampleError::NonfiniteSampleError(double x, double fx)
    : std::runtime_error("integrand returned " + std::to_string(fx) +
                         " at x = " + std::to_string(x)),
      x_(x) {}

QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
        throw std::invalid_argument("integrate: requires finite a < b");
    }
    if (!(cfg.abs_tol > 0.0)) {
        throw std::invalid_argument("integrate: abs_tol must be > 0");
    }
    if (cfg.max_subdivisions < 1 || cfg.max_evals < 1) {
        throw std::invalid_argument("integrate: budgets must be >= 1");
    }

    std::vector<Panel> panels;
    panels.reserve(128);
    std::vector<unsigned> versions;
    versions.reserve(128);

    panels.push_back(eval_panel(f, a, b));
    versions.push_back(0);
    long long n_evals = 15;

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
    heap.push({panels[0].error, 0, 0});

    const auto total_error = [&panels]() {
        CompensatedSum s;
        for (const Panel& p : panels) s += p.error;
        return s.value();
    };

    int splits = 0;
    while (total_error() > cfg.abs_tol) {
        if (splits >= cfg.max_subdivisions) break;
        if (n_evals + 30 > cfg.max_evals) break;

        // Pop until a current, still-splittable panel surfaces.
        std::size_t idx = panels.size();
        while (!heap.empty()) {
            const HeapEntry e = heap.top();
            heap.pop();
            if (versions[e.index] == e.version && panels[e.index].splittable) {
                idx = e.index;
                break;
            }
        }
        if (idx == panels.size()) break;  // nothing left to refine

        Panel& parent = panels[idx];
        const double mid = 0.5 * (parent.a + parent.b);
        if (!(mid > parent.a && mid < parent.b)) {
            parent.splittable = false;  // no representable interior midpoint
            continue;
        }

        const Panel left = eval_panel(f, parent.a, mid);
        const Panel right = eval_panel(f, mid, parent.b);
        n_evals += 30;
        ++splits;

        panels[idx] = left;
        ++versions[idx];
        heap.push({left.error, idx, versions[idx]});

        panels.push_back(right);
        versions.push_back(0);
        heap.push({right.error, panels.size() - 1, 0});
    }

    // Fixed, position-ordered final summation keeps results deterministic.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const Panel& p : panels) {
        value += p.value;
        error += p.error;
    }

    QuadResult result;
    result.value = value.value();
    result.error_est = error.value();
    result.n_evals = n_evals;
    result.converged = result.error_est <= cfg.abs_tol && n_evals <= cfg.max_evals;
    return result;
}

VariableTransform VariableTransform::identity(double a, double b) {
    return {[](double u) { return u; }, [](double) { return 1.0; }, a, b};
}

VariableTransform VariableTransform::square() {
    return {[](double u) { return u * u; }, [](double u) { return 2.0 * u; }, 0.0, 1.0};
}

QuadResult integrate_with_transform(const Integrand& f, double a, double b,
                                    const VariableTransform& transform,
                                    const QuadConfig& cfg) {
    if (!(transform.ref_lo < transform.ref_hi)) {
        throw std::invalid_argument("integrate_with_transform: reference interval is empty");
    }
    const double lo_img = transform.map(transform.ref_lo);
    const double hi_img = transform.map(transform.ref_hi);
    if (std::isfinite(lo_img) && std::isfinite(hi_img)) {
        const bool increasing = lo_img < hi_img;
        const double to_a = increasing ? lo_img : hi_img;
        const double to_b = increasing ? hi_img : lo_img;
        const double scale = std::max({std::abs(a), std::abs(b), 1.0});
        if (std::abs(to_a - a) > 1e-9 * scale || std::abs(to_b - b) > 1e-9 * scale) {
            throw std::invalid_argument(
                "integrate_with_transform: transform image does not match (a, b)");
        }
    }

    const Integrand pulled = [&f, &transform](double u) {
        return f(transform.map(u)) * std::abs(transform.derivative(u));
    };
    return integrate(pulled, transform.ref_lo, transform.ref_hi, cfg);
}

}  // namespace basel::quadrature
