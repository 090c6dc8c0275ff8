#include "rap/volumes.hpp"

#include "rap/error.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace rap {

namespace {

constexpr double kPi = std::numbers::pi;

std::atomic<bool>& verification_flag()
{
    static std::atomic<bool> flag = [] {
        const char* env = std::getenv("RAP_VERIFY");
        return env != nullptr && std::string(env) == "1";
    }();
    return flag;
}

// zeta(2k) for k = 1..kZetaTerms
constexpr int kZetaTerms = 60;

const std::array<double, kZetaTerms + 1>& zeta_even()
{
    static const auto table = [] {
        std::array<double, kZetaTerms + 1> z{};
        for (int k = 1; k <= kZetaTerms; ++k)
            z[k] = std::riemann_zeta(2.0 * k);
        return z;
    }();
    return table;
}

void check_finite(double theta)
{
    if (!std::isfinite(theta))
        fail(ErrorKind::NonFinite, "Lobachevsky argument is not finite");
}

// Cl2(x) for 0 < x <= pi:
//   x - x log x + sum_k zeta(2k) / (k (2k+1)) * x * (x / 2pi)^(2k)
Evaluation clausen_small(double x)
{
    const auto& zeta = zeta_even();
    const double ratio = (x / (2.0 * kPi)) * (x / (2.0 * kPi)); // <= 1/4
    double sum = 0.0;
    double compensation = 0.0;
    double power = x;
    double tail = 0.0;
    for (int k = 1; k <= kZetaTerms; ++k) {
        power *= ratio;
        const double term = zeta[k] / (k * (2.0 * k + 1.0)) * power;
        // Kahan summation
        const double y = term - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
        // Remaining terms are dominated by a geometric series.
        const double next = zeta[k] / ((k + 1.0) * (2.0 * k + 3.0)) * power * ratio;
        tail = next / (1.0 - ratio);
        if (tail < 1e-18)
            break;
    }
    const double head = x - x * std::log(x);
    Evaluation out;
    out.value = head + sum;
    out.error_bound = tail + 8.0 * std::numeric_limits<double>::epsilon() * (std::abs(head) + sum + 1.0);
    return out;
}

// 15-point Kronrod extension of the 7-point Gauss rule (positive nodes,
// centre last).
constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Globally adaptive Gauss-Kronrod (7/15): always split the panel with the
// largest error estimate until the total estimate drops below `tolerance`.
template <class F>
Evaluation adaptive_integral(F f, double a, double b, double tolerance)
{
    struct Panel {
        double a, b, value, error;
        bool operator<(const Panel& o) const { return error < o.error; }
    };
    auto rule = [&](double lo, double hi) {
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        const double fc = f(c);
        double kronrod = kKronrodWeights[7] * fc;
        double gauss = kGaussWeights[3] * fc;
        for (int i = 0; i < 7; ++i) {
            const double x = h * kKronrodNodes[i];
            const double sum = f(c - x) + f(c + x);
            kronrod += kKronrodWeights[i] * sum;
            if (i % 2 == 1)
                gauss += kGaussWeights[i / 2] * sum;
        }
        return Panel{lo, hi, kronrod * h, std::abs((kronrod - gauss) * h)};
    };
    std::priority_queue<Panel> panels;
    panels.push(rule(a, b));
    double total_error = panels.top().error;
    constexpr int kMaxPanels = 4000;
    for (int n = 1; n < kMaxPanels && total_error > tolerance; ++n) {
        Panel worst = panels.top();
        panels.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b)) {
            panels.push(worst);
            break;
        }
        Panel left = rule(worst.a, m);
        Panel right = rule(m, worst.b);
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    Evaluation out;
    total_error = 0.0;
    while (!panels.empty()) {
        out.value += panels.top().value;
        total_error += panels.top().error;
        panels.pop();
    }
    out.error_bound = total_error;
    return out;
}

} // namespace

bool verification_enabled() { return verification_flag().load(std::memory_order_relaxed); }

void set_verification(bool on) { verification_flag().store(on, std::memory_order_relaxed); }

Evaluation lobachevsky_series(Angle theta)
{
    check_finite(theta.radians);
    // Lambda(theta) = Cl2(2 theta) / 2, Lambda is pi-periodic and odd.
    const double reduced = theta.radians - kPi * std::nearbyint(theta.radians / kPi); // [-pi/2, pi/2]
    const double x = 2.0 * reduced;
    if (x == 0.0)
        return {0.0, 0.0};
    const double sign = x < 0.0 ? -1.0 : 1.0;
    Evaluation cl = clausen_small(std::abs(x));
    return {0.5 * sign * cl.value, 0.5 * cl.error_bound + 4.0 * std::numeric_limits<double>::epsilon()};
}

Evaluation lobachevsky_quadrature(Angle theta)
{
    check_finite(theta.radians);
    double reduced = std::fmod(theta.radians, kPi);
    if (reduced < 0.0)
        reduced += kPi;
    if (reduced == 0.0)
        return {0.0, 0.0};

    auto integrand = [](double t) { return -std::log(std::abs(2.0 * std::sin(t))); };
    // Integrable log singularities at 0 and pi sit on interval endpoints only.
    const double mid = 0.5 * kPi;
    double value = 0.0;
    double error = 0.0;
    auto piece = [&](double a, double b) {
        Evaluation part = adaptive_integral(integrand, a, b, 1e-14);
        value += part.value;
        error += part.error_bound;
    };
    if (reduced <= mid) {
        piece(0.0, reduced);
    } else {
        piece(0.0, mid);
        piece(mid, reduced);
    }
    return {value, error};
}

Evaluation lobachevsky_fourier(Angle theta, long terms)
{
    check_finite(theta.radians);
    const double reduced = theta.radians - kPi * std::nearbyint(theta.radians / kPi);
    double sum = 0.0;
    double compensation = 0.0;
    for (long k = terms; k >= 1; --k) {
        const double kk = static_cast<double>(k);
        const double term = std::sin(2.0 * kk * reduced) / (kk * kk);
        const double y = term - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    // |sum_{k>N} sin(kx)/k^2| <= 2 / ((N+1)^2 |sin(x/2)|), x = 2 theta.
    const double s = std::abs(std::sin(reduced));
    const double n1 = static_cast<double>(terms + 1);
    const double bound = s > 0.0 ? 2.0 / (n1 * n1 * s) : 0.0;
    return {0.5 * sum, 0.5 * bound + 1e-15};
}

double lobachevsky(Angle theta)
{
    Evaluation series = lobachevsky_series(theta);
    if (verification_enabled()) {
        Evaluation quad = lobachevsky_quadrature(theta);
        ensure(std::abs(series.value - quad.value) <= 1e-9,
               "Lobachevsky series and quadrature disagree at theta = " +
                   std::to_string(theta.radians));
    }
    return series.value;
}

Angle theta_n(int n)
{
    if (n < 5)
        fail(ErrorKind::NTooSmall, "theta_n needs n >= 5, got " + std::to_string(n));
    const double c = std::cos(kPi / n);
    return {0.5 * kPi - std::acos(1.0 / (2.0 * c))};
}

Volume lobell_volume(int n)
{
    if (n < 5)
        fail(ErrorKind::NTooSmall, "L(n) needs n >= 5, got " + std::to_string(n));
    const double t = theta_n(n).radians;
    const double step = kPi / n;
    const std::array<Angle, 4> args{Angle{t}, Angle{t + step}, Angle{t - step}, Angle{2.0 * t - 0.5 * kPi}};
    const std::array<double, 4> weights{2.0, 1.0, 1.0, -1.0};
    double sum = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        Evaluation e = lobachevsky_series(args[i]);
        if (verification_enabled())
            (void)lobachevsky(args[i]);
        sum += weights[i] * e.value;
        error += std::abs(weights[i]) * e.error_bound;
    }
    Volume v;
    v.value = 0.5 * n * sum;
    v.error_bound = 0.5 * n * (error + 8.0 * std::numeric_limits<double>::epsilon() * std::abs(sum));
    ensure(v.value > 0.0, "non-positive Lobell volume");
    return v;
}

Angle deformation_angle(double t) { return {(1.0 - t) * 0.5 * kPi + t * kPi}; }

} // namespace rap
