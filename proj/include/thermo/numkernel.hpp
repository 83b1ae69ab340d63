#pragma once

// Quadrature, root finding, thermal weights and small fitting helpers.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace thermo {

struct QuadSettings {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
    // relative size of the last semi-infinite panel at which the tail is cut
    double semiinf_decay_cut = 1e-15;

    void validate() const
    {
        if (!(abs_tol >= 0) || !(rel_tol >= 0) || (abs_tol == 0 && rel_tol == 0))
            throw std::invalid_argument("QuadSettings: need abs_tol >= 0, rel_tol >= 0, not both zero");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadSettings: max_subdivisions must be >= 1");
        if (!(semiinf_decay_cut > 0))
            throw std::invalid_argument("QuadSettings: semiinf_decay_cut must be > 0");
    }

    QuadSettings with_tol(double rel, double abs) const
    {
        QuadSettings s = *this;
        s.rel_tol = rel;
        s.abs_tol = abs;
        return s;
    }
};

struct QuadResult {
    double value = 0;
    double error_estimate = 0;
    long evaluations = 0;

    QuadResult& operator+=(const QuadResult& o)
    {
        value += o.value;
        error_estimate += o.error_estimate;
        evaluations += o.evaluations;
        return *this;
    }
    QuadResult& operator*=(double c)
    {
        value *= c;
        error_estimate *= std::abs(c);
        return *this;
    }
    friend QuadResult operator+(QuadResult a, const QuadResult& b) { return a += b; }
    friend QuadResult operator*(double c, QuadResult a) { return a *= c; }
};

class QuadError : public std::runtime_error {
public:
    enum class Kind { no_convergence, non_finite, tail_bound, bad_input };

    QuadError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

namespace detail {

struct Segment {
    double a, b;
    double value, error, absval;
};

inline bool operator<(const Segment& x, const Segment& y) { return x.error < y.error; }

// 21-point Kronrod rule with embedded 10-point Gauss rule, QUADPACK error heuristics.
template <class F>
Segment gk21(F& f, double a, double b, long& evals)
{
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using gauss = boost::math::quadrature::gauss<double, 10>;
    static const auto& xk = kronrod::abscissa();
    static const auto& wk = kronrod::weights();
    static const auto& wg = gauss::weights();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv1[11], fv2[11];
    const double fc = f(c);
    if (!std::isfinite(fc))
        throw QuadError(QuadError::Kind::non_finite, "non-finite integrand at x = " + std::to_string(c));
    double resk = fc * wk[0];
    double resg = 0;
    double resabs = std::abs(resk);
    for (int j = 1; j <= 10; ++j) {
        const double x = h * xk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        if (!std::isfinite(f1) || !std::isfinite(f2))
            throw QuadError(QuadError::Kind::non_finite,
                            "non-finite integrand near x = " + std::to_string(c) + " +- " + std::to_string(x));
        fv1[j] = f1;
        fv2[j] = f2;
        resk += wk[j] * (f1 + f2);
        resabs += wk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            resg += wg[(j - 1) / 2] * (f1 + f2);
    }
    evals += 21;
    const double reskh = 0.5 * resk;
    double resasc = wk[0] * std::abs(fc - reskh);
    for (int j = 1; j <= 10; ++j)
        resasc += wk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double ah = std::abs(h);
    resabs *= ah;
    resasc *= ah;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0 && err != 0)
        err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    if (resabs > tiny / (50 * eps))
        err = std::max(50 * eps * resabs, err);
    return {a, b, resk * h, err, resabs};
}

inline std::vector<double> cut_points(double a, double b, std::span<const double> breakpoints)
{
    std::vector<double> pts{a};
    for (double x : breakpoints)
        if (x > a && x < b)
            pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

template <class F>
QuadResult adaptive(F& f, const std::vector<double>& pts, const QuadSettings& s, double extra_error = 0)
{
    long evals = 0;
    std::vector<Segment> heap;
    std::vector<Segment> frozen;
    heap.reserve(pts.size() + 64);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        heap.push_back(gk21(f, pts[i], pts[i + 1], evals));
    std::make_heap(heap.begin(), heap.end());

    // floor: what double precision can certify, 100 eps times the integral of |f|
    double floor = 0;
    auto totals = [&](double& val, double& err) {
        val = 0;
        err = extra_error;
        double l1 = 0;
        for (const auto& g : heap) {
            val += g.value;
            err += g.error;
            l1 += g.absval;
        }
        for (const auto& g : frozen) {
            val += g.value;
            err += g.error;
            l1 += g.absval;
        }
        floor = 100 * std::numeric_limits<double>::epsilon() * l1;
    };

    double val, err;
    totals(val, err);
    int n = static_cast<int>(heap.size());
    while (err > std::max({s.abs_tol, s.rel_tol * std::abs(val), floor})) {
        if (heap.empty())
            throw QuadError(QuadError::Kind::no_convergence,
                            "quadrature stalled at roundoff level, error " + std::to_string(err));
        if (n >= s.max_subdivisions)
            throw QuadError(QuadError::Kind::no_convergence,
                            "no convergence within " + std::to_string(s.max_subdivisions) +
                                " subdivisions, error " + std::to_string(err) + " value " + std::to_string(val));
        std::pop_heap(heap.begin(), heap.end());
        Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        const double scale = std::max(std::abs(worst.a), std::abs(worst.b));
        if (!(mid > worst.a && mid < worst.b) || worst.b - worst.a < 8 * std::numeric_limits<double>::epsilon() * scale) {
            frozen.push_back(worst);
            continue;
        }
        heap.push_back(gk21(f, worst.a, mid, evals));
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(gk21(f, mid, worst.b, evals));
        std::push_heap(heap.begin(), heap.end());
        ++n;
        // incremental update drifts; resum from the segments
        totals(val, err);
    }
    return {val, err, evals};
}

} // namespace detail

// Integral of f over [a, b]. Interior points where f is not smooth go in breakpoints.
template <class F>
QuadResult integrate_finite(F&& f, double a, double b, const QuadSettings& s = {}, std::span<const double> breakpoints = {})
{
    s.validate();
    if (!(std::isfinite(a) && std::isfinite(b)) || a > b)
        throw QuadError(QuadError::Kind::bad_input, "integrate_finite: need finite a <= b");
    if (a == b)
        return {};
    return detail::adaptive(f, detail::cut_points(a, b, breakpoints), s);
}

// Integral of f over [a, inf) for integrands that decay fast enough that doubling panels
// shrink geometrically. scale is the width of the first panel (typically the temperature).
template <class F>
QuadResult integrate_semiinf(F&& f, double a, const QuadSettings& s = {}, double scale = 1.0,
                             std::span<const double> breakpoints = {})
{
    s.validate();
    if (!std::isfinite(a) || !(scale > 0) || !std::isfinite(scale))
        throw QuadError(QuadError::Kind::bad_input, "integrate_semiinf: need finite a and scale > 0");
    double last_bp = a;
    for (double x : breakpoints)
        if (std::isfinite(x))
            last_bp = std::max(last_bp, x);

    // rough L1 norm of f on a panel, used only to decide where to cut
    auto absf = [&f](double x) { return std::abs(f(x)); };
    QuadSettings coarse = s;
    coarse.rel_tol = 1e-3;
    coarse.abs_tol = 0;
    coarse.max_subdivisions = 64;
    auto panel_norm = [&](double lo, double hi, long& evals) {
        auto pts = detail::cut_points(lo, hi, breakpoints);
        try {
            auto r = detail::adaptive(absf, pts, coarse);
            evals += r.evaluations;
            return r.value;
        } catch (const QuadError& e) {
            if (e.kind() == QuadError::Kind::non_finite)
                throw;
            double sum = 0;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                sum += detail::gk21(absf, pts[i], pts[i + 1], evals).absval;
            return sum;
        }
    };

    constexpr int max_panels = 400;
    std::vector<double> edges{a};
    long evals = 0;
    double width = scale;
    double cum = 0, prev = -1, tail = -1;
    for (int i = 0; i < max_panels; ++i) {
        const double lo = edges.back();
        const double hi = lo + width;
        if (!std::isfinite(hi))
            break;
        const double norm = panel_norm(lo, hi, evals);
        cum += norm;
        edges.push_back(hi);
        width *= 2;
        if (hi >= last_bp && i >= 2 && prev >= 0) {
            const double rho = prev > 0 ? norm / prev : 0.0;
            if (norm <= s.semiinf_decay_cut * cum && rho < 0.75) {
                tail = norm * rho / (1 - rho);
                break;
            }
        }
        prev = norm;
    }
    if (tail < 0)
        throw QuadError(QuadError::Kind::tail_bound,
                        "integrate_semiinf: integrand tail does not decay within " + std::to_string(max_panels) + " panels");

    std::vector<double> pts = edges;
    for (double x : breakpoints)
        if (x > a && x < edges.back())
            pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    QuadSettings fine = s;
    fine.max_subdivisions = std::max<int>(s.max_subdivisions, static_cast<int>(pts.size()) + s.max_subdivisions / 2);
    auto r = detail::adaptive(f, pts, fine, tail);
    r.evaluations += evals;
    return r;
}

// x with a sign change of f inside [x - x_tol/2, x + x_tol/2].
template <class F>
double find_root_bracketed(F&& f, double lo, double hi, double x_tol)
{
    if (!(lo <= hi) || !(x_tol > 0))
        throw std::invalid_argument("find_root_bracketed: need lo <= hi and x_tol > 0");
    auto checked = [&f](double x) {
        const double v = f(x);
        if (!std::isfinite(v))
            throw std::domain_error("find_root_bracketed: non-finite f at x = " + std::to_string(x));
        return v;
    };
    const double flo = checked(lo);
    const double fhi = checked(hi);
    if (flo == 0)
        return lo;
    if (fhi == 0)
        return hi;
    if ((flo < 0) == (fhi < 0))
        throw std::domain_error("find_root_bracketed: no sign change in bracket");
    boost::uintmax_t iters = 500;
    auto tol = [x_tol](double a, double b) { return std::abs(b - a) <= x_tol; };
    auto [a, b] = boost::math::tools::toms748_solve(checked, lo, hi, flo, fhi, tol, iters);
    return 0.5 * (a + b);
}

// ln(1 - e^{-x}), accurate for small and large x.
inline double bose_log(double x)
{
    if (!(x > 0))
        throw std::domain_error("bose_log: x must be > 0");
    if (x < 0.6931471805599453)
        return std::log(-std::expm1(-x));
    return std::log1p(-std::exp(-x));
}

// g(x) = x/(e^x - 1) - ln(1 - e^{-x}), the entropy of one bosonic oscillator.
inline double thermal_weight(double x)
{
    if (!(x > 0))
        throw std::domain_error("thermal_weight: x must be > 0");
    if (x > 745)
        return 0.0;
    return x / std::expm1(x) - bose_log(x);
}

// 1/(e^x - 1)
inline double bose_factor(double x)
{
    if (x > 745)
        return 0.0;
    return 1.0 / std::expm1(x);
}

// e^x/(e^x - 1)^2 = 1/(4 sinh^2(x/2))
inline double bose_factor_deriv(double x)
{
    if (x > 700)
        return std::exp(-x);
    const double s = std::sinh(0.5 * x);
    return 0.25 / (s * s);
}

template <class F>
double derivative_fd(F&& f, double x, double h)
{
    if (!(h > 0))
        throw std::invalid_argument("derivative_fd: h must be > 0");
    const double fp = f(x + h);
    const double fm = f(x - h);
    if (!std::isfinite(fp) || !std::isfinite(fm))
        throw std::domain_error("derivative_fd: non-finite evaluation");
    return (fp - fm) / (2 * h);
}

// Log-spaced temperatures, points_per_decade per factor of ten, both ends included.
inline std::vector<double> log_grid(double tmin, double tmax, int points_per_decade)
{
    if (!(tmin > 0) || !(tmax >= tmin) || points_per_decade < 1)
        throw std::invalid_argument("log_grid: need 0 < tmin <= tmax and points_per_decade >= 1");
    if (tmax == tmin)
        return {tmin};
    const double decades = std::log10(tmax / tmin);
    const int n = std::max(1, static_cast<int>(std::lround(decades * points_per_decade)));
    std::vector<double> g;
    for (int i = 0; i <= n; ++i)
        g.push_back(tmin * std::pow(10.0, decades * i / n));
    g.back() = tmax;
    return g;
}

enum class Basis { T5, T3, T2, TlnT, T, One };

inline double basis_value(Basis b, double T)
{
    switch (b) {
    case Basis::T5: return T * T * T * T * T;
    case Basis::T3: return T * T * T;
    case Basis::T2: return T * T;
    case Basis::TlnT: return T * std::log(T);
    case Basis::T: return T;
    case Basis::One: return 1.0;
    }
    return 0.0;
}

inline const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::T5: return "T^5";
    case Basis::T3: return "T^3";
    case Basis::T2: return "T^2";
    case Basis::TlnT: return "T ln T";
    case Basis::T: return "T";
    case Basis::One: return "1";
    }
    return "?";
}

struct Sample {
    double T;
    double value;
};

struct AsymptoticFit {
    std::vector<Basis> basis;
    std::vector<double> coefficients;
    double residual_norm = 0; // ||A c - v|| / ||v||

    double coefficient(Basis b) const
    {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == b)
                return coefficients[i];
        return 0.0;
    }
};

inline AsymptoticFit fit_asymptotic(std::span<const Sample> samples, std::vector<Basis> basis)
{
    const auto n = static_cast<Eigen::Index>(samples.size());
    const auto m = static_cast<Eigen::Index>(basis.size());
    if (m == 0 || n < m + 2)
        throw std::invalid_argument("fit_asymptotic: need at least basis size + 2 samples");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(samples[i].T > 0) || !std::isfinite(samples[i].value))
            throw std::invalid_argument("fit_asymptotic: samples need T > 0 and finite values");
        if (i > 0 && !(samples[i].T > samples[i - 1].T))
            throw std::invalid_argument("fit_asymptotic: temperatures must be strictly increasing");
    }
    Eigen::MatrixXd A(n, m);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = samples[i].value;
        for (Eigen::Index j = 0; j < m; ++j)
            A(i, j) = basis_value(basis[j], samples[i].T);
    }
    Eigen::VectorXd colscale = A.cwiseAbs().colwise().maxCoeff().transpose();
    for (Eigen::Index j = 0; j < m; ++j) {
        if (colscale(j) == 0)
            throw std::domain_error("fit_asymptotic: rank-deficient design matrix");
        A.col(j) /= colscale(j);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    qr.setThreshold(1e-13);
    if (qr.rank() < m)
        throw std::domain_error("fit_asymptotic: rank-deficient design matrix");
    Eigen::VectorXd c = qr.solve(v);
    const double vnorm = v.norm();
    const double rnorm = (A * c - v).norm();

    AsymptoticFit fit;
    fit.basis = std::move(basis);
    fit.coefficients.resize(static_cast<std::size_t>(m));
    for (Eigen::Index j = 0; j < m; ++j)
        fit.coefficients[static_cast<std::size_t>(j)] = c(j) / colscale(j);
    fit.residual_norm = vnorm > 0 ? rnorm / vnorm : rnorm;
    return fit;
}

} // namespace thermo
