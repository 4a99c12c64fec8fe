// quadrature.hpp — panelled adaptive Gauss–Kronrod integration on a finite range

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "jcq/errors.hpp"

namespace jcq::quadrature {

struct Result {
    double value{0.0};
    double error{0.0};  // summed Kronrod error estimate over all panels
};

namespace detail {

// Bisects until the Kronrod error estimate meets an absolute budget. Boost's
// own adaptive driver measures tolerance relative to the local integral,
// which never terminates cheaply on panels where an oscillation cancels.
template <class F>
void refine(F& f, double lo, double hi, double budget, unsigned depth, Result& out) {
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err = 0.0;
    const double v = gk::integrate(f, lo, hi, 0, 0.0, &err);
    if (err <= budget || depth == 0) {
        out.value += v;
        out.error += err;
        return;
    }
    const double mid = 0.5 * (lo + hi);
    refine(f, lo, mid, 0.5 * budget, depth - 1, out);
    refine(f, mid, hi, 0.5 * budget, depth - 1, out);
}

} // namespace detail

/// Integrates f over [a, b] split into equal panels no wider than
/// `panel_width`, each bisected until its share of `abs_tol` is met.
/// Throws NumericalError when the summed error estimate exceeds `abs_tol`.
template <class F>
Result integrate(F&& f, double a, double b, double panel_width, double abs_tol) {
    Result out;
    if (!(b > a)) return out;
    const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / panel_width)));
    const double width = (b - a) / static_cast<double>(panels);
    const double budget = abs_tol / static_cast<double>(panels);
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == panels) ? b : lo + width;
        detail::refine(f, lo, hi, budget, 12, out);
    }
    if (!(out.error <= abs_tol) || !std::isfinite(out.value)) {
        std::ostringstream msg;
        msg << "quadrature did not converge: error estimate " << out.error << " exceeds tolerance " << abs_tol;
        throw NumericalError(msg.str(), out.error);
    }
    return out;
}

} // namespace jcq::quadrature
