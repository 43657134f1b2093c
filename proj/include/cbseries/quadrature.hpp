#pragma once

#include <functional>

#include "cbseries/bigfloat.hpp"
#include "cbseries/errors.hpp"

namespace cbseries {

struct QuadratureResult {
    BigFloat value;
    BigFloat error_estimate;  // |last level - previous level|, nonnegative
    int levels_used = 0;
};

/// Tanh-sinh (double-exponential) quadrature of f over the open interval
/// (a,b). Nodes cluster doubly exponentially at the endpoints, so algebraic
/// endpoint singularities such as t^(-1/2) need no special casing. The node
/// level doubles until two successive levels agree to 10^(5-digits)
/// relative, or the level cap is hit (NonConvergence).
///
/// f is evaluated at interior points only; the working precision is
/// digits+10 so the returned value is honest at the requested digits.
inline QuadratureResult tanh_sinh_integrate(const std::function<BigFloat(const BigFloat&)>& f,
                                            const BigFloat& a, const BigFloat& b, int digits,
                                            int level_cap = 12) {
    const int wd = digits + 10;
    const BigFloat half_pi = const_pi(wd).mul_2si(-1);
    const BigFloat width = b - a;  // (b-a), assumed positive
    if (width.sign() <= 0) throw DomainError("tanh_sinh: requires a < b");

    // Beyond t_max the node weight is below 10^-(wd+5) even against an
    // algebraic endpoint singularity.
    const double t_max = std::asinh((wd + 5) * 2.302585092994046 / 1.5707963267948966);

    // Node at offset sigma(t) = 1/(1+e^{2u}), u = (pi/2) sinh t, from either
    // endpoint; weight w(t) = (pi/2) cosh t / cosh^2(u).
    auto add_nodes = [&](const BigFloat& t, BigFloat& acc) {
        BigFloat sh = sinh(t), ch = cosh(t);
        BigFloat u = half_pi * sh;
        BigFloat chu = cosh(u);
        BigFloat w = half_pi * ch / (chu * chu);
        BigFloat sigma = BigFloat::of_long(1, wd) / (BigFloat::of_long(1, wd) + exp(u.mul_2si(1)));
        BigFloat off = width * sigma;
        acc += w * (f(a + off) + f(b - off));
    };

    // Level 0: h = 1.
    BigFloat h = BigFloat::of_long(1, wd);
    BigFloat mid = a + width.mul_2si(-1);
    BigFloat sum = half_pi * f(mid);  // k = 0 node, weight pi/2
    for (long k = 1; k <= static_cast<long>(t_max) + 1; ++k)
        add_nodes(BigFloat::of_long(k, wd), sum);

    BigFloat scale = width.mul_2si(-1);  // maps weights onto (a,b)
    BigFloat prev = sum * h * scale;

    const BigFloat tol = BigFloat::of_string("1e" + std::to_string(5 - digits), wd);
    QuadratureResult res{prev, prev.abs(), 0};

    for (int level = 1; level <= level_cap; ++level) {
        h = h.mul_2si(-1);
        long k_max = static_cast<long>(std::ceil(t_max / (1.0 / (1 << level))));
        for (long k = 1; k <= k_max; k += 2)  // odd multiples are the new nodes
            add_nodes(BigFloat::of_long(k, wd) * h, sum);
        BigFloat cur = sum * h * scale;
        BigFloat diff = (cur - prev).abs();
        res.value = cur;
        res.error_estimate = diff;
        res.levels_used = level;
        if (level >= 2 && diff <= tol * cur.abs()) return res;
        prev = cur;
    }
    throw NonConvergence("tanh_sinh: level cap reached without agreement (last delta " +
                         res.error_estimate.str(3) + ")");
}

}  // namespace cbseries
