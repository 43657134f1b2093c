#pragma once

#include <vector>

#include "cbseries/bigfloat.hpp"
#include "cbseries/errors.hpp"

namespace cbseries {

/// Wynn epsilon transform of a sequence of partial sums. Returns the
/// highest-order even-column table entry reachable without numerical
/// breakdown: when a column difference underflows 10^(-digits) of the
/// sequence scale, the table is truncated at the previous even column and
/// that column's value is returned instead of failing.
inline BigFloat wynn_epsilon(const std::vector<BigFloat>& partial_sums) {
    const std::size_t m = partial_sums.size();
    if (m < 5) throw DomainError("wynn_epsilon: needs at least 5 partial sums");
    const int digits = partial_sums.back().digits();
    BigFloat scale = partial_sums.back().abs();
    if (scale < BigFloat::of_long(1, 8)) scale = BigFloat::of_long(1, 8);
    const BigFloat floor = BigFloat::of_string("1e" + std::to_string(-digits), digits) * scale;

    std::vector<BigFloat> prev(m + 1, BigFloat::of_long(0, digits));  // eps_{-1}
    std::vector<BigFloat> cur = partial_sums;                         // eps_0
    BigFloat best = cur.back();
    int col = 0;
    while (cur.size() >= 2) {
        std::vector<BigFloat> next;
        next.reserve(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            BigFloat diff = cur[i + 1] - cur[i];
            if (diff.abs() <= floor) return best;  // breakdown: truncate here
            next.push_back(prev[i + 1] + BigFloat::of_long(1, digits) / diff);
        }
        prev = std::move(cur);
        cur = std::move(next);
        ++col;
        if (col % 2 == 0) best = cur.back();
    }
    return best;
}

struct TailFit {
    BigFloat alpha;             // fitted decay exponent of t(n) ~ c n^-alpha
    BigFloat tail;              // estimated remainder past N
    BigFloat confidence_width;  // |tail| * fit residual
};

/// Power-law tail estimate from the last w exact terms t(N-w+1..N).
/// Two-point log-ratio fit across the window; the middle point's deviation
/// from the fitted law is the residual. Requires alpha > 1.2, otherwise
/// DecayTooSlow — the caller should rely on acceleration instead.
inline TailFit tail_fit(const std::vector<BigFloat>& terms, long N) {
    const std::size_t w = terms.size();
    if (w < 4) throw DomainError("tail_fit: window must hold at least 4 terms");
    for (const auto& t : terms)
        if (t.sign() <= 0) throw DomainError("tail_fit: terms must be positive");

    const int digits = terms.back().digits();
    const long a = N - static_cast<long>(w) + 1;
    BigFloat na = BigFloat::of_long(a, digits), nb = BigFloat::of_long(N, digits);
    BigFloat alpha = log(terms.front() / terms.back()) / log(nb / na);

    if (alpha <= BigFloat::of_string("1.2", digits))
        throw DecayTooSlow("tail_fit: fitted exponent " + alpha.str(4) + " <= 1.2");

    // Residual: relative misfit of the power law at the window midpoint.
    const std::size_t mi = w / 2;
    BigFloat nm = BigFloat::of_long(a + static_cast<long>(mi), digits);
    BigFloat predicted = terms.back() * exp(alpha * log(nb / nm));
    BigFloat residual = ((predicted - terms[mi]) / terms[mi]).abs();

    BigFloat one = BigFloat::of_long(1, digits);
    TailFit fit{alpha, terms.back() * nb / (alpha - one), BigFloat(digits)};
    fit.confidence_width = fit.tail.abs() * residual;
    return fit;
}

}  // namespace cbseries
