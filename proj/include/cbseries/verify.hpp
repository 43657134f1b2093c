#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <string>
#include <thread>
#include <vector>

#include "cbseries/acceleration.hpp"
#include "cbseries/bigfloat.hpp"
#include "cbseries/catalog.hpp"
#include "cbseries/errors.hpp"

namespace cbseries {

enum class Method { EpsilonAcceleration, TailCorrected, Exact };

inline const char* method_str(Method m) {
    switch (m) {
        case Method::EpsilonAcceleration: return "epsilon-acceleration";
        case Method::TailCorrected: return "tail-corrected";
        case Method::Exact: return "exact";
    }
    return "?";
}

/// Outcome record of one verification run. estimate/reference/discrepancy
/// are decimal strings at the run's working digits; verdict is pass iff
/// abs_discrepancy <= the run's tolerance.
struct VerificationReport {
    std::string id;
    std::map<std::string, std::string> params;  // integer params, plus "x" for GF points
    Method method = Method::EpsilonAcceleration;
    std::string estimate;
    std::string reference;
    std::string abs_discrepancy;
    long terms_used = 0;
    int digits = 0;
    bool verdict = false;
    bool offset_note = false;  // discrepancy matches one boundary term
    std::string paper_ref;
};

/// Working precision policy: max(50, 2*ceil(-log10 tol) + 20) digits, the
/// headroom the epsilon table's cancellation needs.
inline int policy_digits(const BigFloat& tol) {
    if (tol.sign() <= 0) throw DomainError("tolerance must be positive");
    BigFloat lg(30);
    mpfr_log10(lg.raw(), tol.raw(), MPFR_RNDN);
    mpfr_ceil(lg.raw(), (-lg).raw());
    int needed = std::max(0L, lg.to_long());
    return std::max(50, 2 * needed + 20);
}

namespace detail {

struct Summation {
    BigFloat estimate{8};
    BigFloat uncertainty{8};  // spread between the last two dyadic estimates
    BigFloat first_term{8};   // |t(start)|, for the offset check
    BigFloat plain_sum{8};    // S_N
    long terms_used = 0;
    bool self_converged = false;
    Method method = Method::EpsilonAcceleration;
    bool tail_checked = false;
    BigFloat tail_corrected{8};  // S_N + fitted tail when the fit succeeded
};

/// Sums exact terms once, recording partial sums at dyadic term counts
/// 1, 2, 4, ..., and extrapolates those checkpoints with the Wynn epsilon
/// transform. The remainders S - S_{2^j} of every series in the catalog
/// expand in powers of 2^-j along that subsequence, which is the geometric
/// structure the epsilon table eliminates column by column; consecutive
/// partial sums, by contrast, converge logarithmically and epsilon barely
/// improves them. Doubling continues until two successive extrapolations
/// agree within tol/2 or the term budget is exhausted.
inline Summation sum_series(TermStream& stream, const BigFloat& tol, long max_terms, int wd) {
    const std::size_t tail_window = 16;
    Summation out;
    out.uncertainty = BigFloat::of_string("inf", 8);

    BigFloat acc = BigFloat::of_long(0, wd);
    std::vector<BigFloat> checkpoints;
    std::deque<BigFloat> last_terms;
    long count = 0, next_checkpoint = 1;
    long final_n = 0;

    BigFloat prev_est(wd), cur_est(wd);
    bool have_prev = false;

    while (2 * count <= max_terms || count == 0) {
        // extend to the next dyadic checkpoint
        while (count < next_checkpoint) {
            BigFloat t = stream.next();
            if (count == 0) out.first_term = t.abs();
            acc += t;
            ++count;
            last_terms.push_back(t);
            if (last_terms.size() > tail_window) last_terms.pop_front();
        }
        final_n = stream.index() - 1;
        checkpoints.push_back(acc);
        next_checkpoint *= 2;

        if (checkpoints.size() >= 5) {
            cur_est = wynn_epsilon(checkpoints);
            if (have_prev) {
                out.uncertainty = (cur_est - prev_est).abs();
                if (checkpoints.size() >= 7 && out.uncertainty <= tol.mul_2si(-1)) {
                    out.self_converged = true;
                    break;
                }
            }
            prev_est = cur_est;
            have_prev = true;
        }
    }

    out.estimate = have_prev ? cur_est : acc;
    out.plain_sum = acc;
    out.terms_used = count;
    out.method = have_prev ? Method::EpsilonAcceleration : Method::Exact;

    // Tail-fit cross-check (and fallback when epsilon never stabilized):
    // t(n) ~ c n^-alpha fitted over the last window.
    if (last_terms.size() == tail_window) {
        try {
            std::vector<BigFloat> window(last_terms.begin(), last_terms.end());
            TailFit fit = tail_fit(window, final_n);
            out.tail_corrected = acc + fit.tail;
            out.tail_checked = true;
            // The tail route carries a systematic error on the order of the
            // last term, beyond the fit residual; it only replaces a
            // non-converged epsilon estimate when that full bound is tighter.
            BigFloat tail_bound = fit.confidence_width + window.back();
            if (!out.self_converged && tail_bound < out.uncertainty) {
                out.estimate = out.tail_corrected;
                out.uncertainty = tail_bound;
                out.method = Method::TailCorrected;
            }
        } catch (const DecayTooSlow&) {
            // acceleration is then the only route; nothing to cross-check
        } catch (const DomainError&) {
        }
    }
    return out;
}

inline std::map<std::string, std::string> param_strings(const Params& p) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : p) out[k] = std::to_string(v);
    return out;
}

inline BigFloat round_to(const BigFloat& x, int digits) {
    BigFloat r(digits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace detail

/// Verifies one series identity: exact terms summed under the dyadic
/// epsilon policy against the exact right-hand side. requested_digits = 0
/// defers entirely to the tolerance-derived precision policy.
inline VerificationReport verify_series(const SeriesIdentity& ident, const Params& params,
                                        const BigFloat& tol, long max_terms,
                                        int requested_digits = 0) {
    ident.validate(params);
    if (!(tol > BigFloat::of_long(0, 8))) throw DomainError("tolerance must be positive");
    if (max_terms < 100) throw DomainError("max_terms must be at least 100");
    const int digits = std::max(requested_digits, policy_digits(tol));
    const int wd = digits + 10;

    BigFloat reference = ident.rhs_value(params, wd);
    TermStream stream(ident.shape(params), ident.start_index, wd);
    detail::Summation sum = detail::sum_series(stream, tol, max_terms, wd);

    BigFloat disc = (sum.estimate - reference).abs();

    VerificationReport rep;
    rep.id = ident.id;
    rep.params = detail::param_strings(params);
    rep.method = sum.method;
    rep.estimate = detail::round_to(sum.estimate, digits).str(digits);
    rep.reference = detail::round_to(reference, digits).str(digits);
    rep.abs_discrepancy = disc.str(8);
    rep.terms_used = sum.terms_used;
    rep.digits = digits;
    rep.verdict = disc <= tol;
    rep.offset_note = (disc - sum.first_term).abs() < tol;
    rep.paper_ref = ident.paper_ref;
    return rep;
}

inline VerificationReport verify_series(const std::string& id, const Params& params,
                                        const BigFloat& tol, long max_terms,
                                        int requested_digits = 0) {
    const SeriesIdentity* ident = Catalog::instance().find_series(id);
    if (!ident) throw UnknownIdentity(id);
    return verify_series(*ident, params, tol, max_terms, requested_digits);
}

/// Pointwise generating-function check: exact truncated power series at the
/// rational sample point x against the analytic closed form. The tolerance
/// is derived from the geometric tail bound of the truncation, floored at
/// the precision of the analytic side.
inline VerificationReport verify_gf(const GFIdentity& ident, const Params& params,
                                    const Rational& x, long truncation, int digits) {
    ident.validate(params);
    ident.validate_x(x);
    if (truncation < 50) throw DomainError("gf truncation must be at least 50 terms");
    const int wd = digits + 10;

    Rational lhs(0);
    Rational first_term(0);
    for (long n = ident.start_index; n < ident.start_index + truncation; ++n) {
        Rational t = ident.term(params, n, x);
        if (n == ident.start_index) first_term = t;
        lhs += t;
    }
    Rational next = ident.term(params, ident.start_index + truncation, x);

    // |tail| <= 2 |t_{T+1}| / (1 - rho): term ratios approach rho from below
    // for every registered family once n is past the first few indices.
    Rational rho = ident.ratio_bound(x);
    if (!(rho < Rational(1))) throw DomainError(ident.id + ": sample point has no convergent tail");
    BigFloat tail_bound =
        BigFloat::of_rational(Rational(2) * next.abs() / (Rational(1) - rho), wd);

    BigFloat lhs_f = BigFloat::of_rational(lhs, wd);
    BigFloat rhs_f = ident.rhs(params, BigFloat::of_rational(x, wd), wd);
    BigFloat disc = (lhs_f - rhs_f).abs();

    BigFloat scale = rhs_f.abs();
    if (scale < BigFloat::of_long(1, 8)) scale = BigFloat::of_long(1, 8);
    BigFloat tol = BigFloat::of_string("1e" + std::to_string(6 - digits), wd) * scale;
    if (tail_bound > tol) tol = tail_bound;

    VerificationReport rep;
    rep.id = ident.id;
    rep.params = detail::param_strings(params);
    rep.params["x"] = x.str();
    rep.method = Method::Exact;
    rep.estimate = detail::round_to(lhs_f, digits).str(digits);
    rep.reference = detail::round_to(rhs_f, digits).str(digits);
    rep.abs_discrepancy = disc.str(8);
    rep.terms_used = truncation;
    rep.digits = digits;
    rep.verdict = disc <= tol;
    rep.offset_note = (disc - BigFloat::of_rational(first_term.abs(), wd)).abs() <= tol;
    rep.paper_ref = ident.paper_ref;
    return rep;
}

inline VerificationReport verify_gf(const std::string& id, const Params& params, const Rational& x,
                                    long truncation, int digits) {
    const GFIdentity* ident = Catalog::instance().find_gf(id);
    if (!ident) throw UnknownIdentity(id);
    return verify_gf(*ident, params, x, truncation, digits);
}

struct RunConfig {
    std::string tol = "1e-8";
    int digits = 60;
    long max_terms = 20000;
    long gf_truncation = 500;
    int jobs = 0;  // 0 = hardware concurrency
};

struct SweepTask {
    std::string id;
    bool is_gf = false;
    Params params;
    Rational x;  // GF sample point
};

/// The default verification sweep: every series entry over its declared
/// parameter set, every GF entry at its registered sample points, in
/// deterministic (id, params) order.
inline std::vector<SweepTask> default_sweep() {
    std::vector<SweepTask> tasks;
    const Catalog& cat = Catalog::instance();
    for (const auto& s : cat.series())
        for (const auto& p : s.default_sweep) tasks.push_back({s.id, false, p, Rational(0)});
    for (const auto& g : cat.gfs())
        for (const auto& [p, x] : g.default_points) tasks.push_back({g.id, true, p, x});
    std::sort(tasks.begin(), tasks.end(), [](const SweepTask& a, const SweepTask& b) {
        if (a.id != b.id) return a.id < b.id;
        if (a.params != b.params) return a.params < b.params;
        return a.x < b.x;
    });
    return tasks;
}

/// Runs a task list, dispatching independent verifications across threads;
/// reports come back in task order regardless of scheduling, so the output
/// is identical at any parallelism. Per-entry failures become failed
/// reports rather than aborting the batch.
inline std::vector<VerificationReport> run_sweep(const std::vector<SweepTask>& tasks,
                                                 const RunConfig& config) {
    std::vector<VerificationReport> reports(tasks.size());

    const int digits = config.digits;
    BigFloat tol = BigFloat::of_string(config.tol, 30);
    prime_constant_cache(std::max(digits, policy_digits(tol)) + 20);

    auto run_one = [&](std::size_t i) {
        const SweepTask& t = tasks[i];
        try {
            reports[i] = t.is_gf ? verify_gf(t.id, t.params, t.x, config.gf_truncation, digits)
                                 : verify_series(t.id, t.params, tol, config.max_terms, digits);
        } catch (const std::exception& e) {
            VerificationReport rep;
            rep.id = t.id;
            rep.params = detail::param_strings(t.params);
            if (t.is_gf) rep.params["x"] = t.x.str();
            rep.estimate = rep.reference = rep.abs_discrepancy = "nan";
            rep.digits = digits;
            rep.verdict = false;
            rep.paper_ref = std::string("error: ") + e.what();
            reports[i] = rep;
        }
    };

    unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                    : std::max(1u, std::thread::hardware_concurrency());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    return reports;
}

/// The default full-catalog verification run.
inline std::vector<VerificationReport> verify_all(const RunConfig& config) {
    return run_sweep(default_sweep(), config);
}

}  // namespace cbseries
