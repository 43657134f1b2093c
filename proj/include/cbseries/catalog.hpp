#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbseries/bigfloat.hpp"
#include "cbseries/closed_forms.hpp"
#include "cbseries/combinatorics.hpp"
#include "cbseries/constants.hpp"
#include "cbseries/errors.hpp"
#include "cbseries/series_term.hpp"

namespace cbseries {

using Params = std::map<std::string, long>;

struct ParamDomain {
    std::string name;
    long min;
    std::optional<long> max;  // inclusive when present

    std::string describe() const {
        if (max) return name + " in [" + std::to_string(min) + "," + std::to_string(*max) + "]";
        return name + " >= " + std::to_string(min);
    }
};

namespace detail {
inline void check_params(const std::string& id, const std::vector<ParamDomain>& domains,
                         const Params& p) {
    for (const auto& d : domains) {
        auto it = p.find(d.name);
        if (it == p.end())
            throw ParamOutOfDomain(id + ": missing parameter " + d.name + " (" + d.describe() + ")");
        if (it->second < d.min || (d.max && it->second > *d.max))
            throw ParamOutOfDomain(id + ": parameter out of domain (" + d.describe() + ")");
    }
    for (const auto& [name, value] : p) {
        bool known = false;
        for (const auto& d : domains) known |= (d.name == name);
        if (!known) throw ParamOutOfDomain(id + ": unknown parameter " + name);
    }
}
}  // namespace detail

/// One parameterized series identity: exact term structure on the left,
/// exact constant-vector (or, exceptionally, numeric) value on the right.
/// The start index is transcribed verbatim from the source statement.
struct SeriesIdentity {
    std::string id;
    std::string paper_ref;
    std::vector<ParamDomain> params;
    long start_index = 1;
    int decay_class = 2;  // terms ~ c n^-alpha; summation strategy hint
    std::function<TermShape(const Params&)> shape;
    std::function<ConstVec(const Params&)> rhs_exact;                  // null for numeric-only RHS
    std::function<BigFloat(const Params&, int)> rhs_numeric;           // used when rhs_exact is null
    std::vector<Params> default_sweep;

    bool has_exact_rhs() const { return static_cast<bool>(rhs_exact); }

    void validate(const Params& p) const { detail::check_params(id, params, p); }

    Rational term_at(const Params& p, long n) const {
        validate(p);
        if (n < start_index)
            throw ParamOutOfDomain(id + ": index below start (n >= " +
                                   std::to_string(start_index) + ")");
        return term_value(shape(p), n);
    }

    ConstVec rhs_closed(const Params& p) const {
        validate(p);
        if (!rhs_exact) throw DomainError(id + ": right-hand side is numeric only");
        return rhs_exact(p);
    }

    BigFloat rhs_value(const Params& p, int digits) const {
        validate(p);
        if (rhs_exact) return eval_constvec(rhs_exact(p), digits);
        return rhs_numeric(p, digits);
    }
};

/// A generating-function identity checked pointwise: exact truncated power
/// series at a rational sample point against the analytic closed form.
struct GFIdentity {
    std::string id;
    std::string paper_ref;
    std::vector<ParamDomain> params;  // empty for single-family lemmas
    long start_index = 1;
    Rational domain_lo, domain_hi;  // x must lie strictly inside (lo, hi)
    bool exclude_zero = false;
    std::function<Rational(const Params&, long, const Rational&)> term;
    std::function<BigFloat(const Params&, const BigFloat&, int)> rhs;
    std::function<Rational(const Rational&)> ratio_bound;  // asymptotic |t_{n+1}/t_n|
    std::vector<std::pair<Params, Rational>> default_points;

    void validate(const Params& p) const { detail::check_params(id, params, p); }

    void validate_x(const Rational& x) const {
        if (!(x > domain_lo && x < domain_hi))
            throw DomainError(id + ": sample point " + x.str() + " not strictly inside (" +
                              domain_lo.str() + "," + domain_hi.str() + ")");
        if (exclude_zero && x.is_zero()) throw DomainError(id + ": sample point must be nonzero");
    }
};

struct IdentityDescriptor {
    std::string id;
    std::string kind;  // "series" or "gf"
    std::string domain;
    int decay_class;  // 0 for gf entries
    std::string paper_ref;
};

namespace detail {

inline Rational rat_pow(const Rational& x, long e) {
    Rational acc(1);
    for (long i = 0; i < e; ++i) acc *= x;
    return acc;
}

inline ConstVec one_sqrt2(long one_num, long sqrt2_num, long den) {
    return ConstVec{{ConstName::ONE, Rational(one_num, den)},
                    {ConstName::SQRT2, Rational(sqrt2_num, den)}};
}

inline ConstVec one_pisq(const Rational& one_c, const Rational& pisq_c) {
    return ConstVec{{ConstName::ONE, one_c}, {ConstName::PI_SQ, pisq_c}};
}

inline std::vector<Params> sweep_r(long lo, long hi) {
    std::vector<Params> out;
    for (long r = lo; r <= hi; ++r) out.push_back({{"r", r}});
    return out;
}

// sum_{k=0}^{kmax} C(top,k) (-1)^k / ((2k+1) 2^{shift-k}) * B(k), the
// building block of the Theorem 2.1.4-2.1.6 right-hand sides.
inline ConstVec b_weighted_sum(long top, long kmax, long shift) {
    ConstVec acc;
    for (long k = 0; k <= kmax; ++k) {
        Rational c = Rational(binomial(top, k)) / Rational(2 * k + 1) * rational_pow2(k - shift);
        if (k % 2) c = -c;
        acc += c * b_integral(k);
    }
    return acc;
}

}  // namespace detail

/// The full identity registry. Entries are code, not configuration: each
/// one carries its term function, its exact right-hand side, and the
/// citation it was transcribed from, so the transcription can be reviewed
/// next to its source. Immutable after construction.
class Catalog {
public:
    static const Catalog& instance() {
        static const Catalog cat;
        return cat;
    }

    const std::vector<SeriesIdentity>& series() const { return series_; }
    const std::vector<GFIdentity>& gfs() const { return gfs_; }

    const SeriesIdentity* find_series(const std::string& id) const {
        for (const auto& s : series_)
            if (s.id == id) return &s;
        return nullptr;
    }
    const GFIdentity* find_gf(const std::string& id) const {
        for (const auto& g : gfs_)
            if (g.id == id) return &g;
        return nullptr;
    }

    bool contains(const std::string& id) const { return find_series(id) || find_gf(id); }

    std::vector<IdentityDescriptor> list() const {
        std::vector<IdentityDescriptor> out;
        for (const auto& s : series_) {
            std::string dom;
            for (const auto& d : s.params) dom += (dom.empty() ? "" : ", ") + d.describe();
            out.push_back({s.id, "series", dom, s.decay_class, s.paper_ref});
        }
        for (const auto& g : gfs_) {
            std::string dom;
            for (const auto& d : g.params) dom += (dom.empty() ? "" : ", ") + d.describe();
            dom += (dom.empty() ? "" : ", ") + ("x in (" + g.domain_lo.str() + "," +
                                                g.domain_hi.str() + ")");
            out.push_back({g.id, "gf", dom, 0, g.paper_ref});
        }
        return out;
    }

private:
    Catalog() {
        build_series();
        build_gfs();
    }

    void add(SeriesIdentity s) { series_.push_back(std::move(s)); }
    void add(GFIdentity g) { gfs_.push_back(std::move(g)); }

    void build_series();
    void build_gfs();

    std::vector<SeriesIdentity> series_;
    std::vector<GFIdentity> gfs_;
};

inline void Catalog::build_series() {
    using detail::one_pisq;
    using detail::one_sqrt2;
    using detail::sweep_r;

    // ---- introduction showcase -------------------------------------------------

    // Displayed from n = 0, but the n = 0 term is 1 and the stated value
    // 4(sqrt2 - 1) is the sum from n = 1; the verification engine's offset
    // detector flags the n = 0 reading as off by exactly that term.
    add({.id = "intro-bhandari-1",
         .paper_ref = "Sec. 1, first showcase series in C(2n,n)/C(4n,2n); "
                      "displayed lower bound n = 0, value corresponds to n = 1",
         .params = {},
         .start_index = 1,
         .decay_class = 2,
         .shape = [](const Params&) {
             return TermShape{[](long n) { return Rational(1) / (Rational(2 * n - 1) * Rational(2 * n - 1)); },
                              {{2, 0, 1, 0}},
                              {{4, 0, 2, 0}},
                              2};
         },
         .rhs_exact = [](const Params&) { return one_sqrt2(-4, 4, 1); },
         .rhs_numeric = nullptr,
         .default_sweep = {{}}});

    add({.id = "intro-bhandari-2",
         .paper_ref = "Sec. 1, second showcase series in C(2n,n)/C(4n,2n)",
         .params = {},
         .start_index = 1,
         .decay_class = 2,
         .shape = [](const Params&) {
             return TermShape{[](long n) {
                                  return Rational(n) / (Rational(2 * n - 1) * Rational(2 * n - 1) *
                                                        Rational(4 * n + 1));
                              },
                              {{2, 0, 1, 0}},
                              {{4, 0, 2, 0}},
                              2};
         },
         .rhs_exact = [](const Params&) { return one_sqrt2(-4, 5, 9); },
         .rhs_numeric = nullptr,
         .default_sweep = {{}}});

    add({.id = "intro-bhandari-3",
         .paper_ref = "Sec. 1, showcase series in C(2n,n)C(4n,2n); RHS 8*sqrt2/(3*pi) "
                      "lies outside the constant basis and is checked numerically",
         .params = {},
         .start_index = 0,
         .decay_class = 2,
         .shape = [](const Params&) {
             return TermShape{[](long n) { return Rational(1, n + 1); },
                              {{2, 0, 1, 0}, {4, 0, 2, 0}},
                              {},
                              -6};
         },
         .rhs_exact = nullptr,
         .rhs_numeric = [](const Params&, int digits) {
             int wd = digits + 10;
             BigFloat v = BigFloat::of_long(8, wd) * sqrt(BigFloat::of_long(2, wd)) /
                          (BigFloat::of_long(3, wd) * const_pi(wd));
             BigFloat r(digits);
             mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
             return r;
         },
         .default_sweep = {{}}});

    // ---- Theorems 2.1.4 - 2.1.6 (C(2n,n)/C(4n+2r...,2n+r...) families) ---------

    auto shape_214 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(n) / (Rational(2 * n - 1) * Rational(2 * n - 1) *
                                                   Rational(4 * n + 2 * r - 1));
                         },
                         {{2, 0, 1, 0}},
                         {{4, 2 * r - 2, 2, r - 1}},
                         2};
    };
    add({.id = "thm-2.1.4",
         .paper_ref = "Theorem 2.1.4",
         .params = {{"r", 1, std::nullopt}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_214,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             return detail::b_weighted_sum(r, r, 2 * r - 1).times_sqrt2();
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 4)});

    auto shape_215 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(n) / (Rational(2 * n - 1) * Rational(2 * n - 1) *
                                                   Rational(2 * n + 1) * Rational(4 * n + 2 * r + 1));
                         },
                         {{2, 0, 1, 0}},
                         {{4, 2 * r, 2, r}},
                         2};
    };
    auto rhs_215 = [](const Params& p) {
        long r = p.at("r");
        ConstVec v = Rational(1, 2) * detail::b_weighted_sum(r + 1, r + 1, 2 * r + 1).times_sqrt2();
        v += rational_pow2(-(2 * r + 3)) * phi_odd(r);
        v -= Rational(1, 4) * detail::b_weighted_sum(r - 1, r - 1, 2 * r + 1).times_sqrt2();
        return v;
    };
    add({.id = "thm-2.1.5",
         .paper_ref = "Theorem 2.1.5; the 2^(3/2) divisor is carried exactly as sqrt2/4",
         .params = {{"r", 1, std::nullopt}},
         .start_index = 1,
         .decay_class = 3,
         .shape = shape_215,
         .rhs_exact = rhs_215,
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 4)});
    add({.id = "thm-2.1.5-example",
         .paper_ref = "Example after Theorem 2.1.5",
         .params = {{"r", 1, 2}},
         .start_index = 1,
         .decay_class = 3,
         .shape = shape_215,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 1 ? one_sqrt2(2, 2, 225) : one_sqrt2(-88, 137, 22050);
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 2)});

    auto shape_216 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(n) / (Rational(4 * n * n - 1) *
                                                   Rational(4 * n + 2 * r + 1));
                         },
                         {{2, 0, 1, 0}},
                         {{4, 2 * r, 2, r}},
                         2};
    };
    add({.id = "thm-2.1.6",
         .paper_ref = "Theorem 2.1.6",
         .params = {{"r", 1, std::nullopt}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_216,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             ConstVec v = Rational(1, 2) * detail::b_weighted_sum(r - 1, r - 1, 2 * r + 1).times_sqrt2();
             v -= rational_pow2(-(2 * r + 2)) * phi_odd(r);
             return v;
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 4)});
    add({.id = "thm-2.1.6-example",
         .paper_ref = "Example after Theorem 2.1.6",
         .params = {{"r", 1, 2}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_216,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 1 ? one_sqrt2(-8, 7, 60) : one_sqrt2(-64, 71, 5040);
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 2)});

    // ---- kunle theorems (C(4n,2n)/C(2n,n) ratios) ------------------------------

    auto shape_k1 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(1) / (Rational(2 * n + 1) * Rational(2 * n + 2 * r + 1));
                         },
                         {{4, 0, 2, 0}},
                         {{2, 2 * r, 1, r}},
                         -2};
    };
    add({.id = "thm-kunle1",
         .paper_ref = "Sec. 4 theorem, Eq. (kunle1)",
         .params = {{"r", 0, std::nullopt}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_k1,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             ConstVec v = rational_pow2(1 - 2 * r) * k_integral(r);
             v -= ConstVec::from(Rational(1) /
                                 (Rational(2 * r + 1) * Rational(central_binomial(r))));
             return v;
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});
    add({.id = "thm-kunle1-corollary",
         .paper_ref = "Corollary to Eq. (kunle1), r = 0..3",
         .params = {{"r", 0, 3}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_k1,
         .rhs_exact = [](const Params& p) {
             switch (p.at("r")) {
                 case 0: return one_sqrt2(3, -2, 1);
                 case 1: return one_sqrt2(11, -7, 30);
                 case 2: return one_sqrt2(172, -107, 2520);
                 default: return one_sqrt2(6808, -4175, 480480);
             }
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});

    auto shape_k2 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(1) / (Rational(n) * Rational(2 * n + 2 * r - 1));
                         },
                         {{4, -2, 2, -1}},
                         {{2, 2 * r - 2, 1, r - 1}},
                         -2};
    };
    add({.id = "thm-kunle2",
         .paper_ref = "Sec. 4 theorem, Eq. (kunle2)",
         .params = {{"r", 1, std::nullopt}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_k2,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             ConstVec v = ConstVec::from(
                 Rational(1) / (Rational(2 * r - 1) * Rational(binomial(2 * r - 2, r - 1))));
             v -= rational_pow2(2 - 2 * r) * i_integral(r);
             return v;
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 4)});
    add({.id = "thm-kunle2-corollary",
         .paper_ref = "Corollary to Eq. (kunle2), r = 1..3",
         .params = {{"r", 1, 3}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_k2,
         .rhs_exact = [](const Params& p) {
             switch (p.at("r")) {
                 case 1: return one_sqrt2(-1, 1, 3);
                 case 2: return one_sqrt2(-26, 27, 420);
                 default: return one_sqrt2(-712, 755, 55440);
             }
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 3)});

    // ---- Section 5: two-parameter theorem and the wp-based family --------------

    add({.id = "thm-5.0.1",
         .paper_ref = "Theorem 5.0.1 (two parameters m, r)",
         .params = {{"m", 0, std::nullopt}, {"r", 1, std::nullopt}},
         .start_index = 0,
         .decay_class = 2,
         .shape = [](const Params& p) {
             long m = p.at("m"), r = p.at("r");
             return TermShape{[m, r](long n) {
                                  return Rational(1) / (Rational(n + m + 1) *
                                                        Rational(2 * n + 2 * m + 2 * r + 1));
                              },
                              {{2, 0, 1, 0}},
                              {{2, 2 * m + 2 * r, 1, m + r}},
                              0};
         },
         .rhs_exact = [](const Params& p) {
             long m = p.at("m"), r = p.at("r");
             Rational v = Rational(1) / (Rational(2) * Rational(2 * m + 1) *
                                         Rational(central_binomial(m)));
             v *= Rational(1) / (Rational(2 * r - 1) * Rational(binomial(2 * r - 2, r - 1)));
             Rational sum(0);
             for (long k = 0; k <= m; ++k) {
                 Rational t = Rational(binomial(m, k)) / Rational(2 * k + 1) *
                              Rational(factorial(k)) / pochhammer(Rational(r), k + 1);
                 if (k % 2) t = -t;
                 sum += t;
             }
             v -= sum / Rational(pow2(2 * (m + r)));
             return ConstVec::from(v);
         },
         .rhs_numeric = nullptr,
         .default_sweep = {{{"m", 0}, {"r", 1}},
                           {{"m", 0}, {"r", 2}},
                           {{"m", 1}, {"r", 1}},
                           {{"m", 1}, {"r", 2}},
                           {{"m", 2}, {"r", 2}}}});

    add({.id = "coro1",
         .paper_ref = "Corollary (coro1) of Theorem 5.0.1 (m = 0)",
         .params = {{"r", 1, std::nullopt}},
         .start_index = 0,
         .decay_class = 2,
         .shape = [](const Params& p) {
             long r = p.at("r");
             return TermShape{[r](long n) {
                                  return Rational(1) / (Rational(n + 1) * Rational(2 * n + 2 * r + 1));
                              },
                              {{2, 0, 1, 0}},
                              {{2, 2 * r, 1, r}},
                              0};
         },
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             Rational v = Rational(1) / (Rational(2) * Rational(2 * r - 1) *
                                         Rational(binomial(2 * r - 2, r - 1)));
             v -= Rational(1) / (Rational(pow2(2 * r)) * Rational(r));
             return ConstVec::from(v);
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 4)});

    auto shape_502 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(n) / (Rational(2 * n + 2 * r + 3) * Rational(2 * n - 1) *
                                                   Rational(2 * n - 1) * Rational(2 * n + 1) *
                                                   Rational(2 * n + 3));
                         },
                         {{2, 0, 1, 0}},
                         {{2, 2 * r + 2, 1, r + 1}},
                         0};
    };
    // the bracketed wp combination shared by Theorem 5.0.2 and its
    // Pochhammer restatement
    auto bracket_502 = [](long r) {
        ConstVec v = Rational(1, 128) * (Rational(8) * wp_integral(2 * r + 4) -
                                         Rational(8) * wp_integral(2 * r + 2) +
                                         Rational(3) * wp_integral(2 * r));
        v += ConstVec::from(Rational(6, 128 * (4 + 2 * r)) - Rational(3, 128 * (2 + 2 * r)));
        return v;
    };
    add({.id = "thm-5.0.2",
         .paper_ref = "Theorem 5.0.2",
         .params = {{"r", 0, std::nullopt}},
         .start_index = 1,
         .decay_class = 4,
         .shape = shape_502,
         .rhs_exact = [bracket_502](const Params& p) {
             long r = p.at("r");
             return rational_pow2(-(2 * r + 2)) * bracket_502(r);
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});
    add({.id = "thm-5.0.2-example",
         .paper_ref = "Example after Theorem 5.0.2, r = 0, 1",
         .params = {{"r", 0, 1}},
         .start_index = 1,
         .decay_class = 4,
         .shape = shape_502,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 0 ? one_pisq(Rational(0), Rational(1, 2048))
                                   : one_pisq(Rational(64, 147456), Rational(9, 147456));
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 1)});

    // Pochhammer restatement of Theorem 5.0.2 through Eq. (remark):
    // C(2n+2r,n+r) = 4^r (n+1/2)_r / (n+1)_r C(2n,n).
    auto shape_502p = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             Rational q = Rational(n) / (Rational(2 * n + 2 * r + 3) *
                                                         Rational(2 * n - 1) * Rational(2 * n - 1) *
                                                         Rational(2 * n + 1) * Rational(2 * n + 3));
                             for (long j = 1; j <= r + 1; ++j)
                                 q *= Rational(n + j) / Rational(2 * n + 2 * j - 1, 2);
                             return q;
                         },
                         {},
                         {},
                         0};
    };
    add({.id = "thm-5.0.2-pochhammer-form",
         .paper_ref = "Simplified form of Theorem 5.0.2 via Eq. (remark)",
         .params = {{"r", 0, std::nullopt}},
         .start_index = 1,
         .decay_class = 4,
         .shape = shape_502p,
         .rhs_exact = [bracket_502](const Params& p) { return bracket_502(p.at("r")); },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});
    add({.id = "thm-5.0.2-pochhammer-form-example",
         .paper_ref = "Examples of the Pochhammer form, r = 0, 1",
         .params = {{"r", 0, 1}},
         .start_index = 1,
         .decay_class = 4,
         .shape = shape_502p,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 0 ? one_pisq(Rational(0), Rational(1, 512))
                                   : one_pisq(Rational(64, 9216), Rational(9, 9216));
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 1)});

    auto shape_503 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(n) * Rational(n) /
                                    (Rational(2 * n + 2 * r + 1) * Rational(2 * n - 1) *
                                     Rational(2 * n - 1) * Rational(2 * n + 1));
                         },
                         {{2, 0, 1, 0}},
                         {{2, 2 * r, 1, r}},
                         0};
    };
    add({.id = "thm-5.0.3",
         .paper_ref = "Theorem 5.0.3",
         .params = {{"r", 0, std::nullopt}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_503,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             ConstVec v = Rational(1, 8) * (Rational(2) * wp_integral(2 * r + 2) + wp_integral(2 * r));
             v -= ConstVec::from(Rational(1, 16 * (r + 1)));
             return rational_pow2(-(2 * r + 1)) * v;
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});
    add({.id = "thm-5.0.3-example",
         .paper_ref = "Example after Theorem 5.0.3, r = 1, 2",
         .params = {{"r", 1, 2}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_503,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 1 ? one_pisq(Rational(16, 2048), Rational(5, 2048))
                                   : one_pisq(Rational(40, 18432), Rational(9, 18432));
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(1, 2)});

    auto shape_504 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(1) / (Rational(2 * n + 2 * r + 3) * Rational(n + 1) *
                                                   Rational(2 * n + 1) * Rational(2 * n + 3));
                         },
                         {{2, 0, 1, 0}},
                         {{2, 2 * r + 2, 1, r + 1}},
                         0};
    };
    add({.id = "thm-5.0.4",
         .paper_ref = "Theorem 5.0.4",
         .params = {{"r", 0, std::nullopt}},
         .start_index = 1,
         .decay_class = 4,
         .shape = shape_504,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             ConstVec v = ConstVec::from(Rational(3, 8 * (r + 1)));
             v += Rational(1, 8) * (Rational(4) * wp_integral(2 * r + 2) +
                                    Rational(2) * wp_integral(2 * r));
             v = rational_pow2(-(2 * r + 1)) * v;
             v -= ConstVec::from(Rational(1) / (Rational(3) * Rational(2 * r + 3) *
                                                Rational(central_binomial(r + 1))));
             v -= ConstVec::from(Rational(1) / (Rational(2) * Rational(2 * r + 1) *
                                                Rational(central_binomial(r))));
             return v;
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});
    add({.id = "thm-5.0.4-example",
         .paper_ref = "Example after Theorem 5.0.4, r = 0, 1",
         .params = {{"r", 0, 1}},
         .start_index = 1,
         .decay_class = 4,
         .shape = shape_504,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 0 ? one_pisq(Rational(-88, 288), Rational(9, 288))
                                   : one_pisq(Rational(-137, 2880), Rational(5, 1024));
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 1)});

    auto shape_505 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[r](long n) {
                             return Rational(1) / (Rational(n + 1) * Rational(2 * n + 3) *
                                                   Rational(2 * n + 2 * r + 3));
                         },
                         {{2, 0, 1, 0}},
                         {{2, 2 * r + 2, 1, r + 1}},
                         0};
    };
    add({.id = "thm-5.0.5",
         .paper_ref = "Theorem 5.0.5; the trailing bracket is wp(2r)/2 in closed form",
         .params = {{"r", 0, std::nullopt}},
         .start_index = 1,
         .decay_class = 3,
         .shape = shape_505,
         .rhs_exact = [](const Params& p) {
             long r = p.at("r");
             ConstVec v = ConstVec::from(Rational(1) / (Rational(2) * Rational(2 * r + 1) *
                                                        Rational(central_binomial(r))));
             v -= ConstVec::from(Rational(1) / (Rational(3) * Rational(2 * r + 3) *
                                                Rational(central_binomial(r + 1))));
             ConstVec inner = ConstVec::from(Rational(1, 4 * (r + 1)));
             inner += Rational(1, 2) * wp_integral(2 * r);
             v -= rational_pow2(-(2 * r + 1)) * inner;
             return v;
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 3)});
    add({.id = "thm-5.0.5-example",
         .paper_ref = "Example after Theorem 5.0.5, r = 0, 1",
         .params = {{"r", 0, 1}},
         .start_index = 1,
         .decay_class = 3,
         .shape = shape_505,
         .rhs_exact = [](const Params& p) {
             return p.at("r") == 0 ? one_pisq(Rational(92, 288), Rational(-9, 288))
                                   : one_pisq(Rational(59, 1440), Rational(-1, 256));
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(0, 1)});

    // ---- Section 6: C(4n+2r,2n+r)/C(2n,n) with the F integral -------------------

    auto shape_sec6 = [](const Params& p) {
        long r = p.at("r");
        return TermShape{[](long n) { return Rational(2) / (Rational(n) * Rational(2 * n + 3)); },
                         {{4, 2 * r, 2, r}},
                         {{2, 0, 1, 0}},
                         -2};
    };
    auto rhs_sec6 = [](const Params& p) {
        long r = p.at("r");
        ConstVec v = ConstVec::from(Rational(4, 9) * Rational(central_binomial(r)) +
                                    Rational(128, 3) * Rational(binomial(2 * r - 4, r - 2)));
        Rational four_r1 = Rational(pow2(2 * (r + 1)));
        v -= (four_r1 / Rational(3)) * f_integral(r - 1).divided_by_pi();
        v -= (Rational(2) * four_r1 / Rational(3)) * f_integral(r - 3).divided_by_pi();
        return v;
    };
    add({.id = "thm-sec6",
         .paper_ref = "Sec. 6 theorem from Eq. (bounty) with F(r) substituted",
         .params = {{"r", 3, std::nullopt}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_sec6,
         .rhs_exact = rhs_sec6,
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(3, 5)});
    add({.id = "thm-sec6-example",
         .paper_ref = "Sec. 6 examples, r = 3, 4, 5",
         .params = {{"r", 3, 5}},
         .start_index = 1,
         .decay_class = 2,
         .shape = shape_sec6,
         .rhs_exact = [](const Params& p) {
             auto mk = [](long num, long den, long c1, long cs, long cl2, long cl) {
                 Rational s(num, den);
                 return ConstVec{{ConstName::ONE, s * Rational(c1)},
                                 {ConstName::SQRT2, s * Rational(cs)},
                                 {ConstName::LN2, s * Rational(cl2)},
                                 {ConstName::LN_1P_SQRT2, s * Rational(cl)}};
             };
             switch (p.at("r")) {
                 case 3: return mk(8, 9, 209, -110, 102, -102);
                 case 4: return mk(2, 9, 2407, -1396, -444, 444);
                 default: return mk(4, 15, 4537, -1948, 780, -780);
             }
         },
         .rhs_numeric = nullptr,
         .default_sweep = sweep_r(3, 5)});
}

inline void Catalog::build_gfs() {
    using detail::rat_pow;

    auto no_params = std::vector<ParamDomain>{};
    auto x_sq = [](const Rational& x) { return x * x; };

    add({.id = "gf-lemma-2.0.1",
         .paper_ref = "Lemma 2.0.1",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = false,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(n) * Rational(central_binomial(n)) * rat_pow(x, 2 * n + 3) /
                    (Rational(pow2(2 * n)) * Rational(2 * n - 1) * Rational(2 * n - 1) *
                     Rational(2 * n + 1) * Rational(2 * n + 3));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat x2 = x * x;
             BigFloat s = asin(x);
             BigFloat one = BigFloat::of_long(1, digits);
             BigFloat poly = (BigFloat::of_long(8, digits) * x2 * x2 -
                              BigFloat::of_long(8, digits) * x2 + BigFloat::of_long(3, digits));
             BigFloat rad = sqrt(one - x2) * (BigFloat::of_long(6, digits) * x2 * x -
                                              BigFloat::of_long(3, digits) * x);
             return (poly * s + rad).mul_2si(-7);
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(9, 10)}}});

    add({.id = "gf-buhari",
         .paper_ref = "Eq. (buhari) inside the proof of Lemma 2.0.1",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = true,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(n) * Rational(central_binomial(n)) * rat_pow(x, 2 * n) /
                    (Rational(pow2(2 * n)) * Rational(2 * n - 1) * Rational(2 * n - 1) *
                     Rational(2 * n + 1));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat one = BigFloat::of_long(1, digits);
             BigFloat s = asin(x);
             return (sqrt(one - x * x) + x.mul_2si(1) * s - s / x).mul_2si(-3);
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(3, 5)}}});

    add({.id = "gf-lemma-2.0.2",
         .paper_ref = "Lemma 2.0.2",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = true,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(2) * Rational(n) * Rational(n) * Rational(central_binomial(n)) *
                    rat_pow(x, 2 * n + 1) /
                    (Rational(pow2(2 * n)) * Rational(2 * n - 1) * Rational(2 * n - 1) *
                     Rational(2 * n + 1));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat one = BigFloat::of_long(1, digits);
             BigFloat x2 = x * x;
             return ((x2.mul_2si(1) + one) * asin(x) - x * sqrt(one - x2)).mul_2si(-3);
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(3, 4)}}});

    // Lemma 2.0.3 carries x^{n+3/2}; the common factor x^{3/2} is divided
    // out so the registered terms stay rational.
    add({.id = "gf-lemma-2.0.3",
         .paper_ref = "Lemma 2.0.3, divided through by x^(3/2)",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(0),
         .domain_hi = Rational(4),
         .exclude_zero = true,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(2) * rat_pow(x, n) /
                    (Rational(n) * Rational(2 * n + 3) * Rational(central_binomial(n)));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat four = BigFloat::of_long(4, digits);
             BigFloat ratio = sqrt(x / (four - x));
             BigFloat bracket = ratio * (x + BigFloat::of_long(24, digits)) -
                                BigFloat::of_long(3, digits) * (x + BigFloat::of_long(8, digits)) *
                                    atan(ratio);
             BigFloat val = BigFloat::of_long(4, digits) / BigFloat::of_long(9, digits) *
                            sqrt(four - x) * bracket;
             return val / (x * sqrt(x));
         },
         .ratio_bound = [](const Rational& x) { return x * Rational(1, 4); },
         .default_points = {{{}, Rational(2)}, {{}, Rational(7, 2)}}});

    add({.id = "gf-lemma-2.0.4",
         .paper_ref = "Lemma 2.0.4",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = true,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(central_binomial(n)) * rat_pow(x, 2 * n + 2) /
                    (Rational(pow2(2 * n + 1)) * Rational(n + 1) * Rational(2 * n + 3));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat one = BigFloat::of_long(1, digits);
             BigFloat x2 = x * x;
             return one - x2 / BigFloat::of_long(6, digits) - sqrt(one - x2).mul_2si(-1) -
                    (asin(x) / x).mul_2si(-1);
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(4, 5)}}});

    add({.id = "gf-lemma-2.0.6",
         .paper_ref = "Lemma 2.0.6",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = true,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(central_binomial(n)) * rat_pow(x, 2 * n + 2) /
                    (Rational(pow2(2 * n + 1)) * Rational(n + 1) * Rational(2 * n + 1) *
                     Rational(2 * n + 3));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat one = BigFloat::of_long(1, digits);
             BigFloat x2 = x * x;
             BigFloat v = BigFloat::of_long(9, digits) * sqrt(one - x2);
             v += (BigFloat::of_long(6, digits) * x2 + BigFloat::of_long(3, digits)) / x * asin(x);
             v -= x2.mul_2si(1) + BigFloat::of_long(12, digits);
             return v / BigFloat::of_long(12, digits);
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(4, 5)}}});

    // Trigonometric Catalan-number generating functions; registered in the
    // substituted variable x = sin y.
    add({.id = "gf-G1t",
         .paper_ref = "Sec. 4 lemma, G1 trigonometric version (x = sin y)",
         .params = no_params,
         .start_index = 1,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = true,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(binomial(4 * n - 2, 2 * n - 1)) * rat_pow(x, 2 * n - 1) /
                    (Rational(2 * n) * Rational(pow2(4 * n - 2)));
         },
         .rhs = [](const Params&, const BigFloat& x, int) {
             BigFloat y = asin(x);
             BigFloat s = sin(y.mul_2si(-2));
             return (s * s).mul_2si(2) / x;
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(7, 10)}}});

    add({.id = "gf-G2t",
         .paper_ref = "Sec. 4 lemma, G2 trigonometric version (x = sin y); "
                      "the constant Catalan term makes the sum start at n = 0",
         .params = no_params,
         .start_index = 0,
         .domain_lo = Rational(-1),
         .domain_hi = Rational(1),
         .exclude_zero = false,
         .term = [](const Params&, long n, const Rational& x) {
             return Rational(binomial(4 * n, 2 * n)) * rat_pow(x, 2 * n) /
                    (Rational(2 * n + 1) * Rational(pow2(4 * n)));
         },
         .rhs = [](const Params&, const BigFloat& x, int digits) {
             BigFloat y = asin(x);
             return BigFloat::of_long(1, digits) / cos(y.mul_2si(-1));
         },
         .ratio_bound = x_sq,
         .default_points = {{{}, Rational(1, 2)}, {{}, Rational(7, 10)}}});

    add({.id = "gf-boyadzhiev",
         .paper_ref = "Sec. 5 lemma, Eq. (section3)",
         .params = {{"m", 0, std::nullopt}},
         .start_index = 0,
         .domain_lo = Rational(-1, 4),
         .domain_hi = Rational(1, 4),
         .exclude_zero = false,
         .term = [](const Params& p, long n, const Rational& x) {
             long m = p.at("m");
             return Rational(central_binomial(n)) * rat_pow(x, n + m + 1) / Rational(n + m + 1);
         },
         .rhs = [](const Params& p, const BigFloat& x, int digits) {
             long m = p.at("m");
             BigFloat one = BigFloat::of_long(1, digits);
             BigFloat rad = one - x.mul_2si(2);  // 1 - 4x
             BigFloat root = sqrt(rad);
             BigFloat acc = BigFloat::of_long(0, digits);
             for (long k = 0; k <= m; ++k) {
                 BigFloat c = BigFloat::of_rational(
                     Rational(binomial(m, k)) / Rational(2 * k + 1), digits);
                 BigFloat t = one - rad.pow_si(k) * root;
                 acc += (k % 2) ? -(c * t) : c * t;
             }
             return acc.mul_2si(-(2 * m + 1));
         },
         .ratio_bound = [](const Rational& x) { return Rational(4) * x.abs(); },
         .default_points = {{{{"m", 0}}, Rational(1, 8)}, {{{"m", 0}}, Rational(1, 5)},
                            {{{"m", 1}}, Rational(1, 8)}, {{{"m", 1}}, Rational(1, 5)},
                            {{{"m", 2}}, Rational(1, 8)}, {{{"m", 2}}, Rational(1, 5)},
                            {{{"m", 3}}, Rational(1, 8)}, {{{"m", 3}}, Rational(1, 5)}}});
}

}  // namespace cbseries
