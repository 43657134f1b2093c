// cbseries: batch verification of the central-binomial-coefficient series
// catalog. Subcommands: list, verify, verify-all, integral.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cbseries/cbseries.hpp>

namespace {

using namespace cbseries;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string tol = "1e-8";
    int digits = 60;
    long max_terms = 20000;
    std::string format = "text";
    std::string out_path;
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--tol", opts.tol, "verification tolerance (decimal string)");
    cmd->add_option("--digits", opts.digits, "working precision in decimal digits")
        ->envname("CBSERIES_DIGITS")
        ->check(CLI::Range(20, 1000));
    cmd->add_option("--max-terms", opts.max_terms, "series term budget")
        ->check(CLI::Range(100L, 100000000L));
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", opts.out_path, "write the report to this path");
    cmd->add_option("--jobs", opts.jobs, "parallel verifications (0 = all cores)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out_path);
        os << text << "\n";
    }
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format, bool single) {
    if (format == "json")
        return (single && reports.size() == 1 ? report_to_json(reports[0])
                                              : reports_to_json(reports))
            .dump(2);
    if (format == "csv") {
        std::ostringstream os;
        os << csv_header();
        for (const auto& r : reports) os << "\n" << report_to_csv(r);
        return os.str();
    }
    std::ostringstream os;
    if (single && reports.size() == 1) return report_to_text(reports[0]);
    for (const auto& r : reports) os << report_line(r) << "\n";
    long failed = 0;
    for (const auto& r : reports) failed += r.verdict ? 0 : 1;
    os << reports.size() << " verifications, " << (reports.size() - failed) << " passed, "
       << failed << " failed";
    if (failed) {
        os << "\nfailing:";
        for (const auto& r : reports)
            if (!r.verdict) os << " " << r.id;
    }
    return os.str();
}

Params parse_params(const std::vector<std::string>& kvs) {
    Params p;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ParamOutOfDomain("parameter must be name=value: " + kv);
        std::string name = kv.substr(0, eq);
        try {
            p[name] = std::stol(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParamOutOfDomain("parameter value must be an integer: " + kv);
        }
    }
    return p;
}

int cmd_list(const std::string& format, const std::string& filter, const std::string& out_path) {
    auto descriptors = Catalog::instance().list();
    std::vector<IdentityDescriptor> kept;
    for (const auto& d : descriptors)
        if (filter.empty() || d.id.find(filter) != std::string::npos) kept.push_back(d);

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& d : kept)
            arr.push_back({{"id", d.id},
                           {"kind", d.kind},
                           {"domain", d.domain},
                           {"decay_class", d.decay_class},
                           {"paper_ref", d.paper_ref}});
        emit(arr.dump(2), out_path);
        return kExitPass;
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "id,kind,domain,decay_class,paper_ref";
        for (const auto& d : kept)
            os << "\n" << d.id << "," << d.kind << ",\"" << d.domain << "\"," << d.decay_class
               << ",\"" << d.paper_ref << "\"";
    } else {
        for (const auto& d : kept) {
            os << std::left << std::setw(38) << d.id << " " << std::setw(7) << d.kind;
            if (d.decay_class) os << " n^-" << d.decay_class;
            else os << "     ";
            os << "  " << d.domain << "\n";
            os << std::setw(38) << "" << "   " << d.paper_ref << "\n";
        }
        os << kept.size() << " entries";
    }
    emit(os.str(), out_path);
    return kExitPass;
}

int cmd_verify(const std::string& id, const std::vector<std::string>& param_kvs,
               const std::string& x_str, long gf_terms, const CommonOpts& opts) {
    const Catalog& cat = Catalog::instance();
    Params params = parse_params(param_kvs);
    VerificationReport rep;
    if (cat.find_series(id)) {
        BigFloat tol = BigFloat::of_string(opts.tol, 30);
        rep = verify_series(id, params, tol, opts.max_terms, opts.digits);
    } else if (cat.find_gf(id)) {
        if (x_str.empty())
            throw ParamOutOfDomain(id + ": generating-function checks need a sample point --x p/q");
        rep = verify_gf(id, params, Rational::parse(x_str), gf_terms, opts.digits);
    } else {
        throw UnknownIdentity(id);
    }
    emit(render_reports({rep}, opts.format, true), opts.out_path);
    return rep.verdict ? kExitPass : kExitFail;
}

int cmd_verify_all(const CommonOpts& opts, long gf_terms) {
    RunConfig config;
    config.tol = opts.tol;
    config.digits = opts.digits;
    config.max_terms = opts.max_terms;
    config.gf_truncation = gf_terms;
    config.jobs = opts.jobs;
    auto reports = verify_all(config);
    emit(render_reports(reports, opts.format, false), opts.out_path);
    for (const auto& r : reports)
        if (!r.verdict) return kExitFail;
    return kExitPass;
}

struct IntegralForm {
    std::string param_name;
    long min_param;
    std::function<ConstVec(long)> exact;
    std::function<BigFloat(long, int)> quadrature;
};

int cmd_integral(const std::string& name, long k, const CommonOpts& opts) {
    const int digits = opts.digits;
    const int wd = digits + 10;
    BigFloat zero = BigFloat::of_long(0, wd);
    BigFloat one = BigFloat::of_long(1, wd);
    BigFloat half_pi = const_pi(wd).mul_2si(-1);

    std::map<std::string, IntegralForm> forms;
    forms["B"] = {"k", 0, b_integral, [&](long kk, int d) {
                      return tanh_sinh_integrate(
                                 [&, kk](const BigFloat& t) {
                                     return t.pow_si(kk) / sqrt(one - t);
                                 },
                                 zero, BigFloat::of_rational(Rational(1, 2), wd), d)
                          .value;
                  }};
    forms["phi-even"] = {"k", 0, phi_even, [&](long kk, int d) {
                             return tanh_sinh_integrate(
                                        [&, kk](const BigFloat& t) {
                                            return t.pow_si(2 * kk) * sqrt(one + t * t);
                                        },
                                        zero, one, d)
                                 .value;
                         }};
    forms["phi-odd"] = {"k", 0, phi_odd, [&](long kk, int d) {
                            return tanh_sinh_integrate(
                                       [&, kk](const BigFloat& t) {
                                           return t.pow_si(2 * kk + 1) * sqrt(one + t * t);
                                       },
                                       zero, one, d)
                                .value;
                        }};
    forms["K"] = {"r", 0, k_integral, [&](long r, int d) {
                      return tanh_sinh_integrate(
                                 [&, r](const BigFloat& x) {
                                     return sin(x).pow_si(2 * r) * sin(x.mul_2si(-1));
                                 },
                                 zero, half_pi, d)
                          .value;
                  }};
    forms["I"] = {"r", 1, i_integral, [&](long r, int d) {
                      return tanh_sinh_integrate(
                                 [&, r](const BigFloat& x) {
                                     return sin(x).pow_si(2 * r - 1) * cos(x.mul_2si(-1));
                                 },
                                 zero, half_pi, d)
                          .value;
                  }};
    forms["wp"] = {"q", 0, wp_integral, [&](long q, int d) {
                       return tanh_sinh_integrate(
                                  [&, q](const BigFloat& z) { return z * sin(z).pow_si(q); },
                                  zero, half_pi, d)
                           .value;
                   }};
    forms["F"] = {"r", 0, f_integral, [&](long r, int d) {
                      return tanh_sinh_integrate(
                                 [&, r](const BigFloat& t) {
                                     return t.pow_si(r) / sqrt(t) * sqrt(one + t) * asin(t);
                                 },
                                 zero, one, d)
                          .value;
                  }};

    auto it = forms.find(name);
    if (it == forms.end()) throw ParamOutOfDomain("unknown integral form: " + name);
    const IntegralForm& form = it->second;
    if (k < form.min_param)
        throw DomainError(name + " requires " + form.param_name + " >= " +
                          std::to_string(form.min_param));

    ConstVec exact = form.exact(k);
    BigFloat exact_val = eval_constvec(exact, digits);
    BigFloat oracle = form.quadrature(k, digits);
    BigFloat disc = (exact_val - oracle).abs();

    BigFloat scale = exact_val.abs();
    if (scale < one) scale = one;
    bool agree = disc <= BigFloat::of_string("1e" + std::to_string(10 - digits), 30) * scale;

    std::ostringstream os;
    os << name << "(" << form.param_name << " = " << k << ")\n"
       << "  exact form:  " << exact.str() << "\n"
       << "  exact value: " << exact_val.str(digits) << "\n"
       << "  quadrature:  " << oracle.str(digits) << "\n"
       << "  |difference|: " << disc.str(6) << (agree ? "  (agree)" : "  (DISAGREE)");
    emit(os.str(), opts.out_path);
    return agree ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and arbitrary-precision verification of central binomial series"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string filter, id, x_str;
    std::vector<std::string> param_kvs;
    long gf_terms = 500;
    long integral_param = -1;

    CLI::App* list = app.add_subcommand("list", "list registered identities");
    list->add_option("--filter", filter, "substring filter on ids");
    list->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    list->add_option("--out", opts.out_path, "write listing to this path");

    CLI::App* verify = app.add_subcommand("verify", "verify one identity");
    verify->add_option("id", id, "identity id (see list)")->required();
    verify->add_option("--param", param_kvs, "integer parameter name=value (repeatable)");
    verify->add_option("--x", x_str, "rational sample point p/q for gf entries");
    verify->add_option("--terms", gf_terms, "gf truncation length")->check(CLI::Range(50L, 100000L));
    add_common(verify, opts);

    CLI::App* verify_all_cmd = app.add_subcommand("verify-all", "run the full default sweep");
    verify_all_cmd->add_option("--gf-terms", gf_terms, "gf truncation length");
    add_common(verify_all_cmd, opts);

    CLI::App* integral = app.add_subcommand("integral", "exact closed form vs quadrature oracle");
    integral->add_option("name", id, "one of B, phi-even, phi-odd, K, I, wp, F")->required();
    integral->add_option("--k", integral_param, "parameter k");
    integral->add_option("--r", integral_param, "parameter r");
    integral->add_option("--q", integral_param, "parameter q");
    add_common(integral, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (list->parsed()) return cmd_list(opts.format, filter, opts.out_path);
        if (verify->parsed()) return cmd_verify(id, param_kvs, x_str, gf_terms, opts);
        if (verify_all_cmd->parsed()) return cmd_verify_all(opts, gf_terms);
        if (integral->parsed()) {
            if (integral_param < 0)
                throw ParamOutOfDomain("integral needs a parameter (--k, --r, or --q)");
            return cmd_integral(id, integral_param, opts);
        }
    } catch (const UnknownIdentity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParamOutOfDomain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
