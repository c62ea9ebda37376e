// regseq: exact toolkit for Thue-Morse autocorrelations and the growth
// exponent tables, with CSV/JSON emission for every pipeline.

#include "regseq/bounds.hpp"
#include "regseq/linrep.hpp"
#include "regseq/rep_io.hpp"
#include "regseq/sequences.hpp"
#include "regseq/sign_rep.hpp"
#include "regseq/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace regseq;

std::string f17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---- series commands ----------------------------------------------------

struct SeriesOptions {
    std::string seq;
    std::uint64_t x_max = 0;
    bool json_out = false;
    bool normalize_sqrt = false;
};

seq::SequenceId parse_seq(const std::string& name) {
    if (name == "tm") return seq::SequenceId::thue_morse();
    if (name == "pf") return seq::SequenceId::paperfolding();
    if (name == "rs") return seq::SequenceId::rudin_shapiro();
    if (name == "eta") return seq::SequenceId::eta();
    if (name.rfind("sign:", 0) == 0)
        return seq::SequenceId::sign(static_cast<unsigned>(std::stoul(name.substr(5))));
    throw CLI::ValidationError("--seq", "unknown sequence '" + name +
                                            "' (expected tm, pf, rs, eta, or sign:N)");
}

void emit_series(const SeriesOptions& opt,
                 const std::function<void(const std::function<void(std::uint64_t,
                                                                   const exact::Rational&)>&)>& run) {
    const auto value_float = [&](std::uint64_t x, const exact::Rational& v) {
        double f = v.to_double();
        if (opt.normalize_sqrt) f = x == 0 ? 0.0 : f / std::sqrt(static_cast<double>(x));
        return f;
    };
    if (opt.json_out) {
        json rows = json::array();
        run([&](std::uint64_t x, const exact::Rational& v) {
            rows.push_back({{"x", x},
                            {"value_num", v.num().get_str()},
                            {"value_den", v.den().get_str()},
                            {"value_float", value_float(x, v)}});
        });
        std::cout << rows.dump() << "\n";
        return;
    }
    std::cout << "x,value_num,value_den,value_float\n";
    run([&](std::uint64_t x, const exact::Rational& v) {
        std::cout << x << "," << v.num().get_str() << "," << v.den().get_str() << ","
                  << f17(value_float(x, v)) << "\n";
    });
}

void run_sum(const SeriesOptions& opt) {
    if (opt.seq == "abs-eta") {
        const seq::EtaTable t(opt.x_max);
        const mpz_class den(std::int64_t{3} << t.exp2());
        emit_series(opt, [&](const auto& emit) {
            std::int64_t acc = 0;
            for (std::uint64_t x = 0; x <= opt.x_max; ++x) {
                acc += std::abs(std::int64_t{t.scaled(x)});
                emit(x, exact::Rational(mpz_class(acc), den));
            }
        });
        return;
    }
    if (opt.seq == "eta") {
        const seq::EtaTable t(opt.x_max);
        const mpz_class den(std::int64_t{3} << t.exp2());
        emit_series(opt, [&](const auto& emit) {
            std::int64_t acc = 0;
            for (std::uint64_t x = 0; x <= opt.x_max; ++x) {
                acc += t.scaled(x);
                emit(x, exact::Rational(mpz_class(acc), den));
            }
        });
        return;
    }
    const seq::SequenceId id = parse_seq(opt.seq);
    emit_series(opt, [&](const auto& emit) {
        long long acc = 0;
        for (std::uint64_t x = 0; x <= opt.x_max; ++x) {
            acc += seq::automatic_value(id, x);
            emit(x, exact::Rational(static_cast<long>(acc)));
        }
    });
}

void run_twist(const SeriesOptions& opt) {
    const seq::SequenceId id = parse_seq(opt.seq);
    emit_series(opt, [&](const auto& emit) { seq::twisted_sum_series(id, opt.x_max, emit); });
}

// ---- table commands -----------------------------------------------------

struct TableOptions {
    unsigned n_min = 1, n_max = 0;
    unsigned threads = 0;
    bool budget_override = false;
    bool json_out = false;
    bool timings = false;
};

void run_lower_table(const TableOptions& opt) {
    if (opt.n_min < 1 || opt.n_min > opt.n_max)
        throw CLI::ValidationError("--n-min", "need 1 <= n-min <= n-max");
    if (opt.n_max > 25)
        throw CLI::ValidationError("--n-max", "levels above 25 are unsupported");
    if (opt.n_max > 15 && !opt.budget_override)
        throw CLI::ValidationError("--n-max",
                                   "levels above 15 need --budget-override (up to 25)");
    json rows = json::array();
    if (!opt.json_out)
        std::cout << "n,statistic_exact,statistic_float,log_value,dominant_ok,rho_gt_2,wall_ms\n";
    for (unsigned n = opt.n_min; n <= opt.n_max; ++n) {
        const bounds::LowerRow row = bounds::lower_bound_row(n, opt.threads);
        const exact::Rational mid = (row.rho_lo + row.rho_hi) * exact::Rational(1, 2);
        const std::int64_t wall = opt.timings ? row.wall_ms : 0;
        if (opt.json_out) {
            rows.push_back({{"n", n},
                            {"statistic_exact", mid.to_string()},
                            {"statistic_float", row.rho},
                            {"log_value", row.log_value},
                            {"dominant_ok", row.dominant_ok},
                            {"rho_gt_2", row.rho_gt_2},
                            {"wall_ms", wall}});
        } else {
            std::cout << n << "," << mid.to_string() << "," << f17(row.rho) << ","
                      << f17(row.log_value) << "," << (row.dominant_ok ? 1 : 0) << ","
                      << (row.rho_gt_2 ? 1 : 0) << "," << wall << "\n";
        }
    }
    if (opt.json_out) std::cout << rows.dump() << "\n";
}

void run_upper_table(const TableOptions& opt) {
    if (opt.n_min < 1 || opt.n_min > opt.n_max)
        throw CLI::ValidationError("--n-min", "need 1 <= n-min <= n-max");
    if (opt.n_max > 30)
        throw CLI::ValidationError("--n-max", "levels above 30 are unsupported");
    if (opt.n_max > 24 && !opt.budget_override)
        throw CLI::ValidationError("--n-max",
                                   "levels above 24 need --budget-override (up to 30)");
    json rows = json::array();
    if (!opt.json_out) std::cout << "n,norm_num,norm_exp2,norm_float,log_value,wall_ms\n";
    for (unsigned n = opt.n_min; n <= opt.n_max; ++n) {
        const bounds::UpperRow row = bounds::rn_abs_norm(n, opt.threads);
        const exact::Rational norm = row.norm.to_rational();
        const std::int64_t wall = opt.timings ? row.wall_ms : 0;
        if (opt.json_out) {
            rows.push_back({{"n", n},
                            {"norm_num", norm.num().get_str()},
                            {"norm_exp2", row.norm.exp2()},
                            {"norm_float", row.norm_float},
                            {"log_value", row.log_value},
                            {"wall_ms", wall}});
        } else {
            std::cout << n << "," << norm.num().get_str() << "," << row.norm.exp2() << ","
                      << f17(row.norm_float) << "," << f17(row.log_value) << "," << wall
                      << "\n";
        }
    }
    if (opt.json_out) std::cout << rows.dump() << "\n";
}

// ---- exponent / dims / validate ------------------------------------------

struct ExponentOptions {
    std::string rep_file;
    std::string seq;
    unsigned lift = 0;
    unsigned jsr_depth = 1;
    bool json_out = false;
};

linrep::LinearRep exponent_rep(const ExponentOptions& opt) {
    std::optional<linrep::LinearRep> rep;
    if (!opt.rep_file.empty()) {
        rep = linrep::load_rep(opt.rep_file);
    } else if (opt.seq == "eta") {
        rep = linrep::rep_eta();
    } else if (opt.seq == "tmeta") {
        rep = linrep::rep_t_eta();
    } else if (opt.seq == "eta2") {
        rep = linrep::rep_eta_squared();
    } else if (opt.seq == "one") {
        rep = linrep::rep_one(2);
    } else {
        throw CLI::ValidationError("--seq", "expected eta, tmeta, eta2, one, or --rep FILE");
    }
    if (opt.lift > 0) rep = linrep::power_lift(*rep, opt.lift);
    return *rep;
}

void run_exponent(const ExponentOptions& opt) {
    const linrep::LinearRep rep = exponent_rep(opt);
    const auto [exponent, report] = spectral::dumas_exponent(rep, opt.jsr_depth);
    if (opt.json_out) {
        json cp = json::array();
        for (const auto& c : report.characteristic.coeffs()) cp.push_back(c.to_string());
        json j{{"exponent", exponent},
               {"rho", report.rho},
               {"unique_dominant", report.unique_dominant},
               {"algebraic_mult", report.algebraic_mult},
               {"geometric_mult", report.geometric_mult},
               {"jsr_lower", report.jsr_lower},
               {"jsr_upper", report.jsr_upper},
               {"dumas_applicable", report.dumas_applicable},
               {"char_poly", std::move(cp)}};
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "exponent,rho,unique_dominant,algebraic_mult,geometric_mult,"
                 "jsr_lower,jsr_upper,dumas_applicable\n";
    std::cout << f17(exponent) << "," << f17(report.rho) << ","
              << (report.unique_dominant ? 1 : 0) << "," << report.algebraic_mult << ","
              << report.geometric_mult << "," << f17(report.jsr_lower) << ","
              << f17(report.jsr_upper) << "," << (report.dumas_applicable ? 1 : 0) << "\n";
}

void run_dims(std::uint64_t n_trunc, bool json_out) {
    const bounds::CorrelationDimensionReport d2 = bounds::correlation_dimension_report();
    const bounds::InformationDimension d1 = bounds::information_dimension(n_trunc);
    if (json_out) {
        json j{{"correlation_dimension",
                {{"value", d2.value},
                 {"closed_form", d2.closed_form},
                 {"empirical", d2.empirical}}},
               {"information_dimension",
                {{"estimate", d1.estimate},
                 {"tail_bound", d1.tail_bound},
                 {"n_trunc", n_trunc}}}};
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "quantity,value,tail_bound\n";
    std::cout << "D2," << f17(d2.value) << ",\n";
    std::cout << "D1," << f17(d1.estimate) << "," << f17(d1.tail_bound) << "\n";
}

int run_validate(const std::string& rep_file, bool json_out) {
    linrep::ValidationReport report;
    std::string error;
    std::optional<linrep::LinearRep> rep;
    try {
        rep = linrep::load_rep(rep_file);
        report = linrep::validate(*rep);
    } catch (const std::exception& e) {
        error = e.what();
    }
    if (json_out) {
        json j{{"shapes_ok", report.shapes_ok},
               {"leading_zero_invariant", report.leading_zero_invariant}};
        if (rep) {
            j["radix"] = rep->radix();
            j["dim"] = rep->dim();
        }
        if (!report.detail.empty()) j["detail"] = report.detail;
        if (!error.empty()) j["error"] = error;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "field,value\n";
        std::cout << "shapes_ok," << (report.shapes_ok ? 1 : 0) << "\n";
        std::cout << "leading_zero_invariant," << (report.leading_zero_invariant ? 1 : 0)
                  << "\n";
        if (rep) {
            std::cout << "radix," << rep->radix() << "\n";
            std::cout << "dim," << rep->dim() << "\n";
        }
    }
    if (!error.empty()) {
        std::cerr << "regseq: " << error << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Thue-Morse autocorrelation toolkit: eta values, linear-"
                 "representation algebra, growth-exponent tables, and Renyi dimensions"};
    app.require_subcommand(1);

    // eta
    std::uint64_t eta_m = 0;
    bool eta_json = false;
    auto* c_eta = app.add_subcommand("eta", "Exact autocorrelation value eta(m)");
    c_eta->add_option("--m", eta_m, "Index m")->required();
    c_eta->add_flag("--json", eta_json, "JSON output");

    // sum
    SeriesOptions sum_opt;
    auto* c_sum = app.add_subcommand("sum", "Running partial sums of a built-in sequence");
    c_sum->add_option("--seq", sum_opt.seq, "One of eta, abs-eta, tm, pf, rs")->required();
    c_sum->add_option("--x-max", sum_opt.x_max, "Last index (<= 2^24)")->required();
    c_sum->add_flag("--json", sum_opt.json_out, "JSON output");

    // twist
    SeriesOptions twist_opt;
    std::string normalize;
    auto* c_twist = app.add_subcommand(
        "twist", "Running partial sums of f(m)*eta(m) for a +/-1 twist f (or eta itself)");
    c_twist->add_option("--seq", twist_opt.seq, "Twist: tm, pf, rs, eta, or sign:N")
        ->required();
    c_twist->add_option("--x-max", twist_opt.x_max, "Last index (<= 2^24)")->required();
    c_twist->add_option("--normalize", normalize,
                        "sqrt: divide the float column by sqrt(x)");
    c_twist->add_flag("--json", twist_opt.json_out, "JSON output");

    // exponent
    ExponentOptions exp_opt;
    auto* c_exp = app.add_subcommand(
        "exponent", "Growth exponent log_k rho of a linear representation's sum matrix");
    c_exp->add_option("--rep", exp_opt.rep_file, "Rep file (JSON)");
    c_exp->add_option("--seq", exp_opt.seq, "Built-in: eta, tmeta, eta2, one");
    c_exp->add_option("--lift", exp_opt.lift, "Power-lift the representation to radix k^N");
    c_exp->add_option("--jsr-depth", exp_opt.jsr_depth, "Product depth for JSR bounds")
        ->default_val(1);
    c_exp->add_flag("--json", exp_opt.json_out, "JSON output");

    // lower-table
    TableOptions lo_opt;
    auto* c_lo = app.add_subcommand("lower-table",
                                    "Lower-bound exponent rows log_{2^n} rho(A)");
    c_lo->add_option("--n-min", lo_opt.n_min, "First level")->default_val(1);
    c_lo->add_option("--n-max", lo_opt.n_max, "Last level")->required();
    c_lo->add_option("--threads", lo_opt.threads, "Worker count (0 = hardware)");
    c_lo->add_flag("--budget-override", lo_opt.budget_override, "Allow levels 16..25");
    c_lo->add_flag("--timings", lo_opt.timings, "Emit measured wall_ms (non-deterministic)");
    c_lo->add_flag("--json", lo_opt.json_out, "JSON output");

    // upper-table
    TableOptions up_opt;
    auto* c_up = app.add_subcommand("upper-table",
                                    "Upper-bound rows ||R_n||_abs and log_{2^n} of it");
    c_up->add_option("--n-min", up_opt.n_min, "First level")->default_val(1);
    c_up->add_option("--n-max", up_opt.n_max, "Last level")->required();
    c_up->add_option("--threads", up_opt.threads, "Worker count (0 = hardware)");
    c_up->add_flag("--budget-override", up_opt.budget_override, "Allow levels 25..30");
    c_up->add_flag("--timings", up_opt.timings, "Emit measured wall_ms (non-deterministic)");
    c_up->add_flag("--json", up_opt.json_out, "JSON output");

    // dims
    std::uint64_t n_trunc = 1000000;
    bool dims_json = false;
    auto* c_dims = app.add_subcommand("dims", "Correlation and information dimensions");
    c_dims->add_option("--n-trunc", n_trunc, "Dirichlet-series truncation")->default_val(1000000);
    c_dims->add_flag("--json", dims_json, "JSON output");

    // validate-rep
    std::string validate_file;
    bool validate_json = false;
    auto* c_val = app.add_subcommand("validate-rep", "Validate a rep file");
    c_val->add_option("--rep", validate_file, "Rep file (JSON)")->required();
    c_val->add_flag("--json", validate_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (*c_eta) {
            const exact::Rational v = seq::eta(eta_m);
            if (eta_json)
                std::cout << json{{"m", eta_m},
                                  {"value", v.to_string()},
                                  {"float", v.to_double()}}
                                 .dump()
                          << "\n";
            else
                std::cout << v.to_string() << "\n";
        } else if (*c_sum) {
            run_sum(sum_opt);
        } else if (*c_twist) {
            if (!normalize.empty() && normalize != "sqrt")
                throw CLI::ValidationError("--normalize", "only 'sqrt' is supported");
            twist_opt.normalize_sqrt = normalize == "sqrt";
            run_twist(twist_opt);
        } else if (*c_exp) {
            run_exponent(exp_opt);
        } else if (*c_lo) {
            run_lower_table(lo_opt);
        } else if (*c_up) {
            run_upper_table(up_opt);
        } else if (*c_dims) {
            run_dims(n_trunc, dims_json);
        } else if (*c_val) {
            return run_validate(validate_file, validate_json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "regseq: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "regseq: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
