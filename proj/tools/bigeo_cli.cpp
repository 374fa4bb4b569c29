// bigeo: command-line front end for the bigeometric calculus library.
//
//   bigeo interp --input nodes.csv [--grid A:B:STEP | --at X,...] [--output PREFIX]
//   bigeo deriv  (--point A --f FA --fprime FP | --function NAME --at X,...)
//   bigeo seq    --gen EXPR --m INT [--order INT] [--p REAL|inf] [--N INT] [--mode NAME]
//   bigeo matrix --matrix A.csv --sequence x.csv --m INT --i INT
//
// Exit status: 0 on success, otherwise the code of the error category
// (see exit_code_for).

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bigeo/bigeo.hpp"
#include "bigeo/io.hpp"

namespace {

using bigeo::geo_real;

int exit_code_for(bigeo::error_kind kind) {
    switch (kind) {
    case bigeo::error_kind::parse: return 2;
    case bigeo::error_kind::domain:
    case bigeo::error_kind::division_by_geometric_zero:
    case bigeo::error_kind::evaluation: return 3;
    case bigeo::error_kind::index_out_of_range: return 4;
    case bigeo::error_kind::dimension_mismatch: return 5;
    case bigeo::error_kind::degenerate_nodes: return 6;
    case bigeo::error_kind::invalid_p: return 7;
    }
    return 1;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw bigeo::parse_error("cannot write '" + path + "'");
    return out;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::string_view rest = text;
    for (auto field : bigeo::io::detail::split(rest)) out.push_back(bigeo::io::parse_real(field));
    return out;
}

/// A:B:STEP, endpoints inclusive. Points are A + i*STEP to avoid drift.
std::vector<double> parse_grid(const std::string& text) {
    const auto parts = bigeo::io::detail::split(text, ':');
    if (parts.size() != 3) throw bigeo::parse_error("grid must look like A:B:STEP");
    const double a = bigeo::io::parse_real(parts[0]);
    const double b = bigeo::io::parse_real(parts[1]);
    const double step = bigeo::io::parse_real(parts[2]);
    if (!(step > 0) || b < a) throw bigeo::parse_error("grid needs A <= B and STEP > 0");
    std::vector<double> out;
    for (std::size_t i = 0;; ++i) {
        const double x = a + static_cast<double>(i) * step;
        if (x > b + 1e-9 * step) break;
        out.push_back(x);
    }
    return out;
}

double parse_p(const std::string& text) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    return bigeo::io::parse_real(text);
}

struct format_options {
    bool fixed_view = false;

    std::string operator()(double v) const {
        return fixed_view ? bigeo::io::format_fixed(v, 4) : bigeo::io::format_sig(v, 10);
    }
};

// ---------------------------------------------------------------- interp

struct interp_options {
    std::string input;
    std::string output;
    std::string grid;
    std::string at;
    std::string function;
    double tolerance = bigeo::default_tolerance;
    bool fixed_view = false;
};

int run_interp(const interp_options& opt) {
    const format_options fmt{opt.fixed_view};
    std::optional<bigeo::real_function> fn;
    if (!opt.function.empty()) {
        fn = bigeo::builtin::lookup(opt.function);
        if (!fn) throw bigeo::parse_error("unknown function '" + opt.function + "'");
    }
    const auto records = bigeo::io::read_node_file(opt.input);
    const auto data = bigeo::hermite_data::from_records(records, fn, opt.tolerance);
    const auto table = bigeo::build_divided_diff_table(data);
    const auto poly = bigeo::newton_coeffs(table);

    std::vector<double> xs;
    if (!opt.grid.empty()) xs = parse_grid(opt.grid);
    if (!opt.at.empty()) {
        const auto more = parse_list(opt.at);
        xs.insert(xs.end(), more.begin(), more.end());
    }
    std::vector<geo_real> ps;
    std::vector<double> ref;
    for (double x : xs) {
        ps.push_back(bigeo::eval_newton(poly, geo_real::from_positive(x)));
        if (fn) ref.push_back(fn->eval(x));
    }

    std::cout << "divided-difference table (" << data.size() << " nodes)\n";
    bigeo::io::write_table_text(std::cout, table, opt.fixed_view);
    std::cout << "\nNewton coefficients (geometric degree " << poly.geometric_degree() << ")\n";
    std::cout << "k,center,coefficient,log_coefficient\n";
    for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
        std::cout << k << ',' << (k == 0 ? std::string("-") : fmt(poly.centers[k - 1].to_positive())) << ','
                  << fmt(poly.coeffs[k].to_positive()) << ',' << fmt(poly.coeffs[k].log_value()) << '\n';
    }

    if (opt.output.empty()) {
        if (!xs.empty()) {
            std::cout << "\nvalues\n";
            bigeo::io::write_values_csv(std::cout, xs, ps, fn ? &ref : nullptr);
        }
        return 0;
    }
    {
        auto out = open_output(opt.output + ".table.csv");
        bigeo::io::write_table_csv(out, table);
    }
    {
        auto out = open_output(opt.output + ".coeffs.csv");
        out << "k,center,coefficient,log_coefficient\n";
        for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
            out << k << ',' << (k == 0 ? std::string() : bigeo::io::format_exact(poly.centers[k - 1].to_positive()))
                << ',' << bigeo::io::format_exact(poly.coeffs[k].to_positive()) << ','
                << bigeo::io::format_exact(poly.coeffs[k].log_value()) << '\n';
        }
    }
    {
        auto out = open_output(opt.output + ".values.csv");
        bigeo::io::write_values_csv(out, xs, ps, fn ? &ref : nullptr);
    }
    std::cout << "\nwrote " << opt.output << ".table.csv, " << opt.output << ".coeffs.csv, " << opt.output
              << ".values.csv (" << xs.size() << " points)\n";
    return 0;
}

// ---------------------------------------------------------------- deriv

struct deriv_options {
    std::optional<double> point;
    std::optional<double> f;
    std::optional<double> fprime;
    std::string function;
    std::string at;
    bool numeric = false;
    std::optional<double> h;
    bool fixed_view = false;
};

void print_derivative(double x, geo_real d, const format_options& fmt) {
    std::cout << "x = " << fmt(x) << "  D_G f = " << fmt(d.to_positive()) << "  log D_G f = " << fmt(d.log_value())
              << '\n';
}

int run_deriv(const deriv_options& opt) {
    const format_options fmt{opt.fixed_view};
    if (opt.point) {
        if (!opt.f || !opt.fprime) throw bigeo::parse_error("--point needs --f and --fprime");
        print_derivative(*opt.point, bigeo::dg_from_classical(*opt.point, *opt.f, *opt.fprime), fmt);
        return 0;
    }
    if (opt.function.empty() || opt.at.empty())
        throw bigeo::parse_error("give either --point/--f/--fprime or --function with --at");
    const auto fn = bigeo::builtin::lookup(opt.function);
    if (!fn) throw bigeo::parse_error("unknown function '" + opt.function + "'");
    for (double x : parse_list(opt.at)) {
        const geo_real d = opt.numeric ? bigeo::dg_numeric(*fn, x, opt.h.value_or(bigeo::default_dg_step<double>()))
                                       : bigeo::dg(*fn, x);
        print_derivative(x, d, fmt);
    }
    return 0;
}

// ---------------------------------------------------------------- seq

struct seq_options {
    std::string generator;
    int m = 1;
    std::optional<int> order;
    std::string p = "1";
    std::size_t N = bigeo::default_truncation;
    std::string mode = "norm";
    std::string output;
    bool fixed_view = false;
};

int run_seq(const seq_options& opt) {
    const format_options fmt{opt.fixed_view};
    if (opt.m < 1) throw bigeo::domain_error("--m must be at least 1");
    const int order = opt.order.value_or(opt.m);
    if (order < 1) throw bigeo::domain_error("--order must be at least 1");
    const double p = parse_p(opt.p);
    const auto expr = bigeo::generator_expression::parse(opt.generator);
    const auto x = bigeo::geo_sequence::from_generator(expr.as_generator(opt.m),
                                                       opt.N + static_cast<std::size_t>(order) + 1);

    std::ostringstream csv;
    std::cout << std::left;
    auto row = [](const std::string& key, const std::string& value) {
        std::cout << std::setw(16) << key << value << '\n';
    };
    row("mode", opt.mode);
    row("generator", expr.text());
    row("m", std::to_string(opt.m));
    row("order", std::to_string(order));
    row("N", std::to_string(opt.N));

    if (opt.mode == "norm") {
        const auto r = bigeo::norm_p(x, static_cast<unsigned>(order), p, opt.N);
        row("p", std::isinf(p) ? "inf" : fmt(p));
        row("head", fmt(r.head_term.to_positive()) + "  (log " + fmt(r.head_term.log_value()) + ")");
        row("tail", fmt(r.tail_term.to_positive()) + "  (log " + fmt(r.tail_term.log_value()) + ")");
        row("total", fmt(r.total.to_positive()) + "  (log " + fmt(r.total.log_value()) + ")");
        csv << "quantity,value,log_value\n";
        for (auto [name, v] : {std::pair{"head", r.head_term}, {"tail", r.tail_term}, {"total", r.total}})
            csv << name << ',' << bigeo::io::format_exact(v.to_positive()) << ','
                << bigeo::io::format_exact(v.log_value()) << '\n';
    } else if (opt.mode == "member" || opt.mode == "dual") {
        const auto d = opt.mode == "member" ? bigeo::membership_diagnostic(x, static_cast<unsigned>(order), p, opt.N)
                                            : bigeo::dual_partial_sum(x, static_cast<unsigned>(order), opt.N);
        if (opt.mode == "member") row("p", std::isinf(p) ? "inf" : fmt(p));
        row("final log-sum", fmt(d.partial_log_sums.back().second));
        row("fitted slope", fmt(d.fitted_slope));
        row("classification", std::string(bigeo::to_string(d.classification)));
        csv << "n,partial_log_sum\n";
        for (const auto& [n, s] : d.partial_log_sums) csv << n << ',' << bigeo::io::format_exact(s) << '\n';
    } else if (opt.mode == "lemma-diag") {
        const auto rows = bigeo::lemma_diag_sequences(x, static_cast<unsigned>(order), opt.N);
        double max_d = 0, max_t = 0;
        csv << "k,scaled_difference_log,scaled_term_log\n";
        for (const auto& r : rows) {
            max_d = std::max(max_d, r.scaled_difference.log_value());
            max_t = std::max(max_t, r.scaled_term.log_value());
            csv << r.k << ',' << bigeo::io::format_exact(r.scaled_difference.log_value()) << ','
                << bigeo::io::format_exact(r.scaled_term.log_value()) << '\n';
        }
        row("max diff term", fmt(std::exp(max_d)) + "  (log " + fmt(max_d) + ")");
        row("max scaled x", fmt(std::exp(max_t)) + "  (log " + fmt(max_t) + ")");
    } else {
        throw bigeo::parse_error("unknown mode '" + opt.mode + "' (norm, member, dual, lemma-diag)");
    }
    std::cout << std::right;

    if (opt.output.empty()) {
        std::cout << '\n' << csv.str();
    } else {
        auto out = open_output(opt.output);
        out << csv.str();
        std::cout << "wrote " << opt.output << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- matrix

struct matrix_options {
    std::string matrix;
    std::string sequence;
    int m = 1;
    std::size_t i = 1;
    double tolerance = 1e-10;
    bool fixed_view = false;
};

int run_matrix(const matrix_options& opt) {
    const format_options fmt{opt.fixed_view};
    if (opt.m < 1) throw bigeo::domain_error("--m must be at least 1");
    auto matrix_in = bigeo::io::open_input(opt.matrix);
    const auto A = bigeo::io::parse_matrix_csv(matrix_in);
    auto seq_in = bigeo::io::open_input(opt.sequence);
    const auto x = bigeo::io::parse_sequence(seq_in);
    if (x.size() < A.cols())
        throw bigeo::dimension_mismatch("sequence has " + std::to_string(x.size()) + " terms, matrix has " +
                                        std::to_string(A.cols()) + " columns");

    const auto m = static_cast<unsigned>(opt.m);
    const auto B = bigeo::build_B(A, m);
    std::cout << "B (" << B.rows() << "x" << B.cols() << ", order " << m << ")\n";
    for (std::size_t r = 1; r <= B.rows(); ++r) {
        for (std::size_t k = 1; k <= B.cols(); ++k) std::cout << (k > 1 ? "," : "") << fmt(B(r, k).to_positive());
        std::cout << '\n';
    }
    std::cout << "\nrow sums of |a_nk|_G\n";
    for (std::size_t r = 1; r <= A.rows(); ++r)
        std::cout << r << ',' << fmt(bigeo::row_abs_sum(A, r, A.cols()).to_positive()) << '\n';

    const auto pair = bigeo::transform_consistency(A, m, x, opt.i);
    std::cout << "\nrow i = " << opt.i << '\n'
              << "via transform  " << fmt(pair.via_transform.to_positive()) << "  (log "
              << bigeo::io::format_sig(pair.via_transform.log_value(), 17) << ")\n"
              << "via B          " << fmt(pair.via_B.to_positive()) << "  (log "
              << bigeo::io::format_sig(pair.via_B.log_value(), 17) << ")\n"
              << "log gap        " << bigeo::io::format_sig(pair.log_gap(), 3) << '\n'
              << "consistent     " << (pair.log_gap() < opt.tolerance ? "yes" : "no") << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bigeometric calculus: Hermite interpolation, derivatives, sequence-space diagnostics"};
    app.require_subcommand(1);

    interp_options io;
    auto* interp = app.add_subcommand("interp", "Bigeometric Hermite interpolation of a node file");
    interp->add_option("--input", io.input, "Node file (CSV x,f[,fprime|dgf] or JSON)")->required();
    interp->add_option("--output", io.output, "Write PREFIX.table.csv, PREFIX.coeffs.csv, PREFIX.values.csv");
    interp->add_option("--grid", io.grid, "Evaluation grid A:B:STEP");
    interp->add_option("--at", io.at, "Evaluation points X[,X...]");
    interp->add_option("--function", io.function,
                       "Builtin function (exp, ln, sin) for missing derivatives and a reference column");
    interp->add_option("--tolerance", io.tolerance, "Minimum log-domain separation between nodes");
    interp->add_flag("--paper-view", io.fixed_view, "Print 4-decimal values");

    deriv_options dop;
    auto* deriv = app.add_subcommand("deriv", "Bigeometric derivative");
    deriv->add_option("--point", dop.point, "Abscissa a");
    deriv->add_option("--f", dop.f, "f(a)");
    deriv->add_option("--fprime", dop.fprime, "Classical derivative f'(a)");
    deriv->add_option("--function", dop.function, "Builtin function: exp, ln, sin");
    deriv->add_option("--at", dop.at, "Points X[,X...] for --function");
    deriv->add_flag("--numeric", dop.numeric, "Use the central-difference estimate");
    deriv->add_option("--step", dop.h, "Step h for --numeric (log-domain)");
    deriv->add_flag("--paper-view", dop.fixed_view, "Print 4-decimal values");

    seq_options sop;
    auto* seq = app.add_subcommand("seq", "Cesaro difference sequence-space diagnostics");
    seq->add_option("--gen", sop.generator, "Term x_k as an expression in k and m, e.g. exp(k^(m-1))")->required();
    seq->add_option("--m", sop.m, "Value of m in the generator (and default difference order)")->required();
    seq->add_option("--order", sop.order, "Difference order (defaults to m)");
    seq->add_option("--p", sop.p, "Exponent p >= 1 or inf");
    seq->add_option("--N", sop.N, "Truncation");
    seq->add_option("--mode", sop.mode, "norm, member, dual or lemma-diag");
    seq->add_option("--output", sop.output, "Write the CSV report here");
    seq->add_flag("--paper-view", sop.fixed_view, "Print 4-decimal values");

    matrix_options mop;
    auto* matrix = app.add_subcommand("matrix", "B-matrix construction and transform consistency");
    matrix->add_option("--matrix", mop.matrix, "Matrix CSV of positive reals")->required();
    matrix->add_option("--sequence", mop.sequence, "Sequence file of positive reals")->required();
    matrix->add_option("--m", mop.m, "Difference order")->required();
    matrix->add_option("--i", mop.i, "Row of B to check")->required();
    matrix->add_option("--tolerance", mop.tolerance, "Log-domain gap regarded as consistent");
    matrix->add_flag("--paper-view", mop.fixed_view, "Print 4-decimal values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (interp->parsed()) return run_interp(io);
        if (deriv->parsed()) return run_deriv(dop);
        if (seq->parsed()) return run_seq(sop);
        if (matrix->parsed()) return run_matrix(mop);
    } catch (const bigeo::error& e) {
        std::cerr << "bigeo: error[" << bigeo::to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return 1;
}
