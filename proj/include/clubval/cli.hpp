#pragma once

/// \file cli.hpp
///
/// `clubval` command-line entry point. Subcommands:
///
///   fit       fit a through-origin regression on a CSV and print the report
///   select    rank explanatory-variable subsets (exhaustive or stepwise)
///   apply     value clubs with the two formulae (CSV input or bundled data)
///   premiums  compare model values with actual change-of-control prices
///   plot      FV1 vs FV2 scatter plot as SVG
///
/// Exit codes: 0 success, 1 data error, 2 usage error.
/// The exchange rate comes from --fx-rate, then VALUATE_FX_RATE, then the
/// --config file (key=value), then the 150 yen/euro default.

#include <clubval/bundled_data.hpp>
#include <clubval/dataset.hpp>
#include <clubval/errors.hpp>
#include <clubval/regression.hpp>
#include <clubval/render.hpp>
#include <clubval/selection.hpp>
#include <clubval/valuation.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace clubval {

inline constexpr const char* fx_rate_env = "VALUATE_FX_RATE";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

/// key=value lines; '#' starts a comment; blank lines ignored.
inline std::map<std::string, std::string> parse_config(std::string_view text) {
    std::map<std::string, std::string> out;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = lines[i];
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", i + 1);
        out[std::string(detail::trim(line.substr(0, eq)))] = std::string(detail::trim(line.substr(eq + 1)));
    }
    return out;
}

namespace detail {

inline double parse_setting(const std::string& value, const std::string& source) {
    try {
        return parse_double(value, source, 1);
    } catch (const NonNumeric&) {
        throw Error("invalid numeric value '" + value + "' from " + source);
    }
}

struct CliState {
    double fx_rate = FxRate::default_yen_per_euro;
    double stake = default_stake;
    std::string format;
    std::string out_path;
    std::string config_path;

    std::string input;
    std::string bundled;
    std::string response;
    std::vector<std::string> predictors;
    std::size_t max_size = 2;
    std::string method = "exhaustive";
    double alpha = 0.05;
    double alpha_in = 0.05;
    double alpha_out = 0.10;
    bool verbose = false;
    std::string dataset = "combined";
    std::string scale = "log10";
    bool no_guide = false;
};

inline RenderSpec make_spec(const CliState& s, bool plot) {
    RenderSpec spec;
    const std::string fmt = s.format.empty() ? (plot ? "svg" : "text") : s.format;
    try {
        spec.format = parse_format(fmt);
        spec.scale = parse_scale(s.scale);
    } catch (const InvalidRenderSpec& e) {
        throw UsageError(e.what());
    }
    if (plot && spec.format != Format::Svg) throw UsageError("plot only supports --format svg");
    if (!plot && spec.format == Format::Svg) throw UsageError("--format svg is only valid for plot");
    if (!s.out_path.empty()) spec.output_path = s.out_path;
    return spec;
}

inline std::vector<ClubRecord> load_clubs(const CliState& s) {
    if (!s.input.empty() && !s.bundled.empty()) throw UsageError("use either --input or --bundled");
    if (!s.bundled.empty()) {
        if (s.bundled != "jleague") throw UsageError("unknown bundled dataset '" + s.bundled + "'");
        return bundled_jleague_dataset();
    }
    if (s.input.empty()) throw UsageError("--input or --bundled is required");
    return parse_club_csv(read_text_file(s.input));
}

inline CandidateSet load_candidates(const CliState& s) {
    if (s.input.empty()) throw UsageError("--input is required");
    if (s.response.empty()) throw UsageError("--response is required");
    const auto table = NumericTable::parse(read_text_file(s.input));
    CandidateSet c;
    c.response = {s.response, table.numeric_column(s.response)};
    for (const auto& p : s.predictors) c.predictors.push_back({p, table.numeric_column(p)});
    return c;
}

}  // namespace detail

/// Runs the CLI with `args` (program name excluded).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::CliState s;

    CLI::App app{"Football club firm valuation: regression, selection, valuation and reporting", "clubval"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* fx_opt = app.add_option("--fx-rate", s.fx_rate, "Yen per euro (default 150)");
    auto* stake_opt = app.add_option("--stake", s.stake, "Stake fraction for premiums (default 0.51)");
    auto* format_opt = app.add_option("--format", s.format, "text, csv, md, or svg (plot)");
    app.add_option("--out", s.out_path, "Write output to this file instead of stdout");
    app.add_option("--config", s.config_path, "key=value config file (fx_rate, stake, format)");

    auto* fit = app.add_subcommand("fit", "Fit a through-origin regression on a CSV");
    fit->add_option("--input", s.input, "CSV with a header row")->required();
    fit->add_option("--response", s.response, "Response column")->required();
    fit->add_option("--predictors", s.predictors, "Predictor columns")->required()->delimiter(',');
    fit->add_flag("--verbose", s.verbose, "Also print the centered R^2 diagnostic");

    auto* select = app.add_subcommand("select", "Rank explanatory-variable subsets");
    select->add_option("--input", s.input, "CSV with a header row")->required();
    select->add_option("--response", s.response, "Response column")->required();
    select->add_option("--candidates", s.predictors, "Candidate columns")->required()->delimiter(',');
    select->add_option("--method", s.method, "exhaustive (default) or stepwise")
        ->check(CLI::IsMember({"exhaustive", "stepwise"}));
    select->add_option("--max-size", s.max_size, "Largest subset for exhaustive search");
    select->add_option("--alpha", s.alpha, "Significance level for the all-significant flag");
    select->add_option("--alpha-in", s.alpha_in, "Stepwise entry threshold");
    select->add_option("--alpha-out", s.alpha_out, "Stepwise removal threshold");

    auto* apply = app.add_subcommand("apply", "Value clubs with Formula 1 and Formula 2");
    apply->add_option("--input", s.input, "Club CSV");
    apply->add_option("--bundled", s.bundled, "Bundled dataset (jleague)");

    auto* premiums = app.add_subcommand("premiums", "Model values vs actual transaction prices");
    premiums->add_option("--input", s.input, "Club CSV (default: bundled J.League data)");

    auto* plot = app.add_subcommand("plot", "FV1 vs FV2 scatter plot (SVG)");
    plot->add_option("--dataset", s.dataset, "combined, jleague, or european")
        ->check(CLI::IsMember({"combined", "jleague", "european"}));
    plot->add_option("--input", s.input, "Club CSV replacing the bundled J.League data");
    plot->add_option("--scale", s.scale, "log10 (default) or linear");
    plot->add_flag("--no-guide", s.no_guide, "Omit the FV1 = FV2 guide line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        // settings precedence: flags > env > config file > defaults
        std::map<std::string, std::string> config;
        if (!s.config_path.empty()) config = parse_config(read_text_file(s.config_path));
        if (fx_opt->count() == 0) {
            if (const char* env = std::getenv(fx_rate_env); env && *env) {
                s.fx_rate = detail::parse_setting(env, fx_rate_env);
            } else if (auto it = config.find("fx_rate"); it != config.end()) {
                s.fx_rate = detail::parse_setting(it->second, "config fx_rate");
            }
        }
        if (stake_opt->count() == 0) {
            if (auto it = config.find("stake"); it != config.end()) {
                s.stake = detail::parse_setting(it->second, "config stake");
            }
        }
        if (format_opt->count() == 0) {
            if (auto it = config.find("format"); it != config.end() && !plot->parsed()) s.format = it->second;
        }
        const FxRate fx(s.fx_rate);

        if (fit->parsed()) {
            const auto spec = detail::make_spec(s, false);
            const auto cands = detail::load_candidates(s);
            DesignMatrix x;
            for (const auto& p : cands.predictors) x.add_column(p.variable, p.values);
            const auto result = fit_through_origin(x, cands.response);
            std::string doc = render_regression_table(result, spec);
            if (s.verbose && spec.format != Format::Csv) {
                doc += "\nCentered R Square (diagnostic): " + format_fixed(result.centered_r_squared, 4) + "\n";
            }
            write_document(doc, spec, out);
        } else if (select->parsed()) {
            const auto spec = detail::make_spec(s, false);
            const auto cands = detail::load_candidates(s);
            const auto report = s.method == "stepwise" ? stepwise(cands, s.alpha_in, s.alpha_out)
                                                       : exhaustive_subsets(cands, s.max_size, s.alpha);
            write_document(render_selection_report(report, spec), spec, out);
        } else if (apply->parsed()) {
            const auto spec = detail::make_spec(s, false);
            const auto clubs = detail::load_clubs(s);
            if (clubs.empty()) throw EmptyInput("no clubs in input");
            const auto results = valuate_all(clubs, formula_one(), formula_two());
            const auto agg = aggregate(results, clubs);
            write_document(render_valuation_table(results, clubs, agg, spec), spec, out);
        } else if (premiums->parsed()) {
            const auto spec = detail::make_spec(s, false);
            const auto clubs = s.input.empty() ? bundled_jleague_dataset() : parse_club_csv(read_text_file(s.input));
            const auto results = valuate_all(clubs, formula_one(), formula_two());
            const auto summary = premium_ranges(bundled_transactions(), results, fx, s.stake);
            write_document(render_premium_summary(summary, fx, s.stake, spec), spec, out);
        } else if (plot->parsed()) {
            const auto spec = detail::make_spec(s, true);
            std::vector<ScatterSeries> series;
            if (s.dataset != "european") {
                const auto clubs =
                    s.input.empty() ? bundled_jleague_dataset() : parse_club_csv(read_text_file(s.input));
                ScatterSeries j{"J.League clubs", {}};
                for (const auto& r : valuate_all(clubs, formula_one(), formula_two())) {
                    j.points.push_back({r.fv1, r.fv2, r.club});
                }
                series.push_back(std::move(j));
            }
            if (s.dataset != "jleague") {
                ScatterSeries e{"European clubs", {}};
                for (const auto& r : bundled_european_reference()) e.points.push_back({r.fv1, r.fv2, r.club});
                series.push_back(std::move(e));
            }
            PlotOptions opts;
            opts.identity_guide = !s.no_guide;
            write_document(emit_scatter(series, spec, opts), spec, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace clubval
