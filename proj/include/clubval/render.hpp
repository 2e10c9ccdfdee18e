#pragma once

/// \file render.hpp
///
/// Text, CSV and Markdown renderings of regression reports, valuation tables,
/// premium summaries and selection reports, plus SVG scatter plots.
///
/// Values are rounded half away from zero at render time only. Output is a
/// pure function of the inputs, so identical inputs give identical bytes.

#include <clubval/dataset.hpp>
#include <clubval/errors.hpp>
#include <clubval/regression.hpp>
#include <clubval/selection.hpp>
#include <clubval/valuation.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace clubval {

enum class Format { Text, Csv, Markdown, Svg };
enum class Scale { Linear, Log10 };

inline Format parse_format(std::string_view s) {
    if (s == "text" || s == "txt") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "md" || s == "markdown") return Format::Markdown;
    if (s == "svg") return Format::Svg;
    throw InvalidRenderSpec("unknown format '" + std::string(s) + "'");
}

inline Scale parse_scale(std::string_view s) {
    if (s == "linear") return Scale::Linear;
    if (s == "log10" || s == "log") return Scale::Log10;
    throw InvalidRenderSpec("unknown scale '" + std::string(s) + "'");
}

struct RenderSpec {
    Format format = Format::Text;
    Scale scale = Scale::Log10;
    std::map<std::string, int> decimal_places;  // per column overrides
    std::optional<std::filesystem::path> output_path;

    int places(const std::string& column, int fallback) const {
        const auto it = decimal_places.find(column);
        const int p = it == decimal_places.end() ? fallback : it->second;
        if (p < 0) throw InvalidRenderSpec("negative decimal places for '" + column + "'");
        return p;
    }
};

// ---------------------------------------------------------------------------
// Number formatting

/// Rounds to `places` decimals, ties away from zero.
inline double round_half_away(double v, int places) {
    const double scale = std::pow(10.0, places);
    return std::round(v * scale) / scale;
}

inline std::string format_fixed(double v, int places) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    double r = round_half_away(v, places);
    if (r == 0.0) r = 0.0;  // no "-0.00"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, r);
    return buf;
}

/// Scientific notation with a two-digit exponent, e.g. 1.69E-06.
inline std::string format_sci(double v, int places = 2) {
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    if (v == 0.0) return format_fixed(0.0, places) + "E+00";
    const bool negative = v < 0.0;
    const double a = std::fabs(v);
    int exponent = static_cast<int>(std::floor(std::log10(a)));
    double mantissa = round_half_away(a / std::pow(10.0, exponent), places);
    if (mantissa >= 10.0) {
        mantissa /= 10.0;
        ++exponent;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.*fE%c%02d", negative ? "-" : "", places, mantissa,
                  exponent < 0 ? '-' : '+', std::abs(exponent));
    return buf;
}

/// Integer with thousands separators: 807734 -> "807,734".
inline std::string format_grouped(double v) {
    const double r = round_half_away(v, 0);
    std::string digits = format_fixed(std::fabs(r), 0);
    std::string out;
    const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    out += digits.substr(0, lead);
    for (std::size_t i = lead; i < digits.size(); i += 3) out += "," + digits.substr(i, 3);
    return r < 0 ? "-" + out : out;
}

inline std::string format_percent(double pct, int places = 1) { return format_fixed(pct, places) + "%"; }

// ---------------------------------------------------------------------------
// Generic table

namespace detail {

struct Table {
    std::vector<std::string> headers;
    std::vector<bool> right_align;
    std::vector<std::vector<std::string>> rows;

    std::string render(Format f) const {
        std::ostringstream os;
        switch (f) {
            case Format::Csv: {
                auto line = [&](const std::vector<std::string>& cells) {
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i) os << ',';
                        os << quote_field(cells[i]);
                    }
                    os << '\n';
                };
                line(headers);
                for (const auto& r : rows) line(r);
                break;
            }
            case Format::Markdown: {
                auto line = [&](const std::vector<std::string>& cells) {
                    os << '|';
                    for (const auto& c : cells) os << ' ' << c << " |";
                    os << '\n';
                };
                line(headers);
                os << '|';
                for (std::size_t i = 0; i < headers.size(); ++i) os << (right_align[i] ? " ---: |" : " --- |");
                os << '\n';
                for (const auto& r : rows) line(r);
                break;
            }
            case Format::Text: {
                std::vector<std::size_t> width(headers.size());
                auto measure = [&](const std::vector<std::string>& cells) {
                    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], display_width(cells[i]));
                };
                measure(headers);
                for (const auto& r : rows) measure(r);
                auto line = [&](const std::vector<std::string>& cells) {
                    std::string s;
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i) s += "  ";
                        const std::string pad(width[i] - display_width(cells[i]), ' ');
                        s += right_align[i] ? pad + cells[i] : cells[i] + pad;
                    }
                    while (!s.empty() && s.back() == ' ') s.pop_back();
                    os << s << '\n';
                };
                line(headers);
                std::size_t total = 0;
                for (auto w : width) total += w;
                os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
                for (const auto& r : rows) line(r);
                break;
            }
            case Format::Svg:
                throw InvalidRenderSpec("svg output is only available for plots");
        }
        return os.str();
    }

    /// Code points, so "€" pads like one column.
    static std::size_t display_width(std::string_view s) {
        std::size_t n = 0;
        for (unsigned char c : s) n += (c & 0xC0) != 0x80;
        return n;
    }
};

inline void require_table_format(const RenderSpec& spec) {
    if (spec.format == Format::Svg) throw InvalidRenderSpec("svg output is only available for plots");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Regression report

/// Statistics block followed by one row per coefficient. CSV output is a long
/// `quantity,variable,value` table.
inline std::string render_regression_table(const RegressionFit& fit, const RenderSpec& spec) {
    detail::require_table_format(spec);
    const int d = spec.places("coefficient", 4);
    const int dp = spec.places("p_value", 2);

    if (spec.format == Format::Csv) {
        detail::Table t{{"quantity", "variable", "value"}, {false, false, true}, {}};
        auto stat = [&](const char* q, std::string v) { t.rows.push_back({q, "", std::move(v)}); };
        stat("multiple_r", format_fixed(fit.multiple_r, d));
        stat("r_squared", format_fixed(fit.r_squared, d));
        stat("adjusted_r_squared", format_fixed(fit.adjusted_r_squared, d));
        stat("standard_error", format_fixed(fit.standard_error_of_regression, d));
        stat("n", std::to_string(fit.n));
        stat("dof", std::to_string(fit.dof));
        t.rows.push_back({"coefficient", "intercept", "0"});
        for (const auto& c : fit.coefficients) {
            t.rows.push_back({"coefficient", c.variable, format_fixed(c.estimate, d)});
            t.rows.push_back({"standard_error", c.variable, format_fixed(c.standard_error, d)});
            t.rows.push_back({"t_stat", c.variable, format_fixed(c.t_stat, d)});
            t.rows.push_back({"p_value", c.variable, format_sci(c.p_value, dp)});
        }
        return t.render(Format::Csv);
    }

    detail::Table stats{{"Statistics", ""}, {false, true}, {}};
    stats.rows = {
        {"Multiple R", format_fixed(fit.multiple_r, d)},
        {"R Square", format_fixed(fit.r_squared, d)},
        {"Adjusted R Square", format_fixed(fit.adjusted_r_squared, d)},
        {"Standard Error", format_fixed(fit.standard_error_of_regression, d)},
        {"Observations", std::to_string(fit.n)},
        {"Degrees of freedom", std::to_string(fit.dof)},
    };

    detail::Table coefs{{"", "Coeff.", "Standard Error", "t Stat", "P-value"}, {false, true, true, true, true}, {}};
    coefs.rows.push_back({"Intercept", "0", "", "", ""});
    for (const auto& c : fit.coefficients) {
        coefs.rows.push_back({display_name(c.variable), format_fixed(c.estimate, d),
                              format_fixed(c.standard_error, d), format_fixed(c.t_stat, d),
                              format_sci(c.p_value, dp)});
    }

    std::string out;
    if (spec.format == Format::Markdown) {
        out += "**Response:** " + fit.response + "\n\n";
    } else {
        out += "Response: " + fit.response + " (through origin)\n\n";
    }
    out += stats.render(spec.format) + "\n" + coefs.render(spec.format);
    return out;
}

// ---------------------------------------------------------------------------
// Valuation table

/// Per-club rows followed by Average and Median rows. The Average ratio is the
/// mean of per-club ratios.
inline std::string render_valuation_table(const std::vector<ValuationResult>& results,
                                          const std::vector<ClubRecord>& records,
                                          const AggregateRow& agg, const RenderSpec& spec) {
    detail::require_table_format(spec);
    if (results.empty()) throw EmptyInput("no clubs to render");
    if (results.size() != records.size()) throw DimensionMismatch("results and records differ in length");

    const bool csv = spec.format == Format::Csv;
    const int dm = spec.places("money", 2);
    const int dfv = spec.places("fv", 2);
    const int dr = spec.places("ratio", 1);
    const int da = spec.places("aggregate", 1);

    auto sns = [&](double v) { return csv ? format_fixed(v, 0) : format_grouped(v); };
    auto pct = [&](double v, int p) { return csv ? format_fixed(v, p) : format_percent(v, p); };

    detail::Table t;
    if (csv) {
        t.headers = {"league", "club", "sns_followers", "revenue_meur", "player_market_value_meur",
                     "fv1_meur", "fv2_meur", "fv1_fv2_pct"};
    } else {
        t.headers = {"League", "Club", "SNS followers", "Revenue (m€)", "Player market value (m€)",
                     "FV1 (m€)", "FV2 (m€)", "FV1/FV2"};
    }
    t.right_align = {false, false, true, true, true, true, true, true};

    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = records[i];
        const auto& v = results[i];
        t.rows.push_back({r.league, r.name, sns(static_cast<double>(r.sns_followers)),
                          format_fixed(r.revenue, dm), format_fixed(r.player_market_value, dm),
                          format_fixed(v.fv1, dfv), format_fixed(v.fv2, dfv), pct(v.ratio_pct, dr)});
    }
    t.rows.push_back({"", "Average", sns(agg.sns_followers.mean), format_fixed(agg.revenue.mean, da),
                      format_fixed(agg.player_market_value.mean, da), format_fixed(agg.fv1.mean, da),
                      format_fixed(agg.fv2.mean, da), pct(agg.mean_of_ratios_pct, dr)});
    t.rows.push_back({"", "Median", sns(agg.sns_followers.median), format_fixed(agg.revenue.median, da),
                      format_fixed(agg.player_market_value.median, da), format_fixed(agg.fv1.median, da),
                      format_fixed(agg.fv2.median, da), pct(agg.median_ratio_pct, dr)});

    std::string out = t.render(spec.format);
    if (!csv) {
        out += "\nAverage FV1/FV2 is the mean of per-club ratios; the ratio of mean FV1 to mean FV2 is " +
               format_percent(agg.ratio_of_means_pct, dr) + ".\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Premium summary

inline std::string render_premium_summary(const PremiumSummary& s, FxRate fx, double stake,
                                          const RenderSpec& spec) {
    detail::require_table_format(spec);
    const bool csv = spec.format == Format::Csv;
    const int dp = spec.places("premium", 1);

    detail::Table t;
    if (csv) {
        t.headers = {"club", "model", "firm_value_meur", "implied_stake_value_myen", "price_51pct_myen",
                     "premium_pct"};
    } else {
        t.headers = {"Club", "Model", "FV (m€)", "Implied stake value (m¥)", "Price for 51% (m¥)", "Premium"};
    }
    t.right_align = {false, false, true, true, true, true};
    auto add = [&](const PremiumResult& r) {
        t.rows.push_back({r.club, r.model_name, format_fixed(r.firm_value, 2),
                          format_fixed(r.implied_stake_value, 1), format_fixed(r.price, 0),
                          csv ? format_fixed(100.0 * r.premium, dp) : format_percent(100.0 * r.premium, dp)});
    };
    for (const auto& r : s.first) add(r);
    for (const auto& r : s.second) add(r);

    std::string out = t.render(spec.format);
    if (csv) return out;

    out += "\n";
    const std::string bullet = spec.format == Format::Markdown ? "- " : "";
    for (const auto* range : {&s.first_range, &s.second_range}) {
        out += bullet + range->model_name + ": " + format_percent(100.0 * range->min, dp) + " to " +
               format_percent(100.0 * range->max, dp) + " higher than actual prices\n";
    }
    out += bullet + "Exchange rate " + format_fixed(fx.yen_per_euro(), 2) + " yen/euro, stake " +
           format_fixed(100.0 * stake, 1) + "%\n";
    if (!s.skipped.empty()) {
        out += bullet + "Skipped (no disclosed price):";
        for (const auto& c : s.skipped) out += " " + c;
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Selection report

inline std::string render_selection_report(const SelectionReport& r, const RenderSpec& spec) {
    detail::require_table_format(spec);
    const int d = spec.places("statistic", 4);
    const bool csv = spec.format == Format::Csv;

    detail::Table t;
    t.headers = csv ? std::vector<std::string>{"rank", "variables", "k", "adjusted_r_squared", "r_squared",
                                               "standard_error", "max_p_value", "all_significant"}
                    : std::vector<std::string>{"Rank", "Variables", "k", "Adj. R Square", "R Square",
                                               "Standard Error", "Max P-value", "All significant"};
    t.right_align = {true, false, true, true, true, true, true, false};
    std::size_t rank = 0;
    for (const auto& m : r.ranked_models) {
        std::string vars;
        for (const auto& v : m.variables) vars += (vars.empty() ? "" : csv ? ";" : " + ") + v;
        double max_p = 0.0;
        for (const auto& c : m.fit.coefficients) max_p = std::max(max_p, c.p_value);
        t.rows.push_back({std::to_string(++rank), vars, std::to_string(m.variables.size()),
                          format_fixed(m.fit.adjusted_r_squared, d), format_fixed(m.fit.r_squared, d),
                          format_fixed(m.fit.standard_error_of_regression, d), format_sci(max_p, 2),
                          m.all_significant ? "yes" : "no"});
    }

    std::string out = t.render(spec.format);
    if (csv) return out;
    out += "\nMethod: " + r.method + ", status: " + to_string(r.status) + ", subsets tried: " +
           std::to_string(r.attempted) + ", skipped (rank deficient): " + std::to_string(r.skipped.size()) + "\n";
    for (const auto& step : r.trace) out += "  " + step + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Scatter plots

struct ScatterPoint {
    double x = 0.0;  // m€
    double y = 0.0;  // m€
    std::string club;
};

struct ScatterSeries {
    std::string label;
    std::vector<ScatterPoint> points;
};

struct PlotOptions {
    std::string title = "Firm values: FV1 vs FV2";
    std::string x_label = "FV1 (m€)";
    std::string y_label = "FV2 (m€)";
    bool identity_guide = true;  // y = x, i.e. FV1/FV2 = 100%
};

/// Position of a data value along an axis before pixel mapping.
inline double axis_coordinate(double value, Scale scale) {
    if (scale == Scale::Linear) return value;
    if (!(value > 0.0)) {
        throw NonPositiveLogInput("log10 axis needs positive values, got " + std::to_string(value));
    }
    return std::log10(value);
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline std::string num(double v) { return format_fixed(v, 2); }

struct Axis {
    double lo = 0.0;  // axis coordinates
    double hi = 1.0;
    std::vector<std::pair<double, std::string>> ticks;
};

inline double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    return (f <= 1.0 ? 1.0 : f <= 2.0 ? 2.0 : f <= 5.0 ? 5.0 : 10.0) * mag;
}

inline std::string tick_label(double v) {
    if (std::fabs(v) >= 1.0 || v == 0.0) return format_grouped(v);
    std::string s = format_fixed(v, 6);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

inline Axis make_axis(double lo, double hi, Scale scale) {
    Axis a;
    if (scale == Scale::Log10) {
        a.lo = std::floor(lo);
        a.hi = std::ceil(hi);
        if (a.hi <= a.lo) a.hi = a.lo + 1.0;
        for (double e = a.lo; e <= a.hi + 1e-9; e += 1.0) a.ticks.emplace_back(e, tick_label(std::pow(10.0, e)));
        return a;
    }
    lo = std::min(lo, 0.0);
    if (hi <= lo) hi = lo + 1.0;
    const double step = nice_step(hi - lo);
    a.lo = std::floor(lo / step) * step;
    a.hi = std::ceil(hi / step) * step;
    for (double v = a.lo; v <= a.hi + step * 1e-9; v += step) a.ticks.emplace_back(v, tick_label(v));
    return a;
}

}  // namespace detail

/// SVG 1.1 scatter plot. Every point becomes one element with class "marker";
/// each series gets its own marker shape and colour.
inline std::string emit_scatter(const std::vector<ScatterSeries>& series, const RenderSpec& spec,
                                const PlotOptions& opts = {}) {
    if (spec.format != Format::Svg) throw InvalidRenderSpec("scatter plots are rendered as svg only");

    double xlo = INFINITY, xhi = -INFINITY, ylo = INFINITY, yhi = -INFINITY;
    std::size_t count = 0;
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw DomainError("non-finite scatter point for '" + p.club + "'");
            }
            const double ax = axis_coordinate(p.x, spec.scale);
            const double ay = axis_coordinate(p.y, spec.scale);
            xlo = std::min(xlo, ax);
            xhi = std::max(xhi, ax);
            ylo = std::min(ylo, ay);
            yhi = std::max(yhi, ay);
            ++count;
        }
    }
    if (count == 0) throw EmptyInput("scatter plot has no points");

    if (opts.identity_guide) {  // square domain so y = x is the diagonal
        xlo = ylo = std::min(xlo, ylo);
        xhi = yhi = std::max(xhi, yhi);
    }
    const detail::Axis xa = detail::make_axis(xlo, xhi, spec.scale);
    const detail::Axis ya = detail::make_axis(ylo, yhi, spec.scale);

    constexpr double width = 720, height = 560;
    constexpr double left = 80, right = 180, top = 50, bottom = 70;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double a) { return left + (a - xa.lo) / (xa.hi - xa.lo) * pw; };
    auto py = [&](double a) { return top + ph - (a - ya.lo) / (ya.hi - ya.lo) * ph; };

    static constexpr const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    auto marker = [&](std::size_t series_idx, double cx, double cy, const std::string& cls) {
        const std::string colour = colours[series_idx % 5];
        std::string attrs = " class=\"" + cls + "\" fill=\"" + colour + "\" fill-opacity=\"0.75\"";
        switch (series_idx % 3) {
            case 0:
                return "<circle" + attrs + " cx=\"" + detail::num(cx) + "\" cy=\"" + detail::num(cy) + "\" r=\"4\"";
            case 1:
                return "<rect" + attrs + " x=\"" + detail::num(cx - 3.5) + "\" y=\"" + detail::num(cy - 3.5) +
                       "\" width=\"7\" height=\"7\"";
            default:
                return "<polygon" + attrs + " points=\"" + detail::num(cx) + "," + detail::num(cy - 4.5) + " " +
                       detail::num(cx - 4) + "," + detail::num(cy + 3) + " " + detail::num(cx + 4) + "," +
                       detail::num(cy + 3) + "\"";
        }
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<title>" << detail::xml_escape(opts.title) << "</title>\n"
       << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n"
       << "<text class=\"title\" x=\"" << detail::num(left + pw / 2) << "\" y=\"28\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"16\">" << detail::xml_escape(opts.title) << "</text>\n";

    // grid and ticks
    os << "<g class=\"axes\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (const auto& [v, label] : xa.ticks) {
        const double x = px(v);
        os << "<line class=\"grid\" x1=\"" << detail::num(x) << "\" y1=\"" << detail::num(top) << "\" x2=\""
           << detail::num(x) << "\" y2=\"" << detail::num(top + ph) << "\" stroke=\"#e0e0e0\"/>\n"
           << "<text class=\"tick\" x=\"" << detail::num(x) << "\" y=\"" << detail::num(top + ph + 18)
           << "\" text-anchor=\"middle\">" << detail::xml_escape(label) << "</text>\n";
    }
    for (const auto& [v, label] : ya.ticks) {
        const double y = py(v);
        os << "<line class=\"grid\" x1=\"" << detail::num(left) << "\" y1=\"" << detail::num(y) << "\" x2=\""
           << detail::num(left + pw) << "\" y2=\"" << detail::num(y) << "\" stroke=\"#e0e0e0\"/>\n"
           << "<text class=\"tick\" x=\"" << detail::num(left - 8) << "\" y=\"" << detail::num(y + 4)
           << "\" text-anchor=\"end\">" << detail::xml_escape(label) << "</text>\n";
    }
    os << "<line class=\"axis\" x1=\"" << detail::num(left) << "\" y1=\"" << detail::num(top + ph) << "\" x2=\""
       << detail::num(left + pw) << "\" y2=\"" << detail::num(top + ph) << "\" stroke=\"black\"/>\n"
       << "<line class=\"axis\" x1=\"" << detail::num(left) << "\" y1=\"" << detail::num(top) << "\" x2=\""
       << detail::num(left) << "\" y2=\"" << detail::num(top + ph) << "\" stroke=\"black\"/>\n";
    const std::string scale_note = spec.scale == Scale::Log10 ? " (log scale)" : "";
    os << "<text class=\"axis-label\" x=\"" << detail::num(left + pw / 2) << "\" y=\"" << detail::num(height - 20)
       << "\" text-anchor=\"middle\">" << detail::xml_escape(opts.x_label + scale_note) << "</text>\n"
       << "<text class=\"axis-label\" x=\"20\" y=\"" << detail::num(top + ph / 2)
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << detail::num(top + ph / 2) << ")\">"
       << detail::xml_escape(opts.y_label + scale_note) << "</text>\n"
       << "</g>\n";

    if (opts.identity_guide) {
        const double lo = std::max(xa.lo, ya.lo), hi = std::min(xa.hi, ya.hi);
        os << "<line class=\"guide\" x1=\"" << detail::num(px(lo)) << "\" y1=\"" << detail::num(py(lo))
           << "\" x2=\"" << detail::num(px(hi)) << "\" y2=\"" << detail::num(py(hi))
           << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"><title>FV1/FV2 = 100%</title></line>\n";
    }

    for (std::size_t si = 0; si < series.size(); ++si) {
        os << "<g class=\"series\" id=\"series-" << si << "\">\n";
        for (const auto& p : series[si].points) {
            const double cx = px(axis_coordinate(p.x, spec.scale));
            const double cy = py(axis_coordinate(p.y, spec.scale));
            os << marker(si, cx, cy, "marker") << "><title>" << detail::xml_escape(p.club) << " ("
               << format_fixed(p.x, 2) << ", " << format_fixed(p.y, 2) << ")</title></"
               << (si % 3 == 0 ? "circle" : si % 3 == 1 ? "rect" : "polygon") << ">\n";
        }
        os << "</g>\n";
    }

    os << "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        const double ly = top + 10 + 22.0 * static_cast<double>(si);
        os << marker(si, left + pw + 24, ly, "legend-swatch") << "/>\n"
           << "<text x=\"" << detail::num(left + pw + 36) << "\" y=\"" << detail::num(ly + 4) << "\">"
           << detail::xml_escape(series[si].label) << " (" << series[si].points.size() << ")</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------

/// Writes a rendered document to `spec.output_path`, or to `fallback` when no
/// path is set.
inline void write_document(const std::string& doc, const RenderSpec& spec, std::ostream& fallback) {
    if (!spec.output_path) {
        fallback << doc;
        return;
    }
    std::ofstream f(*spec.output_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + spec.output_path->string() + "' for writing");
    f << doc;
    if (!f) throw IoError("failed writing '" + spec.output_path->string() + "'");
}

}  // namespace clubval
