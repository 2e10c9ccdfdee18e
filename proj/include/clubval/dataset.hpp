#pragma once

/// \file dataset.hpp
///
/// Club records, transaction cases and the European reference table, plus CSV
/// ingestion and the yen/euro and follower-count conversions.
///
/// Units: every monetary field is in millions of euros (m€). Yen only appear
/// on `TransactionCase` (k¥ per share, m¥ for the 51% price) and at `FxRate`
/// conversions. SNS followers are stored as raw counts and converted to
/// millions only when a model consumes them.

#include <clubval/errors.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace clubval {

struct ClubRecord {
    std::string name;
    std::string league;  // J1/J2/J3 or a country
    std::uint64_t sns_followers = 0;
    double revenue = 0.0;              // m€
    double player_market_value = 0.0;  // m€
    std::optional<double> broadcasting_revenue;  // m€
    std::optional<double> wage_cost_ratio;       // fraction, [0, 2]
    std::optional<double> player_wages;          // m€
    std::optional<bool> stadium_owned;

    friend bool operator==(const ClubRecord&, const ClubRecord&) = default;
};

enum class AcquisitionPattern { CapitalIncrease, ShareTransfer };

struct TransactionCase {
    std::string club;
    AcquisitionPattern pattern = AcquisitionPattern::ShareTransfer;
    std::optional<double> par_value;        // k¥ per share
    std::optional<double> stock_price;      // k¥ per share
    std::optional<double> price_for_51pct;  // m¥
    std::string method_label;
};

struct EuropeanReference {
    std::string club;
    double ev_kpmg = 0.0;  // m€
    double fv1 = 0.0;      // m€
    double fv2 = 0.0;      // m€
};

class FxRate {
public:
    static constexpr double default_yen_per_euro = 150.0;

    constexpr FxRate() = default;
    explicit FxRate(double yen_per_euro) : yen_per_euro_(yen_per_euro) {
        if (!(yen_per_euro > 0.0) || !std::isfinite(yen_per_euro)) {
            throw DomainError("exchange rate must be positive and finite");
        }
    }

    constexpr double yen_per_euro() const noexcept { return yen_per_euro_; }

private:
    double yen_per_euro_ = default_yen_per_euro;
};

inline double yen_to_eur(double million_yen, FxRate fx = {}) {
    if (million_yen < 0.0) throw DomainError("yen_to_eur: negative amount");
    return million_yen / fx.yen_per_euro();
}

inline double eur_to_yen(double million_eur, FxRate fx = {}) {
    if (million_eur < 0.0) throw DomainError("eur_to_yen: negative amount");
    return million_eur * fx.yen_per_euro();
}

inline double followers_to_millions(std::uint64_t count) {
    return static_cast<double>(count) / 1'000'000.0;
}

// ---------------------------------------------------------------------------
// Predictor vocabulary. Model terms refer to record fields by these ids.

namespace vars {
inline constexpr std::string_view sns_followers_m = "sns_followers_m";
inline constexpr std::string_view revenue = "revenue_meur";
inline constexpr std::string_view player_market_value = "player_market_value_meur";
inline constexpr std::string_view broadcasting = "broadcasting_meur";
inline constexpr std::string_view wage_cost_ratio = "wage_cost_ratio";
inline constexpr std::string_view player_wages = "player_wages_meur";
inline constexpr std::string_view stadium_owned = "stadium_owned";
}  // namespace vars

/// Human-readable label for a predictor id, falling back to the id itself.
inline std::string display_name(std::string_view variable) {
    if (variable == vars::sns_followers_m) return "SNS Followers (m)";
    if (variable == vars::revenue) return "Revenue (m€)";
    if (variable == vars::player_market_value) return "Player Market Value (m€)";
    if (variable == vars::broadcasting) return "Broadcasting Revenue (m€)";
    if (variable == vars::wage_cost_ratio) return "Wage Cost Ratio";
    if (variable == vars::player_wages) return "Player Wages (m€)";
    if (variable == vars::stadium_owned) return "Stadium Owned";
    return std::string(variable);
}

/// Value of a predictor on a record, in model units. Absent optionals and
/// unknown ids yield nullopt.
inline std::optional<double> predictor_value(const ClubRecord& r, std::string_view variable) {
    if (variable == vars::sns_followers_m) return followers_to_millions(r.sns_followers);
    if (variable == vars::revenue) return r.revenue;
    if (variable == vars::player_market_value) return r.player_market_value;
    if (variable == vars::broadcasting) return r.broadcasting_revenue;
    if (variable == vars::wage_cost_ratio) return r.wage_cost_ratio;
    if (variable == vars::player_wages) return r.player_wages;
    if (variable == vars::stadium_owned && r.stadium_owned) return *r.stadium_owned ? 1.0 : 0.0;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view club_csv_header =
    "name,league,sns_followers,revenue_meur,player_market_value_meur,broadcasting_meur,"
    "wage_cost_ratio,player_wages_meur,stadium_owned";

namespace detail {

/// Splits a document into lines, accepting LF or CRLF. A trailing newline does
/// not produce an empty final line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

/// Splits one CSV line. Double-quoted fields may contain commas; "" is an
/// escaped quote.
inline std::vector<std::string> split_fields(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_no);
    fields.push_back(std::move(cur));
    return fields;
}

inline std::string quote_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline double parse_double(std::string_view s, const std::string& field, std::size_t line) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw NonNumeric(field, line);
    }
    return v;
}

inline double parse_amount(std::string_view s, const std::string& field, std::size_t line) {
    const double v = parse_double(s, field, line);
    if (v < 0.0) throw NegativeValue(field, line);
    return v;
}

inline std::uint64_t parse_count(std::string_view s, const std::string& field, std::size_t line) {
    s = trim(s);
    if (!s.empty() && s.front() == '-') {
        // still numeric, just negative
        parse_double(s, field, line);
        throw NegativeValue(field, line);
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw NonNumeric(field, line);
    return v;
}

inline std::optional<bool> parse_flag(std::string_view s, const std::string& field, std::size_t line) {
    std::string v(trim(s));
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v.empty()) return std::nullopt;
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw NonNumeric(field, line);
}

/// Shortest representation that parses back to the same double.
inline std::string format_roundtrip(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace detail

/// Parses a club CSV whose first line is exactly `club_csv_header`.
inline std::vector<ClubRecord> parse_club_csv(std::string_view text) {
    if (text.size() >= 3 && static_cast<unsigned char>(text[0]) == 0xEF &&
        static_cast<unsigned char>(text[1]) == 0xBB && static_cast<unsigned char>(text[2]) == 0xBF) {
        text.remove_prefix(3);
    }
    const auto lines = detail::split_lines(text);
    if (lines.empty() || lines.front() != club_csv_header) {
        throw HeaderMismatch(lines.empty() ? std::string() : std::string(lines.front()));
    }

    static constexpr std::array<std::string_view, 9> names = {
        "name",           "league",           "sns_followers",     "revenue_meur",
        "player_market_value_meur", "broadcasting_meur", "wage_cost_ratio",
        "player_wages_meur", "stadium_owned"};

    std::vector<ClubRecord> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (detail::trim(lines[i]).empty()) continue;
        const auto f = detail::split_fields(lines[i], line_no);
        if (f.size() != names.size()) throw RowArity(line_no, names.size(), f.size());

        auto field = [&](std::size_t j) { return std::string(names[j]); };
        auto optional_amount = [&](std::size_t j) -> std::optional<double> {
            if (detail::trim(f[j]).empty()) return std::nullopt;
            return detail::parse_amount(f[j], field(j), line_no);
        };

        ClubRecord r;
        r.name = std::string(detail::trim(f[0]));
        if (r.name.empty()) throw ParseError("empty club name", line_no);
        r.league = std::string(detail::trim(f[1]));
        r.sns_followers = detail::parse_count(f[2], field(2), line_no);
        r.revenue = detail::parse_amount(f[3], field(3), line_no);
        r.player_market_value = detail::parse_amount(f[4], field(4), line_no);
        r.broadcasting_revenue = optional_amount(5);
        r.wage_cost_ratio = optional_amount(6);
        if (r.wage_cost_ratio && *r.wage_cost_ratio > 2.0) throw OutOfRange(field(6), line_no);
        r.player_wages = optional_amount(7);
        r.stadium_owned = detail::parse_flag(f[8], field(8), line_no);
        out.push_back(std::move(r));
    }
    return out;
}

/// Writes records with `club_csv_header`, LF line endings and round-trip
/// precision, so `parse_club_csv(write_club_csv(r)) == r`.
inline std::string write_club_csv(const std::vector<ClubRecord>& records) {
    auto opt = [](const std::optional<double>& v) {
        return v ? detail::format_roundtrip(*v) : std::string();
    };
    std::string out(club_csv_header);
    out.push_back('\n');
    for (const auto& r : records) {
        out += detail::quote_field(r.name);
        out += ',' + detail::quote_field(r.league);
        out += ',' + std::to_string(r.sns_followers);
        out += ',' + detail::format_roundtrip(r.revenue);
        out += ',' + detail::format_roundtrip(r.player_market_value);
        out += ',' + opt(r.broadcasting_revenue);
        out += ',' + opt(r.wage_cost_ratio);
        out += ',' + opt(r.player_wages);
        out += ',';
        if (r.stadium_owned) out += *r.stadium_owned ? "true" : "false";
        out.push_back('\n');
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generic numeric table, used by `fit` and `select` where the response column
// (e.g. a published enterprise value) is not part of the club schema.

class NumericTable {
public:
    NumericTable() = default;

    static NumericTable parse(std::string_view text) {
        const auto lines = detail::split_lines(text);
        if (lines.empty()) throw HeaderMismatch("");
        NumericTable t;
        t.header_ = detail::split_fields(lines.front(), 1);
        for (auto& h : t.header_) h = std::string(detail::trim(h));
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (detail::trim(lines[i]).empty()) continue;
            auto f = detail::split_fields(lines[i], i + 1);
            if (f.size() != t.header_.size()) throw RowArity(i + 1, t.header_.size(), f.size());
            t.rows_.push_back(std::move(f));
            t.line_numbers_.push_back(i + 1);
        }
        return t;
    }

    const std::vector<std::string>& header() const noexcept { return header_; }
    std::size_t rows() const noexcept { return rows_.size(); }

    bool has_column(std::string_view name) const {
        return index_of(name).has_value() || (name == vars::sns_followers_m && index_of("sns_followers"));
    }

    /// Numeric column by name. `sns_followers_m` is derived from a raw
    /// `sns_followers` column when not present itself.
    std::vector<double> numeric_column(std::string_view name) const {
        double divisor = 1.0;
        auto idx = index_of(name);
        if (!idx && name == vars::sns_followers_m) {
            idx = index_of("sns_followers");
            divisor = 1'000'000.0;
        }
        if (!idx) throw MissingPredictor(std::string(name));
        std::vector<double> out;
        out.reserve(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            out.push_back(detail::parse_double(rows_[i][*idx], std::string(name), line_numbers_[i]) /
                          divisor);
        }
        return out;
    }

    /// Text column by name (e.g. club names for labelling).
    std::vector<std::string> text_column(std::string_view name) const {
        const auto idx = index_of(name);
        if (!idx) throw MissingPredictor(std::string(name));
        std::vector<std::string> out;
        for (const auto& r : rows_) out.push_back(r[*idx]);
        return out;
    }

private:
    std::optional<std::size_t> index_of(std::string_view name) const {
        const auto it = std::find(header_.begin(), header_.end(), name);
        if (it == header_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header_.begin());
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::size_t> line_numbers_;
};

}  // namespace clubval
