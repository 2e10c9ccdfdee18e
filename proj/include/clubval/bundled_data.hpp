#pragma once

/// \file bundled_data.hpp
///
/// Embedded reference tables:
///  - J.League clubs (2023 season snapshot): predictors plus the published
///    firm values computed from them,
///  - the European clubs' KPMG enterprise values with the two model estimates,
///  - J.League change-of-control transactions 2017-2024.

#include <clubval/dataset.hpp>

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace clubval {

/// One row of the published J.League valuation table. `fv1`, `fv2` and
/// `ratio_pct` are the printed (rounded) outputs, kept for reproduction checks.
struct PublishedJLeagueRow {
    std::string_view name;
    std::string_view league;
    std::uint64_t sns_followers;
    double revenue;
    double player_market_value;
    double fv1;
    double fv2;
    double ratio_pct;
};

inline constexpr std::array<PublishedJLeagueRow, 60> published_jleague_table = {{
        {"Hokkaido Consadole Sapporo", "J1", 412622, 24.03, 13.98, 71.79, 20.00, 359.0},
        {"Kashima Antlers", "J1", 792968, 40.77, 20.80, 122.14, 30.79, 396.8},
        {"Urawa Reds", "J1", 807734, 54.18, 28.55, 161.39, 40.64, 397.2},
        {"Kashiwa Reysol", "J1", 205307, 30.88, 12.85, 91.03, 17.38, 523.9},
        {"FC Tokyo", "J1", 664305, 35.16, 17.50, 105.26, 25.89, 406.6},
        {"Kawasaki Frontale", "J1", 1276055, 46.53, 22.18, 140.76, 35.31, 398.6},
        {"Yokohama F. Marinos", "J1", 858356, 43.21, 18.65, 129.50, 28.45, 455.1},
        {"Yokohama FC", "J1", 208682, 19.07, 11.64, 56.53, 15.87, 356.2},
        {"Shonan Bellmare", "J1", 311333, 16.51, 15.03, 49.43, 20.73, 238.4},
        {"Albirex Niigata", "J1", 312910, 16.93, 9.50, 50.65, 13.78, 367.6},
        {"Nagoya Grampus", "J1", 748573, 40.61, 17.12, 121.49, 25.89, 469.2},
        {"Kyoto Sanga F.C.", "J1", 171441, 21.92, 16.33, 64.72, 21.56, 300.1},
        {"Gamba Osaka", "J1", 583844, 39.79, 16.95, 118.50, 24.73, 479.2},
        {"Cerezo Osaka", "J1", 1575578, 28.11, 18.79, 88.03, 32.77, 268.6},
        {"Vissel Kobe", "J1", 742724, 42.43, 27.18, 126.81, 38.53, 329.1},
        {"Sanfrecce Hiroshima", "J1", 530245, 26.78, 17.78, 80.26, 25.46, 315.2},
        {"Avispa Fukuoka", "J1", 223352, 18.86, 10.95, 55.96, 15.09, 371.0},
        {"Sagan Tosu", "J1", 267045, 18.41, 8.85, 54.80, 12.69, 431.8},
        {"Vegalta Sendai", "J2", 195377, 17.77, 11.65, 52.68, 15.81, 333.3},
        {"Blaublitz Akita", "J2", 51435, 5.85, 5.18, 17.28, 6.82, 253.3},
        {"Montedio Yamagata", "J2", 160809, 14.61, 9.55, 43.32, 12.96, 334.2},
        {"Iwaki FC", "J2", 87485, 5.13, 0.65, 15.33, 1.32, 1157.8},
        {"Mito Hollyhock", "J2", 131046, 6.83, 3.95, 20.44, 5.73, 356.6},
        {"Tochigi SC", "J2", 105261, 6.94, 6.28, 20.68, 8.52, 242.7},
        {"Thespa Gunma", "J2", 64961, 4.78, 4.58, 14.22, 6.15, 231.3},
        {"Omiya Ardija", "J2", 157217, 17.59, 10.88, 52.00, 14.62, 355.8},
        {"JEF United Ichihara Chiba", "J2", 170435, 17.59, 7.48, 52.05, 10.41, 500.0},
        {"Tokyo Verdy", "J2", 630280, 14.11, 6.98, 43.58, 12.43, 350.5},
        {"FC Machida Zelvia", "J2", 93469, 12.79, 12.00, 37.75, 15.66, 241.1},
        {"Ventforet Kofu", "J2", 122516, 10.43, 9.18, 30.94, 12.27, 252.1},
        {"Zweigen Kanazawa", "J2", 100941, 5.75, 6.68, 17.19, 9.00, 191.1},
        {"Shimizu S-Pulse", "J2", 310083, 33.91, 18.80, 100.29, 25.48, 393.7},
        {"Jubilo Iwata", "J2", 270856, 21.55, 11.80, 64.00, 16.43, 389.5},
        {"Fujieda MYFC", "J2", 59559, 2.70, 3.24, 8.11, 4.43, 183.3},
        {"Fagiano Okayama", "J2", 116314, 12.55, 6.33, 37.11, 8.65, 429.2},
        {"Renofa Yamaguchi FC", "J2", 93151, 7.45, 7.05, 22.13, 9.42, 235.0},
        {"Tokushima Vortis", "J2", 112151, 14.81, 11.65, 43.72, 15.33, 285.3},
        {"V-Varen Nagasaki", "J2", 168653, 13.76, 16.37, 40.85, 21.60, 189.1},
        {"Roasso Kumamoto", "J2", 101617, 6.52, 2.58, 19.44, 3.84, 506.5},
        {"Oita Trinita", "J2", 161032, 12.18, 8.64, 36.20, 11.82, 306.4},
        {"Vanraure Hachinohe", "J3", 29921, 2.67, 2.05, 7.93, 2.76, 287.6},
        {"Iwate Grulla Morioka", "J3", 44261, 4.48, 4.29, 13.26, 5.66, 234.3},
        {"Fukushima United", "J3", 30776, 2.87, 2.39, 8.51, 3.19, 267.0},
        {"Y.S.C.C. Yokohama", "J3", 25568, 1.05, 1.88, 3.17, 2.52, 126.2},
        {"S.C. Sagami-hara", "J3", 137554, 5.08, 2.28, 15.36, 3.67, 418.9},
        {"Matsumoto Yamaga F.C.", "J3", 212459, 10.07, 5.40, 30.22, 8.03, 376.3},
        {"AC Nagano Parceiro", "J3", 50775, 5.05, 3.42, 14.96, 4.60, 325.1},
        {"Kataller Toyama", "J3", 53703, 4.51, 3.55, 13.39, 4.78, 280.0},
        {"Azul Claro Numazu", "J3", 42229, 2.89, 1.86, 8.62, 2.59, 333.0},
        {"FC Gifu", "J3", 104264, 5.85, 4.30, 17.48, 6.02, 290.4},
        {"FC Osaka", "J3", 32822, 3.73, 1.96, 11.02, 2.66, 414.3},
        {"Nara Club", "J3", 35188, 2.86, 1.73, 8.49, 2.38, 356.4},
        {"Gainare Tottori", "J3", 67383, 3.24, 2.92, 9.72, 4.07, 239.0},
        {"Kamatamare Sanuki", "J3", 59808, 2.71, 2.17, 8.14, 3.08, 264.2},
        {"Ehime FC", "J3", 60826, 5.25, 5.58, 15.58, 7.38, 211.1},
        {"FC Imabari", "J3", 57486, 6.97, 6.27, 20.58, 8.23, 250.0},
        {"Giravanz Kitakyushu", "J3", 71613, 6.82, 4.35, 20.20, 5.89, 342.8},
        {"Tegevajaro Miyazaki", "J3", 23804, 2.17, 2.32, 6.42, 3.06, 209.8},
        {"Kagoshima United FC", "J3", 77314, 5.06, 3.77, 15.08, 5.20, 290.2},
        {"FC Ryukyu", "J3", 79501, 10.66, 5.55, 31.46, 7.45, 422.2},
}};

/// Printed "Average" and "Median" rows of the J.League table.
struct PublishedAggregateRow {
    double sns_followers;
    double revenue;
    double player_market_value;
    double fv1;
    double fv2;
    double ratio_pct;
};

inline constexpr PublishedAggregateRow published_jleague_average{257583, 15.4, 9.2, 46.0, 13.1, 342.0};
inline constexpr PublishedAggregateRow published_jleague_median{126781, 11.4, 7.0, 33.8, 9.9, 333.1};

inline std::vector<ClubRecord> bundled_jleague_dataset() {
    std::vector<ClubRecord> out;
    out.reserve(published_jleague_table.size());
    for (const auto& row : published_jleague_table) {
        ClubRecord r;
        r.name = std::string(row.name);
        r.league = std::string(row.league);
        r.sns_followers = row.sns_followers;
        r.revenue = row.revenue;
        r.player_market_value = row.player_market_value;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<EuropeanReference> bundled_european_reference() {
    return {
        {"Real Madrid", 3184, 3283, 3500},
        {"Manchester United", 2883, 2469, 2251},
        {"Barcelona", 2814, 3072, 3215},
        {"Bayern", 2749, 2290, 1971},
        {"Liverpool", 2556, 2139, 1928},
        {"Manchester City", 2483, 2431, 2476},
        {"Chelsea", 2179, 2003, 2139},
        {"PSG", 2132, 2399, 2464},
        {"Tottenham", 1912, 1525, 1518},
        {"Juventus", 1597, 1837, 1411},
        {"Arsenal", 1584, 1454, 1994},
        {"Atletico Madrid", 1234, 1195, 828},
        {"Dortmund", 1226, 1198, 888},
        {"Inter Milan", 996, 1241, 1094},
        {"AC Milan", 578, 925, 1065},
        {"West Ham", 541, 698, 647},
        {"Leicester", 526, 841, 430},
        {"Schalke", 502, 469, 74},
        {"Napoli", 483, 571, 744},
        {"Ajax", 473, 461, 395},
        {"Lyon", 456, 437, 299},
        {"Atalanta", 454, 498, 437},
        {"Everton", 450, 687, 507},
        {"Eintracht Frankfurt", 428, 495, 314},
        {"Roma", 413, 675, 596},
        {"Sevilla", 390, 544, 291},
        {"Valencia", 385, 359, 312},
        {"Besiktas", 383, 286, 250},
        {"Galatasaray", 344, 355, 533},
        {"Athletic Bilbao", 336, 338, 359},
        {"Benfica", 326, 311, 536},
        {"Porto", 311, 484, 395},
        {"Aston Villa", 308, 653, 887},
        {"Villareal", 303, 400, 277},
        {"Lazio", 302, 491, 327},
        {"Marseille", 195, 499, 437},
        {"Fenerbahce", 184, 337, 436},
    };
}

/// Change-of-control cases with disclosed share terms. Sagan Tosu's price for
/// a 51% stake was not disclosed.
inline std::vector<TransactionCase> bundled_transactions() {
    using P = AcquisitionPattern;
    return {
        {"FC Tokyo", P::CapitalIncrease, 50.0, 50.0, 1200.0, "Par value"},
        {"FC Machida Zelvia", P::CapitalIncrease, 50.0, 50.0, 714.0, "Par value"},
        {"Sagan Tosu", P::ShareTransfer, 10.0, 3.0, std::nullopt, "Net asset"},
        {"Kashima Antlers", P::ShareTransfer, 50.0, 82.7, 1330.0, "Net asset-based"},
    };
}

}  // namespace clubval
