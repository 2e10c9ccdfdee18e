#include <clubval/bundled_data.hpp>
#include <clubval/dataset.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <string>

using namespace clubval;

namespace {
const std::string header = std::string(club_csv_header) + "\n";

const ClubRecord& find(const std::vector<ClubRecord>& v, const std::string& name) {
    for (const auto& r : v) {
        if (r.name == name) return r;
    }
    throw std::runtime_error("missing " + name);
}
}  // namespace

TEST(ParseClubCsv, MinimalRow) {
    const auto recs = parse_club_csv(header + "Urawa Reds,J1,807734,54.18,28.55,,,,\n");
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_EQ(recs[0].name, "Urawa Reds");
    EXPECT_EQ(recs[0].league, "J1");
    EXPECT_EQ(recs[0].sns_followers, 807734u);
    EXPECT_DOUBLE_EQ(recs[0].revenue, 54.18);
    EXPECT_DOUBLE_EQ(recs[0].player_market_value, 28.55);
    EXPECT_FALSE(recs[0].broadcasting_revenue);
    EXPECT_FALSE(recs[0].stadium_owned);
}

TEST(ParseClubCsv, OptionalColumnsAndCrlf) {
    const std::string text = std::string(club_csv_header) + "\r\n" +
                             "\"Club, The\",England,1000,10.5,3,4.25,0.75,6,yes\r\n"
                             "Zero FC,J3,0,0,0,0,0,0,false\r\n";
    const auto recs = parse_club_csv(text);
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].name, "Club, The");
    EXPECT_EQ(recs[0].broadcasting_revenue, 4.25);
    EXPECT_EQ(recs[0].wage_cost_ratio, 0.75);
    EXPECT_EQ(recs[0].player_wages, 6.0);
    EXPECT_EQ(recs[0].stadium_owned, true);
    // 0 is a value, not an absence
    EXPECT_EQ(recs[1].broadcasting_revenue, 0.0);
    EXPECT_EQ(recs[1].stadium_owned, false);
}

TEST(ParseClubCsv, HeaderOnlyIsEmpty) {
    EXPECT_TRUE(parse_club_csv(header).empty());
    EXPECT_TRUE(parse_club_csv(std::string(club_csv_header)).empty());
}

TEST(ParseClubCsv, Errors) {
    EXPECT_THROW(parse_club_csv("name,league\n"), HeaderMismatch);
    EXPECT_THROW(parse_club_csv(""), HeaderMismatch);

    try {
        parse_club_csv(header + "A,J1,10,1,1,,,,\nB,J1,10,-5,1,,,,\n");
        FAIL();
    } catch (const NegativeValue& e) {
        EXPECT_EQ(e.field(), "revenue_meur");
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_club_csv(header + "A,J1,ten,1,1,,,,\n");
        FAIL();
    } catch (const NonNumeric& e) {
        EXPECT_EQ(e.field(), "sns_followers");
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_club_csv(header + "A,J1,10,1\n"), RowArity);
    EXPECT_THROW(parse_club_csv(header + "A,J1,12.5,1,1,,,,\n"), NonNumeric);
    EXPECT_THROW(parse_club_csv(header + "A,J1,-3,1,1,,,,\n"), NegativeValue);
    EXPECT_THROW(parse_club_csv(header + "A,J1,3,1,1,,2.5,,\n"), OutOfRange);
    EXPECT_THROW(parse_club_csv(header + "A,J1,3,1,1,,,,maybe\n"), NonNumeric);
    EXPECT_THROW(parse_club_csv(header + ",J1,3,1,1,,,,\n"), ParseError);
}

TEST(Conversions, YenEuro) {
    EXPECT_NEAR(yen_to_eur(1330.0, FxRate(150.0)), 8.8667, 5e-5);
    EXPECT_EQ(yen_to_eur(0.0), 0.0);
    EXPECT_THROW(FxRate(0.0), DomainError);
    EXPECT_THROW(FxRate(-150.0), DomainError);
    EXPECT_THROW(yen_to_eur(-1.0), DomainError);

    std::mt19937_64 rng(150);
    std::uniform_real_distribution<double> amount(0.0, 1e6), rate(50.0, 250.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = amount(rng);
        const FxRate fx(rate(rng));
        EXPECT_NEAR(eur_to_yen(yen_to_eur(x, fx), fx), x, 1e-12 * x);
    }
}

TEST(Conversions, FollowersToMillions) {
    EXPECT_EQ(followers_to_millions(807734), 0.807734);
    EXPECT_EQ(followers_to_millions(0), 0.0);
    EXPECT_EQ(followers_to_millions(1'000'000), 1.0);
}

TEST(BundledData, JLeagueTable) {
    const auto clubs = bundled_jleague_dataset();
    // the published table lists 18 J1, 22 J2 and 20 J3 clubs
    ASSERT_EQ(clubs.size(), 60u);
    std::map<std::string, int> per_league;
    for (const auto& c : clubs) ++per_league[c.league];
    EXPECT_EQ(per_league["J1"], 18);
    EXPECT_EQ(per_league["J2"], 22);
    EXPECT_EQ(per_league["J3"], 20);

    const auto& kashima = find(clubs, "Kashima Antlers");
    EXPECT_EQ(kashima.sns_followers, 792968u);
    EXPECT_DOUBLE_EQ(kashima.revenue, 40.77);
    EXPECT_DOUBLE_EQ(kashima.player_market_value, 20.80);
    EXPECT_DOUBLE_EQ(find(clubs, "Y.S.C.C. Yokohama").revenue, 1.05);

    for (const auto& c : clubs) {
        EXPECT_FALSE(c.name.empty());
        EXPECT_GE(c.revenue, 0.0);
        EXPECT_GE(c.player_market_value, 0.0);
        EXPECT_TRUE(std::isfinite(c.revenue));
    }
}

TEST(BundledData, TransactionsAndEurope) {
    const auto cases = bundled_transactions();
    ASSERT_EQ(cases.size(), 4u);
    EXPECT_EQ(cases[1].club, "FC Machida Zelvia");
    EXPECT_EQ(cases[1].price_for_51pct, 714.0);
    EXPECT_EQ(cases[2].club, "Sagan Tosu");
    EXPECT_FALSE(cases[2].price_for_51pct);
    EXPECT_EQ(cases[2].stock_price, 3.0);
    EXPECT_EQ(cases[2].par_value, 10.0);

    const auto eu = bundled_european_reference();
    ASSERT_EQ(eu.size(), 37u);
    EXPECT_EQ(eu[0].club, "Real Madrid");
    EXPECT_EQ(eu[0].ev_kpmg, 3184);
    EXPECT_EQ(eu[0].fv1, 3283);
    EXPECT_EQ(eu[0].fv2, 3500);
    for (const auto& r : eu) {
        EXPECT_GT(r.ev_kpmg, 0);
        EXPECT_GT(r.fv1, 0);
        EXPECT_GT(r.fv2, 0);
    }
}

TEST(BundledData, CsvRoundTrip) {
    const auto clubs = bundled_jleague_dataset();
    EXPECT_EQ(parse_club_csv(write_club_csv(clubs)), clubs);
}

TEST(ClubCsv, RoundTripProperty) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> money(0.0, 5000.0), ratio(0.0, 2.0);
    std::uniform_int_distribution<std::uint64_t> followers(0, 500'000'000);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ClubRecord> recs;
        for (int i = 0; i < 20; ++i) {
            ClubRecord r;
            r.name = "Club \"" + std::to_string(i) + "\", est. " + std::to_string(trial);
            r.league = coin(rng) ? "J1" : "Spain";
            r.sns_followers = followers(rng);
            r.revenue = money(rng);
            r.player_market_value = money(rng);
            if (coin(rng)) r.broadcasting_revenue = money(rng);
            if (coin(rng)) r.wage_cost_ratio = ratio(rng);
            if (coin(rng)) r.player_wages = money(rng);
            if (coin(rng)) r.stadium_owned = coin(rng);
            recs.push_back(r);
        }
        EXPECT_EQ(parse_club_csv(write_club_csv(recs)), recs);
    }
}

TEST(PredictorValue, Vocabulary) {
    ClubRecord r;
    r.sns_followers = 2'500'000;
    r.revenue = 10;
    r.player_market_value = 4;
    EXPECT_EQ(predictor_value(r, vars::sns_followers_m), 2.5);
    EXPECT_EQ(predictor_value(r, vars::revenue), 10.0);
    EXPECT_EQ(predictor_value(r, vars::player_market_value), 4.0);
    EXPECT_FALSE(predictor_value(r, vars::broadcasting));
    EXPECT_FALSE(predictor_value(r, vars::stadium_owned));
    EXPECT_FALSE(predictor_value(r, "unknown"));
    r.stadium_owned = true;
    EXPECT_EQ(predictor_value(r, vars::stadium_owned), 1.0);
}

TEST(NumericTable, ColumnsAndDerivedMillions) {
    const auto t = NumericTable::parse("club,sns_followers,ev\nA,2000000,10\nB,500000,4.5\n");
    EXPECT_EQ(t.rows(), 2u);
    EXPECT_EQ(t.numeric_column("ev"), (std::vector<double>{10, 4.5}));
    EXPECT_EQ(t.numeric_column("sns_followers_m"), (std::vector<double>{2.0, 0.5}));
    EXPECT_TRUE(t.has_column("sns_followers_m"));
    EXPECT_THROW(t.numeric_column("club"), NonNumeric);
    EXPECT_THROW(t.numeric_column("missing"), MissingPredictor);
    EXPECT_THROW(NumericTable::parse("a,b\n1\n"), RowArity);
}
