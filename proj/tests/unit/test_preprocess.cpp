#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <unistd.h>

#include "fsel/csv.hpp"
#include "fsel/error.hpp"
#include "fsel/preprocess.hpp"
#include "test_util.hpp"

using namespace fsel;
using testutil::data_path;

namespace {

Dataset with_missing_numeric(const std::vector<double>& values,
                             const std::vector<bool>& missing) {
    std::vector<int> labels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) labels[i] = static_cast<int>(i % 2);
    Dataset d = testutil::make_numeric_dataset("m", {"x"}, {values}, labels, {"a", "b"});
    for (std::size_t i = 0; i < missing.size(); ++i)
        if (missing[i]) {
            d.features[0].missing[i] = 1;
            d.features[0].numeric[i] = std::numeric_limits<double>::quiet_NaN();
        }
    return d;
}

CsvSchema label_schema() {
    CsvSchema s;
    s.label_column = "class";
    return s;
}

}  // namespace

TEST_CASE("impute_missing is the identity on complete data") {
    const Dataset d = testutil::make_numeric_dataset("c", {"x"}, {{1, 2, 3, 4}},
                                                     {0, 1, 0, 1}, {"a", "b"});
    CHECK(datasets_equal(impute_missing(d, ImputePolicy::median_mode), d));
    CHECK(datasets_equal(impute_missing(d, ImputePolicy::drop_rows), d));
}

TEST_CASE("median imputation fills the middle value") {
    const Dataset d = with_missing_numeric({1, 0, 3}, {false, true, false});
    const Dataset filled = impute_missing(d, ImputePolicy::median_mode);
    CHECK(filled.features[0].numeric[1] == 2.0);  // median of {1,3}
    CHECK(filled.missing_cell_count() == 0);
    CHECK(filled.n_samples() == d.n_samples());
}

TEST_CASE("mode imputation fills the most frequent category, ties to lowest code") {
    const std::string text = "color,class\nred,a\nblue,b\n?,a\nblue,b\nred,a\n";
    const Dataset d = load_csv_text(text, "mode", label_schema());
    const Dataset filled = impute_missing(d, ImputePolicy::median_mode);
    // red and blue both appear twice; red has the lower code (first seen)
    CHECK(filled.features[0].codes[2] == 0);
    CHECK(filled.missing_cell_count() == 0);
}

TEST_CASE("drop-rows count matches a raw scan of hepatitis") {
    const Dataset d = load_csv(data_path("hepatitis.csv"), label_schema());
    const Dataset dropped = impute_missing(d, ImputePolicy::drop_rows);

    const std::string raw = testutil::read_file(data_path("hepatitis.csv"));
    std::size_t complete_rows = 0;
    std::size_t line_no = 0;
    std::string line;
    for (std::size_t pos = 0; pos <= raw.size(); ++pos) {
        if (pos == raw.size() || raw[pos] == '\n') {
            if (!line.empty() && line_no > 0 && line.find('?') == std::string::npos)
                ++complete_rows;
            ++line_no;
            line.clear();
        } else {
            line.push_back(raw[pos]);
        }
    }
    CHECK(dropped.n_samples() == complete_rows);
    CHECK(dropped.missing_cell_count() == 0);
}

TEST_CASE("impute errors") {
    SUBCASE("entirely missing column") {
        const Dataset d = with_missing_numeric({0, 0, 0}, {true, true, true});
        CHECK_THROWS_AS(impute_missing(d, ImputePolicy::median_mode), DataError);
    }
    SUBCASE("drop-rows that erases a class") {
        // every class-b row carries a missing cell
        const Dataset d = with_missing_numeric({1, 0, 3, 0}, {false, true, false, true});
        CHECK_THROWS_AS(impute_missing(d, ImputePolicy::drop_rows), DataError);
    }
}

TEST_CASE("min-max normalization maps onto [0,1]") {
    const Dataset d = testutil::make_numeric_dataset("n", {"x", "k"},
                                                     {{0, 5, 10}, {7, 7, 7}},
                                                     {0, 1, 0}, {"a", "b"});
    const auto [scaled, stats] = normalize(d, NormMethod::min_max);
    CHECK(scaled.features[0].numeric == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(scaled.features[1].numeric == std::vector<double>{0.0, 0.0, 0.0});  // constant
    CHECK(stats.columns[0].min == 0.0);
    CHECK(stats.columns[0].max == 10.0);
}

TEST_CASE("normalized wine columns span exactly [0,1]") {
    const Dataset wine = load_csv(data_path("wine.csv"), label_schema());
    const auto [scaled, stats] = normalize(wine, NormMethod::min_max);
    for (const auto& f : scaled.features) {
        const auto [lo, hi] = std::minmax_element(f.numeric.begin(), f.numeric.end());
        CHECK(*lo == 0.0);
        CHECK(*hi == 1.0);
    }
    (void)stats;
}

TEST_CASE("normalization requires complete data") {
    const Dataset d = with_missing_numeric({1, 0, 3}, {false, true, false});
    CHECK_THROWS_AS(normalize(d, NormMethod::min_max), DataError);
}

TEST_CASE("fold statistics never consult held-out rows") {
    const Dataset train = testutil::make_numeric_dataset("t", {"x"}, {{2, 4, 6, 8}},
                                                         {0, 1, 0, 1}, {"a", "b"});
    Dataset test = testutil::make_numeric_dataset("t", {"x"}, {{100, -50}}, {0, 1},
                                                  {"a", "b"});
    const NormStats stats = fit_normalize(train, NormMethod::min_max);
    const ImputeStats fill = fit_impute(train);

    // perturb the held-out rows; the fitted statistics cannot change
    test.features[0].numeric = {12345.0, -99999.0};
    const NormStats stats_again = fit_normalize(train, NormMethod::min_max);
    CHECK(stats.columns[0].min == stats_again.columns[0].min);
    CHECK(stats.columns[0].max == stats_again.columns[0].max);
    CHECK(fill.columns[0].median == fit_impute(train).columns[0].median);

    // applying train statistics may land outside [0,1] for held-out rows
    const Dataset scaled = apply_normalize(test, stats);
    CHECK(scaled.features[0].numeric[0] > 1.0);
    CHECK(scaled.features[0].numeric[1] < 0.0);
}

TEST_CASE("impute and normalize preserve sample count and classes") {
    const Dataset d = load_csv(data_path("hepatitis.csv"), label_schema());
    const Dataset filled = impute_missing(d, ImputePolicy::median_mode);
    CHECK(filled.n_samples() == d.n_samples());
    CHECK(filled.n_classes() == d.n_classes());
    const auto [scaled, stats] = normalize(filled, NormMethod::min_max);
    CHECK(scaled.n_samples() == d.n_samples());
    CHECK(scaled.n_classes() == d.n_classes());
    (void)stats;
}
