// fsel-datagen: writes the bundled benchmark CSVs.
//
// wine comes from the classic cultivar measurement table embedded below and
// waveform from the standard three-wave generator. The remaining six tables
// are seeded synthetic stand-ins that mirror the shapes of the familiar
// public benchmarks they are named after: feature kinds and names, sample
// counts, class distributions, and (for hepatitis) the missing-value
// pattern. Every file is reproducible byte-for-byte from this tool alone.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsel/csv.hpp"
#include "fsel/dataset.hpp"
#include "fsel/rng.hpp"

#include "wine_table.inc"

namespace {

using fsel::Dataset;
using fsel::FeatureColumn;
using fsel::FeatureKind;
using fsel::Rng;

FeatureColumn numeric_column(std::string name, std::vector<double> values) {
    FeatureColumn c;
    c.name = std::move(name);
    c.kind = FeatureKind::numeric;
    c.missing.assign(values.size(), 0);
    c.numeric = std::move(values);
    return c;
}

FeatureColumn categorical_column(std::string name, std::vector<std::int32_t> codes,
                                 std::vector<std::string> alphabet) {
    FeatureColumn c;
    c.name = std::move(name);
    c.kind = FeatureKind::categorical;
    c.missing.assign(codes.size(), 0);
    c.codes = std::move(codes);
    c.alphabet = std::move(alphabet);
    return c;
}

// Quantize so the CSV carries short decimal literals; the divide keeps the
// stored double equal to what parsing the literal yields.
double quantize(double v, double inv_step) { return std::round(v * inv_step) / inv_step; }

bool bernoulli(Rng& rng, double p) { return rng.uniform() < p; }

std::vector<std::int32_t> label_sequence(const std::vector<int>& class_sizes) {
    std::vector<std::int32_t> labels;
    for (std::size_t c = 0; c < class_sizes.size(); ++c)
        for (int i = 0; i < class_sizes[c]; ++i)
            labels.push_back(static_cast<std::int32_t>(c));
    return labels;
}

// ---------------------------------------------------------------- wine ----

Dataset make_wine() {
    Dataset d;
    d.name = "wine";
    d.class_names = {"cultivar_1", "cultivar_2", "cultivar_3"};
    for (int f = 0; f < 13; ++f) {
        std::vector<double> values(178);
        for (int r = 0; r < 178; ++r) values[static_cast<std::size_t>(r)] = kWineRows[r][f];
        d.features.push_back(numeric_column(kWineFeatureNames[f], std::move(values)));
    }
    d.labels.resize(178);
    for (int r = 0; r < 178; ++r)
        d.labels[static_cast<std::size_t>(r)] = static_cast<std::int32_t>(kWineRows[r][13]);
    return d;
}

// ------------------------------------------------------------ waveform ----

// Three triangular base waves sampled at 21 points; each class mixes two of
// them with a random convex weight, plus unit Gaussian noise per attribute.
Dataset make_waveform(std::uint64_t seed, int n) {
    auto wave = [](int which, int i) {
        const int center = which == 0 ? 11 : (which == 1 ? 7 : 15);
        return std::max(6.0 - std::abs(i - center), 0.0);
    };
    static constexpr int kPair[3][2] = {{0, 1}, {0, 2}, {1, 2}};

    Rng rng(seed);
    std::vector<std::vector<double>> columns(21);
    std::vector<std::int32_t> labels;
    for (int s = 0; s < n; ++s) {
        const auto c = static_cast<int>(rng.below(3));
        const double u = rng.uniform();
        labels.push_back(c);
        for (int i = 1; i <= 21; ++i) {
            const double v =
                u * wave(kPair[c][0], i) + (1.0 - u) * wave(kPair[c][1], i) + rng.normal();
            columns[static_cast<std::size_t>(i - 1)].push_back(quantize(v, 1e4));
        }
    }

    Dataset d;
    d.name = "waveform";
    d.class_names = {"w0", "w1", "w2"};
    d.labels = std::move(labels);
    for (int i = 1; i <= 21; ++i) {
        char name[8];
        std::snprintf(name, sizeof name, "x%02d", i);
        d.features.push_back(
            numeric_column(name, std::move(columns[static_cast<std::size_t>(i - 1)])));
    }
    return d;
}

// ----------------------------------------------------------------- zoo ----

Dataset make_zoo(std::uint64_t seed) {
    const std::vector<int> sizes = {40, 20, 13, 10, 8, 5, 5};  // 101 animals
    const auto labels = label_sequence(sizes);
    const std::size_t n = labels.size();

    struct BoolFeature {
        const char* name;
        double p[7];  // P(1 | class): mammal bird fish invertebrate insect reptile amphibian
    };
    static constexpr BoolFeature kBool[] = {
        {"hair",     {.95, .02, .00, .02, .30, .02, .01}},
        {"feathers", {.00, 1.0, .00, .00, .00, .00, .00}},
        {"eggs",     {.08, 1.0, .98, .95, 1.0, .80, 1.0}},
        {"milk",     {1.0, .00, .00, .00, .00, .00, .00}},
        {"airborne", {.10, .80, .00, .05, .75, .00, .00}},
        {"aquatic",  {.15, .25, 1.0, .60, .02, .20, 1.0}},
        {"predator", {.50, .45, .60, .70, .25, .70, .60}},
        {"toothed",  {.95, .00, .95, .10, .00, .80, .90}},
        {"backbone", {1.0, 1.0, 1.0, .00, .00, 1.0, 1.0}},
        {"breathes", {1.0, 1.0, .00, .30, 1.0, .95, 1.0}},
        {"venomous", {.02, .00, .05, .15, .20, .25, .20}},
        {"fins",     {.05, .00, 1.0, .05, .00, .00, .00}},
        {"tail",     {.90, 1.0, 1.0, .15, .05, .90, .10}},
        {"domestic", {.15, .10, .05, .02, .05, .02, .00}},
        {"catsize",  {.60, .15, .20, .05, .00, .30, .05}},
    };

    Rng rng(seed);
    Dataset d;
    d.name = "zoo";
    d.class_names = {"mammal", "bird", "fish", "invertebrate", "insect", "reptile", "amphibian"};
    d.labels = labels;

    std::vector<std::vector<double>> values(15, std::vector<double>(n));
    std::vector<double> legs(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto c = static_cast<std::size_t>(labels[r]);
        for (std::size_t f = 0; f < 15; ++f)
            values[f][r] = bernoulli(rng, kBool[f].p[c]) ? 1.0 : 0.0;
        switch (c) {
            case 0: legs[r] = bernoulli(rng, .85) ? 4 : 2; break;           // mammal
            case 1: legs[r] = 2; break;                                     // bird
            case 2: legs[r] = 0; break;                                     // fish
            case 3: {                                                       // invertebrate
                const double u = rng.uniform();
                legs[r] = u < .5 ? 0 : (u < .8 ? 6 : 8);
                break;
            }
            case 4: legs[r] = 6; break;                                     // insect
            case 5: legs[r] = bernoulli(rng, .8) ? 4 : 0; break;            // reptile
            default: legs[r] = 4; break;                                    // amphibian
        }
    }

    for (std::size_t f = 0; f < 12; ++f)
        d.features.push_back(numeric_column(kBool[f].name, std::move(values[f])));
    d.features.push_back(numeric_column("legs", std::move(legs)));
    for (std::size_t f = 12; f < 15; ++f)
        d.features.push_back(numeric_column(kBool[f].name, std::move(values[f])));
    return d;
}

// ------------------------------------------------------------- soybean ----

Dataset make_soybean(std::uint64_t seed) {
    const std::vector<int> sizes = {10, 10, 10, 17};  // D1..D4, 47 plants
    const auto labels = label_sequence(sizes);
    const std::size_t n = labels.size();
    Rng rng(seed);

    Dataset d;
    d.name = "soybean";
    d.class_names = {"D1", "D2", "D3", "D4"};
    d.labels = labels;

    const std::vector<std::string> v01 = {"v0", "v1"};
    const std::vector<std::string> v012 = {"v0", "v1", "v2"};
    const std::vector<std::string> v0123 = {"v0", "v1", "v2", "v3"};

    auto deterministic = [&](const char* name, const int code_of_class[4]) {
        std::vector<std::int32_t> codes(n);
        for (std::size_t r = 0; r < n; ++r)
            codes[r] = code_of_class[labels[r]];
        int max_code = 0;
        for (int c = 0; c < 4; ++c) max_code = std::max(max_code, code_of_class[c]);
        std::vector<std::string> alphabet(v0123.begin(), v0123.begin() + max_code + 1);
        d.features.push_back(categorical_column(name, std::move(codes), alphabet));
    };
    auto tilted = [&](const char* name, const double p1[4]) {
        // two-valued feature, P(v1 | class) given
        std::vector<std::int32_t> codes(n);
        for (std::size_t r = 0; r < n; ++r)
            codes[r] = bernoulli(rng, p1[labels[r]]) ? 1 : 0;
        d.features.push_back(categorical_column(name, std::move(codes), v01));
    };
    auto constant = [&](const char* name) {
        d.features.push_back(
            categorical_column(name, std::vector<std::int32_t>(n, 0), {"v0"}));
    };
    auto noise3 = [&](const char* name) {
        std::vector<std::int32_t> codes(n);
        for (std::size_t r = 0; r < n; ++r)
            codes[r] = static_cast<std::int32_t>(rng.below(3));
        d.features.push_back(categorical_column(name, std::move(codes), v012));
    };

    // Mirrors the texture of the real table: a few columns separate the four
    // diseases outright, several lean statistically, many are constant or
    // irrelevant in this subset.
    const double date_p[4] = {.7, .5, .3, .2};
    const double precip_p[4] = {.8, .7, .3, .35};
    const double temp_p[4] = {.4, .6, .5, .3};
    const double crop_p[4] = {.6, .4, .5, .45};
    const double area_p[4] = {.75, .3, .4, .5};
    const double severity_p[4] = {.8, .6, .35, .3};
    const double germination_p[4] = {.5, .55, .45, .4};
    const double leaves_p[4] = {.9, .85, .9, .15};
    const double lodging_p[4] = {.25, .15, .2, .6};
    const double decay_p[4] = {.7, .2, .25, .3};
    const double roots_p[4] = {.15, .2, .7, .25};

    const int stem_cankers[4] = {0, 1, 2, 3};
    const int canker_lesion[4] = {1, 2, 3, 0};
    const int int_discolor[4] = {2, 0, 3, 1};
    const int fruit_pods[4] = {3, 2, 0, 1};
    const int fruit_spots[4] = {0, 0, 1, 2};
    const int stem[4] = {0, 1, 1, 0};
    const int plant_growth[4] = {0, 0, 1, 1};

    tilted("date", date_p);
    noise3("plant-stand");
    tilted("precip", precip_p);
    tilted("temp", temp_p);
    constant("hail");
    tilted("crop-hist", crop_p);
    tilted("area-damaged", area_p);
    tilted("severity", severity_p);
    constant("seed-tmt");
    tilted("germination", germination_p);
    deterministic("plant-growth", plant_growth);
    tilted("leaves", leaves_p);
    constant("leafspots-halo");
    constant("leafspots-marg");
    constant("leafspot-size");
    constant("leaf-shread");
    constant("leaf-malf");
    constant("leaf-mild");
    deterministic("stem", stem);
    tilted("lodging", lodging_p);
    deterministic("stem-cankers", stem_cankers);
    deterministic("canker-lesion", canker_lesion);
    noise3("fruiting-bodies");
    tilted("external-decay", decay_p);
    constant("mycelium");
    deterministic("int-discolor", int_discolor);
    constant("sclerotia");
    deterministic("fruit-pods", fruit_pods);
    deterministic("fruit-spots", fruit_spots);
    noise3("seed");
    noise3("mold-growth");
    noise3("seed-discolor");
    noise3("seed-size");
    noise3("shriveling");
    tilted("roots", roots_p);
    return d;
}

// -------------------------------------------------------- segmentation ----

// 3x3 image patches summarized per region: raw RGB channels drive the
// derived color features, so the columns carry the heavy redundancy the
// selection pass is meant to exploit.
Dataset make_segmentation(std::uint64_t seed, double channel_noise) {
    const std::vector<int> sizes = {30, 30, 30, 30, 30, 30, 30};
    const auto labels = label_sequence(sizes);
    const std::size_t n = labels.size();
    Rng rng(seed);

    // class order: brickface sky foliage cement window path grass
    static constexpr double kIntensity[7] = {35, 120, 15, 80, 25, 95, 40};
    static constexpr double kChromaR[7] = {12, -10, -6, 2, -2, 5, -12};
    static constexpr double kChromaG[7] = {-4, 0, 10, 1, -3, 4, 18};
    static constexpr double kChromaB[7] = {-8, 25, -15, 3, 1, 6, -10};
    static constexpr double kRowMean[7] = {120, 30, 90, 140, 110, 180, 200};
    static constexpr double kSld5P[7] = {.10, .00, .15, .20, .15, .30, .05};
    static constexpr double kVedge[7] = {2.5, 0.3, 6.0, 3.0, 7.0, 2.0, 4.5};
    static constexpr double kHedge[7] = {2.0, 0.2, 7.0, 2.5, 6.0, 1.8, 5.0};

    std::vector<std::vector<double>> col(19, std::vector<double>(n));
    // feature order matches the classic layout
    enum {
        kCCol, kCRow, kPixCount, kSld5, kSld2, kVedgeMean, kVedgeSd, kHedgeMean,
        kHedgeSd, kIntensityMean, kRawRed, kRawBlue, kRawGreen, kExRed, kExBlue,
        kExGreen, kValue, kSaturation, kHue
    };

    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(labels[i]);
        const double r = std::max(0.0, kIntensity[c] + kChromaR[c] + rng.normal() * channel_noise);
        const double g = std::max(0.0, kIntensity[c] + kChromaG[c] + rng.normal() * channel_noise);
        const double b = std::max(0.0, kIntensity[c] + kChromaB[c] + rng.normal() * channel_noise);

        col[kCCol][i] = quantize(10.0 + rng.uniform() * 240.0, 1e2);
        col[kCRow][i] = quantize(std::clamp(kRowMean[c] + rng.normal() * 45.0, 1.0, 255.0), 1e2);
        col[kPixCount][i] = 9.0;  // constant, as in the original layout
        col[kSld5][i] = bernoulli(rng, kSld5P[c]) ? quantize(0.05 + 0.3 * rng.uniform(), 1e4) : 0.0;
        col[kSld2][i] = bernoulli(rng, kSld5P[c] * 0.5) ? quantize(0.05 + 0.2 * rng.uniform(), 1e4) : 0.0;
        const double vedge = std::max(0.0, kVedge[c] * (0.6 + 0.8 * rng.uniform()));
        const double hedge = std::max(0.0, kHedge[c] * (0.6 + 0.8 * rng.uniform()));
        col[kVedgeMean][i] = quantize(vedge, 1e4);
        col[kVedgeSd][i] = quantize(vedge * (0.4 + 0.6 * rng.uniform()) + 0.05 * std::fabs(rng.normal()), 1e4);
        col[kHedgeMean][i] = quantize(hedge, 1e4);
        col[kHedgeSd][i] = quantize(hedge * (0.4 + 0.6 * rng.uniform()) + 0.05 * std::fabs(rng.normal()), 1e4);

        const double intensity = (r + g + b) / 3.0;
        col[kIntensityMean][i] = quantize(intensity, 1e4);
        col[kRawRed][i] = quantize(r, 1e4);
        col[kRawBlue][i] = quantize(b, 1e4);
        col[kRawGreen][i] = quantize(g, 1e4);
        col[kExRed][i] = quantize(2 * r - (g + b), 1e4);
        col[kExBlue][i] = quantize(2 * b - (g + r), 1e4);
        col[kExGreen][i] = quantize(2 * g - (r + b), 1e4);
        const double value = std::max({r, g, b});
        col[kValue][i] = quantize(value, 1e4);
        col[kSaturation][i] = quantize(value > 0 ? (value - std::min({r, g, b})) / value : 0.0, 1e4);
        col[kHue][i] = quantize(std::atan2(std::sqrt(3.0) * (g - b), 2 * r - g - b), 1e4);
    }

    static constexpr const char* kNames[19] = {
        "region-centroid-col", "region-centroid-row", "region-pixel-count",
        "short-line-density-5", "short-line-density-2", "vedge-mean", "vedge-sd",
        "hedge-mean", "hedge-sd", "intensity-mean", "rawred-mean", "rawblue-mean",
        "rawgreen-mean", "exred-mean", "exblue-mean", "exgreen-mean", "value-mean",
        "saturation-mean", "hue-mean"};

    Dataset d;
    d.name = "segmentation";
    d.class_names = {"brickface", "sky", "foliage", "cement", "window", "path", "grass"};
    d.labels = labels;
    for (std::size_t f = 0; f < 19; ++f)
        d.features.push_back(numeric_column(kNames[f], std::move(col[f])));
    return d;
}

// --------------------------------------------------------------- sonar ----

Dataset make_sonar(std::uint64_t seed, double noise) {
    const std::vector<int> sizes = {97, 111};  // rock, mine
    const auto labels = label_sequence(sizes);
    const std::size_t n = labels.size();
    Rng rng(seed);

    auto rock_profile = [](double t) {
        return std::exp(-(t - 0.35) * (t - 0.35) / (2 * 0.16 * 0.16));
    };
    auto mine_profile = [](double t) {
        return 0.85 * std::exp(-(t - 0.31) * (t - 0.31) / (2 * 0.14 * 0.14)) +
               0.55 * std::exp(-(t - 0.62) * (t - 0.62) / (2 * 0.09 * 0.09));
    };

    std::vector<std::vector<double>> col(60, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const bool mine = labels[i] == 1;
        const double amplitude = 0.4 + 0.55 * rng.uniform();
        const double shift = rng.normal() * 0.04;  // aspect-angle style jitter
        const double widen = 1.0 + 0.15 * rng.normal();
        for (int band = 0; band < 60; ++band) {
            const double t = ((band + 1) / 60.0 - 0.45) * widen + 0.45 + shift;
            const double base = mine ? mine_profile(t) : rock_profile(t);
            const double v = std::clamp(base * amplitude + rng.normal() * noise, 0.0, 1.0);
            col[static_cast<std::size_t>(band)][i] = quantize(v, 1e4);
        }
    }

    Dataset d;
    d.name = "sonar";
    d.class_names = {"rock", "mine"};
    d.labels = labels;
    for (int band = 0; band < 60; ++band) {
        char name[12];
        std::snprintf(name, sizeof name, "band_%02d", band + 1);
        d.features.push_back(numeric_column(name, std::move(col[static_cast<std::size_t>(band)])));
    }
    return d;
}

// ----------------------------------------------------------- ionosphere ----

Dataset make_ionosphere(std::uint64_t seed, double noise) {
    const std::vector<int> sizes = {126, 225};  // bad, good
    const auto labels = label_sequence(sizes);
    const std::size_t n = labels.size();
    Rng rng(seed);

    std::vector<std::vector<double>> col(34, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const bool good = labels[i] == 1;
        if (good) {
            const double omega = 0.25 + 0.55 * rng.uniform();
            const double decay = 0.10 + 0.20 * rng.uniform();
            const double phase = rng.uniform() * 1.6;  // returns start loosely in-phase
            for (int p = 0; p < 17; ++p) {
                const double envelope = std::exp(-decay * p);
                const double re = envelope * std::cos(omega * p + phase) + rng.normal() * noise;
                const double im = envelope * std::sin(omega * p + phase) + rng.normal() * noise;
                col[static_cast<std::size_t>(2 * p)][i] = quantize(std::clamp(re, -1.0, 1.0), 1e4);
                col[static_cast<std::size_t>(2 * p + 1)][i] = quantize(std::clamp(im, -1.0, 1.0), 1e4);
            }
        } else {
            const double kind = rng.uniform();
            if (kind < 0.35) {
                // degraded return: structured but heavily attenuated and noisy
                const double omega = 0.2 + 1.4 * rng.uniform();
                const double phase = rng.uniform() * 6.283185307179586;
                const double scale = 0.2 + 0.6 * rng.uniform();
                for (int p = 0; p < 17; ++p) {
                    const double re = scale * std::cos(omega * p + phase) + rng.normal() * 0.35;
                    const double im = scale * std::sin(omega * p + phase) + rng.normal() * 0.35;
                    col[static_cast<std::size_t>(2 * p)][i] =
                        quantize(std::clamp(re, -1.0, 1.0), 1e4);
                    col[static_cast<std::size_t>(2 * p + 1)][i] =
                        quantize(std::clamp(im, -1.0, 1.0), 1e4);
                }
            } else {
                const bool spiky = kind > 0.75;
                for (int j = 0; j < 34; ++j) {
                    double v;
                    if (spiky)
                        v = bernoulli(rng, 0.15) ? (bernoulli(rng, 0.5) ? 1.0 : -1.0)
                                                 : rng.normal() * 0.1;
                    else
                        v = 2.0 * rng.uniform() - 1.0;
                    col[static_cast<std::size_t>(j)][i] = quantize(std::clamp(v, -1.0, 1.0), 1e4);
                }
            }
        }
        col[1][i] = 0.0;  // channel 2 is identically zero in the classic table
    }

    Dataset d;
    d.name = "ionosphere";
    d.class_names = {"bad", "good"};
    d.labels = labels;
    for (int j = 0; j < 34; ++j) {
        char name[12];
        std::snprintf(name, sizeof name, "pulse_%02d", j + 1);
        d.features.push_back(numeric_column(name, std::move(col[static_cast<std::size_t>(j)])));
    }
    return d;
}

// ----------------------------------------------------------- hepatitis ----

Dataset make_hepatitis(std::uint64_t seed) {
    const std::vector<int> sizes = {32, 123};  // die, live
    const auto labels = label_sequence(sizes);
    const std::size_t n = labels.size();
    Rng rng(seed);

    Dataset d;
    d.name = "hepatitis";
    d.class_names = {"die", "live"};
    d.labels = labels;

    auto add_numeric = [&](const char* name, double die_mu, double die_sd, double live_mu,
                           double live_sd, double lo, double hi, double inv_step,
                           double missing_rate) {
        std::vector<double> values(n);
        std::vector<std::uint8_t> missing(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const bool die = labels[i] == 0;
            const double mu = die ? die_mu : live_mu;
            const double sd = die ? die_sd : live_sd;
            values[i] = quantize(std::clamp(mu + rng.normal() * sd, lo, hi), inv_step);
            if (bernoulli(rng, missing_rate)) {
                missing[i] = 1;
                values[i] = std::numeric_limits<double>::quiet_NaN();
            }
        }
        FeatureColumn c = numeric_column(name, std::move(values));
        c.missing = std::move(missing);
        d.features.push_back(std::move(c));
    };
    auto add_yes_no = [&](const char* name, double p_die, double p_live,
                          double missing_rate, std::vector<std::string> alphabet) {
        std::vector<std::int32_t> codes(n);
        std::vector<std::uint8_t> missing(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const double p = labels[i] == 0 ? p_die : p_live;
            codes[i] = bernoulli(rng, p) ? 1 : 0;
            if (bernoulli(rng, missing_rate)) {
                missing[i] = 1;
                codes[i] = -1;
            }
        }
        FeatureColumn c = categorical_column(name, std::move(codes), std::move(alphabet));
        c.missing = std::move(missing);
        d.features.push_back(std::move(c));
    };
    const std::vector<std::string> no_yes = {"no", "yes"};

    add_numeric("age", 46, 11, 41, 12, 7, 78, 1, 0.00);
    add_yes_no("sex", .06, .12, 0.00, {"male", "female"});  // code 1 = female
    add_yes_no("steroid", .45, .51, 0.01, no_yes);
    add_yes_no("antivirals", .17, .24, 0.00, no_yes);
    add_yes_no("fatigue", .82, .60, 0.01, no_yes);
    add_yes_no("malaise", .62, .40, 0.01, no_yes);
    add_yes_no("anorexia", .42, .28, 0.01, no_yes);
    add_yes_no("liver-big", .83, .80, 0.06, no_yes);
    add_yes_no("liver-firm", .62, .56, 0.07, no_yes);
    add_yes_no("spleen-palpable", .40, .27, 0.03, no_yes);
    add_yes_no("spiders", .63, .35, 0.03, no_yes);
    add_yes_no("ascites", .45, .13, 0.03, no_yes);
    add_yes_no("varices", .35, .11, 0.03, no_yes);
    add_numeric("bilirubin", 2.0, 1.2, 1.15, 0.65, 0.3, 8.0, 10, 0.04);
    add_numeric("alk-phosphate", 113, 40, 102, 35, 26, 295, 1, 0.19);
    add_numeric("sgot", 102, 60, 84, 48, 14, 648, 1, 0.03);
    add_numeric("albumin", 3.5, 0.55, 3.95, 0.5, 2.1, 6.4, 10, 0.10);
    add_numeric("protime", 51, 16, 64, 18, 0, 100, 1, 0.42);
    add_yes_no("histology", .70, .45, 0.00, no_yes);
    return d;
}

// ----------------------------------------------------------------- main ----

void write(const Dataset& d, const std::string& out_dir) {
    const std::string path = out_dir + "/" + d.name + ".csv";
    fsel::write_csv(d, path);
    std::cout << path << ": " << d.n_samples() << " rows, " << d.n_features()
              << " features, " << d.n_classes() << " classes";
    if (d.missing_cell_count() > 0) std::cout << ", " << d.missing_cell_count() << " missing cells";
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regenerate the bundled benchmark CSVs"};
    std::string out_dir = "data";
    app.add_option("--out", out_dir, "Output directory (default: data)");
    CLI11_PARSE(app, argc, argv);

    try {
        write(make_wine(), out_dir);
        write(make_waveform(5000, 5000), out_dir);
        write(make_zoo(101), out_dir);
        write(make_soybean(47), out_dir);
        write(make_segmentation(210, 15.0), out_dir);
        write(make_sonar(208, 0.115), out_dir);
        write(make_ionosphere(351, 0.15), out_dir);
        write(make_hepatitis(155), out_dir);
    } catch (const std::exception& e) {
        std::cerr << "datagen failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
