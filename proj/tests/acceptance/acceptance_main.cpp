// Acceptance checklist for the feature-selection library. Runs every
// criterion end-to-end at desk scale and prints one [PASS]/[FAIL] line per
// criterion; exits nonzero if any fail.
//
//   C1  both classifiers shrink the feature set without losing accuracy
//       (>= 6 of the 8 bundled datasets; -0.5pp slack; waveform at 5 repeats)
//   C2  magnitude bands: wine+cart baseline 92.57+-5pp; soybean reaches
//       100.0000 after selection with both classifiers; segmentation+knn
//       baseline 84.62+-3pp with std 0.98+-0.8pp
//   C3  stored reports recompute exactly: run means, influences, lifts,
//       and the first lift equals the first accuracy
//   C4  oracle equivalence on a small synthetic table: greedy SFS argmax,
//       exhaustive split enumeration, exhaustive neighbor search
//   C5  reruns are byte-identical at --threads 1 and default parallelism
//   C6  stratification stays within +-1 per class over 1000 random label
//       vectors; planted informative features are recovered across seeds
//   C7  the SFS trace on segmentation's primary-selected pool rises to a
//       peak and then declines, in the letter-combination report format

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>
#include <unistd.h>
#include <sys/wait.h>

#include "fsel/cart.hpp"
#include "fsel/csv.hpp"
#include "fsel/error.hpp"
#include "fsel/eval.hpp"
#include "fsel/knn.hpp"
#include "fsel/manifest.hpp"
#include "fsel/report.hpp"
#include "fsel/rng.hpp"
#include "fsel/sfs.hpp"
#include "fsel/wrapper.hpp"
#include "test_util_acceptance.hpp"

using namespace fsel;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

std::string data_path(const std::string& name) {
    return std::string(FSEL_DATA_DIR) + "/" + name;
}

Dataset load(const std::string& name) {
    CsvSchema schema;
    schema.label_column = "class";
    return load_csv(data_path(name + ".csv"), schema);
}

EvalConfig config_for(const ClassifierSpec& spec, int repeats, std::uint64_t seed) {
    EvalConfig cfg;
    cfg.folds = 5;
    cfg.repeats = repeats;
    cfg.seed = seed;
    cfg.classifier = spec;
    cfg.threads = 0;
    return cfg;
}

struct DatasetRun {
    std::string dataset;
    std::string classifier;
    SelectionResult result;
};

// ------------------------------------------------------------- C1 + C2 ----

std::vector<DatasetRun> run_selection_sweep() {
    const std::vector<std::string> datasets = {"zoo",       "wine",         "sonar",
                                               "waveform",  "ionosphere",   "soybean",
                                               "segmentation", "hepatitis"};
    std::vector<DatasetRun> runs;
    for (const auto& name : datasets) {
        const Dataset d = load(name);
        const int repeats = name == "waveform" ? 5 : 20;
        for (const char* kind_name : {"cart", "knn"}) {
            const std::string kind = kind_name;
            ClassifierSpec spec;
            if (kind == "cart")
                spec.params = CartParams{};
            else
                spec.params = KnnParams{};
            const EvalConfig cfg = config_for(spec, repeats, 42);
            DatasetRun run;
            run.dataset = name;
            run.classifier = kind;
            run.result = select_features(d, cfg);
            std::cout << "  [sweep] " << name << " + " << kind << ": "
                      << run.result.size_before << " -> " << run.result.size_after
                      << " features, " << fmt_accuracy(run.result.before.mean) << " -> "
                      << fmt_accuracy(run.result.after.mean) << "\n"
                      << std::flush;
            runs.push_back(std::move(run));
        }
    }
    return runs;
}

void criterion_1(const std::vector<DatasetRun>& runs) {
    std::map<std::string, bool> dataset_ok;
    for (const auto& run : runs) {
        const bool reduced = run.result.size_after < run.result.size_before;
        const bool held = run.result.after.mean >= run.result.before.mean - 0.5;
        const bool ok = reduced && held;
        auto [it, inserted] = dataset_ok.try_emplace(run.dataset, ok);
        if (!inserted) it->second = it->second && ok;
    }
    int passing = 0;
    std::string failing;
    for (const auto& [name, ok] : dataset_ok) {
        if (ok)
            ++passing;
        else
            failing += (failing.empty() ? "" : ", ") + name;
    }
    report("C1 selection shrinks features without losing accuracy",
           passing >= 6,
           std::to_string(passing) + "/8 datasets pass with both classifiers" +
               (failing.empty() ? "" : " (failing: " + failing + ")"));
}

void criterion_2(const std::vector<DatasetRun>& runs) {
    auto find = [&](const std::string& dataset, const std::string& classifier)
        -> const DatasetRun& {
        for (const auto& run : runs)
            if (run.dataset == dataset && run.classifier == classifier) return run;
        throw Error("sweep result missing for " + dataset + "+" + classifier);
    };

    const double wine_cart_before = find("wine", "cart").result.before.mean;
    const bool wine_ok = std::fabs(wine_cart_before - 92.57) <= 5.0;

    const double soy_cart_after = find("soybean", "cart").result.after.mean;
    const double soy_knn_after = find("soybean", "knn").result.after.mean;
    const bool soy_ok = soy_cart_after >= 99.9999 && soy_knn_after >= 99.9999;

    const auto& seg = find("segmentation", "knn").result.before;
    const bool seg_ok = std::fabs(seg.mean - 84.62) <= 3.0 &&
                        std::fabs(seg.stddev - 0.98) <= 0.8;

    report("C2 magnitude bands (wine+cart, soybean 100%, segmentation+knn)",
           wine_ok && soy_ok && seg_ok,
           "wine cart before=" + fmt_accuracy(wine_cart_before) +
               ", soybean after cart/knn=" + fmt_accuracy(soy_cart_after) + "/" +
               fmt_accuracy(soy_knn_after) + ", segmentation knn before=" +
               fmt_accuracy(seg.mean) + "+-" + fmt_accuracy(seg.stddev));
}

// ------------------------------------------------------------------ C3 ----

bool estimate_recomputes(const AccuracyEstimate& est) {
    double sum = 0.0;
    for (double a : est.run_accuracies) sum += a;
    if (est.mean != sum / static_cast<double>(est.run_accuracies.size())) return false;
    double sq = 0.0;
    for (double a : est.run_accuracies) sq += (a - est.mean) * (a - est.mean);
    return est.stddev == std::sqrt(sq / static_cast<double>(est.run_accuracies.size()));
}

void criterion_3(const std::vector<DatasetRun>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& run : runs) {
        const auto& result = run.result;
        if (!estimate_recomputes(result.before) || !estimate_recomputes(result.after)) {
            ok = false;
            detail = run.dataset + "+" + run.classifier + ": estimate arithmetic drifted";
            break;
        }
        for (const auto& entry : result.influence.entries) {
            if (!estimate_recomputes(entry.estimate) ||
                entry.influence != entry.estimate.mean - result.influence.baseline.mean) {
                ok = false;
                detail = run.dataset + "+" + run.classifier + ": influence arithmetic drifted";
                break;
            }
        }
        double previous = 0.0;
        for (const auto& step : result.lifting.steps) {
            if (!estimate_recomputes(step.estimate) ||
                step.lift != step.estimate.mean - previous) {
                ok = false;
                detail = run.dataset + "+" + run.classifier + ": lift arithmetic drifted";
                break;
            }
            previous = step.estimate.mean;
        }
        if (!ok) break;
        const auto& first = result.lifting.steps.front();
        if (first.lift != first.estimate.mean) {
            ok = false;
            detail = run.dataset + ": first lift does not equal first accuracy";
            break;
        }
    }
    report("C3 stored reports recompute exactly (means, influences, lifts, P1=B1)", ok,
           ok ? "verified across all 16 sweep runs" : detail);
}

// ------------------------------------------------------------------ C4 ----

Dataset oracle_dataset() {
    Rng rng(20240801);
    const int n = 60, f = 8;
    std::vector<std::vector<double>> columns(f);
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) {
        const int y = static_cast<int>(rng.below(3));
        labels.push_back(y);
        for (int j = 0; j < f; ++j) {
            const double strength = j < 3 ? 1.4 - 0.3 * j : 0.0;
            columns[static_cast<std::size_t>(j)].push_back(strength * y + rng.normal());
        }
    }
    labels[0] = 0; labels[1] = 1; labels[2] = 2;
    std::vector<std::string> names;
    for (int j = 0; j < f; ++j) names.push_back("f" + std::to_string(j));
    return acceptutil::make_numeric_dataset("oracle", names, columns, labels,
                                            {"A", "B", "C"});
}

bool sfs_matches_bruteforce(const Dataset& d, std::string& detail) {
    EvalConfig cfg;
    cfg.repeats = 5;
    cfg.seed = 1001;
    KnnParams p;
    p.k = 5;
    cfg.classifier.params = p;
    cfg.threads = 0;
    const SfsTrace trace = sfs_search(d, FeatureSubset::all_of(d), cfg);

    std::vector<int> chosen;
    std::vector<int> remaining;
    for (std::size_t j = 0; j < d.n_features(); ++j) remaining.push_back(static_cast<int>(j));
    for (const auto& step : trace.steps) {
        const EvalConfig step_cfg = sfs_step_config(cfg, step.step);
        int best = -1;
        double best_mean = -1.0;
        for (int candidate : remaining) {
            FeatureSubset s;
            s.dataset_name = d.name;
            s.indices = chosen;
            s.indices.push_back(candidate);
            const double mean = repeated_cv(d, s, step_cfg).mean;
            if (mean > best_mean || (mean == best_mean && candidate < best)) {
                best_mean = mean;
                best = candidate;
            }
        }
        if (step.chosen != best) {
            detail = "sfs step " + std::to_string(step.step) + ": chose feature " +
                     std::to_string(step.chosen) + ", brute force says " + std::to_string(best);
            return false;
        }
        chosen.push_back(best);
        remaining.erase(std::find(remaining.begin(), remaining.end(), best));
    }
    return true;
}

// exhaustive enumeration of every threshold and bipartition, independent code
struct OracleBest {
    int feature = -1;
    bool numeric = true;
    double threshold = 0.0;
    std::uint32_t mask = 0;
    double decrease = 0.0;
    bool found = false;
};

OracleBest enumerate_best_split(const Dataset& d, const std::vector<int>& rows) {
    const int n_classes = static_cast<int>(d.n_classes());
    const double n = static_cast<double>(rows.size());
    auto gini_of = [&](const std::vector<double>& counts, double total) {
        if (total == 0) return 0.0;
        double sumsq = 0.0;
        for (double c : counts) sumsq += (c / total) * (c / total);
        return 1.0 - sumsq;
    };
    std::vector<double> parent(static_cast<std::size_t>(n_classes), 0.0);
    for (int r : rows)
        parent[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(r)])] += 1.0;
    const double parent_gini = gini_of(parent, n);

    OracleBest best;
    auto consider = [&](int feature, bool numeric, double threshold, std::uint32_t mask,
                        const std::vector<char>& left_side) {
        std::vector<double> left(static_cast<std::size_t>(n_classes), 0.0);
        double n_left = 0.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!left_side[i]) continue;
            left[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(rows[i])])] += 1.0;
            n_left += 1.0;
        }
        const double n_right = n - n_left;
        if (n_left == 0.0 || n_right == 0.0) return;
        std::vector<double> right(static_cast<std::size_t>(n_classes), 0.0);
        for (int c = 0; c < n_classes; ++c)
            right[static_cast<std::size_t>(c)] =
                parent[static_cast<std::size_t>(c)] - left[static_cast<std::size_t>(c)];
        const double decrease = parent_gini - (n_left / n * gini_of(left, n_left) +
                                               n_right / n * gini_of(right, n_right));
        if (!best.found || decrease > best.decrease + 1e-12) {
            best = {feature, numeric, threshold, mask, decrease, true};
        }
    };

    std::vector<char> side(rows.size(), 0);
    for (std::size_t f = 0; f < d.n_features(); ++f) {
        const auto& col = d.features[f];
        if (col.kind == FeatureKind::numeric) {
            std::vector<double> values;
            for (int r : rows) values.push_back(col.numeric[static_cast<std::size_t>(r)]);
            std::vector<double> distinct = values;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
                const double threshold = 0.5 * (distinct[i] + distinct[i + 1]);
                for (std::size_t j = 0; j < rows.size(); ++j)
                    side[j] = values[j] <= threshold ? 1 : 0;
                consider(static_cast<int>(f), true, threshold, 0, side);
            }
        } else {
            std::set<std::int32_t> present;
            for (int r : rows) present.insert(col.codes[static_cast<std::size_t>(r)]);
            std::vector<std::int32_t> cats(present.begin(), present.end());
            const std::uint32_t limit = 1u << cats.size();
            for (std::uint32_t m = 1; m + 1 < limit; m += 2) {
                std::uint32_t mask = 0;
                for (std::size_t b = 0; b < cats.size(); ++b)
                    if (m & (1u << b)) mask |= 1u << cats[b];
                for (std::size_t j = 0; j < rows.size(); ++j)
                    side[j] = (mask & (1u << static_cast<std::uint32_t>(
                                           col.codes[static_cast<std::size_t>(rows[j])])))
                                  ? 1
                                  : 0;
                consider(static_cast<int>(f), false, 0.0, mask, side);
            }
        }
    }
    return best;
}

bool cart_splits_match_oracle(const Dataset& d, std::string& detail) {
    const DecisionTree tree = train_cart(d, CartParams{.prune = false});

    // walk the tree re-deriving each node's row set, checking every split
    struct Item {
        std::size_t node;
        std::vector<int> rows;
    };
    std::vector<int> all;
    for (std::size_t i = 0; i < d.n_samples(); ++i) all.push_back(static_cast<int>(i));
    std::vector<Item> stack{{0, std::move(all)}};
    while (!stack.empty()) {
        Item item = std::move(stack.back());
        stack.pop_back();
        const auto& node = tree.nodes[item.node];
        if (node.is_leaf()) continue;

        const OracleBest expected = enumerate_best_split(d, item.rows);
        if (!expected.found) {
            detail = "oracle found no split where the tree has one";
            return false;
        }
        const bool same_feature = node.predicate.feature == expected.feature;
        const bool same_test =
            expected.numeric
                ? std::fabs(node.predicate.threshold - expected.threshold) < 1e-12
                : node.predicate.left_categories == expected.mask;
        if (!same_feature || !same_test) {
            detail = "node split feature " + std::to_string(node.predicate.feature) +
                     " differs from oracle feature " + std::to_string(expected.feature);
            return false;
        }
        std::vector<int> left_rows, right_rows;
        const auto& col = d.features[static_cast<std::size_t>(node.predicate.feature)];
        for (int r : item.rows) {
            bool left;
            if (node.predicate.numeric)
                left = col.numeric[static_cast<std::size_t>(r)] <= node.predicate.threshold;
            else
                left = (node.predicate.left_categories &
                        (1u << static_cast<std::uint32_t>(
                             col.codes[static_cast<std::size_t>(r)]))) != 0;
            (left ? left_rows : right_rows).push_back(r);
        }
        stack.push_back({static_cast<std::size_t>(node.left), std::move(left_rows)});
        stack.push_back({static_cast<std::size_t>(node.right), std::move(right_rows)});
    }
    return true;
}

bool knn_matches_bruteforce(const Dataset& d, std::string& detail) {
    KnnParams p;
    p.k = 6;
    KnnClassifier model(p);
    model.fit(d);

    Rng rng(5150);
    std::vector<double> q0, q1;
    std::vector<std::vector<double>> queries;
    for (int i = 0; i < 20; ++i) {
        std::vector<double> q;
        for (std::size_t j = 0; j < d.n_features(); ++j) q.push_back(rng.normal() * 2);
        queries.push_back(q);
    }
    Dataset qset = d;
    qset.labels.assign(20, 0);
    for (std::size_t j = 0; j < d.n_features(); ++j) {
        qset.features[j].numeric.clear();
        qset.features[j].missing.assign(20, 0);
        for (int i = 0; i < 20; ++i)
            qset.features[j].numeric.push_back(queries[static_cast<std::size_t>(i)][j]);
    }
    // class_names stay valid; labels are placeholders for prediction only
    qset.labels[1] = 1;

    const auto got = model.predict(qset);
    const EncodedMatrix train = encode_for_distance(d);
    for (int i = 0; i < 20; ++i) {
        struct Entry {
            double dist;
            std::size_t index;
        };
        std::vector<Entry> table;
        for (std::size_t r = 0; r < train.rows; ++r) {
            double acc = 0.0;
            for (std::size_t j = 0; j < train.dims; ++j)
                acc += std::fabs(train.row(r)[j] - queries[static_cast<std::size_t>(i)][j]);
            table.push_back({acc, r});
        }
        std::sort(table.begin(), table.end(), [](const Entry& a, const Entry& b) {
            return a.dist != b.dist ? a.dist < b.dist : a.index < b.index;
        });
        std::vector<double> votes(d.n_classes(), 0.0);
        bool zero = false;
        for (int j = 0; j < 6; ++j) zero |= table[static_cast<std::size_t>(j)].dist == 0.0;
        for (int j = 0; j < 6; ++j) {
            const auto& e = table[static_cast<std::size_t>(j)];
            const auto cls = static_cast<std::size_t>(d.labels[e.index]);
            if (zero) {
                if (e.dist == 0.0) votes[cls] += 1.0;
            } else {
                votes[cls] += 1.0 / (e.dist * e.dist);
            }
        }
        const auto expected = static_cast<std::int32_t>(
            std::max_element(votes.begin(), votes.end()) - votes.begin());
        if (got[static_cast<std::size_t>(i)] != expected) {
            detail = "query " + std::to_string(i) + ": knn=" +
                     std::to_string(got[static_cast<std::size_t>(i)]) + " oracle=" +
                     std::to_string(expected);
            return false;
        }
    }
    return true;
}

void criterion_4() {
    const Dataset d = oracle_dataset();
    std::string detail;
    bool ok = sfs_matches_bruteforce(d, detail);
    if (ok) ok = cart_splits_match_oracle(d, detail);
    if (ok) ok = knn_matches_bruteforce(d, detail);
    report("C4 oracle equivalence (sfs argmax, cart splits, knn neighbors)", ok, detail);
}

// ------------------------------------------------------------------ C5 ----

int run_cli(const std::string& args) {
    const std::string cmd = std::string(FSEL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

void criterion_5() {
    const std::string base = std::filesystem::temp_directory_path().string() +
                             "/fsel_acceptance_" + std::to_string(::getpid());
    std::filesystem::create_directories(base);
    auto out = [&](const std::string& tag) { return base + "/" + tag; };

    bool ok = true;
    std::string detail;
    const std::string common = "select --dataset " + data_path("zoo.csv") +
                               " --label class --classifier knn --repeats 10 --seed 4242";
    if (run_cli(common + " --threads 1 --out " + out("t1a")) != 0 ||
        run_cli(common + " --threads 1 --out " + out("t1b")) != 0 ||
        run_cli(common + " --threads 0 --out " + out("tda")) != 0) {
        ok = false;
        detail = "cli select run failed";
    }
    if (ok) {
        const RunManifest a = read_manifest(out("t1a") + "/manifest.json");
        const RunManifest b = read_manifest(out("t1b") + "/manifest.json");
        const RunManifest c = read_manifest(out("tda") + "/manifest.json");
        if (a.files.size() != b.files.size() || a.files.size() != c.files.size()) {
            ok = false;
            detail = "manifests list different file sets";
        } else {
            for (std::size_t i = 0; i < a.files.size() && ok; ++i) {
                const std::string bytes = file_bytes(out("t1a") + "/" + a.files[i].path);
                if (bytes != file_bytes(out("t1b") + "/" + b.files[i].path) ||
                    bytes != file_bytes(out("tda") + "/" + c.files[i].path)) {
                    ok = false;
                    detail = a.files[i].path + " differs between reruns";
                }
                if (a.files[i].sha256 != b.files[i].sha256 ||
                    a.files[i].sha256 != c.files[i].sha256) {
                    ok = false;
                    detail = a.files[i].path + " digests differ";
                }
            }
        }
    }
    std::filesystem::remove_all(base);
    report("C5 byte-identical reruns at --threads 1 and default parallelism", ok, detail);
}

// ------------------------------------------------------------------ C6 ----

bool stratification_holds(std::string& detail) {
    Rng meta(160271);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n_classes = 2 + static_cast<int>(meta.below(5));
        const int folds = 2 + static_cast<int>(meta.below(5));
        std::vector<std::int32_t> labels;
        for (int c = 0; c < n_classes; ++c) {
            const int count = folds + static_cast<int>(meta.below(40));
            for (int i = 0; i < count; ++i) labels.push_back(c);
        }
        meta.shuffle(labels);
        Rng rng(meta.next());
        const FoldAssignment fa = stratified_folds(labels, folds, rng);
        for (int c = 0; c < n_classes; ++c) {
            std::vector<int> per_fold(static_cast<std::size_t>(folds), 0);
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == c) per_fold[static_cast<std::size_t>(fa.fold_of_sample[i])]++;
            const auto [lo, hi] = std::minmax_element(per_fold.begin(), per_fold.end());
            if (*hi - *lo > 1) {
                detail = "trial " + std::to_string(trial) + ": class " + std::to_string(c) +
                         " spread " + std::to_string(*hi - *lo);
                return false;
            }
        }
    }
    return true;
}

Dataset planted_dataset(std::uint64_t seed) {
    Rng rng(seed);
    const int per_class = 30;
    std::vector<std::vector<double>> columns(12);
    std::vector<int> labels;
    for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < per_class; ++i) {
            labels.push_back(c);
            double informative[3];
            for (int j = 0; j < 3; ++j)
                informative[j] = (c == j ? 3.0 : 0.0) + rng.normal();
            for (int j = 0; j < 3; ++j) columns[static_cast<std::size_t>(j)].push_back(informative[j]);
            for (int j = 0; j < 3; ++j)
                columns[static_cast<std::size_t>(3 + j)].push_back(informative[j] +
                                                                   rng.normal() * 0.8);
            for (int j = 6; j < 12; ++j)
                columns[static_cast<std::size_t>(j)].push_back(rng.normal());
        }
    }
    std::vector<std::string> names;
    for (int j = 0; j < 12; ++j) {
        const char* role = j < 3 ? "info" : (j < 6 ? "redun" : "noise");
        names.push_back(std::string(role) + std::to_string(j));
    }
    return acceptutil::make_numeric_dataset("planted", names, columns, labels,
                                            {"A", "B", "C"});
}

bool planted_recovery(std::string& detail) {
    int good_runs = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Dataset d = planted_dataset(1000 + seed);
        ClassifierSpec spec;
        spec.params = KnnParams{};
        EvalConfig cfg = config_for(spec, 10, seed);
        const SelectionResult result = select_features(d, cfg);
        int informative = 0, noise = 0;
        for (int idx : result.lifting.selected.indices) {
            if (idx < 3) ++informative;
            if (idx >= 6) ++noise;
        }
        if (informative >= 2 && noise <= 2) ++good_runs;
    }
    detail = std::to_string(good_runs) + "/10 seeded runs recover the planted structure";
    return good_runs >= 9;
}

void criterion_6() {
    std::string strat_detail;
    const bool strat = stratification_holds(strat_detail);
    std::string planted_detail;
    const bool planted = planted_recovery(planted_detail);
    report("C6 stratification bound and planted-feature recovery", strat && planted,
           strat ? planted_detail : strat_detail);
}

// ------------------------------------------------------------------ C7 ----

void criterion_7(const std::vector<DatasetRun>& runs) {
    // primary selection (cart, as the first-stage classifier), then the
    // generic forward search with knn over the selected pool
    const DatasetRun* seg_cart = nullptr;
    for (const auto& run : runs)
        if (run.dataset == "segmentation" && run.classifier == "cart") seg_cart = &run;
    if (!seg_cart) {
        report("C7 sfs trace peaks then declines on the primary-selected pool", false,
               "missing segmentation sweep result");
        return;
    }
    const Dataset d = load("segmentation");
    FeatureSubset pool = seg_cart->result.lifting.selected;

    ClassifierSpec spec;
    spec.params = KnnParams{};
    const EvalConfig cfg = config_for(spec, 20, 42);
    const SfsTrace trace = sfs_search(d, pool, cfg);
    const auto [best, best_est] = best_subset(trace);

    const std::size_t m = trace.steps.size();
    const double first = trace.steps.front().best.mean;
    const double last = trace.steps.back().best.mean;
    const double peak = best_est.mean;
    const bool shape = best.size() < m && peak > last && peak > first;

    // the report format carries the letter combinations of Table-9 style
    const Table table = sfs_table(trace, d);
    bool format_ok = table.columns ==
                     std::vector<std::string>{"size", "accuracy", "std", "combination"};
    for (std::size_t j = 0; j < table.rows.size() && format_ok; ++j)
        format_ok = table.rows[j][3].size() == j + 1;

    report("C7 sfs trace peaks then declines on the primary-selected pool",
           shape && format_ok,
           "pool " + std::to_string(m) + ", peak " + fmt_accuracy(peak) + " at size " +
               std::to_string(best.size()) + ", final " + fmt_accuracy(last));
}

}  // namespace

int main() {
    std::cout << "acceptance: datasets from " << FSEL_DATA_DIR << "\n" << std::flush;
    try {
        const auto runs = run_selection_sweep();
        criterion_1(runs);
        criterion_2(runs);
        criterion_3(runs);
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7(runs);
    } catch (const std::exception& e) {
        std::cout << "[FAIL] acceptance aborted: " << e.what() << "\n";
        return 2;
    }
    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
