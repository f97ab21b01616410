#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fsel/dataset.hpp"

namespace fsel {

struct CartParams {
    int min_leaf_size = 1;
    int max_depth = 0;  // 0 = unlimited
    bool prune = true;
    int prune_folds = 5;
};

enum class KnnMetric { city_block, euclidean };
enum class KnnWeighting { squared_inverse, uniform };

struct KnnParams {
    int k = 6;
    KnnMetric metric = KnnMetric::city_block;
    KnnWeighting weighting = KnnWeighting::squared_inverse;
};

/// Which classifier to train, with exactly one parameter block. The variant
/// makes the one-block-matching-kind invariant structural.
struct ClassifierSpec {
    std::variant<CartParams, KnnParams> params = CartParams{};

    bool is_cart() const { return std::holds_alternative<CartParams>(params); }
    bool is_knn() const { return std::holds_alternative<KnnParams>(params); }
    const CartParams& cart() const { return std::get<CartParams>(params); }
    const KnnParams& knn() const { return std::get<KnnParams>(params); }
    std::string kind_name() const { return is_cart() ? "cart" : "knn"; }

    void validate() const;  // throws ConfigError on parameter invariants
};

/// Pluggable classification model: fit on a training dataset, then predict
/// label codes for a test dataset with the same columns. Trained models are
/// immutable and shareable; predict is const and thread-safe.
class Classifier {
public:
    virtual ~Classifier() = default;
    virtual void fit(const Dataset& train) = 0;
    virtual std::vector<std::int32_t> predict(const Dataset& test) const = 0;
    /// Distance-based models get min-max scaling fitted per training fold.
    virtual bool wants_normalization() const { return false; }
};

using ClassifierFactory =
    std::function<std::unique_ptr<Classifier>(const ClassifierSpec&)>;

/// Builds one of the two built-in classifiers. Further kinds plug in by
/// passing a custom factory to the evaluation entry points.
std::unique_ptr<Classifier> make_classifier(const ClassifierSpec& spec);

}  // namespace fsel
