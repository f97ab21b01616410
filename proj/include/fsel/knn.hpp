#pragma once

#include <cstdint>
#include <vector>

#include "fsel/classifier.hpp"
#include "fsel/dataset.hpp"

namespace fsel {

/// Row-major distance encoding: numeric columns pass through, categorical
/// columns expand to 0/1 indicators over their alphabet (so one category
/// mismatch contributes 2 under city-block distance).
struct EncodedMatrix {
    std::size_t rows = 0;
    std::size_t dims = 0;
    std::vector<double> values;

    const double* row(std::size_t r) const { return values.data() + r * dims; }
};

EncodedMatrix encode_for_distance(const Dataset& d);

/// Weighted k-nearest-neighbor model. Neighbors are the k training rows at
/// the smallest distances, together with every row tied at the k-th
/// distance, so the voted set depends on distances alone and predictions are
/// invariant under permutation of the training rows. Each neighbor votes
/// with weight 1/d^2 (or 1 under uniform weighting); a neighbor at distance
/// zero short-circuits the vote to the majority class among the
/// zero-distance neighbors. Remaining vote ties go to the lowest class index.
class KnnClassifier : public Classifier {
public:
    explicit KnnClassifier(const KnnParams& params) : params_(params) {}
    void fit(const Dataset& train) override;
    std::vector<std::int32_t> predict(const Dataset& test) const override;
    bool wants_normalization() const override { return true; }

    std::int32_t predict_encoded(const double* query) const;

private:
    KnnParams params_;
    EncodedMatrix train_;
    std::vector<std::int32_t> labels_;
    std::size_t n_classes_ = 0;
};

/// One-shot convenience: fit on `train`, classify row `row` of `query`.
std::int32_t knn_predict(const Dataset& train, const KnnParams& params,
                         const Dataset& query, std::size_t row);

}  // namespace fsel
