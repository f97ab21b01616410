#include "fsel/knn.hpp"

#include <algorithm>
#include <cmath>

#include "fsel/error.hpp"

namespace fsel {

EncodedMatrix encode_for_distance(const Dataset& d) {
    std::size_t dims = 0;
    for (const auto& f : d.features)
        dims += f.kind == FeatureKind::numeric ? 1 : f.alphabet.size();

    EncodedMatrix m;
    m.rows = d.n_samples();
    m.dims = dims;
    m.values.assign(m.rows * m.dims, 0.0);
    std::size_t offset = 0;
    for (const auto& f : d.features) {
        if (f.kind == FeatureKind::numeric) {
            for (std::size_t r = 0; r < m.rows; ++r) {
                if (f.is_missing(r))
                    throw EvalError("knn: missing value in column '" + f.name + "'");
                m.values[r * dims + offset] = f.numeric[r];
            }
            offset += 1;
        } else {
            for (std::size_t r = 0; r < m.rows; ++r) {
                if (f.is_missing(r))
                    throw EvalError("knn: missing value in column '" + f.name + "'");
                m.values[r * dims + offset + static_cast<std::size_t>(f.codes[r])] = 1.0;
            }
            offset += f.alphabet.size();
        }
    }
    return m;
}

void KnnClassifier::fit(const Dataset& train) {
    if (params_.k < 1) throw ConfigError("knn: k must be >= 1");
    if (train.n_samples() == 0) throw EvalError("knn: empty training set");
    train_ = encode_for_distance(train);
    labels_ = train.labels;
    n_classes_ = train.n_classes();
}

std::int32_t KnnClassifier::predict_encoded(const double* query) const {
    const std::size_t n = train_.rows;
    const std::size_t k = static_cast<std::size_t>(params_.k);
    if (k > n)
        throw EvalError("knn: k=" + std::to_string(params_.k) +
                        " exceeds training size " + std::to_string(n));

    struct Neighbor {
        double dist;
        std::uint32_t index;
        bool operator<(const Neighbor& o) const {
            return dist != o.dist ? dist < o.dist : index < o.index;
        }
    };
    std::vector<Neighbor> hood(n);
    const std::size_t dims = train_.dims;
    const bool euclid = params_.metric == KnnMetric::euclidean;
    for (std::size_t r = 0; r < n; ++r) {
        const double* row = train_.row(r);
        double acc = 0.0;
        if (euclid) {
            for (std::size_t j = 0; j < dims; ++j) {
                const double delta = row[j] - query[j];
                acc += delta * delta;
            }
        } else {
            for (std::size_t j = 0; j < dims; ++j) acc += std::fabs(row[j] - query[j]);
        }
        hood[r] = {acc, static_cast<std::uint32_t>(r)};
    }
    std::partial_sort(hood.begin(), hood.begin() + static_cast<std::ptrdiff_t>(k), hood.end());

    // Rows tied with the k-th distance all join the neighborhood. The voted
    // set is then a function of the distances alone, which keeps predictions
    // invariant under permutation of the training rows.
    std::size_t take = k;
    if (k < n) {
        const double kth = hood[k - 1].dist;
        for (std::size_t i = k; i < n; ++i)
            if (hood[i].dist == kth) std::swap(hood[take++], hood[i]);
        std::sort(hood.begin() + static_cast<std::ptrdiff_t>(k),
                  hood.begin() + static_cast<std::ptrdiff_t>(take));
    }

    // Zero-distance rule: squared-inverse weight is undefined at d = 0, so
    // exact matches dominate and vote by simple majority among themselves.
    std::size_t zero_count = 0;
    while (zero_count < take && hood[zero_count].dist == 0.0) ++zero_count;
    std::vector<double> votes(n_classes_, 0.0);
    if (zero_count > 0) {
        for (std::size_t i = 0; i < zero_count; ++i)
            votes[static_cast<std::size_t>(labels_[hood[i].index])] += 1.0;
    } else {
        const bool squared_inverse = params_.weighting == KnnWeighting::squared_inverse;
        for (std::size_t i = 0; i < take; ++i) {
            double d = hood[i].dist;
            if (euclid) d = std::sqrt(d);
            const double w = squared_inverse ? 1.0 / (d * d) : 1.0;
            votes[static_cast<std::size_t>(labels_[hood[i].index])] += w;
        }
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < votes.size(); ++c)
        if (votes[c] > votes[best]) best = c;  // tie keeps lowest class index
    return static_cast<std::int32_t>(best);
}

std::vector<std::int32_t> KnnClassifier::predict(const Dataset& test) const {
    const EncodedMatrix q = encode_for_distance(test);
    if (q.dims != train_.dims)
        throw EvalError("knn: query encoding width " + std::to_string(q.dims) +
                        " does not match training width " + std::to_string(train_.dims));
    std::vector<std::int32_t> out(q.rows);
    for (std::size_t r = 0; r < q.rows; ++r) out[r] = predict_encoded(q.row(r));
    return out;
}

std::int32_t knn_predict(const Dataset& train, const KnnParams& params,
                         const Dataset& query, std::size_t row) {
    KnnClassifier model(params);
    model.fit(train);
    const EncodedMatrix q = encode_for_distance(query);
    return model.predict_encoded(q.row(row));
}

}  // namespace fsel
