#include "fsel/classifier.hpp"

#include "fsel/cart.hpp"
#include "fsel/error.hpp"
#include "fsel/knn.hpp"

namespace fsel {

void ClassifierSpec::validate() const {
    if (is_cart()) {
        const auto& p = cart();
        if (p.min_leaf_size < 1) throw ConfigError("cart.min_leaf_size: must be >= 1");
        if (p.max_depth < 0) throw ConfigError("cart.max_depth: must be >= 0 (0 = unlimited)");
        if (p.prune && p.prune_folds < 2)
            throw ConfigError("cart.prune_folds: must be >= 2 when pruning");
    } else {
        const auto& p = knn();
        if (p.k < 1) throw ConfigError("knn.k: must be >= 1");
    }
}

std::unique_ptr<Classifier> make_classifier(const ClassifierSpec& spec) {
    spec.validate();
    if (spec.is_cart()) return std::make_unique<CartClassifier>(spec.cart());
    return std::make_unique<KnnClassifier>(spec.knn());
}

}  // namespace fsel
