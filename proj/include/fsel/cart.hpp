#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsel/classifier.hpp"
#include "fsel/dataset.hpp"

namespace fsel {

/// Gini impurity 1 - sum((count_c / total)^2). Throws EvalError when all
/// counts are zero.
double gini(std::span<const std::int64_t> class_counts);

/// Binary split predicate. Numeric: row goes left when value <= threshold.
/// Categorical: row goes left when its code's bit is set in left_categories.
struct SplitPredicate {
    int feature = -1;
    bool numeric = true;
    double threshold = 0.0;
    std::uint32_t left_categories = 0;
};

struct Split {
    SplitPredicate predicate;
    double gini_decrease = 0.0;
};

/// Best binary split of `rows` over `candidate_features`, maximizing the
/// decrease in sample-weighted Gini. Numeric candidates are midpoints between
/// consecutive distinct sorted values; categorical candidates are binary
/// subset-membership tests over the categories present in the rows. Absent
/// when no split strictly decreases impurity or respects min_child_size.
/// Ties: lowest feature index, then lowest threshold / smallest category mask.
std::optional<Split> best_split(const Dataset& d, const std::vector<int>& rows,
                                const std::vector<int>& candidate_features,
                                int min_child_size = 1);

struct TreeNode {
    SplitPredicate predicate;          // valid when internal
    int left = -1;                     // node index; -1 on leaves
    int right = -1;
    std::vector<std::int64_t> counts;  // training class distribution at node
    std::int32_t majority = 0;         // max count, tie -> lowest class index

    bool is_leaf() const { return left < 0; }
};

/// Binary classification tree in an arena; node 0 is the root.
struct DecisionTree {
    std::vector<TreeNode> nodes;
    std::size_t n_classes = 0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t leaf_count() const;
};

/// Grows with best_split until purity, min_leaf_size, max_depth, or no
/// improving split; with p.prune, applies cost-complexity pruning with the
/// penalty picked by p.prune_folds-fold cross-validation on the training data
/// (min-error alpha, smallest tree on ties). Deterministic: the internal
/// pruning folds come from a fixed round-robin deal over class-sorted rows.
DecisionTree train_cart(const Dataset& d, const CartParams& p);

/// Routes a row to a leaf and returns the leaf majority class. Throws
/// EvalError when the row is missing a tested feature.
std::int32_t predict_cart(const DecisionTree& t, const Dataset& d, std::size_t row);

/// Human-readable nested-rule dump for debugging; format not stable.
std::string dump_tree(const DecisionTree& t, const Dataset& d);

class CartClassifier : public Classifier {
public:
    explicit CartClassifier(const CartParams& params) : params_(params) {}
    void fit(const Dataset& train) override;
    std::vector<std::int32_t> predict(const Dataset& test) const override;
    const DecisionTree& tree() const { return tree_; }

private:
    CartParams params_;
    DecisionTree tree_;
};

}  // namespace fsel
