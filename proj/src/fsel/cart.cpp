#include "fsel/cart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fsel/error.hpp"

namespace fsel {

double gini(std::span<const std::int64_t> class_counts) {
    std::int64_t total = 0;
    for (auto c : class_counts) total += c;
    if (total <= 0) throw EvalError("gini: all class counts are zero");
    double sumsq = 0.0;
    for (auto c : class_counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        sumsq += p * p;
    }
    return 1.0 - sumsq;
}

namespace {

constexpr int kMaxCategoricalBits = 31;

std::vector<std::int64_t> count_classes(const Dataset& d, const std::vector<int>& rows) {
    std::vector<std::int64_t> counts(d.n_classes(), 0);
    for (int r : rows) counts[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(r)])]++;
    return counts;
}

std::int32_t majority_class(const std::vector<std::int64_t>& counts) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c)
        if (counts[c] > counts[best]) best = c;  // tie keeps lowest class index
    return static_cast<std::int32_t>(best);
}

// decrease = (ssL/nL + ssR/nR)/n - ssP/n^2, in terms of squared class counts.
// Equals parent gini minus sample-weighted child gini.
double decrease_from_sums(double ss_left, double n_left, double ss_right, double n_right,
                          double ss_parent, double n) {
    return (ss_left / n_left + ss_right / n_right) / n - ss_parent / (n * n);
}

struct NumericCell {
    double value;
    std::int32_t label;
};

}  // namespace

std::optional<Split> best_split(const Dataset& d, const std::vector<int>& rows,
                                const std::vector<int>& candidate_features,
                                int min_child_size) {
    if (rows.empty()) throw EvalError("best_split: empty row set");
    const auto n_classes = d.n_classes();
    const double n = static_cast<double>(rows.size());

    std::vector<std::int64_t> parent(n_classes, 0);
    for (int r : rows) parent[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(r)])]++;
    double ss_parent = 0.0;
    for (auto c : parent) ss_parent += static_cast<double>(c) * static_cast<double>(c);

    std::optional<Split> best;
    std::vector<NumericCell> cells;
    std::vector<std::int64_t> left(n_classes), right(n_classes);

    for (int feature : candidate_features) {
        const auto& col = d.features[static_cast<std::size_t>(feature)];
        if (col.kind == FeatureKind::numeric) {
            cells.clear();
            cells.reserve(rows.size());
            for (int r : rows) {
                const auto ur = static_cast<std::size_t>(r);
                if (col.is_missing(ur))
                    throw EvalError("best_split: missing value in column '" + col.name + "'");
                cells.push_back({col.numeric[ur], d.labels[ur]});
            }
            std::sort(cells.begin(), cells.end(),
                      [](const NumericCell& a, const NumericCell& b) { return a.value < b.value; });

            std::fill(left.begin(), left.end(), 0);
            right = parent;
            double ss_left = 0.0, ss_right = ss_parent;
            for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
                const auto c = static_cast<std::size_t>(cells[i].label);
                ss_left += static_cast<double>(2 * left[c] + 1);
                ss_right -= static_cast<double>(2 * right[c] - 1);
                left[c]++;
                right[c]--;
                if (cells[i].value == cells[i + 1].value) continue;
                const auto n_left = static_cast<std::int64_t>(i + 1);
                const auto n_right = static_cast<std::int64_t>(cells.size() - i - 1);
                if (n_left < min_child_size || n_right < min_child_size) continue;
                const double dec =
                    decrease_from_sums(ss_left, static_cast<double>(n_left), ss_right,
                                       static_cast<double>(n_right), ss_parent, n);
                if (dec > 0.0 && (!best || dec > best->gini_decrease)) {
                    Split s;
                    s.predicate.feature = feature;
                    s.predicate.numeric = true;
                    s.predicate.threshold = 0.5 * (cells[i].value + cells[i + 1].value);
                    s.gini_decrease = dec;
                    best = s;
                }
            }
        } else {
            if (col.alphabet.size() > kMaxCategoricalBits)
                throw EvalError("best_split: categorical column '" + col.name +
                                "' exceeds " + std::to_string(kMaxCategoricalBits) +
                                " categories");
            // counts per present category per class
            std::vector<std::vector<std::int64_t>> cat_counts(col.alphabet.size(),
                                                              std::vector<std::int64_t>());
            std::vector<std::int64_t> cat_total(col.alphabet.size(), 0);
            for (int r : rows) {
                const auto ur = static_cast<std::size_t>(r);
                if (col.is_missing(ur))
                    throw EvalError("best_split: missing value in column '" + col.name + "'");
                const auto code = static_cast<std::size_t>(col.codes[ur]);
                if (cat_counts[code].empty()) cat_counts[code].assign(n_classes, 0);
                cat_counts[code][static_cast<std::size_t>(d.labels[ur])]++;
                cat_total[code]++;
            }
            std::vector<std::size_t> present;
            for (std::size_t code = 0; code < cat_total.size(); ++code)
                if (cat_total[code] > 0) present.push_back(code);
            const std::size_t p = present.size();
            if (p < 2) continue;

            // Canonical halving: the lowest present code always goes left, so
            // each bipartition is enumerated once, in ascending mask order.
            const std::uint32_t mask_end = 1u << p;
            for (std::uint32_t mask = 1; mask < mask_end; mask += 2) {
                if (mask == mask_end - 1) continue;  // all-left is no split
                std::fill(left.begin(), left.end(), 0);
                std::int64_t n_left = 0;
                for (std::size_t b = 0; b < p; ++b) {
                    if (!(mask & (1u << b))) continue;
                    const auto code = present[b];
                    n_left += cat_total[code];
                    for (std::size_t c = 0; c < n_classes; ++c) left[c] += cat_counts[code][c];
                }
                const std::int64_t n_right = static_cast<std::int64_t>(rows.size()) - n_left;
                if (n_left < min_child_size || n_right < min_child_size) continue;
                double ss_left = 0.0, ss_right = 0.0;
                for (std::size_t c = 0; c < n_classes; ++c) {
                    const double l = static_cast<double>(left[c]);
                    const double r = static_cast<double>(parent[c] - left[c]);
                    ss_left += l * l;
                    ss_right += r * r;
                }
                const double dec =
                    decrease_from_sums(ss_left, static_cast<double>(n_left), ss_right,
                                       static_cast<double>(n_right), ss_parent, n);
                if (dec > 0.0 && (!best || dec > best->gini_decrease)) {
                    std::uint32_t alphabet_mask = 0;
                    for (std::size_t b = 0; b < p; ++b)
                        if (mask & (1u << b)) alphabet_mask |= 1u << present[b];
                    Split s;
                    s.predicate.feature = feature;
                    s.predicate.numeric = false;
                    s.predicate.left_categories = alphabet_mask;
                    s.gini_decrease = dec;
                    best = s;
                }
            }
        }
    }
    return best;
}

namespace {

bool goes_left(const SplitPredicate& pred, const FeatureColumn& col, std::size_t row) {
    if (col.is_missing(row))
        throw EvalError("predict: missing value for tested feature '" + col.name + "'");
    if (pred.numeric) return col.numeric[row] <= pred.threshold;
    const auto code = static_cast<std::uint32_t>(col.codes[row]);
    return code < 32 && (pred.left_categories & (1u << code)) != 0;
}

struct Grower {
    const Dataset& d;
    const CartParams& params;
    std::vector<int> all_features;
    DecisionTree tree;

    int grow(std::vector<int>&& rows, int depth) {
        const int node_index = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        auto counts = count_classes(d, rows);
        tree.nodes[static_cast<std::size_t>(node_index)].counts = counts;
        tree.nodes[static_cast<std::size_t>(node_index)].majority = majority_class(counts);

        const std::int64_t n = static_cast<std::int64_t>(rows.size());
        const bool pure =
            *std::max_element(counts.begin(), counts.end()) == n;
        const bool depth_capped = params.max_depth > 0 && depth >= params.max_depth;
        if (pure || depth_capped || n < 2 * params.min_leaf_size) return node_index;

        auto split = best_split(d, rows, all_features, params.min_leaf_size);
        if (!split) return node_index;

        std::vector<int> left_rows, right_rows;
        left_rows.reserve(rows.size());
        right_rows.reserve(rows.size());
        const auto& col = d.features[static_cast<std::size_t>(split->predicate.feature)];
        for (int r : rows) {
            if (goes_left(split->predicate, col, static_cast<std::size_t>(r)))
                left_rows.push_back(r);
            else
                right_rows.push_back(r);
        }
        rows.clear();
        rows.shrink_to_fit();

        const int left = grow(std::move(left_rows), depth + 1);
        const int right = grow(std::move(right_rows), depth + 1);
        auto& node = tree.nodes[static_cast<std::size_t>(node_index)];
        node.predicate = split->predicate;
        node.left = left;
        node.right = right;
        return node_index;
    }
};

DecisionTree grow_tree(const Dataset& d, const std::vector<int>& rows, const CartParams& p) {
    Grower g{d, p, {}, {}};
    g.all_features.resize(d.n_features());
    for (std::size_t i = 0; i < d.n_features(); ++i) g.all_features[i] = static_cast<int>(i);
    g.tree.n_classes = d.n_classes();
    std::vector<int> root_rows = rows;
    g.grow(std::move(root_rows), 0);
    return std::move(g.tree);
}

// Weakest-link analysis: the cost-complexity penalty at which each node's
// subtree collapses into a leaf, in non-decreasing order of collapse events.
// Error units are fractions of the tree's own training size.
struct PruneInfo {
    std::vector<double> collapse_alpha;  // +inf for nodes that are leaves already
    std::vector<double> breakpoints;     // distinct alphas, ascending
};

PruneInfo weakest_link(const DecisionTree& t) {
    const std::size_t n_nodes = t.nodes.size();
    PruneInfo info;
    info.collapse_alpha.assign(n_nodes, std::numeric_limits<double>::infinity());
    if (n_nodes == 0 || t.nodes[0].is_leaf()) return info;

    std::int64_t root_total = 0;
    for (auto c : t.nodes[0].counts) root_total += c;
    const double inv_n = 1.0 / static_cast<double>(root_total);

    auto node_err = [&](std::size_t i) {
        std::int64_t total = 0, top = 0;
        for (auto c : t.nodes[i].counts) {
            total += c;
            top = std::max(top, c);
        }
        return static_cast<double>(total - top) * inv_n;
    };

    std::vector<bool> collapsed(n_nodes, false);
    std::vector<double> sub_err(n_nodes, 0.0);
    std::vector<int> sub_leaves(n_nodes, 0);

    // Children precede parents in no particular order in the arena, so walk
    // indices in reverse insertion order, which is bottom-up for this grower.
    std::vector<std::size_t> order(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) order[i] = n_nodes - 1 - i;

    for (;;) {
        for (std::size_t i : order) {
            const auto& node = t.nodes[i];
            if (node.is_leaf() || collapsed[i]) {
                sub_err[i] = node_err(i);
                sub_leaves[i] = 1;
            } else {
                const auto l = static_cast<std::size_t>(node.left);
                const auto r = static_cast<std::size_t>(node.right);
                sub_err[i] = sub_err[l] + sub_err[r];
                sub_leaves[i] = sub_leaves[l] + sub_leaves[r];
            }
        }
        if (collapsed[0] || t.nodes[0].is_leaf()) break;

        double min_g = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_nodes; ++i) {
            if (t.nodes[i].is_leaf() || collapsed[i]) continue;
            const double g = (node_err(i) - sub_err[i]) / (sub_leaves[i] - 1);
            min_g = std::min(min_g, g);
        }
        const double alpha = std::max(min_g, 0.0);
        if (info.breakpoints.empty() || info.breakpoints.back() < alpha)
            info.breakpoints.push_back(alpha);

        // Collapse every node attaining the minimum; descendants of a newly
        // collapsed node inherit its alpha.
        for (std::size_t i = 0; i < n_nodes; ++i) {
            if (t.nodes[i].is_leaf() || collapsed[i]) continue;
            const double g = (node_err(i) - sub_err[i]) / (sub_leaves[i] - 1);
            if (g == min_g) {
                collapsed[i] = true;
                info.collapse_alpha[i] = alpha;
            }
        }
        for (std::size_t i : order) {
            std::size_t j = n_nodes - 1 - i;  // forward order: parents first
            const auto& node = t.nodes[j];
            if (node.is_leaf()) continue;
            if (collapsed[j]) {
                const auto l = static_cast<std::size_t>(node.left);
                const auto r = static_cast<std::size_t>(node.right);
                for (std::size_t child : {l, r}) {
                    if (!t.nodes[child].is_leaf() && !collapsed[child]) {
                        collapsed[child] = true;
                        info.collapse_alpha[child] = info.collapse_alpha[j];
                    } else if (collapsed[child]) {
                        info.collapse_alpha[child] =
                            std::min(info.collapse_alpha[child], info.collapse_alpha[j]);
                    }
                }
            }
        }
    }
    return info;
}

// Leaf index reached for `row` when every node with collapse_alpha <= alpha
// acts as a leaf.
std::int32_t route_with_penalty(const DecisionTree& t, const PruneInfo& info,
                                const Dataset& d, std::size_t row, double alpha) {
    std::size_t i = 0;
    for (;;) {
        const auto& node = t.nodes[i];
        if (node.is_leaf() || info.collapse_alpha[i] <= alpha) return node.majority;
        const auto& col = d.features[static_cast<std::size_t>(node.predicate.feature)];
        i = static_cast<std::size_t>(goes_left(node.predicate, col, row) ? node.left
                                                                         : node.right);
    }
}

// Copies the surviving part of `t` under penalty `alpha` into a fresh arena.
DecisionTree prune_at(const DecisionTree& t, const PruneInfo& info, double alpha) {
    DecisionTree out;
    out.n_classes = t.n_classes;

    struct Item {
        std::size_t src;
        int dst;
    };
    out.nodes.emplace_back();
    std::vector<Item> stack{{0, 0}};
    while (!stack.empty()) {
        const auto [src, dst] = stack.back();
        stack.pop_back();
        const auto& node = t.nodes[src];
        auto& copy = out.nodes[static_cast<std::size_t>(dst)];
        copy.counts = node.counts;
        copy.majority = node.majority;
        if (node.is_leaf() || info.collapse_alpha[src] <= alpha) continue;
        copy.predicate = node.predicate;
        copy.left = static_cast<int>(out.nodes.size());
        copy.right = copy.left + 1;
        const int left_dst = copy.left;
        const int right_dst = copy.right;
        out.nodes.emplace_back();
        out.nodes.emplace_back();
        stack.push_back({static_cast<std::size_t>(node.left), left_dst});
        stack.push_back({static_cast<std::size_t>(node.right), right_dst});
    }
    return out;
}

// Deterministic stratification substitute for the internal pruning folds:
// deal class-sorted rows round-robin. No RNG, so train_cart stays a pure
// function of its inputs.
std::vector<int> round_robin_folds(const Dataset& d, int folds) {
    std::vector<int> order(d.n_samples());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.labels[static_cast<std::size_t>(a)] <
                                                d.labels[static_cast<std::size_t>(b)]; });
    std::vector<int> fold_of(d.n_samples());
    for (std::size_t i = 0; i < order.size(); ++i)
        fold_of[static_cast<std::size_t>(order[i])] = static_cast<int>(i) % folds;
    return fold_of;
}

}  // namespace

DecisionTree train_cart(const Dataset& d, const CartParams& p) {
    if (d.n_samples() == 0) throw EvalError("train_cart: empty dataset");
    if (p.min_leaf_size < 1) throw ConfigError("cart: min_leaf_size must be >= 1");
    if (p.prune && p.prune_folds < 2)
        throw ConfigError("cart: prune_folds must be >= 2 when pruning");

    std::vector<int> all_rows(d.n_samples());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = static_cast<int>(i);
    DecisionTree full = grow_tree(d, all_rows, p);
    if (!p.prune || full.nodes[0].is_leaf()) return full;

    const PruneInfo main_info = weakest_link(full);
    if (main_info.breakpoints.empty()) return full;

    std::vector<double> candidates;
    candidates.push_back(0.0);
    for (double a : main_info.breakpoints)
        if (a > 0.0) candidates.push_back(a);

    const int folds = std::min<int>(p.prune_folds, static_cast<int>(d.n_samples()));
    const auto fold_of = round_robin_folds(d, folds);

    std::vector<std::int64_t> cv_errors(candidates.size(), 0);
    for (int f = 0; f < folds; ++f) {
        std::vector<int> train_rows, test_rows;
        for (std::size_t i = 0; i < d.n_samples(); ++i) {
            if (fold_of[i] == f)
                test_rows.push_back(static_cast<int>(i));
            else
                train_rows.push_back(static_cast<int>(i));
        }
        if (train_rows.empty() || test_rows.empty()) continue;
        const DecisionTree fold_tree = grow_tree(d, train_rows, p);
        const PruneInfo fold_info = weakest_link(fold_tree);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            std::int64_t wrong = 0;
            for (int r : test_rows) {
                const auto pred = route_with_penalty(fold_tree, fold_info, d,
                                                     static_cast<std::size_t>(r), candidates[c]);
                wrong += pred != d.labels[static_cast<std::size_t>(r)];
            }
            cv_errors[c] += wrong;
        }
    }

    // Min CV error; on ties the largest alpha, i.e. the smallest tree.
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c)
        if (cv_errors[c] <= cv_errors[best]) best = c;

    return prune_at(full, main_info, candidates[best]);
}

std::size_t DecisionTree::leaf_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes) n += node.is_leaf();
    return n;
}

std::int32_t predict_cart(const DecisionTree& t, const Dataset& d, std::size_t row) {
    if (t.nodes.empty()) throw EvalError("predict_cart: empty tree");
    std::size_t i = 0;
    for (;;) {
        const auto& node = t.nodes[i];
        if (node.is_leaf()) return node.majority;
        const auto feature = static_cast<std::size_t>(node.predicate.feature);
        if (feature >= d.n_features())
            throw EvalError("predict_cart: row lacks tested feature index " +
                            std::to_string(node.predicate.feature));
        const auto& col = d.features[feature];
        i = static_cast<std::size_t>(goes_left(node.predicate, col, row) ? node.left
                                                                         : node.right);
    }
}

namespace {

void dump_node(const DecisionTree& t, const Dataset& d, std::size_t i, int indent,
               std::ostringstream& out) {
    const auto& node = t.nodes[i];
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_leaf()) {
        out << pad << "-> class " << node.majority << " [";
        for (std::size_t c = 0; c < node.counts.size(); ++c)
            out << (c ? " " : "") << node.counts[c];
        out << "]\n";
        return;
    }
    const auto& col = d.features[static_cast<std::size_t>(node.predicate.feature)];
    if (node.predicate.numeric) {
        out << pad << "if " << col.name << " <= " << node.predicate.threshold << ":\n";
    } else {
        out << pad << "if " << col.name << " in {";
        bool first = true;
        for (std::size_t code = 0; code < col.alphabet.size(); ++code) {
            if (!(node.predicate.left_categories & (1u << code))) continue;
            out << (first ? "" : ", ") << col.alphabet[code];
            first = false;
        }
        out << "}:\n";
    }
    dump_node(t, d, static_cast<std::size_t>(node.left), indent + 1, out);
    out << pad << "else:\n";
    dump_node(t, d, static_cast<std::size_t>(node.right), indent + 1, out);
}

}  // namespace

std::string dump_tree(const DecisionTree& t, const Dataset& d) {
    std::ostringstream out;
    if (!t.nodes.empty()) dump_node(t, d, 0, 0, out);
    return out.str();
}

void CartClassifier::fit(const Dataset& train) { tree_ = train_cart(train, params_); }

std::vector<std::int32_t> CartClassifier::predict(const Dataset& test) const {
    std::vector<std::int32_t> out(test.n_samples());
    for (std::size_t r = 0; r < test.n_samples(); ++r) out[r] = predict_cart(tree_, test, r);
    return out;
}

}  // namespace fsel
