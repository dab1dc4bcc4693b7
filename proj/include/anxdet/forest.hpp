#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anxdet/exec.hpp"
#include "anxdet/types.hpp"

namespace anxdet {

// Dense design matrix handed to the trainers: rows of feature values plus a
// 0/1 class vector (1 = anxious).
struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<double>> rows;
    std::vector<int> y;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return names.size(); }
};

enum class SplitCriterion { Gini, Entropy };

std::string to_string(SplitCriterion c);
SplitCriterion split_criterion_from_string(const std::string& s);

double gini_impurity(std::int64_t count_na, std::int64_t count_a);
double entropy_impurity(std::int64_t count_na, std::int64_t count_a);  // bits

struct RfHyperparams {
    SplitCriterion criterion = SplitCriterion::Gini;
    int max_depth = 7;
    int n_estimators = 13;
    std::uint64_t seed = 0;
};

// Flat tree storage. feature < 0 marks a leaf holding the training class
// counts of its node; interior nodes route x[feature] <= threshold left.
struct TreeNode {
    std::int16_t feature = -1;
    double threshold = 0.0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::uint32_t count_na = 0;
    std::uint32_t count_a = 0;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;

    // Fraction of anxious training samples in the leaf x falls into.
    double leaf_p_anxious(std::span<const double> x) const;
};

class RandomForest {
public:
    RandomForest() = default;

    // Grows n_estimators trees, each on a bootstrap sample of the training
    // rows, choosing among ceil(sqrt(p)) candidate features per node. Every
    // tree derives its own seed from the model seed, so results are identical
    // under serial and parallel execution. A single-class training set still
    // trains (and predicts that class with probability 1); the condition is
    // reported through single_class().
    void fit(const Table& train, const RfHyperparams& params, Exec policy = default_exec());

    // Soft vote: mean of per-tree leaf class frequencies.
    double predict_p_anxious(std::span<const double> x) const;

    const std::vector<DecisionTree>& trees() const { return trees_; }
    std::vector<DecisionTree>& mutable_trees() { return trees_; }
    const RfHyperparams& params() const { return params_; }
    RfHyperparams& mutable_params() { return params_; }
    bool single_class() const { return single_class_; }
    void set_single_class(bool v) { single_class_ = v; }
    std::size_t n_features() const { return n_features_; }
    void set_n_features(std::size_t n) { n_features_ = n; }

private:
    std::vector<DecisionTree> trees_;
    RfHyperparams params_;
    bool single_class_ = false;
    std::size_t n_features_ = 0;
};

}  // namespace anxdet
