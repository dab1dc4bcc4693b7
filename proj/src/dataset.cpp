#include "anxdet/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "anxdet/mathutil.hpp"

namespace anxdet {

namespace {

struct ClassAlloc {
    std::vector<std::size_t> rows;
    std::size_t n_train = 0;
    std::size_t n_val = 0;
};

// Largest-remainder allocation of `total` units across classes proportional
// to their sizes, hitting `total` exactly.
void allocate_exact(std::vector<ClassAlloc>& classes, double frac, std::size_t total,
                    bool into_val) {
    std::vector<double> remainders(classes.size());
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        double want = frac * static_cast<double>(classes[c].rows.size());
        auto base = static_cast<std::size_t>(std::floor(want));
        remainders[c] = want - static_cast<double>(base);
        (into_val ? classes[c].n_val : classes[c].n_train) = base;
        assigned += base;
    }
    std::vector<std::size_t> order(classes.size());
    for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (std::size_t i = 0; assigned < total && i < order.size(); ++i, ++assigned) {
        ++(into_val ? classes[order[i]].n_val : classes[order[i]].n_train);
    }
}

}  // namespace

DatasetSplit split_dataset(std::span<const AnxietyLabel> labels, std::uint64_t seed,
                           double train_frac, double val_frac, bool stratified) {
    std::size_t n = labels.size();
    if (n < 10) throw TooFewRows("need at least 10 rows to split, got " + std::to_string(n));
    if (train_frac <= 0 || val_frac < 0 || train_frac + val_frac >= 1.0) {
        throw ConfigError("split fractions must be positive and sum below 1");
    }

    DatasetSplit split;
    split.seed = seed;
    split.stratified = stratified;

    auto n_train_total = static_cast<std::size_t>(std::llround(train_frac * static_cast<double>(n)));
    auto n_trainval_total =
        static_cast<std::size_t>(std::llround((train_frac + val_frac) * static_cast<double>(n)));
    std::size_t n_val_total = n_trainval_total - n_train_total;

    std::vector<ClassAlloc> classes;
    if (stratified) {
        classes.resize(2);
        for (std::size_t i = 0; i < n; ++i) {
            classes[labels[i] == AnxietyLabel::A ? 1 : 0].rows.push_back(i);
        }
        if (classes[0].rows.empty()) classes.erase(classes.begin());
        else if (classes[1].rows.empty()) classes.pop_back();
    } else {
        classes.resize(1);
        for (std::size_t i = 0; i < n; ++i) classes[0].rows.push_back(i);
    }

    allocate_exact(classes, train_frac, n_train_total, false);
    allocate_exact(classes, val_frac, n_val_total, true);

    for (std::size_t c = 0; c < classes.size(); ++c) {
        ClassAlloc& cls = classes[c];
        // Keep allocations feasible for tiny classes.
        cls.n_train = std::min(cls.n_train, cls.rows.size());
        cls.n_val = std::min(cls.n_val, cls.rows.size() - cls.n_train);
        Rng rng(derive_seed(seed, 0x5117, c));
        shuffle_with(cls.rows, rng);
        for (std::size_t i = 0; i < cls.rows.size(); ++i) {
            if (i < cls.n_train) split.train.push_back(cls.rows[i]);
            else if (i < cls.n_train + cls.n_val) split.validation.push_back(cls.rows[i]);
            else split.test.push_back(cls.rows[i]);
        }
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.validation.begin(), split.validation.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

DatasetSplit split_by_subject(std::span<const std::string> subject_of_row, std::uint64_t seed,
                              double train_frac, double val_frac) {
    std::size_t n = subject_of_row.size();
    if (n < 10) throw TooFewRows("need at least 10 rows to split, got " + std::to_string(n));

    std::map<std::string, std::vector<std::size_t>> rows_of;
    for (std::size_t i = 0; i < n; ++i) rows_of[std::string(subject_of_row[i])].push_back(i);

    std::vector<std::string> subjects;
    for (const auto& [id, rows] : rows_of) subjects.push_back(id);
    Rng rng(derive_seed(seed, 0x5b7));
    shuffle_with(subjects, rng);

    DatasetSplit split;
    split.seed = seed;
    split.stratified = false;

    double target_train = train_frac * static_cast<double>(n);
    double target_val = val_frac * static_cast<double>(n);
    std::size_t got_train = 0, got_val = 0;
    for (const std::string& id : subjects) {
        const auto& rows = rows_of[id];
        if (static_cast<double>(got_train) < target_train) {
            split.train.insert(split.train.end(), rows.begin(), rows.end());
            got_train += rows.size();
        } else if (static_cast<double>(got_val) < target_val) {
            split.validation.insert(split.validation.end(), rows.begin(), rows.end());
            got_val += rows.size();
        } else {
            split.test.insert(split.test.end(), rows.begin(), rows.end());
        }
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.validation.begin(), split.validation.end());
    std::sort(split.test.begin(), split.test.end());
    return split;
}

std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const AnxietyLabel> labels,
                                                       std::span<const std::size_t> rows, int k,
                                                       std::uint64_t seed) {
    if (k < 2) throw ConfigError("k-fold CV needs k >= 2");
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));

    for (int cls = 0; cls < 2; ++cls) {
        std::vector<std::size_t> members;
        for (std::size_t r : rows) {
            if ((labels[r] == AnxietyLabel::A) == (cls == 1)) members.push_back(r);
        }
        Rng rng(derive_seed(seed, 0xf01d, static_cast<std::uint64_t>(cls)));
        shuffle_with(members, rng);
        for (std::size_t i = 0; i < members.size(); ++i) {
            folds[i % static_cast<std::size_t>(k)].push_back(members[i]);
        }
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

}  // namespace anxdet
