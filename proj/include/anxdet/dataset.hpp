#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "anxdet/types.hpp"

namespace anxdet {

// Row-index partitions of a feature matrix. Disjoint and exhaustive;
// proportions land within one row of the targets overall and within two rows
// per class under stratification.
struct DatasetSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
    std::vector<std::size_t> test;
    std::uint64_t seed = 0;
    bool stratified = true;
};

// Seeded, stratified 50/10/40 split (fractions configurable). Throws
// TooFewRows below 10 rows.
DatasetSplit split_dataset(std::span<const AnxietyLabel> labels, std::uint64_t seed,
                           double train_frac = 0.5, double val_frac = 0.1,
                           bool stratified = true);

// Subject-wise variant: whole subjects are assigned to one partition, filling
// each partition toward its target row count in shuffled subject order. The
// stricter protocol when windows of one subject must not span partitions.
DatasetSplit split_by_subject(std::span<const std::string> subject_of_row, std::uint64_t seed,
                              double train_frac = 0.5, double val_frac = 0.1);

// Stratified k folds over the given rows (used by grid-search CV); fold f of
// row set r is folds[f], folds are disjoint and cover rows.
std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const AnxietyLabel> labels,
                                                       std::span<const std::size_t> rows, int k,
                                                       std::uint64_t seed);

}  // namespace anxdet
