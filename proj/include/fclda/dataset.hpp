#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fclda {

/// Tabular samples with opaque string class tags. Immutable by convention
/// after construction; every accessor is const and nothing mutates in place.
struct Dataset {
    std::vector<std::vector<double>> samples;
    std::vector<std::string> labels;
    std::vector<std::string> feature_names;
    // Distinct labels in class-index order: class_order[0] is class 1,
    // class_order[1] is class 2. Populated in encounter order by the loaders
    // and pinned explicitly by select_binary.
    std::vector<std::string> class_order;

    std::size_t size() const { return samples.size(); }
    std::size_t n_features() const { return feature_names.size(); }
};

/// Augmented, sign-reflected view of a binary dataset: class-1 rows become
/// (1, x), class-2 rows become (-1, -x), so correct classification of every
/// sample reads v . y > 0.
struct ReflectedDataset {
    std::vector<std::vector<double>> reflected;  // (p+1)-dimensional rows
    std::vector<int> class_of;                   // 1 or 2, aligned with reflected
    Dataset originals;

    std::size_t size() const { return reflected.size(); }
    std::size_t dim() const { return reflected.empty() ? 0 : reflected.front().size(); }
};

/// Parses CSV text: first row is the header, one label column, all other
/// columns numeric. Errors name the offending row and column.
Dataset parse_csv(std::string_view text, const std::string& label_column = "label");

/// Reads a CSV file through parse_csv. Throws on a missing file.
Dataset load_csv(const std::string& path, const std::string& label_column = "label");

/// Writes a Dataset as CSV with 17-significant-digit floats, so that
/// load_csv(write_csv(ds)) round-trips exactly.
void write_csv(const Dataset& ds, const std::string& path);
std::string to_csv(const Dataset& ds);

/// Restricts ds to the two given labels and the named feature columns,
/// preserving row order. class_a becomes class 1, class_b class 2.
Dataset select_binary(const Dataset& ds, const std::string& class_a, const std::string& class_b,
                      const std::vector<std::string>& features);

/// Builds the reflected sample set; requires exactly two classes.
ReflectedDataset augment_reflect(const Dataset& ds);

/// Two isotropic Gaussian clouds, one per class, deterministic for a fixed
/// seed (the normal sampler is hand-rolled so runs are bit-identical across
/// platforms).
Dataset synthetic_two_gaussians(std::size_t n_per_class, const std::vector<double>& mean1,
                                const std::vector<double>& mean2, double stddev,
                                std::uint64_t seed);

}  // namespace fclda
