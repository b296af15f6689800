#pragma once

#include <optional>
#include <string>

#include "fclda/fclda.hpp"
#include "fclda/fisher.hpp"
#include "fclda/metrics.hpp"

namespace fclda {

/// Serializes a trained model (optionally with evaluation metrics) into a
/// JSON document with a fixed field order, so identical runs are
/// byte-identical on disk.
std::string model_document(const DiscriminantModel& model,
                           const std::optional<MarginReport>& metrics = std::nullopt);

/// Same document shape with criterion "olda"; alpha and the bracket are null.
std::string fisher_document(const FisherModel& model,
                            const std::optional<MarginReport>& metrics = std::nullopt);

void save_document(const std::string& document, const std::string& path);

struct LoadedModel {
    DiscriminantModel model;
    std::string criterion_tag;  // "modified", "perceptron" or "olda"
};

LoadedModel load_model(const std::string& path);

std::string criterion_name(Criterion c);
std::string tolerance_mode_name(ToleranceMode m);
ToleranceMode tolerance_mode_from_name(const std::string& name);

}  // namespace fclda
