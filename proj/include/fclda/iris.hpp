#pragma once

#include <string_view>

#include "fclda/dataset.hpp"

namespace fclda {

/// The canonical 150-row Iris table (Fisher, 1936; UCI distribution),
/// embedded so experiment reproduction needs no external files.
/// Columns: sepal_length, sepal_width, petal_length, petal_width, species.
std::string_view iris_csv();

/// iris_csv() parsed with "species" as the label column.
Dataset iris_dataset();

}  // namespace fclda
