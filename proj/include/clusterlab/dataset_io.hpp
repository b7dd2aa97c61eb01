#pragma once

// Dataset documents: JSON objects
//   {"kind": "distance"|"similarity", "n": N, "weights": [...],
//    "matrix": [[...], ...]  |  "coords": [[...], ...],
//    "planted": [labels...]?, "generator": "..."?}
// with exactly one of matrix / coords.

#include <filesystem>
#include <optional>
#include <string>

#include "clusterlab/core.hpp"

namespace clusterlab {

struct DatasetDocument {
  WeightedDataset dataset;
  std::optional<Clustering> planted;
  std::string generator;
};

DatasetDocument parse_dataset(const std::string& text);
std::string serialize_dataset(const DatasetDocument& doc);

DatasetDocument read_dataset(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_text_atomically(const std::filesystem::path& path, const std::string& text);

}  // namespace clusterlab
