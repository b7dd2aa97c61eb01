#include "clusterlab/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace clusterlab {

using nlohmann::json;

DatasetDocument parse_dataset(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("dataset is not valid JSON: ") + e.what());
  }
  try {
    const auto kind = parse_table_kind(doc.at("kind").get<std::string>());
    if (!kind) throw InvalidInput("dataset kind must be \"distance\" or \"similarity\"");
    const auto n = doc.at("n").get<std::size_t>();
    auto weights = doc.at("weights").get<std::vector<double>>();
    const bool has_matrix = doc.contains("matrix");
    const bool has_coords = doc.contains("coords");
    if (has_matrix == has_coords) throw InvalidInput("dataset needs exactly one of \"matrix\" and \"coords\"");

    DatasetDocument out{[&] {
      if (has_coords) {
        if (*kind != TableKind::distance) throw InvalidInput("coords datasets are distance datasets");
        auto coords = doc.at("coords").get<Coords>();
        if (coords.size() != n) throw InvalidInput("coords length does not match n");
        return dataset_from_coords(std::move(coords), std::move(weights));
      }
      const auto rows = doc.at("matrix").get<std::vector<std::vector<double>>>();
      if (rows.size() != n) throw InvalidInput("matrix size does not match n");
      return validate_dataset(PairTable(*kind, rows), std::move(weights));
    }(), std::nullopt, doc.value("generator", std::string{})};
    if (doc.contains("planted")) {
      const auto labels = doc.at("planted").get<std::vector<int>>();
      if (labels.size() != n) throw InvalidInput("planted labels length does not match n");
      out.planted = Clustering::from_labels(labels);
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed dataset: ") + e.what());
  }
}

std::string serialize_dataset(const DatasetDocument& doc) {
  const WeightedDataset& ds = doc.dataset;
  json out;
  out["kind"] = to_string(ds.kind());
  out["n"] = ds.n();
  out["weights"] = std::vector<double>(ds.weights().begin(), ds.weights().end());
  if (ds.has_coords()) {
    out["coords"] = ds.coords();
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < ds.n(); ++i) rows.push_back(std::vector<double>(ds.table().row(i).begin(), ds.table().row(i).end()));
    out["matrix"] = std::move(rows);
  }
  if (doc.planted) out["planted"] = std::vector<int>(doc.planted->labels().begin(), doc.planted->labels().end());
  if (!doc.generator.empty()) out["generator"] = doc.generator;
  return out.dump() + "\n";
}

DatasetDocument read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open dataset file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

void write_text_atomically(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace clusterlab
