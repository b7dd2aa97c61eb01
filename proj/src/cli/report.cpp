#include <algorithm>
#include <iomanip>
#include <sstream>

#include "clusterlab/cli.hpp"
#include "json.hpp"

namespace clusterlab::cli {

using nlohmann::json;

namespace {

constexpr const char* kEvidenceNote =
    "categories are empirical evidence over the configured dataset family, not proofs over all datasets";

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"family", w->family}, {"weights", w->weights}};
}

const Evidence* first_with(const CategoryReport& r, VerdictStatus status) {
  for (const auto& e : r.evidence) {
    if (e.verdict.status == status) return &e;
  }
  return nullptr;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out.empty() ? "-" : out;
}

std::string witness_sample(const CategoryReport& r) {
  if (const auto* e = first_with(r, VerdictStatus::responsive)) {
    return e->verdict.clustering.to_string() + " removed by " + e->verdict.remove->family + " in " + e->dataset;
  }
  if (const auto* e = first_with(r, VerdictStatus::robust_on_clustering)) {
    return e->verdict.clustering.to_string() + " certified in " + e->dataset;
  }
  return "-";
}

}  // namespace

std::string format_weights(std::span<const double> weights) {
  return json(std::vector<double>(weights.begin(), weights.end())).dump();
}

std::string render_verdict(const AlgorithmHandle& a, const Verdict& v, bool certified, Format format) {
  if (format == Format::records) {
    json j{{"type", "verdict"},
           {"algorithm", a.name()},
           {"clustering", std::vector<int>(v.clustering.labels().begin(), v.clustering.labels().end())},
           {"status", to_string(v.status)},
           {"certified", certified},
           {"trials", v.trials},
           {"maxW", v.max_w},
           {"witnessProduce", witness_json(v.produce)},
           {"witnessRemove", witness_json(v.remove)}};
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "algorithm     " << a.name() << "\n"
      << "clustering    " << v.clustering.to_string() << "\n"
      << "status        " << to_string(v.status) << "\n"
      << "certificate   " << (certified ? "yes" : "no") << "\n"
      << "trials        " << v.trials << "\n"
      << "max W         " << json(v.max_w).dump() << "\n";
  if (v.produce) out << "produce       " << v.produce->family << " " << format_weights(v.produce->weights) << "\n";
  if (v.remove) out << "remove        " << v.remove->family << " " << format_weights(v.remove->weights) << "\n";
  return out.str();
}

std::string render_classification(const ExperimentConfig& config, const std::vector<CategoryReport>& reports,
                                  Format format) {
  if (format == Format::records) {
    std::string out = json{{"type", "classification"},
                           {"note", kEvidenceNote},
                           {"seed", config.seed},
                           {"budget", config.budget},
                           {"rangeSamples", config.range_samples},
                           {"ks", config.ks}}
                          .dump() +
                      "\n";
    for (const auto& r : reports) {
      json j{{"type", "category"},
             {"algorithm", r.algorithm.name()},
             {"mode", r.algorithm.hierarchical() ? "hierarchical" : "partitional"},
             {"family", r.family},
             {"category", to_string(r.category)},
             {"probed", r.probed},
             {"responsive", r.responsive},
             {"certified", r.certified},
             {"inconclusive", r.inconclusive},
             {"rangeSize", r.range_size}};
      if (const auto* e = first_with(r, VerdictStatus::responsive)) {
        j["responsiveSample"] = {{"dataset", e->dataset},
                                 {"k", e->k},
                                 {"clustering", e->verdict.clustering.to_string()},
                                 {"witnessProduce", witness_json(e->verdict.produce)},
                                 {"witnessRemove", witness_json(e->verdict.remove)}};
      }
      if (const auto* e = first_with(r, VerdictStatus::robust_on_clustering)) {
        j["certifiedSample"] = {{"dataset", e->dataset}, {"k", e->k}, {"clustering", e->verdict.clustering.to_string()}};
      }
      if (const auto* e = first_with(r, VerdictStatus::inconclusive)) {
        j["inconclusiveSample"] = {{"dataset", e->dataset}, {"k", e->k}, {"clustering", e->verdict.clustering.to_string()}};
      }
      out += j.dump() + "\n";
    }
    return out;
  }

  std::ostringstream out;
  out << "Weight-response classification\n"
      << "(" << kEvidenceNote << ")\n\n";

  std::vector<Category> rows{Category::sensitive, Category::considering, Category::robust};
  if (std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.category == Category::undetermined; })) {
    rows.push_back(Category::undetermined);
  }
  const auto names = [&](Category c, bool hierarchical) {
    std::vector<std::string> out;
    for (const auto& r : reports) {
      if (r.category == c && r.algorithm.hierarchical() == hierarchical) out.push_back(r.algorithm.name());
    }
    return join(out);
  };
  out << std::left << std::setw(14) << "" << std::setw(42) << "partitional" << "hierarchical\n";
  for (Category c : rows) {
    out << std::setw(14) << to_string(c) << std::setw(42) << names(c, false) << names(c, true) << "\n";
  }

  out << "\n"
      << std::setw(18) << "algorithm" << std::setw(14) << "category" << std::right << std::setw(7) << "probed"
      << std::setw(12) << "responsive" << std::setw(11) << "certified" << std::setw(14) << "inconclusive"
      << std::setw(7) << "range" << "  " << std::left << "sample\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(18) << r.algorithm.name() << std::setw(14) << to_string(r.category) << std::right
        << std::setw(7) << r.probed << std::setw(12) << r.responsive << std::setw(11) << r.certified
        << std::setw(14) << r.inconclusive << std::setw(7) << r.range_size << "  " << std::left << witness_sample(r)
        << "\n";
  }
  return out.str();
}

}  // namespace clusterlab::cli
