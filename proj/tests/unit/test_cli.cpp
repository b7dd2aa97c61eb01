#include <filesystem>

#include "doctest.h"

#include "../support.hpp"
#include "clusterlab/cli.hpp"
#include "clusterlab/dataset_io.hpp"
#include "json.hpp"

using namespace clusterlab;
using namespace clusterlab::cli;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "clusterlab_cli_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::filesystem::path write_line(const TempDir& dir, std::vector<double> xs, const char* name = "line.json") {
  GeneratorSpec spec;
  spec.kind = "line";
  spec.positions = std::move(xs);
  const auto path = dir.path / name;
  write_text_atomically(path, cmd_generate(spec, 1).text);
  return path;
}

std::vector<json> lines_of(const std::string& text) {
  std::vector<json> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    out.push_back(json::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

ExperimentConfig small_config(std::vector<std::string> algorithms, std::string generators) {
  json j{{"algorithms", algorithms}, {"generators", json::parse(generators)}, {"rangeSamples", 20},
         {"randomSamples", 20}};
  return parse_config(j.dump());
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("formats") {
  CHECK(parse_format("table") == Format::table);
  CHECK(parse_format("records") == Format::records);
  CHECK_FALSE(parse_format("csv").has_value());
}

TEST_CASE("generate round trips through the reader") {
  GeneratorSpec spec = parse_generator(R"({"kind":"niceBlocks","k":3,"n":9,"gap":5})");
  const auto text = cmd_generate(spec, 4).text;
  const auto doc = parse_dataset(text);
  CHECK(doc.dataset.n() == 9);
  REQUIRE(doc.planted);
  CHECK(doc.planted->k() == 3);
  CHECK(serialize_dataset(doc) == text);
  CHECK(cmd_generate(spec, 4).text == text);
  CHECK_THROWS_AS(parse_generator(R"({"kind":"spiral"})"), InvalidInput);
  CHECK_THROWS_AS(parse_generator(R"({"k":2})"), InvalidInput);
}

TEST_CASE("run reports clustering, cost and structure") {
  TempDir dir;
  const auto path = write_line(dir, {0, 1, 10, 11});
  const auto rec = lines_of(cmd_run({AlgorithmHandle::parse("kmeans"), path, 2, Format::records}).text);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0]["type"] == "run");
  CHECK(rec[0]["clustering"] == json::array({0, 0, 1, 1}));
  CHECK(rec[0]["cost"] == 1.0);
  CHECK(rec[0]["structure"]["nice"] == true);

  const auto al = lines_of(cmd_run({AlgorithmHandle::parse("average"), path, 2, Format::records}).text);
  CHECK(al[0]["dendrogram"] == "((0,1),(2,3));");
  CHECK(al[0]["clustering"] == json::array({0, 0, 1, 1}));

  const auto table = cmd_run({AlgorithmHandle::parse("kmeans"), path, 2, Format::table}).text;
  CHECK(table.find("{{0,1},{2,3}}") != std::string::npos);
  CHECK_THROWS_AS(cmd_run({AlgorithmHandle::parse("ratiocut"), path, 2, Format::table}), KindMismatch);
  CHECK_THROWS_AS(cmd_run({AlgorithmHandle::parse("kmeans"), dir.path / "missing.json", 2, Format::table}),
                  InvalidInput);
}

TEST_CASE("hierarchical cuts split the highest node") {
  TempDir dir;
  const auto path = write_line(dir, {0, 1, 5, 6, 20});
  const auto rec = lines_of(cmd_run({AlgorithmHandle::parse("single"), path, 2, Format::records}).text);
  CHECK(rec[0]["clustering"] == json::array({0, 0, 0, 0, 1}));
  const auto three = lines_of(cmd_run({AlgorithmHandle::parse("single"), path, 3, Format::records}).text);
  CHECK(three[0]["clustering"] == json::array({0, 0, 1, 1, 2}));
}

TEST_CASE("probe verdicts") {
  TempDir dir;
  const auto path = write_line(dir, {0, 1, 10, 11});
  ProbeRequest request;
  request.algorithm = AlgorithmHandle::parse("kmeans");
  request.dataset = path;
  request.format = Format::records;
  const auto v = lines_of(cmd_probe(request).text)[0];
  CHECK(v["status"] == "responsive");
  CHECK(v["clustering"] == json::array({0, 0, 1, 1}));
  CHECK(v["witnessRemove"]["family"].get<std::string>().starts_with("pairSpike("));

  request.algorithm = AlgorithmHandle::parse("single");
  const auto s = lines_of(cmd_probe(request).text)[0];
  CHECK(s["status"] == "robustOnClustering");
  CHECK(s["certified"] == true);
  CHECK(s["witnessRemove"].is_null());

  request.clustering = std::vector<int>{0, 1};
  CHECK_THROWS_AS(cmd_probe(request), InvalidInput);
}

TEST_CASE("config parsing") {
  const auto d = default_config();
  CHECK(d.algorithms.size() == 12);
  CHECK(d.generators.size() == 8);
  CHECK(d.seed == 1);
  CHECK(d.budget == 2000);

  const auto c = parse_config(
      R"x({"algorithms":["kmeans","divisive(minsum)"],"generators":[{"kind":"line","positions":[0,1,5]},
          {"kind":"custom","file":"data.json"}],"seed":9,"budget":50,"ks":[2],"out":"r.txt"})x",
      "/tmp/base");
  CHECK(c.algorithms.size() == 2);
  CHECK(c.algorithms[1].divisive_base == Objective::minsum);
  CHECK(c.generators[0].positions == std::vector<double>{0, 1, 5});
  CHECK(c.generators[1].file == std::filesystem::path("/tmp/base/data.json"));
  CHECK(c.seed == 9);
  CHECK(c.budget == 50);
  CHECK(c.ks == std::vector<int>{2});
  CHECK(c.out == std::filesystem::path("r.txt"));

  CHECK(parse_config("{}").generators.size() == 8);
  CHECK_THROWS_AS(parse_config("[1]"), InvalidInput);
  CHECK_THROWS_AS(parse_config("{"), InvalidInput);
  CHECK_THROWS_AS(parse_config(R"({"algorithms":[]})"), InvalidInput);
  CHECK_THROWS_AS(parse_config(R"({"algorithms":["nope"]})"), InvalidInput);
  CHECK_THROWS_AS(parse_config(R"({"budget":"many"})"), InvalidInput);
  CHECK_THROWS_AS(read_config("/nonexistent/config.json"), InvalidInput);
}

TEST_CASE("classify records") {
  const auto config = small_config({"kmeans", "single", "ratiocut"},
                                   R"([{"kind":"line","positions":[0,1,2,10,11]},
                                       {"kind":"perfectUniform","k":2,"n":6,"ks":[2]}])");
  const auto text = cmd_classify(config, Format::records).text;
  CHECK(cmd_classify(config, Format::records).text == text);
  const auto rec = lines_of(text);
  REQUIRE(rec.size() == 4);
  CHECK(rec[0]["type"] == "classification");
  CHECK(rec[0]["note"].get<std::string>().find("not proofs") != std::string::npos);
  CHECK(rec[1]["algorithm"] == "kmeans");
  CHECK(rec[1]["category"] == "sensitive");
  CHECK(rec[1].contains("responsiveSample"));
  CHECK(rec[2]["category"] == "robust");
  CHECK(rec[2]["mode"] == "hierarchical");
  CHECK(rec[3]["category"] == "robust");
  CHECK(rec[3]["responsive"] == 0);

  const auto table = cmd_classify(config, Format::table).text;
  CHECK(table.find("sensitive") != std::string::npos);
  CHECK(table.find("undetermined") == std::string::npos);
}

TEST_CASE("seed changes random families but not the verdict shape") {
  auto config = small_config({"kmeans"}, R"([{"kind":"genericRandom","n":6}])");
  const auto a = cmd_classify(config, Format::records).text;
  config.seed = 2;
  const auto b = cmd_classify(config, Format::records).text;
  CHECK(a != b);
  CHECK(lines_of(b)[1]["category"] == "sensitive");
}

TEST_CASE("custom datasets") {
  TempDir dir;
  write_line(dir, {0, 1, 10, 11}, "custom.json");
  const auto config = parse_config(R"({"algorithms":["complete"],"generators":[{"kind":"custom","file":"custom.json"}],
                                       "rangeSamples":10,"randomSamples":10})",
                                   dir.path);
  const auto rec = lines_of(cmd_classify(config, Format::records).text);
  CHECK(rec[1]["category"] == "robust");
}

}
