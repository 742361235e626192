#include "mtdchain/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mtdchain {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kOrientation = "rows=to,columns=from";
constexpr std::string_view kLayout = "column-major";

}  // namespace

std::string model_to_json(const MtdModel& model) {
  json doc;
  doc["format"] = kModelFormat;
  doc["version"] = kModelVersion;
  doc["order"] = model.order();
  doc["states"] = model.space().labels();
  doc["orientation"] = kOrientation;
  doc["layout"] = kLayout;
  doc["lambda"] = model.lambda();
  json mats = json::array();
  for (const auto& q : model.transition_matrices()) {
    const auto d = q.probs.data();
    mats.push_back({{"lag", q.lag}, {"values", std::vector<double>(d.begin(), d.end())}});
  }
  doc["transition_matrices"] = std::move(mats);
  const auto xhat = model.stationary_hat().probs();
  doc["stationary_hat"] = std::vector<double>(xhat.begin(), xhat.end());
  doc["lp_residual"] = model.lp_residual();
  return doc.dump(2) + "\n";
}

MtdModel model_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != kModelFormat) {
      throw Error(Errc::MalformedModel, "not an mtdchain model document");
    }
    if (doc.at("version").get<int>() != kModelVersion) {
      throw Error(Errc::MalformedModel, "unsupported model version");
    }
    if (doc.at("orientation").get<std::string>() != kOrientation ||
        doc.at("layout").get<std::string>() != kLayout) {
      throw Error(Errc::MalformedModel, "unsupported matrix orientation or layout");
    }
    StateSpace space(doc.at("states").get<std::vector<std::string>>());
    const std::size_t m = space.size();
    const auto order = doc.at("order").get<std::size_t>();

    std::vector<TransitionMatrix> qs;
    for (const auto& entry : doc.at("transition_matrices")) {
      TransitionMatrix q{entry.at("lag").get<std::size_t>(), SquareMatrix<double>(m)};
      const auto values = entry.at("values").get<std::vector<double>>();
      if (values.size() != m * m) throw Error(Errc::MalformedModel, "matrix has wrong number of values");
      for (State from = 0; from < m; ++from) {
        for (State to = 0; to < m; ++to) q.probs(to, from) = values[from * m + to];
      }
      qs.push_back(std::move(q));
    }
    if (qs.size() != order) throw Error(Errc::MalformedModel, "matrix count differs from order");

    return MtdModel(std::move(space), std::move(qs), doc.at("lambda").get<std::vector<double>>(),
                    Distribution(doc.at("stationary_hat").get<std::vector<double>>()),
                    doc.at("lp_residual").get<double>());
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedModel, std::string("malformed model document: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedModel) throw;
    throw Error(Errc::MalformedModel, std::string("invalid model: ") + e.what());
  }
}

void save_model(const MtdModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << model_to_json(model);
  if (!out) throw Error(Errc::Io, "failed writing " + path.string());
}

MtdModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace mtdchain
