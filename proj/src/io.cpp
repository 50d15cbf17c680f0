#include "sgfb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sgfb {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::VectorXd read_signal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    values.push_back(std::stod(line));
  }
  Eigen::VectorXd f(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) f(i) = values[i];
  return f;
}

void write_signal_file(const std::string& path, const Eigen::VectorXd& f) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  for (int i = 0; i < f.size(); ++i) out << format_double(f(i)) << "\n";
}

void write_subbands_csv(const std::string& path, const SubbandCoefficients& sub) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << "d_lp,d_hp\n";
  for (int i = 0; i < sub.half_size(); ++i)
    out << format_double(sub.d_lp(i)) << "," << format_double(sub.d_hp(i)) << "\n";
}

SubbandCoefficients read_subbands_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "d_lp,d_hp")
    throw Error(ErrorCode::IoError, "bad subband CSV header in " + path);
  std::vector<double> lp, hp;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::IoError, "bad CSV row in " + path);
    lp.push_back(std::stod(line.substr(0, comma)));
    hp.push_back(std::stod(line.substr(comma + 1)));
  }
  SubbandCoefficients sub;
  sub.d_lp = Eigen::Map<Eigen::VectorXd>(lp.data(), lp.size());
  sub.d_hp = Eigen::Map<Eigen::VectorXd>(hp.data(), hp.size());
  return sub;
}

void write_nla_csv(const std::string& path, const NlaCurve& curve) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << "fraction,snr_db\n";
  for (std::size_t i = 0; i < curve.fractions.size(); ++i)
    out << format_double(curve.fractions[i]) << "," << format_double(curve.snr_db[i]) << "\n";
}

NlaCurve read_nla_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != "fraction,snr_db")
    throw Error(ErrorCode::IoError, "bad NLA CSV header in " + path);
  NlaCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::IoError, "bad CSV row in " + path);
    curve.fractions.push_back(std::stod(line.substr(0, comma)));
    curve.snr_db.push_back(std::stod(line.substr(comma + 1)));
  }
  return curve;
}

nlohmann::json kernel_to_json(const FilterKernel& k) {
  nlohmann::json j;
  switch (k.design) {
    case KernelDesign::Ideal:
      j["design"] = "ideal";
      j["lambda_cut"] = k.lambda_cut;
      j["epsilon"] = k.epsilon;
      break;
    case KernelDesign::Butterworth:
      j["design"] = "butterworth";
      j["lambda_cut"] = k.lambda_cut;
      j["beta"] = k.beta;
      break;
    case KernelDesign::Custom:
      j["design"] = "custom";
      j["values"] = std::vector<double>(k.values.data(), k.values.data() + k.size());
      break;
  }
  return j;
}

FilterKernel kernel_from_json(const nlohmann::json& j, const SpectralBasis& basis) {
  const std::string design = j.at("design").get<std::string>();
  if (design == "ideal") {
    return design_ideal_kernel(basis, j.at("lambda_cut").get<double>(),
                               j.value("epsilon", 0.0));
  }
  if (design == "butterworth") {
    return design_butterworth_kernel(basis, j.at("lambda_cut").get<double>(),
                                     j.at("beta").get<int>());
  }
  if (design == "custom") {
    const auto values = j.at("values").get<std::vector<double>>();
    if (static_cast<int>(values.size()) != basis.size())
      throw Error(ErrorCode::LengthMismatch, "custom kernel length does not match basis");
    FilterKernel k;
    k.design = KernelDesign::Custom;
    k.values = Eigen::Map<const Eigen::VectorXd>(values.data(), values.size());
    return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown kernel design '" + design + "'");
}

nlohmann::json denoise_result_to_json(const DenoiseResult& result, const std::string& method,
                                      const std::string& graph,
                                      const std::string& per_run_path) {
  nlohmann::json j;
  j["method"] = method;
  j["graph"] = graph;
  j["sigma"] = result.config.sigma;
  j["threshold"] = result.config.effective_threshold();
  j["runs"] = result.config.runs;
  j["seed"] = result.config.seed;
  j["delta_snr_db"] = result.delta_snr_db;
  j["per_run_path"] = per_run_path;
  return j;
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace sgfb
