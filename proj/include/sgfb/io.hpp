#pragma once

#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "sgfb/experiments.hpp"
#include "sgfb/filterbank.hpp"

namespace sgfb {

// All text formats use 17 significant digits so values round-trip exactly.
std::string format_double(double v);

// Signal file: one real per line, line i = vertex i.
Eigen::VectorXd read_signal_file(const std::string& path);
void write_signal_file(const std::string& path, const Eigen::VectorXd& f);

// Subband CSV: header "d_lp,d_hp", n/2 rows.
void write_subbands_csv(const std::string& path, const SubbandCoefficients& sub);
SubbandCoefficients read_subbands_csv(const std::string& path);

// NLA curve CSV: header "fraction,snr_db".
void write_nla_csv(const std::string& path, const NlaCurve& curve);
NlaCurve read_nla_csv(const std::string& path);

// Kernel spec JSON: {design, lambda_cut, epsilon?, beta?, values?}.
nlohmann::json kernel_to_json(const FilterKernel& k);
FilterKernel kernel_from_json(const nlohmann::json& j, const SpectralBasis& basis);

nlohmann::json denoise_result_to_json(const DenoiseResult& result, const std::string& method,
                                      const std::string& graph, const std::string& per_run_path);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace sgfb
