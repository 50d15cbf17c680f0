// sgfb: two-channel spline graph filter bank with spectral sampling.
// Subcommands: gen-graph, gen-signal, prcheck, roundtrip, analyze, nla, denoise.
// Exit codes: 0 success, 1 computation/PR failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgfb/experiments.hpp"
#include "sgfb/filterbank.hpp"
#include "sgfb/graph.hpp"
#include "sgfb/io.hpp"
#include "sgfb/vertex_bank.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(sgfb::ErrorCode code) {
  switch (code) {
    case sgfb::ErrorCode::InvalidArgument:
    case sgfb::ErrorCode::OddVertexCount:
    case sgfb::ErrorCode::LengthMismatch:
    case sgfb::ErrorCode::FractionOutOfRange:
    case sgfb::ErrorCode::IndexOutOfRange:
    case sgfb::ErrorCode::CutoffOutOfRange:
    case sgfb::ErrorCode::IoError:
      return true;
    default:
      return false;
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SGFB_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

// Kernel spec shorthand:
//   exact-ideal
//   ideal:<lambda_cut|auto>[:<epsilon>]      (auto = lambda_{n/2-1}, eps default 0.1)
//   butterworth:<beta>[:<lambda_cut|auto>]
//   json:<path>
sgfb::FilterKernel parse_kernel(const std::string& spec, const sgfb::SpectralBasis& basis) {
  const int n = basis.size();
  auto auto_cut = [&] { return basis.eigenvalues(n / 2 - 1); };
  if (spec == "exact-ideal") return sgfb::design_exact_ideal_kernel(basis);

  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw sgfb::Error(sgfb::ErrorCode::InvalidArgument, "empty kernel spec");

  if (parts[0] == "json" && parts.size() == 2)
    return sgfb::kernel_from_json(sgfb::read_json_file(parts[1]), basis);
  if (parts[0] == "ideal") {
    double cut = (parts.size() > 1 && parts[1] != "auto") ? std::stod(parts[1]) : auto_cut();
    double eps = parts.size() > 2 ? std::stod(parts[2])
                                  : (cut >= auto_cut() ? 0.0 : 0.1);
    return sgfb::design_ideal_kernel(basis, cut, eps);
  }
  if (parts[0] == "butterworth") {
    if (parts.size() < 2)
      throw sgfb::Error(sgfb::ErrorCode::InvalidArgument, "butterworth needs an order");
    int beta = std::stoi(parts[1]);
    double cut = (parts.size() > 2 && parts[2] != "auto") ? std::stod(parts[2]) : auto_cut();
    return sgfb::design_butterworth_kernel(basis, cut, beta);
  }
  throw sgfb::Error(sgfb::ErrorCode::InvalidArgument, "unknown kernel spec '" + spec + "'");
}

void write_manifest(const std::string& primary_output, const json& manifest) {
  sgfb::write_json_file(primary_output + ".manifest.json", manifest);
}

json base_manifest(const std::string& command, int argc, char** argv) {
  json m;
  m["command"] = command;
  std::string full;
  for (int i = 0; i < argc; ++i) {
    if (i) full += ' ';
    full += argv[i];
  }
  m["argv"] = full;
  return m;
}

struct BankSetup {
  sgfb::Graph graph;
  sgfb::SpectralBasis basis;
  sgfb::FilterKernel kernel;
};

BankSetup load_bank(const std::string& graph_path, const std::string& laplacian,
                    const std::string& kernel_spec) {
  sgfb::Graph g = sgfb::read_edge_list_file(graph_path);
  const auto kind = sgfb::laplacian_kind_from_string(laplacian);
  sgfb::SpectralBasis basis = sgfb::eigendecompose(sgfb::laplacian(g, kind));
  sgfb::FilterKernel kernel = parse_kernel(kernel_spec, basis);
  return {std::move(g), std::move(basis), std::move(kernel)};
}

std::vector<double> parse_fractions(const std::string& spec) {
  // "a:step:b" range or comma-separated list
  std::vector<double> out;
  if (spec.find(',') != std::string::npos) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  }
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() == 3) {
    double a = std::stod(parts[0]), step = std::stod(parts[1]), b = std::stod(parts[2]);
    if (step <= 0.0)
      throw sgfb::Error(sgfb::ErrorCode::InvalidArgument, "fraction step must be positive");
    for (double v = a; v <= b + 1e-12; v += step) out.push_back(v);
    return out;
  }
  out.push_back(std::stod(spec));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-channel spline graph filter bank with spectral sampling"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  // gen-graph
  auto* gen_graph = app.add_subcommand("gen-graph", "Generate a random connected graph");
  std::string gg_type, gg_out;
  int gg_n = 0, gg_knn = 6, gg_communities = 8;
  double gg_p_intra = 0.3, gg_p_inter = 0.01;
  std::uint64_t gg_seed = default_seed();
  gen_graph->add_option("--type", gg_type, "sensor|community")->required();
  gen_graph->add_option("--n", gg_n, "vertex count (even)")->required();
  gen_graph->add_option("--seed", gg_seed, "RNG seed");
  gen_graph->add_option("--knn", gg_knn, "sensor: neighbors per vertex");
  gen_graph->add_option("--communities", gg_communities, "community: number of communities");
  gen_graph->add_option("--p-intra", gg_p_intra, "community: intra edge probability");
  gen_graph->add_option("--p-inter", gg_p_inter, "community: inter edge probability");
  gen_graph->add_option("-o,--output", gg_out, "edge list output path")->required();

  // gen-signal
  auto* gen_signal = app.add_subcommand("gen-signal", "Generate a test signal on a graph");
  std::string gs_graph, gs_kind = "smooth", gs_laplacian = "combinatorial", gs_out;
  double gs_decay = -1.0, gs_width = 5.0;
  int gs_center = -1;
  std::uint64_t gs_seed = default_seed();
  gen_signal->add_option("--graph", gs_graph, "edge list file")->required();
  gen_signal->add_option("--kind", gs_kind, "smooth|localized");
  gen_signal->add_option("--laplacian", gs_laplacian, "combinatorial|normalized");
  gen_signal->add_option("--decay", gs_decay, "smooth: spectral decay (negative = auto)");
  gen_signal->add_option("--center", gs_center, "localized: spectral index (default n/4)");
  gen_signal->add_option("--width", gs_width, "localized: bump width in indices");
  gen_signal->add_option("--seed", gs_seed, "RNG seed");
  gen_signal->add_option("-o,--output", gs_out, "signal output path")->required();

  // prcheck
  auto* prcheck = app.add_subcommand("prcheck", "Check the perfect-reconstruction condition");
  std::string pc_graph, pc_laplacian = "combinatorial", pc_kernel;
  double pc_tol = 1e-8;
  prcheck->add_option("--graph", pc_graph)->required();
  prcheck->add_option("--laplacian", pc_laplacian, "combinatorial|normalized");
  prcheck->add_option("--kernel", pc_kernel, "kernel spec")->required();
  prcheck->add_option("--tol", pc_tol, "PR margin tolerance");

  // roundtrip
  auto* roundtrip = app.add_subcommand("roundtrip", "Analyze + synthesize and report the error");
  std::string rt_graph, rt_laplacian = "combinatorial", rt_kernel, rt_signal, rt_baseline;
  std::string rt_weights = "1.0";
  roundtrip->add_option("--graph", rt_graph)->required();
  roundtrip->add_option("--laplacian", rt_laplacian, "combinatorial|normalized");
  roundtrip->add_option("--kernel", rt_kernel, "kernel spec");
  roundtrip->add_option("--signal", rt_signal, "signal file")->required();
  roundtrip->add_option("--baseline", rt_baseline, "'vertex' runs the vertex-sampling baseline");
  roundtrip->add_option("--weights", rt_weights, "vertex baseline polynomial weights, comma list");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Dump subband coefficients to CSV");
  std::string an_graph, an_laplacian = "combinatorial", an_kernel, an_signal, an_out;
  analyze_cmd->add_option("--graph", an_graph)->required();
  analyze_cmd->add_option("--laplacian", an_laplacian, "combinatorial|normalized");
  analyze_cmd->add_option("--kernel", an_kernel, "kernel spec")->required();
  analyze_cmd->add_option("--signal", an_signal, "signal file")->required();
  analyze_cmd->add_option("-o,--output", an_out, "subband CSV path")->required();

  // nla
  auto* nla = app.add_subcommand("nla", "Nonlinear approximation SNR curve");
  std::string nl_graph, nl_laplacian = "combinatorial", nl_kernel, nl_signal, nl_out;
  std::string nl_fractions = "0.05:0.05:0.5";
  nla->add_option("--graph", nl_graph)->required();
  nla->add_option("--laplacian", nl_laplacian, "combinatorial|normalized");
  nla->add_option("--kernel", nl_kernel, "kernel spec")->required();
  nla->add_option("--signal", nl_signal, "signal file (default: generated smooth signal)");
  nla->add_option("--fractions", nl_fractions, "a:step:b range or comma list");
  nla->add_option("-o,--output", nl_out, "curve CSV path")->required();

  // denoise
  auto* denoise = app.add_subcommand("denoise", "Monte-Carlo hard-threshold denoising");
  std::string dn_graph, dn_laplacian = "combinatorial", dn_kernel, dn_signal, dn_out;
  double dn_sigma = 1.0, dn_threshold = -1.0, dn_scale = 2.5;
  int dn_runs = 1000, dn_threads = 1;
  std::uint64_t dn_seed = default_seed();
  denoise->add_option("--graph", dn_graph)->required();
  denoise->add_option("--laplacian", dn_laplacian, "combinatorial|normalized");
  denoise->add_option("--kernel", dn_kernel, "kernel spec")->required();
  denoise->add_option("--signal", dn_signal, "signal file (default: generated smooth signal)");
  denoise->add_option("--signal-scale", dn_scale,
                      "multiplier applied to the unit-norm signal before adding noise");
  denoise->add_option("--sigma", dn_sigma, "noise standard deviation")->required();
  denoise->add_option("--threshold", dn_threshold, "hard threshold (default 3*sigma)");
  denoise->add_option("--runs", dn_runs, "Monte-Carlo runs");
  denoise->add_option("--seed", dn_seed, "master seed");
  denoise->add_option("--threads", dn_threads, "worker threads (results identical)");
  denoise->add_option("-o,--output", dn_out, "result JSON path")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen_graph->parsed()) {
    if (gg_n % 2 != 0) {
      std::cerr << "error: OddVertexCount: --n must be even for spectral sampling\n";
      return kExitUsage;
    }
    sgfb::Graph g = gg_type == "sensor"
                        ? sgfb::random_sensor_graph(gg_n, gg_seed, {gg_knn})
                        : gg_type == "community"
                              ? sgfb::random_community_graph(gg_n, gg_communities, gg_seed,
                                                             {gg_p_intra, gg_p_inter})
                              : throw sgfb::Error(sgfb::ErrorCode::InvalidArgument,
                                                  "--type must be sensor or community");
    sgfb::write_edge_list_file(gg_out, g);
    json sidecar;
    sidecar["type"] = gg_type;
    sidecar["n"] = gg_n;
    sidecar["seed"] = gg_seed;
    if (gg_type == "sensor") sidecar["knn"] = gg_knn;
    if (gg_type == "community") {
      sidecar["communities"] = gg_communities;
      sidecar["p_intra"] = gg_p_intra;
      sidecar["p_inter"] = gg_p_inter;
    }
    sidecar["edges"] = g.edges().size();
    sgfb::write_json_file(gg_out + ".json", sidecar);
    json m = base_manifest("gen-graph", argc, argv);
    m["graph_source"] = sidecar;
    m["seed"] = gg_seed;
    m["outputs"] = {gg_out, gg_out + ".json"};
    write_manifest(gg_out, m);
    std::cout << "wrote " << gg_out << " (" << g.size() << " vertices, " << g.edges().size()
              << " edges)\n";
    return kExitOk;
  }

  if (gen_signal->parsed()) {
    sgfb::Graph g = sgfb::read_edge_list_file(gs_graph);
    const auto kind = sgfb::laplacian_kind_from_string(gs_laplacian);
    sgfb::SpectralBasis basis = sgfb::eigendecompose(sgfb::laplacian(g, kind));
    sgfb::TestSignal sig =
        gs_kind == "smooth"
            ? sgfb::gen_smooth_signal(basis, gs_decay)
            : gs_kind == "localized"
                  ? sgfb::gen_localized_signal(
                        basis, gs_center < 0 ? basis.size() / 4 : gs_center, gs_width, gs_seed)
                  : throw sgfb::Error(sgfb::ErrorCode::InvalidArgument,
                                      "--kind must be smooth or localized");
    sgfb::write_signal_file(gs_out, sig.values);
    json m = base_manifest("gen-signal", argc, argv);
    m["graph_source"] = gs_graph;
    m["laplacian"] = gs_laplacian;
    m["seed"] = gs_seed;
    m["outputs"] = {gs_out};
    write_manifest(gs_out, m);
    std::cout << "wrote " << gs_out << "\n";
    return kExitOk;
  }

  if (prcheck->parsed()) {
    BankSetup bank = load_bank(pc_graph, pc_laplacian, pc_kernel);
    const auto report = sgfb::pr_check(sgfb::fold_coefficients(bank.kernel), pc_tol);
    std::cout << "margin " << sgfb::format_double(report.margin) << "\n"
              << "worst_pair " << report.worst_pair << "\n"
              << (report.ok ? "ok" : "fail") << "\n";
    return report.ok ? kExitOk : kExitComputation;
  }

  if (roundtrip->parsed()) {
    const Eigen::VectorXd f = sgfb::read_signal_file(rt_signal);
    if (rt_baseline == "vertex") {
      sgfb::Graph g = sgfb::read_edge_list_file(rt_graph);
      if (f.size() != g.size())
        throw sgfb::Error(sgfb::ErrorCode::LengthMismatch, "signal does not match graph size");
      std::vector<double> weights;
      for (double v : parse_fractions(rt_weights)) weights.push_back(v);
      sgfb::SpectralBasis basis =
          sgfb::eigendecompose(sgfb::laplacian(g, sgfb::LaplacianKind::Normalized));
      sgfb::VertexBank bank = sgfb::vs_build(g, weights, sgfb::select_sampling_set(basis));
      const Eigen::VectorXd out = sgfb::vs_roundtrip(bank, f);
      const double err = (out - f).norm() / f.norm();
      std::cout << "relative_error " << sgfb::format_double(err) << "\n";
      return err <= 1e-8 ? kExitOk : kExitComputation;
    }
    if (rt_kernel.empty())
      throw sgfb::Error(sgfb::ErrorCode::InvalidArgument, "--kernel is required");
    BankSetup bank = load_bank(rt_graph, rt_laplacian, rt_kernel);
    if (f.size() != bank.basis.size())
      throw sgfb::Error(sgfb::ErrorCode::LengthMismatch, "signal does not match graph size");
    const auto inv = sgfb::make_synthesis_inverse(bank.kernel);
    const Eigen::VectorXd out =
        sgfb::synthesize(bank.basis, inv, sgfb::analyze(bank.basis, bank.kernel, f));
    const double err = (out - f).norm() / f.norm();
    std::cout << "relative_error " << sgfb::format_double(err) << "\n";
    return err <= 1e-9 ? kExitOk : kExitComputation;
  }

  if (analyze_cmd->parsed()) {
    BankSetup bank = load_bank(an_graph, an_laplacian, an_kernel);
    const Eigen::VectorXd f = sgfb::read_signal_file(an_signal);
    const auto sub = sgfb::analyze(bank.basis, bank.kernel, f);
    sgfb::write_subbands_csv(an_out, sub);
    json m = base_manifest("analyze", argc, argv);
    m["graph_source"] = an_graph;
    m["laplacian"] = an_laplacian;
    m["kernel"] = sgfb::kernel_to_json(bank.kernel);
    m["outputs"] = {an_out};
    write_manifest(an_out, m);
    std::cout << "wrote " << an_out << "\n";
    return kExitOk;
  }

  if (nla->parsed()) {
    BankSetup bank = load_bank(nl_graph, nl_laplacian, nl_kernel);
    const Eigen::VectorXd f = nl_signal.empty()
                                  ? sgfb::gen_smooth_signal(bank.basis).values
                                  : sgfb::read_signal_file(nl_signal);
    const auto curve = sgfb::run_nla(bank.basis, bank.kernel, f, parse_fractions(nl_fractions));
    sgfb::write_nla_csv(nl_out, curve);
    json m = base_manifest("nla", argc, argv);
    m["graph_source"] = nl_graph;
    m["laplacian"] = nl_laplacian;
    m["kernel"] = sgfb::kernel_to_json(bank.kernel);
    m["outputs"] = {nl_out};
    write_manifest(nl_out, m);
    std::cout << "wrote " << nl_out << "\n";
    return kExitOk;
  }

  if (denoise->parsed()) {
    if (dn_runs < 1) {
      std::cerr << "error: InvalidArgument: --runs must be >= 1\n";
      return kExitUsage;
    }
    BankSetup bank = load_bank(dn_graph, dn_laplacian, dn_kernel);
    Eigen::VectorXd f = dn_signal.empty() ? sgfb::gen_smooth_signal(bank.basis).values
                                          : sgfb::read_signal_file(dn_signal);
    f *= dn_scale;
    sgfb::DenoiseConfig cfg;
    cfg.sigma = dn_sigma;
    cfg.threshold = dn_threshold;
    cfg.runs = dn_runs;
    cfg.seed = dn_seed;
    cfg.threads = dn_threads;
    const auto result = sgfb::run_denoise(bank.basis, bank.kernel, f, cfg);

    const std::string per_run_path = dn_out + ".per_run.csv";
    {
      std::ofstream per(per_run_path);
      per << "run,delta_snr_db\n";
      for (std::size_t r = 0; r < result.per_run.size(); ++r)
        per << r << "," << sgfb::format_double(result.per_run[r]) << "\n";
    }
    json j = sgfb::denoise_result_to_json(
        result, std::string("sgfbss-") + (bank.kernel.design == sgfb::KernelDesign::Ideal
                                              ? "ideal"
                                              : "butterworth"),
        dn_graph, per_run_path);
    sgfb::write_json_file(dn_out, j);
    json m = base_manifest("denoise", argc, argv);
    m["graph_source"] = dn_graph;
    m["laplacian"] = dn_laplacian;
    m["kernel"] = sgfb::kernel_to_json(bank.kernel);
    m["seed"] = dn_seed;
    m["outputs"] = {dn_out, per_run_path};
    write_manifest(dn_out, m);
    std::cout << "delta_snr_db " << sgfb::format_double(result.delta_snr_db) << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sgfb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}
