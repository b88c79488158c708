// linf-embed: generate, embed, verify and inspect finite metric spaces in l-infinity.
//
// Exit codes: 0 success or verified, 1 verification failure or counterexample,
// 2 malformed input or usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "linf/embedder.hpp"
#include "linf/io.hpp"
#include "linf/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kMalformed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  body(out);
  if (!out) throw UsageError("failed writing " + path);
}

int run_gen(const std::string& family_name, std::size_t n, std::uint64_t seed, const std::string& out_path) {
  auto family = linf::parse_family(family_name);
  if (!family) throw UsageError("unknown color '" + family_name + "'");
  const auto ms = linf::generate(*family, n, seed);
  write_file(out_path, [&](std::ostream& out) { linf::write_metric(out, ms); });
  std::cout << "wrote " << to_string(*family) << " space on " << n << " points to " << out_path << "\n";
  return kOk;
}

struct EmbedArgs {
  std::string in, out, cover_out, metric_out, strategy = "construction", epsilon;
  std::size_t gain = 1;
  std::uint64_t seed = 0;
};

int run_embed(const EmbedArgs& args) {
  const auto ms = linf::load_metric(args.in);
  linf::EmbedOptions options;
  options.gain = args.gain;
  options.seed = args.seed;
  auto strategy = linf::parse_strategy(args.strategy);
  if (!strategy) throw UsageError("unknown strategy '" + args.strategy + "'");
  options.strategy = *strategy;
  if (!args.epsilon.empty()) {
    options.epsilon = linf::parse_rational(args.epsilon);
    if (*options.epsilon <= 0) throw UsageError("epsilon must be positive");
  }

  const auto result = linf::embed_with_gain(ms, options);
  write_file(args.out, [&](std::ostream& out) { linf::write_embedding(out, result.embedding); });
  if (!args.cover_out.empty())
    write_file(args.cover_out, [&](std::ostream& out) { linf::write_cover(out, result.metric, result.cover); });
  if (!args.metric_out.empty())
    write_file(args.metric_out, [&](std::ostream& out) { linf::write_metric(out, result.metric); });
  std::cout << result.report.summary();
  return kOk;
}

int run_verify(const std::string& metric_path, const std::string& embedding_path) {
  const auto ms = linf::load_metric(metric_path);
  const auto e = linf::load_embedding(embedding_path);
  linf::EmbeddingReport report;
  try {
    report = linf::verify_embedding(ms, e);
  } catch (const linf::DimensionMismatch& err) {
    throw UsageError(err.what());
  }
  if (report.isometric) {
    std::cout << "isometric, k=" << e.k << ", n=" << e.n << "\n";
    return kOk;
  }
  std::cout << "not isometric, k=" << e.k << ", n=" << e.n << ": pair (" << report.witness->a << ","
            << report.witness->b << ") has l-inf distance " << linf::format_rational(report.achieved)
            << ", metric distance " << linf::format_rational(report.expected) << "\n";
  std::cout << "max deviation " << linf::format_rational(report.max_deviation) << "\n";
  return kFailed;
}

int run_color(const std::string& in, const std::vector<std::size_t>& quad, std::size_t find_mono) {
  const auto ms = linf::load_metric(in);
  if (!quad.empty()) {
    if (quad.size() != 4) throw UsageError("--quad takes four indices");
    linf::Quadruple q{quad[0], quad[1], quad[2], quad[3]};
    if (!(q[0] < q[1] && q[1] < q[2] && q[2] < q[3] && q[3] < ms.size()))
      throw UsageError("--quad needs strictly increasing indices below n");
    const auto sums = linf::quad_sums(ms, q);
    const auto color = linf::classify(sums);
    std::cout << (color ? to_string(*color) : std::string("tied")) << "\n";
    std::cout << "R1 = " << linf::format_rational(sums.r1) << "\nR2 = " << linf::format_rational(sums.r2)
              << "\nR3 = " << linf::format_rational(sums.r3) << "\n";
    return color ? kOk : kFailed;
  }
  if (find_mono > 0) {
    if (find_mono < 4 || find_mono > ms.size()) throw UsageError("--find-mono needs 4 <= K <= n");
    const auto found = linf::find_monochromatic(ms, find_mono);
    if (!found.subset) {
      std::cout << "no monochromatic subset of size " << find_mono
                << (found.exhaustive ? " (exhaustive search)" : " found (heuristic search, not a proof)") << "\n";
      return kFailed;
    }
    std::cout << "color " << to_string(*found.color) << ", subset";
    for (auto p : *found.subset) std::cout << " " << p;
    std::cout << "\n";
    return kOk;
  }
  const auto report = linf::mono_color(ms);
  if (report.vacuous) {
    std::cout << "fewer than 4 points: monochromatic (vacuous)\n";
    return kOk;
  }
  for (auto c : linf::kAllColors)
    std::cout << to_string(c) << " " << report.histogram[static_cast<std::size_t>(c)] << "\n";
  std::cout << (report.mono ? "monochromatic " + to_string(*report.mono) : std::string("not monochromatic")) << "\n";
  return kOk;
}

int run_exact_m(const std::string& in, std::optional<std::size_t> max_k) {
  const auto ms = linf::load_metric(in);
  const std::size_t k_max = max_k.value_or(ms.size() > 1 ? ms.size() - 1 : 1);
  linf::OracleResult result;
  try {
    result = linf::exact_m(ms, k_max);
  } catch (const linf::GuardExceeded& err) {
    throw UsageError(err.what());
  }
  if (!result.m) {
    std::cout << "m > " << k_max << "\n";
    return kOk;
  }
  std::cout << "m = " << *result.m << "\n";
  for (std::size_t i = 0; i < result.partition.size(); ++i) {
    std::cout << "part " << i << ":";
    for (const auto& [a, b] : result.partition[i]) std::cout << " " << a << "-" << b;
    std::cout << "\n";
  }
  return kOk;
}

int run_certificate(std::uint64_t trials, std::uint64_t seed) {
  bool ok = true;
  for (auto color : {linf::QuadColor::c213, linf::QuadColor::c312}) {
    const auto cert = linf::impossibility_certificate(color);
    std::cout << cert.describe();
    ok = ok && cert.identity_holds;
  }
  const auto search = linf::random_five_point_search(trials, seed);
  const auto bad = search.monochromatic_213 + search.monochromatic_312;
  std::cout << bad << "/" << trials << " random 5-point spaces monochromatic 213/312\n";
  return ok && bad == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometric embeddings of finite metric spaces into l-infinity"};
  app.require_subcommand(1);

  std::string gen_color, gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a metric space");
  gen->add_option("--color", gen_color, "321, 132, 123, 231 or random")->required();
  gen->add_option("--n", gen_n, "Number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Output metric file")->required();

  EmbedArgs embed_args;
  auto* embed = app.add_subcommand("embed", "Embed a metric space with a dimension gain");
  embed->add_option("--in", embed_args.in, "Input metric file")->required();
  embed->add_option("--gain", embed_args.gain, "Requested gain c")->required()->check(CLI::PositiveNumber);
  embed->add_option("--strategy", embed_args.strategy, "construction, greedy or frechet");
  embed->add_option("--epsilon", embed_args.epsilon, "Perturbation size p/q");
  embed->add_option("--seed", embed_args.seed, "Random seed");
  embed->add_option("--out", embed_args.out, "Output embedding file")->required();
  embed->add_option("--cover-out", embed_args.cover_out, "Write the covering functions");
  embed->add_option("--metric-out", embed_args.metric_out, "Write the metric actually embedded");

  std::string verify_metric, verify_embedding;
  auto* verify = app.add_subcommand("verify", "Check that an embedding is isometric");
  verify->add_option("--metric", verify_metric, "Metric file")->required();
  verify->add_option("--embedding", verify_embedding, "Embedding file")->required();

  std::string color_in;
  std::vector<std::size_t> color_quad;
  std::size_t color_find = 0;
  auto* color = app.add_subcommand("color", "Quadruple colors");
  color->add_option("--in", color_in, "Metric file")->required();
  color->add_option("--quad", color_quad, "Four increasing point indices")->expected(4);
  color->add_option("--find-mono", color_find, "Search for a monochromatic subset of this size");

  std::string exact_in;
  std::optional<std::size_t> exact_max;
  auto* exact = app.add_subcommand("exact-m", "Exact minimal dimension (n <= 7)");
  exact->add_option("--in", exact_in, "Metric file")->required();
  exact->add_option("--max-k", exact_max, "Largest dimension to try");

  std::uint64_t cert_trials = 1000, cert_seed = 0;
  auto* certificate = app.add_subcommand("lemma4", "Certificate that 213 and 312 cannot be monochromatic on 5 points");
  certificate->add_option("--trials", cert_trials, "Random 5-point spaces to test");
  certificate->add_option("--seed", cert_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*gen) return run_gen(gen_color, gen_n, gen_seed, gen_out);
    if (*embed) return run_embed(embed_args);
    if (*verify) return run_verify(verify_metric, verify_embedding);
    if (*color) return run_color(color_in, color_quad, color_find);
    if (*exact) return run_exact_m(exact_in, exact_max);
    if (*certificate) return run_certificate(cert_trials, cert_seed);
  } catch (const linf::VerificationFailed& e) {
    std::cout << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const linf::ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const linf::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const linf::MetricError& e) {
    std::cerr << "invalid metric: " << e.what() << "\n";
    return kMalformed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kMalformed;
}
