// Command-line front end: detect, threshold, sweep, bench, synth.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 precondition violation.
// Diagnostics go to stderr; stdout and output files carry only results.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "entedge/bench.hpp"
#include "entedge/pgm.hpp"
#include "entedge/pipeline.hpp"
#include "entedge/synth.hpp"

namespace {

using namespace entedge;

// A flag value that does not have the documented shape. Distinct from the
// library's precondition errors, which exit with 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parseIntPair(const std::string& text, char sep, const char* what) {
  const auto pos = text.find(sep);
  std::size_t firstEnd = 0;
  std::size_t secondEnd = 0;
  try {
    if (pos == std::string::npos) throw std::invalid_argument("");
    const int a = std::stoi(text.substr(0, pos), &firstEnd);
    const int b = std::stoi(text.substr(pos + 1), &secondEnd);
    if (firstEnd != pos || secondEnd != text.size() - pos - 1) {
      throw std::invalid_argument("");
    }
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " '" + text + "' is not of the form A" + sep + "B");
  }
}

std::pair<int, int> parseSize(const std::string& text) {
  return parseIntPair(text, 'x', "size");
}

std::pair<int, int> parseGrid(const std::string& text) {
  return parseIntPair(text, 'x', "grid");
}

std::pair<int, int> parseRange(const std::string& text) {
  return parseIntPair(text, ':', "range");
}

std::vector<int> parseInitList(const std::string& text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t end = 0;
      values.push_back(std::stoi(token, &end));
      if (end != token.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("init list entry '" + token + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

void printReportLine(const std::vector<ThresholdReport>& reports) {
  std::string line = "T:";
  for (const auto& r : reports) line += ' ' + std::to_string(r.finalT);
  line += " ; iters:";
  for (const auto& r : reports) line += ' ' + std::to_string(r.iterations);
  std::cout << line << '\n';
}

void warnDegenerate(const std::vector<ThresholdReport>& reports) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].degenerate) {
      std::cerr << "note: region " << i << " is single-class; threshold kept at "
                << reports[i].finalT << "\n";
    }
    if (!reports[i].converged) {
      std::cerr << "warning: region " << i << " did not converge within the iteration cap\n";
    }
  }
}

std::string reportCsv(const std::vector<ThresholdReport>& reports) {
  std::string out = "region,init_t,final_t,iterations,pixel_visits,converged,degenerate\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out += std::to_string(i) + ',' + std::to_string(r.initT) + ',' +
           std::to_string(r.finalT) + ',' + std::to_string(r.iterations) + ',' +
           std::to_string(r.pixelVisits) + ',' + (r.converged ? "true" : "false") + ',' +
           (r.degenerate ? "true" : "false") + '\n';
  }
  return out;
}

struct DetectOptions {
  std::string input;
  std::string output;
  std::string grid = "2x2";
  std::string initRange = "80:140";
  std::uint64_t seed = 0;
  std::string initT;
  std::string mode = "count";
  double entropyThreshold = 0.2441;
  std::string border = "zero";
  std::string report;
  bool parallel = false;
};

PipelineConfig makePipelineConfig(const DetectOptions& opt) {
  PipelineConfig cfg;
  std::tie(cfg.gridRows, cfg.gridCols) = parseGrid(opt.grid);
  std::tie(cfg.threshold.initLow, cfg.threshold.initHigh) = parseRange(opt.initRange);
  cfg.seed = opt.seed;
  cfg.edge.mode = opt.mode == "entropy" ? EdgeMode::entropyRule : EdgeMode::countRule;
  cfg.edge.entropyThreshold = opt.entropyThreshold;
  cfg.edge.border = opt.border == "copy" ? BorderPolicy::copyBinary : BorderPolicy::zeroBorder;
  cfg.parallel = opt.parallel;
  if (!opt.initT.empty()) cfg.regionInits = parseInitList(opt.initT);
  return cfg;
}

void runDetect(const DetectOptions& opt) {
  const GrayImage img = readPgmFile(opt.input);
  const PipelineConfig cfg = makePipelineConfig(opt);
  const PipelineResult result = runPipeline(img, cfg);

  writePgmFile(opt.output, binaryToGray(result.edges));
  if (!opt.report.empty()) writeTextFile(opt.report, reportCsv(result.regionReports));
  warnDegenerate(result.regionReports);
  printReportLine(result.regionReports);
}

struct ThresholdOptions {
  std::string input;
  std::string grid = "2x2";
  std::string initRange = "80:140";
  std::uint64_t seed = 0;
  std::string initT;
};

void runThreshold(const ThresholdOptions& opt) {
  const GrayImage img = readPgmFile(opt.input);
  const auto [rows, cols] = parseGrid(opt.grid);
  const auto [lo, hi] = parseRange(opt.initRange);

  const auto parts = splitRegions(img, rows, cols);
  std::vector<int> inits;
  if (!opt.initT.empty()) {
    inits = parseInitList(opt.initT);
    if (inits.size() != parts.size()) {
      throw std::invalid_argument("got " + std::to_string(inits.size()) +
                                  " explicit inits for " + std::to_string(parts.size()) +
                                  " regions");
    }
  }

  std::vector<ThresholdReport> reports;
  reports.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ThresholdConfig tc;
    tc.initLow = lo;
    tc.initHigh = hi;
    if (!inits.empty()) tc.explicitInit = inits[i];
    Rng rng = regionRng(opt.seed, i);
    reports.push_back(iterativeThreshold(parts[i].first, tc, rng));
  }

  warnDegenerate(reports);
  printReportLine(reports);
}

struct SweepOptions {
  std::string input;
  std::string range = "0:255";
  std::string out;
};

void runSweep(const SweepOptions& opt) {
  const GrayImage img = readPgmFile(opt.input);
  const auto [lo, hi] = parseRange(opt.range);
  writeTextFile(opt.out, writeCsv(sweepInit(img, lo, hi)));
}

struct BenchOptions {
  std::string input;
  int seeds = 10;
  int reps = 5;
  std::string out;
};

void runBench(const BenchOptions& opt) {
  if (opt.seeds < 1) throw std::invalid_argument("--seeds must be positive");
  const GrayImage img = readPgmFile(opt.input);

  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(opt.seeds));
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
  const auto rows = comparePipelines(img, seeds, opt.reps);
  writeTextFile(opt.out, writeCsv(rows));

  double baselineVisits = 0.0;
  double proposedVisits = 0.0;
  for (const CompareRow& row : rows) {
    (row.variant == Variant::baseline ? baselineVisits : proposedVisits) +=
        static_cast<double>(row.totalPixelVisits);
  }
  char line[128];
  std::snprintf(line, sizeof line, "mean_pixel_visits: baseline=%.1f proposed=%.1f\n",
                baselineVisits / opt.seeds, proposedVisits / opt.seeds);
  std::cout << line;
}

struct SynthOptions {
  std::string kind;
  std::string size;
  std::uint64_t seed = 0;
  std::string out;
  int value = 128;
  int cell = 8;
  int lo = 0;
  int hi = 255;
  double mu1 = 60.0;
  double mu2 = 180.0;
  double sigma = 20.0;
  double mix = 0.5;
};

std::uint8_t toIntensity(int v, const char* what) {
  if (v < 0 || v > 255) {
    throw std::out_of_range(std::string(what) + " " + std::to_string(v) +
                            " is outside [0,255]");
  }
  return static_cast<std::uint8_t>(v);
}

void runSynth(const SynthOptions& opt) {
  const auto [w, h] = parseSize(opt.size);
  std::optional<GrayImage> img;
  if (opt.kind == "constant") {
    img = genConstant(w, h, toIntensity(opt.value, "--value"));
  } else if (opt.kind == "checkerboard") {
    img = genCheckerboard(w, h, opt.cell, toIntensity(opt.lo, "--lo"),
                          toIntensity(opt.hi, "--hi"));
  } else {
    img = genBimodal(w, h, opt.mu1, opt.mu2, opt.sigma, opt.mix, opt.seed);
  }
  writePgmFile(opt.out, *img);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy-based edge detection for 8-bit grayscale PGM images"};
  app.require_subcommand(1);

  DetectOptions detect;
  CLI::App* detectCmd =
      app.add_subcommand("detect", "Threshold per region, reassemble, and detect edges");
  detectCmd->add_option("--input", detect.input, "Input PGM (P2 or P5)")->required();
  detectCmd->add_option("--output", detect.output, "Edge map PGM ({0,255})")->required();
  detectCmd->add_option("--grid", detect.grid, "Region grid RxC (default 2x2)");
  detectCmd->add_option("--init-range", detect.initRange,
                        "Random init range LO:HI (default 80:140)");
  detectCmd->add_option("--seed", detect.seed, "Random seed (default 0)");
  detectCmd->add_option("--init-t", detect.initT,
                        "Explicit comma-separated inits, one per region; disables randomness");
  detectCmd->add_option("--mode", detect.mode, "Edge rule: count or entropy")
      ->check(CLI::IsMember({"count", "entropy"}));
  detectCmd->add_option("--entropy-threshold", detect.entropyThreshold,
                        "Entropy cutoff in nats (default 0.2441)");
  detectCmd->add_option("--border", detect.border, "Border policy: zero or copy")
      ->check(CLI::IsMember({"zero", "copy"}));
  detectCmd->add_option("--report", detect.report, "Optional per-region report CSV");
  detectCmd->add_flag("--parallel", detect.parallel, "Threshold regions concurrently");
  detectCmd->callback([&detect] { runDetect(detect); });

  ThresholdOptions threshold;
  CLI::App* thresholdCmd =
      app.add_subcommand("threshold", "Per-region thresholds only, no edge detection");
  thresholdCmd->add_option("--input", threshold.input, "Input PGM (P2 or P5)")->required();
  thresholdCmd->add_option("--grid", threshold.grid, "Region grid RxC (default 2x2)");
  thresholdCmd->add_option("--init-range", threshold.initRange,
                           "Random init range LO:HI (default 80:140)");
  thresholdCmd->add_option("--seed", threshold.seed, "Random seed (default 0)");
  thresholdCmd->add_option("--init-t", threshold.initT,
                           "Explicit comma-separated inits, one per region");
  thresholdCmd->callback([&threshold] { runThreshold(threshold); });

  SweepOptions sweep;
  CLI::App* sweepCmd =
      app.add_subcommand("sweep", "Iteration counts for every initial threshold in a range");
  sweepCmd->add_option("--input", sweep.input, "Input PGM (P2 or P5)")->required();
  sweepCmd->add_option("--range", sweep.range, "Init range LO:HI (default 0:255)");
  sweepCmd->add_option("--out", sweep.out, "Output CSV path")->required();
  sweepCmd->callback([&sweep] { runSweep(sweep); });

  BenchOptions bench;
  CLI::App* benchCmd =
      app.add_subcommand("bench", "Compare the baseline and partitioned pipelines");
  benchCmd->add_option("--input", bench.input, "Input PGM (P2 or P5)")->required();
  benchCmd->add_option("--seeds", bench.seeds, "Number of seeds, 0..N-1 (default 10)");
  benchCmd->add_option("--reps", bench.reps, "Timing repetitions per run (default 5)");
  benchCmd->add_option("--out", bench.out, "Output CSV path")->required();
  benchCmd->callback([&bench] { runBench(bench); });

  SynthOptions synth;
  CLI::App* synthCmd = app.add_subcommand("synth", "Generate a synthetic test image");
  synthCmd->add_option("--kind", synth.kind, "constant, checkerboard, or bimodal")
      ->required()
      ->check(CLI::IsMember({"constant", "checkerboard", "bimodal"}));
  synthCmd->add_option("--size", synth.size, "Image size WxH")->required();
  synthCmd->add_option("--seed", synth.seed, "Random seed (default 0)");
  synthCmd->add_option("--out", synth.out, "Output PGM path")->required();
  synthCmd->add_option("--value", synth.value, "constant: pixel value (default 128)");
  synthCmd->add_option("--cell", synth.cell, "checkerboard: cell size (default 8)");
  synthCmd->add_option("--lo", synth.lo, "checkerboard: dark value (default 0)");
  synthCmd->add_option("--hi", synth.hi, "checkerboard: light value (default 255)");
  synthCmd->add_option("--mu1", synth.mu1, "bimodal: first mode (default 60)");
  synthCmd->add_option("--mu2", synth.mu2, "bimodal: second mode (default 180)");
  synthCmd->add_option("--sigma", synth.sigma, "bimodal: noise spread (default 20)");
  synthCmd->add_option("--mix", synth.mix, "bimodal: weight of the first mode (default 0.5)");
  synthCmd->callback([&synth] { runSynth(synth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PgmError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
