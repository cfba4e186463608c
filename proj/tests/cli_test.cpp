#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "entedge/pgm.hpp"
#include "entedge/pipeline.hpp"
#include "entedge/synth.hpp"
#include "testutil.hpp"

using namespace entedge;
using testutil::CommandResult;
using testutil::TempDir;
using testutil::cliPath;
using testutil::readFile;
using testutil::runCommand;
using testutil::verticalSplit;

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string cli() { return quoted(cliPath()); }

// 8x8, left half 50, right half 150.
std::string writeHalfHalf(const TempDir& dir) {
  const std::string path = dir.file("half.pgm");
  writePgmFile(path, verticalSplit(8, 8, 50, 150));
  return path;
}

}  // namespace

TEST_CASE("synth constant writes the requested pixels") {
  TempDir dir;
  const std::string out = dir.file("c.pgm");
  const CommandResult res = runCommand(cli() + " synth --kind constant --size 8x8 --value 7 --out " + quoted(out));
  CHECK(res.exitCode == 0);
  const GrayImage img = readPgmFile(out);
  CHECK(img.pixelCount() == 64);
  CHECK(std::ranges::all_of(img.pixels(), [](std::uint8_t v) { return v == 7; }));
}

TEST_CASE("synth checkerboard matches the generator") {
  TempDir dir;
  const std::string out = dir.file("b.pgm");
  const CommandResult res = runCommand(
      cli() + " synth --kind checkerboard --size 2x2 --cell 1 --lo 0 --hi 255 --out " + quoted(out));
  CHECK(res.exitCode == 0);
  CHECK(readPgmFile(out) == GrayImage(2, 2, {0, 255, 255, 0}));
}

TEST_CASE("synth bimodal is byte-deterministic in the seed") {
  TempDir dir;
  const std::string a = dir.file("a.pgm");
  const std::string b = dir.file("b.pgm");
  const std::string flags = " synth --kind bimodal --size 32x32 --seed 5 --out ";
  CHECK(runCommand(cli() + flags + quoted(a)).exitCode == 0);
  CHECK(runCommand(cli() + flags + quoted(b)).exitCode == 0);
  CHECK(readFile(a) == readFile(b));
}

TEST_CASE("threshold prints the documented line for the half/half fixture") {
  TempDir dir;
  const std::string input = writeHalfHalf(dir);
  const CommandResult res = runCommand(
      cli() + " threshold --input " + quoted(input) + " --grid 1x1 --init-t 100");
  CHECK(res.exitCode == 0);
  CHECK(res.out == "T: 100 ; iters: 1\n");
}

TEST_CASE("threshold on a constant image notes the degeneracy and exits 0") {
  TempDir dir;
  const std::string input = dir.file("flat.pgm");
  writePgmFile(input, genConstant(8, 8, 20));
  const CommandResult res = runCommand(
      cli() + " threshold --input " + quoted(input) + " --grid 1x1 --seed 3");
  CHECK(res.exitCode == 0);
  CHECK(res.err.find("single-class") != std::string::npos);
}

TEST_CASE("threshold output is stable for a fixed seed") {
  TempDir dir;
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, genBimodal(32, 32, 60, 180, 15.0, 0.5, 9));
  const std::string cmd = cli() + " threshold --input " + quoted(input) + " --seed 4";
  CHECK(runCommand(cmd).out == runCommand(cmd).out);
}

TEST_CASE("detect with explicit inits reports all four regions") {
  TempDir dir;
  const std::string input = writeHalfHalf(dir);
  const std::string output = dir.file("edges.pgm");
  const CommandResult res = runCommand(cli() + " detect --input " + quoted(input) +
                                       " --output " + quoted(output) +
                                       " --init-t 100,100,100,100");
  CHECK(res.exitCode == 0);
  CHECK(res.out == "T: 100 100 100 100 ; iters: 1 1 1 1\n");

  // boundary between columns 3 and 4: edges in those two interior columns
  const GrayImage edges = readPgmFile(output);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      const bool expectEdge = y >= 1 && y <= 6 && (x == 3 || x == 4);
      CHECK(edges.at(x, y) == (expectEdge ? 255 : 0));
    }
  }
}

TEST_CASE("detect on a constant image yields an all-zero map and a full report") {
  TempDir dir;
  const std::string input = dir.file("flat.pgm");
  writePgmFile(input, genConstant(8, 8, 99));
  const std::string output = dir.file("edges.pgm");
  const std::string report = dir.file("report.csv");
  const CommandResult res = runCommand(cli() + " detect --input " + quoted(input) +
                                       " --output " + quoted(output) + " --report " +
                                       quoted(report));
  CHECK(res.exitCode == 0);
  const GrayImage edges = readPgmFile(output);
  CHECK(std::ranges::all_of(edges.pixels(), [](std::uint8_t v) { return v == 0; }));

  const std::string csv = readFile(report);
  CHECK(csv.starts_with("region,init_t,final_t,iterations,pixel_visits,converged,degenerate\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 4 regions

  // all four regions converged degenerate
  std::size_t trueTrue = 0;
  for (std::size_t pos = csv.find(",true,true\n"); pos != std::string::npos;
       pos = csv.find(",true,true\n", pos + 1)) {
    ++trueTrue;
  }
  CHECK(trueTrue == 4);
}

TEST_CASE("detect with a 1x1 grid and full range is the baseline variant") {
  TempDir dir;
  const GrayImage img = genBimodal(24, 24, 60, 180, 12.0, 0.5, 3);
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, img);
  const std::string output = dir.file("edges.pgm");
  const CommandResult res = runCommand(cli() + " detect --input " + quoted(input) +
                                       " --output " + quoted(output) +
                                       " --grid 1x1 --init-range 0:255 --seed 2");
  CHECK(res.exitCode == 0);
  CHECK(res.out.starts_with("T: "));
  CHECK(res.out.find(" ; iters: ") != std::string::npos);

  const PipelineResult expected = runPipeline(img, baselineConfig(2));
  CHECK(readPgmFile(output) == binaryToGray(expected.edges));
  CHECK(res.out == "T: " + std::to_string(expected.regionReports[0].finalT) +
                       " ; iters: " +
                       std::to_string(expected.regionReports[0].iterations) + "\n");
}

TEST_CASE("entropy mode at the default cutoff matches count mode") {
  TempDir dir;
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, genBimodal(20, 20, 60, 180, 14.0, 0.5, 5));
  const std::string byCount = dir.file("count.pgm");
  const std::string byEntropy = dir.file("entropy.pgm");
  CHECK(runCommand(cli() + " detect --input " + quoted(input) + " --output " +
                   quoted(byCount) + " --seed 6 --mode count")
            .exitCode == 0);
  CHECK(runCommand(cli() + " detect --input " + quoted(input) + " --output " +
                   quoted(byEntropy) + " --seed 6 --mode entropy")
            .exitCode == 0);
  CHECK(readFile(byCount) == readFile(byEntropy));
}

TEST_CASE("the copy border policy keeps binary values in the ring") {
  TempDir dir;
  const std::string input = dir.file("flat.pgm");
  writePgmFile(input, genConstant(6, 6, 200));  // binarizes to all ones
  const std::string output = dir.file("edges.pgm");
  const CommandResult res = runCommand(cli() + " detect --input " + quoted(input) +
                                       " --output " + quoted(output) +
                                       " --init-t 10,10,10,10 --border copy");
  CHECK(res.exitCode == 0);
  const GrayImage edges = readPgmFile(output);
  CHECK(edges.at(0, 0) == 255);  // ring copied from the all-ones binary
  CHECK(edges.at(2, 2) == 0);    // homogeneous interior has no edges
}

TEST_CASE("sweep emits the pinned CSV") {
  TempDir dir;
  const std::string input = writeHalfHalf(dir);
  const std::string out = dir.file("sweep.csv");
  const CommandResult res = runCommand(cli() + " sweep --input " + quoted(input) +
                                       " --range 100:100 --out " + quoted(out));
  CHECK(res.exitCode == 0);
  CHECK(readFile(out) ==
        "init_t,final_t,iterations,converged,degenerate\n100,100,1,true,false\n");
}

TEST_CASE("a full-range sweep has 257 lines and stable bytes") {
  TempDir dir;
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, genBimodal(16, 16, 60, 180, 10.0, 0.5, 8));
  const std::string out1 = dir.file("s1.csv");
  const std::string out2 = dir.file("s2.csv");
  CHECK(runCommand(cli() + " sweep --input " + quoted(input) + " --out " + quoted(out1)).exitCode == 0);
  CHECK(runCommand(cli() + " sweep --input " + quoted(input) + " --out " + quoted(out2)).exitCode == 0);

  const std::string csv = readFile(out1);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
  CHECK(csv == readFile(out2));
}

TEST_CASE("bench reports both variants and a summary") {
  TempDir dir;
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, genBimodal(32, 32, 60, 180, 15.0, 0.5, 4));
  const std::string out = dir.file("bench.csv");
  const CommandResult res = runCommand(cli() + " bench --input " + quoted(input) +
                                       " --seeds 2 --reps 1 --out " + quoted(out));
  CHECK(res.exitCode == 0);
  CHECK(res.out.find("baseline=") != std::string::npos);
  CHECK(res.out.find("proposed=") != std::string::npos);
  CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 1);

  const std::string csv = readFile(out);
  CHECK(csv.starts_with(
      "seed,variant,total_iterations,total_pixel_visits,wall_time_micros,thresholds\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + 2 seeds x 2 variants
}

TEST_CASE("bench columns except wall time are identical across runs") {
  TempDir dir;
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, genBimodal(24, 24, 60, 180, 12.0, 0.5, 6));
  const std::string out1 = dir.file("b1.csv");
  const std::string out2 = dir.file("b2.csv");
  CHECK(runCommand(cli() + " bench --input " + quoted(input) + " --seeds 2 --reps 1 --out " + quoted(out1)).exitCode == 0);
  CHECK(runCommand(cli() + " bench --input " + quoted(input) + " --seeds 2 --reps 1 --out " + quoted(out2)).exitCode == 0);

  // blank out column 5 (wall_time_micros) before comparing
  const auto scrub = [](const std::string& text) {
    std::string result;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      std::string line = text.substr(start, end - start);
      int commas = 0;
      std::size_t colStart = 0;
      std::size_t colEnd = line.size();
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == ',') {
          ++commas;
          if (commas == 4) colStart = i + 1;
          if (commas == 5) colEnd = i;
        }
      }
      if (commas >= 5) line.replace(colStart, colEnd - colStart, "_");
      result += line + "\n";
      start = end + 1;
    }
    return result;
  };
  CHECK(scrub(readFile(out1)) == scrub(readFile(out2)));
}

TEST_CASE("exit codes distinguish usage, I/O, and precondition failures") {
  TempDir dir;
  const std::string input = writeHalfHalf(dir);
  const std::string output = dir.file("out.pgm");

  // missing input file: I/O failure
  CHECK(runCommand(cli() + " detect --input " + quoted(dir.file("no.pgm")) +
                   " --output " + quoted(output))
            .exitCode == 1);

  // malformed PGM: parse failure
  const std::string bad = dir.file("bad.pgm");
  std::ofstream(bad) << "P2\n2 2\n255\n0 1\n";
  CHECK(runCommand(cli() + " detect --input " + quoted(bad) + " --output " + quoted(output))
            .exitCode == 1);

  // unknown flag: usage failure
  CHECK(runCommand(cli() + " detect --input " + quoted(input) + " --output " +
                   quoted(output) + " --bogus 1")
            .exitCode == 1);

  // malformed grid string: usage failure
  CHECK(runCommand(cli() + " detect --input " + quoted(input) + " --output " +
                   quoted(output) + " --grid 2y2")
            .exitCode == 1);

  // grid exceeding the image: precondition violation
  CHECK(runCommand(cli() + " detect --input " + quoted(input) + " --output " +
                   quoted(output) + " --grid 9x9")
            .exitCode == 2);

  // wrong number of explicit inits: precondition violation
  CHECK(runCommand(cli() + " detect --input " + quoted(input) + " --output " +
                   quoted(output) + " --init-t 100,100")
            .exitCode == 2);

  // init range outside [0,255]: precondition violation
  CHECK(runCommand(cli() + " threshold --input " + quoted(input) + " --init-range 0:300")
            .exitCode == 2);

  // no machine output went to stdout in the failure cases
  const CommandResult res = runCommand(cli() + " detect --input " + quoted(dir.file("no.pgm")) +
                                       " --output " + quoted(output));
  CHECK(res.out.empty());
  CHECK_FALSE(res.err.empty());
}

TEST_CASE("detect outputs are byte-identical across runs and parallel modes") {
  TempDir dir;
  const std::string input = dir.file("bi.pgm");
  writePgmFile(input, genBimodal(40, 40, 60, 180, 15.0, 0.5, 11));

  const auto detect = [&](const std::string& tag, const std::string& extra) {
    const std::string out = dir.file("out_" + tag + ".pgm");
    const std::string rep = dir.file("rep_" + tag + ".csv");
    const CommandResult res = runCommand(cli() + " detect --input " + quoted(input) +
                                         " --output " + quoted(out) + " --report " +
                                         quoted(rep) + " --seed 19" + extra);
    REQUIRE(res.exitCode == 0);
    return std::pair{readFile(out), readFile(rep)};
  };

  const auto first = detect("a", "");
  const auto second = detect("b", "");
  const auto parallel = detect("c", " --parallel");
  CHECK(first == second);
  CHECK(first == parallel);
}
