#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "fopid/cli.hpp"

using namespace fopid;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
  const fs::path dir = fs::temp_directory_path() / "fopid_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string half_integrator_config(const std::string& out) {
  return "gf = al-alaoui\nT = 0.001\npq = 3\nK = 0\nTi = 1.4374\nlambda = 0.5\n"
         "Td = 0\ndelta = 0.5\nout = " + out + "\n";
}

}  // namespace

TEST_CASE("DesignConfig parses key = value text") {
  const DesignConfig cfg = DesignConfig::from_text(
      "# comment\n"
      "[controller]\n"
      "gf = tustin\n"
      "T = 0.01\n"
      "pq = 4\n"
      "K = 1\nTi = 0.5\nTd = 0.25\nlambda = 0.3\ndelta = 0.7\n"
      "adc_bits = 12\ndac_bits = 10\nv_min = -5\nv_max = 5\n"
      "adc_quant = on\ndac_quant = off\n"
      "out = somewhere.txt\n");
  CHECK(cfg.params.gf.kind == GfKind::Tustin);
  CHECK(cfg.params.gf.T == 0.01);
  CHECK(cfg.params.p == 4);
  CHECK(cfg.params.q == 4);
  CHECK(cfg.params.K == 1.0);
  CHECK(cfg.params.Ti == 0.5);
  CHECK(cfg.params.Td == 0.25);
  CHECK(cfg.quant.adc_bits == 12);
  CHECK(cfg.quant.dac_bits == 10);
  CHECK(cfg.quant.v_min == -5.0);
  CHECK_FALSE(cfg.quant.dac_enabled);
  CHECK(cfg.out == "somewhere.txt");

  SUBCASE("unknown keys are errors") {
    CHECK_THROWS_WITH_AS(DesignConfig::from_text("Kp = 1\n"),
                         doctest::Contains("unknown config key: Kp"), ConfigError);
  }
  SUBCASE("malformed lines are errors") {
    CHECK_THROWS_AS(DesignConfig::from_text("just words\n"), ConfigError);
  }
  SUBCASE("unknown sections are errors") {
    CHECK_THROWS_AS(DesignConfig::from_text("[mystery]\n"), ConfigError);
  }
  SUBCASE("exported branch sections are skipped") {
    const DesignConfig c =
        DesignConfig::from_text("K = 2\n[branch integral]\nb = 1 2 3\na = 1 0.5\n");
    CHECK(c.params.K == 2.0);
  }
  SUBCASE("missing files raise FileOpenError") {
    CHECK_THROWS_AS(DesignConfig::from_file("/nonexistent/fopid.cfg"), FileOpenError);
  }
  SUBCASE("T range warnings attach to provenance") {
    const DesignConfig c = DesignConfig::from_text("K = 1\nT = 0.0001\n");
    REQUIRE(c.warnings().size() == 1);
    CHECK(c.warnings()[0].find("designed range") != std::string::npos);
    CHECK(DesignConfig::from_text("K = 1\nT = 1\n").warnings().empty());
  }
}

TEST_CASE("cmd_design writes coefficients and a stability summary") {
  const fs::path out = test_dir() / "design_out.txt";
  DesignConfig cfg = DesignConfig::from_text(half_integrator_config(out.string()));
  std::ostringstream status, err;
  const int rc = cli::cmd_design(cfg, status, err);
  CHECK(rc == cli::kExitOk);
  CHECK(err.str().empty());
  CHECK(status.str().find("stable=yes") != std::string::npos);
  CHECK(status.str().find("minimum_phase=yes") != std::string::npos);

  const std::string table = slurp(out);
  CHECK(table.find("[branch integral]") != std::string::npos);

  SUBCASE("the output provenance re-reads as a config and reproduces the file") {
    DesignConfig cfg2 = DesignConfig::from_file(out.string());
    const fs::path out2 = test_dir() / "design_out2.txt";
    cfg2.out = out2.string();
    std::ostringstream status2, err2;
    CHECK(cli::cmd_design(cfg2, status2, err2) == cli::kExitOk);
    CHECK(slurp(out2) == table);
  }
}

TEST_CASE("cmd_design maps errors to exit codes") {
  SUBCASE("out-of-range order names the violated range") {
    DesignConfig cfg = DesignConfig::from_text("Ti = 1\nlambda = 1.5\n");
    std::ostringstream status, err;
    CHECK(cli::cmd_design(cfg, status, err) == cli::kExitInvalidParams);
    CHECK(err.str().find("lambda") != std::string::npos);
    CHECK(err.str().find("(0, 1)") != std::string::npos);
  }
  SUBCASE("no active branch") {
    DesignConfig cfg;
    std::ostringstream status, err;
    CHECK(cli::cmd_design(cfg, status, err) == cli::kExitInvalidParams);
  }
}

TEST_CASE("cmd_simulate writes the CSV and reports") {
  DesignConfig cfg =
      DesignConfig::from_text(half_integrator_config((test_dir() / "sim.csv").string()));

  SUBCASE("square signal per the bench experiment") {
    cli::SimOptions opts;
    opts.shape = SignalShape::Square;
    opts.frequency = 100.0;
    opts.amplitude = 1.0;
    opts.duration = 0.1;
    std::ostringstream status, err;
    CHECK(cli::cmd_simulate(cfg, opts, status, err) == cli::kExitOk);
    CHECK(err.str().empty());
    const std::string csv = slurp(test_dir() / "sim.csv");
    // header plus one row per sample
    const auto rows = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
    CHECK(rows == 101);
  }
  SUBCASE("Nyquist violations exit with code 4") {
    cli::SimOptions opts;
    opts.shape = SignalShape::Sine;
    opts.frequency = 600.0;
    std::ostringstream status, err;
    CHECK(cli::cmd_simulate(cfg, opts, status, err) == cli::kExitNyquist);
    CHECK_FALSE(err.str().empty());
  }
  SUBCASE("the GL oracle adds a column and a sidecar report") {
    cli::SimOptions opts;
    opts.shape = SignalShape::Step;
    opts.duration = 0.05;
    opts.gl_oracle = true;
    std::ostringstream status, err;
    CHECK(cli::cmd_simulate(cfg, opts, status, err) == cli::kExitOk);
    const std::string csv = slurp(test_dir() / "sim.csv");
    CHECK(csv.rfind("t,ref,err,out,gl\n", 0) == 0);
    const std::string report = slurp(test_dir() / "sim.csv.report.txt");
    CHECK(report.find("rms_rel") != std::string::npos);
  }
  SUBCASE("quantized outputs differ from float mode by a bounded error") {
    cli::SimOptions fopts;
    fopts.shape = SignalShape::Step;
    fopts.duration = 0.05;
    std::ostringstream s1, e1;
    REQUIRE(cli::cmd_simulate(cfg, fopts, s1, e1) == cli::kExitOk);
    const std::string float_csv = slurp(test_dir() / "sim.csv");

    DesignConfig qcfg = cfg;
    qcfg.out = (test_dir() / "simq.csv").string();
    cli::SimOptions qopts = fopts;
    qopts.quantized = true;
    std::ostringstream s2, e2;
    REQUIRE(cli::cmd_simulate(qcfg, qopts, s2, e2) == cli::kExitOk);
    const std::string quant_csv = slurp(test_dir() / "simq.csv");

    auto out_column = [](const std::string& csv) {
      std::vector<double> vals;
      std::istringstream is(csv);
      std::string line;
      std::getline(is, line);  // header
      while (std::getline(is, line)) {
        const auto last = line.rfind(',');
        vals.push_back(std::stod(line.substr(last + 1)));
      }
      return vals;
    };
    const auto fo = out_column(float_csv);
    const auto qo = out_column(quant_csv);
    REQUIRE(fo.size() == qo.size());
    // worst case: input quantization error scaled by the peak gain plus one
    // output DAC step; generous envelope, just not unbounded
    for (std::size_t k = 0; k < fo.size(); ++k)
      CHECK(std::abs(fo[k] - qo[k]) <= 0.01);
  }
}

TEST_CASE("cmd_analyze reports stability and the frequency table") {
  DesignConfig cfg = DesignConfig::from_text(half_integrator_config(""));
  cfg.out.clear();

  SUBCASE("sweep with defaults") {
    std::ostringstream status, err;
    CHECK(cli::cmd_analyze(cfg, cli::AnalyzeOptions{}, status, err) == cli::kExitOk);
    CHECK(err.str().empty());
    const std::string rep = status.str();
    CHECK(rep.find("stable=yes") != std::string::npos);
    CHECK(rep.find("minimum_phase=yes") != std::string::npos);

    // mid-band rows sit near the -45 degree phase of the ideal half
    // integrator
    std::istringstream is(rep);
    std::string line;
    bool in_table = false;
    int near_ideal = 0;
    while (std::getline(is, line)) {
      if (line == "f_hz,mag,mag_db,phase_deg") { in_table = true; continue; }
      if (!in_table || line.empty()) continue;
      const auto last = line.rfind(',');
      const double phase = std::stod(line.substr(last + 1));
      if (phase > -50.0 && phase < -40.0) ++near_ideal;
    }
    CHECK(near_ideal >= 3);
  }
  SUBCASE("one-point grid emits a single row at the requested frequency") {
    cli::AnalyzeOptions opts;
    opts.points = 1;
    opts.fmax = 500.0;  // Nyquist for T = 0.001
    std::ostringstream status, err;
    CHECK(cli::cmd_analyze(cfg, opts, status, err) == cli::kExitOk);
    const std::string rep = status.str();
    const auto header = rep.find("f_hz,mag,mag_db,phase_deg\n");
    REQUIRE(header != std::string::npos);
    const std::string table = rep.substr(header + 26);
    CHECK(std::count(table.begin(), table.end(), '\n') == 1);
    CHECK(table.rfind("500,", 0) == 0);
  }
  SUBCASE("constant controller is flat at 0 dB") {
    DesignConfig kcfg = DesignConfig::from_text("K = 1\nT = 0.001\n");
    std::ostringstream status, err;
    CHECK(cli::cmd_analyze(kcfg, cli::AnalyzeOptions{}, status, err) == cli::kExitOk);
    std::istringstream is(status.str());
    std::string line;
    bool in_table = false;
    while (std::getline(is, line)) {
      if (line == "f_hz,mag,mag_db,phase_deg") { in_table = true; continue; }
      if (!in_table || line.empty()) continue;
      std::istringstream row(line);
      std::string f, mag, db, ph;
      std::getline(row, f, ',');
      std::getline(row, mag, ',');
      std::getline(row, db, ',');
      std::getline(row, ph, ',');
      CHECK(std::stod(mag) == doctest::Approx(1.0));
      CHECK(std::stod(db) == doctest::Approx(0.0));
      CHECK(std::stod(ph) == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("cmd_export honors the format switch") {
  DesignConfig cfg =
      DesignConfig::from_text(half_integrator_config((test_dir() / "coeffs.h").string()));
  std::ostringstream status, err;
  CHECK(cli::cmd_export(cfg, ExportFormat::EmbeddedHeader, status, err) == cli::kExitOk);
  CHECK(err.str().empty());
  const std::string header = slurp(test_dir() / "coeffs.h");
  CHECK(header.find("#ifndef FOPID_COEFFS_H") != std::string::npos);
  CHECK(header.find("fopid_integral_b[4]") != std::string::npos);
}
