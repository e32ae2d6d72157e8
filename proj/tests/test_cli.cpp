#include "test_support.hpp"

#include "cli.hpp"
#include "qhf/benchmark.hpp"
#include "qhf/raster_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace qhf;
using testing_support::slurp;
using testing_support::TempDir;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(QHF_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string astronaut() { return (testing_support::data_dir() / "astronaut_256.png").string(); }

}  // namespace

TEST_CASE("detect writes an edge map and a JSON log line") {
    TempDir dir("cli_detect");
    const auto out = (dir / "edges.png").string();
    const Outcome r = run_cli({"detect", "--in", astronaut(), "--out", out, "--s1", "2", "--s2", "3"});
    REQUIRE(r.code == cli::kOk);
    const auto log = nlohmann::json::parse(r.out);
    CHECK(log["detector"] == "proposed");
    CHECK(log["params"] == "s1=2;s2=3;t=0.1;formula=derived");
    CHECK(log["time_ms"].get<double>() >= 0.0);
    const EdgeMap e = read_edge_map(out);
    CHECK(e.width() == 256);
    CHECK(count_edges(e) == log["edge_pixels"].get<std::size_t>());

    for (const char* d : {"idz", "sobel", "prewitt", "canny"}) {
        CHECK(run_cli({"detect", "--in", astronaut(), "--out", out, "--detector", d}).code == cli::kOk);
    }
}

TEST_CASE("usage and validation errors exit with 2") {
    TempDir dir("cli_err");
    const auto out = (dir / "e.png").string();
    CHECK(run_cli({"detect", "--in", (dir / "missing.png").string(), "--out", out}).code == cli::kUsageError);
    CHECK(run_cli({"detect", "--in", astronaut(), "--out", out, "--s1", "-1"}).code == cli::kUsageError);
    CHECK(run_cli({"detect", "--in", astronaut(), "--out", out, "--t", "2"}).code == cli::kUsageError);
    CHECK(run_cli({"detect", "--in", astronaut(), "--out", out, "--detector", "x"}).code == cli::kUsageError);
    CHECK(run_cli({"detect", "--in", astronaut(), "--out", (dir / "e.bmp").string()}).code == cli::kUsageError);
    CHECK(run_cli({"detect", "--in", astronaut()}).code == cli::kUsageError);
    CHECK(run_cli({"noise", "--in", astronaut(), "--out", out, "--kind", "pink"}).code == cli::kUsageError);
    CHECK(run_cli({"benchmark", "--config", (dir / "none.json").string()}).code == cli::kUsageError);
    CHECK(run_cli({}).code == cli::kUsageError);
    {
        std::ofstream(dir / "junk.png") << "garbage";
    }
    CHECK(run_cli({"detect", "--in", (dir / "junk.png").string(), "--out", out}).code == cli::kUsageError);
}

TEST_CASE("the installed binary reports the same exit codes") {
    CHECK(run_binary("detect --in /nonexistent/x.png --out /tmp/x.png") == 2);
    CHECK(run_binary("detect --in " + astronaut() + " --out /tmp/x.png --s1 -1") == 2);
    CHECK(run_binary("--help") == 0);
}

TEST_CASE("noise output is byte-identical for a fixed seed") {
    TempDir dir("cli_noise");
    for (const char* kind : {"gaussian", "poisson", "salt-pepper", "speckle"}) {
        const auto a = (dir / "a.png").string(), b = (dir / "b.png").string();
        const Outcome ra = run_cli({"noise", "--in", astronaut(), "--out", a, "--kind", kind, "--seed", "42"});
        const Outcome rb = run_cli({"noise", "--in", astronaut(), "--out", b, "--kind", kind, "--seed", "42"});
        REQUIRE(ra.code == 0);
        REQUIRE(rb.code == 0);
        CHECK(slurp(a) == slurp(b));
        CHECK(nlohmann::json::parse(ra.out)["snr_db"].is_number());
    }
}

TEST_CASE("salt and pepper fraction on a 512x512 mid-gray image") {
    TempDir dir("cli_sp");
    write_color_image(dir / "gray.png", ColorImage(512, 512, Rgb{128 / 255.0, 128 / 255.0, 128 / 255.0}));
    const Outcome r = run_cli({"noise", "--in", (dir / "gray.png").string(), "--out", (dir / "n.png").string(),
                               "--kind", "salt-pepper", "--density", "0.05", "--seed", "1"});
    REQUIRE(r.code == 0);
    const double fraction = nlohmann::json::parse(r.out)["changed_fraction"].get<double>();
    CHECK(std::abs(fraction - 0.05) <= 0.01);
}

TEST_CASE("benchmark writes csv, summary and metadata") {
    TempDir dir("cli_bench");
    BenchmarkConfig cfg;
    cfg.output_dir = "out";
    cfg.detectors = {DetectorKind::Proposed, DetectorKind::Canny};
    cfg.noises = {NoiseSpec::defaults(NoiseKind::SaltPepper, 3)};
    ImageEntry e;
    e.id = "astro";
    e.path = astronaut();
    e.params["salt-pepper"] = ScaleEntry{{6, 6}, std::nullopt};
    cfg.images = {e};
    {
        std::ofstream(dir / "cfg.json") << config_to_json(cfg).dump(2);
    }
    const Outcome r1 = run_cli({"benchmark", "--config", (dir / "cfg.json").string()});
    REQUIRE(r1.code == 0);
    const std::string csv1 = slurp(dir.path() / "out" / "results.csv");
    CHECK(r1.out.find("PSNR") != std::string::npos);
    CHECK(testing_support::fs::exists(dir.path() / "out" / "summary.txt"));
    CHECK(nlohmann::json::parse(slurp(dir.path() / "out" / "metadata.json")).contains("config"));
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 3);
}
