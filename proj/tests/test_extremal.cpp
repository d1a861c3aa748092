#include <doctest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modforms/errors.hpp"
#include "modforms/extremal.hpp"
#include "modforms/forms.hpp"
#include "modforms/json_io.hpp"
#include "oracles.hpp"

using namespace mf;

namespace {

namespace fs = std::filesystem;

struct TempFile {
  explicit TempFile(const std::string& name) : path((fs::temp_directory_path() / name).string()) { fs::remove(path); }
  ~TempFile() {
    fs::remove(path);
    fs::remove(path + ".tmp");
  }
  std::string path;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// Threshold re-derived in long double from the closed form.
long double threshold_double(long k) {
  const long ell = dim_cusp(k);
  const long double lk = std::log(static_cast<long double>(k));
  return std::exp(58.366L / (k - 2)) * std::pow(std::pow(static_cast<long double>(ell), 3) * lk, 1.0L / (k - 2)) *
         1.0242382L * ell;
}

}  // namespace

TEST_SUITE("extremal_scan") {

TEST_CASE("theorem 2 threshold") {
  CHECK(theorem2_threshold(12).N == 385);
  CHECK(theorem2_threshold(24).N == 34);
  for (long k = 12; k <= 400; k += 4) {
    const auto t = theorem2_threshold(k);
    const long double v = threshold_double(k);
    CHECK(std::fabs(t.value.to_double() - static_cast<double>(v)) / static_cast<double>(v) < 1e-4);
    CHECK(t.N > t.ell);
  }
  CHECK(theorem2_threshold(8).trivial);
  CHECK(theorem2_threshold(8).N == 0);
  CHECK_THROWS_AS(theorem2_threshold(14), InvalidArgument);
}

TEST_CASE("eisenstein part b(m) equals F_{k,0} - E_k") {
  CHECK(eisenstein_part_b(12, 1) == mpq_class(-65520, 691));
  for (long k : {12L, 24L, 36L, 52L, 100L}) {
    const long ell = dim_cusp(k);
    const QLaurent diff = extremal_form(k, ell + 2) - eisenstein(k, ell + 2);
    for (long m = 1; m <= ell; ++m) REQUIRE(eisenstein_part_b(k, m) == diff.coeff(m));
  }
}

TEST_CASE("burmann coefficients against the linear-algebra construction") {
  CHECK(burmann_A(12, 2) == -196560);
  CHECK(burmann_A(12, 3) == -167731200);
  const auto b12 = burmann_mos(12);
  CHECK(b12.a1 == 196560);
  CHECK(b12.a2 == 16773120);
  for (long k = 12; k <= 160; k += 4) {
    const auto b = burmann_mos(k);
    const auto z = extremal_form_z(k, b.ell + 3);
    REQUIRE(b.a1 == mpq_class(z[static_cast<std::size_t>(b.ell + 1)]));
    REQUIRE(b.a2 == mpq_class(z[static_cast<std::size_t>(b.ell + 2)]));
    CHECK(b.a1 > 0);
  }
}

TEST_CASE("positivity onset sits at the threshold") {
  for (long k : {12L, 24L, 48L, 100L, 400L, 2000L}) {
    const long n = positivity_onset(k);
    CHECK(positivity_criterion(k, n));
    CHECK_FALSE(positivity_criterion(k, n - 1));
    const long big_n = theorem2_threshold(k).N;
    CHECK(std::abs(n - big_n) <= 1);
  }
  CHECK_FALSE(positivity_criterion(12, 1));
  CHECK(ch_envelope(12).sign() > 0);
}

TEST_CASE("scan window at k = 12") {
  ScanWindowOptions opt;
  opt.margin = 50;
  const auto r = scan_window(12, opt);
  CHECK(r.status == ScanStatus::Done);
  CHECK(r.window_end == 385);
  CHECK(r.tail_end == 435);
  CHECK(r.negative_indices.empty());
  CHECK(r.tail_negative_indices.empty());
  CHECK(r.siegel_positive);
  CHECK(r.min_value_index == 2);
  CHECK_FALSE(r.wall_time.has_value());
  CHECK(r.tool_version == tool_version_hash());
  CHECK(scan_window(4).ell == 0);
  opt.record_wall_time = true;
  CHECK(scan_window(16, opt).wall_time.has_value());
}

TEST_CASE("scan record json round trip and validation") {
  ScanWindowOptions opt;
  opt.margin = 10;
  const auto r = scan_window(24, opt);
  const auto back = scan_record_from_json(to_json(r));
  CHECK(to_json(back).dump() == to_json(r).dump());
  json bad = to_json(r);
  bad["negative_indices"] = {1};
  CHECK_THROWS_AS(scan_record_from_json(bad), CorruptCheckpoint);
  bad = to_json(r);
  bad["status"] = "partial";
  CHECK_THROWS_AS(scan_record_from_json(bad), CorruptCheckpoint);
  bad = to_json(r);
  bad.erase("k");
  CHECK_THROWS_AS(scan_record_from_json(bad), CorruptCheckpoint);
}

TEST_CASE("size guard leaves a partial record") {
  ScanWindowOptions opt;
  opt.size_guard_bytes = 1000;
  const auto r = scan_window(48, opt);
  CHECK(r.status == ScanStatus::Partial);
  CHECK(r.resume_index == r.ell + 1);
}

TEST_CASE("checkpointed scan resumes and is idempotent") {
  TempFile file("modforms_test_resume.jsonl");
  ScanOptions opt;
  opt.kmin = 12;
  opt.kmax = 120;
  opt.mod12 = 0;
  opt.margin = 20;
  opt.checkpoint = file.path;
  const auto first = largest_nonneg_search(opt);
  CHECK(first.computed == 10);
  CHECK(first.resumed == 0);
  CHECK(first.largest_clean_k == 120);
  const std::string text = slurp(file.path);
  const auto second = largest_nonneg_search(opt);
  CHECK(second.computed == 0);
  CHECK(second.resumed == 10);
  CHECK(slurp(file.path) == text);

  // A wider margin invalidates the stored records.
  opt.margin = 40;
  CHECK(largest_nonneg_search(opt).computed == 10);

  // Threads do not change the outcome.
  TempFile other("modforms_test_threads.jsonl");
  opt.checkpoint = other.path;
  opt.threads = 4;
  largest_nonneg_search(opt);
  CHECK(slurp(other.path) == slurp(file.path));
}

TEST_CASE("corrupt checkpoint is rejected or repaired") {
  TempFile file("modforms_test_corrupt.jsonl");
  ScanOptions opt;
  opt.kmin = 12;
  opt.kmax = 48;
  opt.mod12 = 0;
  opt.checkpoint = file.path;
  largest_nonneg_search(opt);
  const std::string good = slurp(file.path);
  spit(file.path, good + "{\"k\": 60, \"ell\"");
  CHECK_THROWS_AS(largest_nonneg_search(opt), CorruptCheckpoint);
  spit(file.path, good + "not json\n");
  CHECK_THROWS_AS(largest_nonneg_search(opt), CorruptCheckpoint);
  opt.repair = true;
  const auto s = largest_nonneg_search(opt);
  CHECK(s.resumed == 4);
  CHECK(s.computed == 0);
  CHECK(slurp(file.path) == good);
}

TEST_CASE("stop flag interrupts between weights") {
  TempFile file("modforms_test_stop.jsonl");
  std::atomic<bool> stop{true};
  ScanOptions opt;
  opt.kmin = 12;
  opt.kmax = 240;
  opt.checkpoint = file.path;
  opt.stop = &stop;
  const auto s = largest_nonneg_search(opt);
  CHECK(s.interrupted);
  CHECK(s.computed == 0);
  stop = false;
  const auto t = largest_nonneg_search(opt);
  CHECK_FALSE(t.interrupted);
  CHECK(t.computed == 20);
}

TEST_CASE("full-scale mode caps kmax and uses the wide window") {
  ScanOptions opt;
  opt.kmin = kFullScaleThreshold[0];
  opt.kmax = 90000;
  opt.mod12 = 0;
  opt.full_scale = true;
  const auto s = largest_nonneg_search(opt);
  CHECK(s.effective_kmax == kFullScaleThreshold[0] - 1);
  CHECK(s.records.empty());
  opt.mod12 = 8;
  opt.kmin = 12;
  opt.kmax = 44;
  const auto small = largest_nonneg_search(opt);
  CHECK(small.records.size() == 3);
  for (const auto& r : small.records) {
    CHECK(r.mode == "full");
    CHECK(r.status == ScanStatus::Done);
  }
  ScanWindowOptions w;
  w.full_scale = true;
  const auto r = scan_window(24, w);
  CHECK(r.window_end == kFullScaleWindow);
  CHECK(r.status == ScanStatus::Done);
  CHECK(r.negative_indices.empty());
}

TEST_CASE("scan argument validation") {
  ScanOptions opt;
  opt.mod12 = 6;
  CHECK_THROWS_AS(largest_nonneg_search(opt), InvalidArgument);
  opt.mod12 = 0;
  opt.kmin = 100;
  opt.kmax = 12;
  CHECK_THROWS_AS(largest_nonneg_search(opt), InvalidArgument);
  CHECK_THROWS_AS(scan_window(14), InvalidArgument);
  CHECK(scan_status_from_string("refuted") == ScanStatus::Refuted);
  CHECK(to_string(ScanStatus::Partial) == "partial");
}

}
