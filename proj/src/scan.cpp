#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "modforms/errors.hpp"
#include "modforms/extremal.hpp"
#include "modforms/forms.hpp"
#include "modforms/json_io.hpp"

namespace mf {

namespace {

struct Expected {
  long window_end = 0;
  long tail_end = 0;
};

Expected expected_window(long k, const ScanOptions& opt) {
  Expected e;
  if (dim_cusp(k) == 0) return e;
  const long n_k = theorem2_threshold(k).N;
  e.window_end = opt.full_scale ? std::max(n_k, kFullScaleWindow) : n_k;
  e.tail_end = e.window_end + opt.margin;
  return e;
}

bool completes(const ScanRecord& r, const Expected& e, const ScanOptions& opt) {
  if (r.mode != (opt.full_scale ? "full" : "desk")) return false;
  if (r.status == ScanStatus::Refuted) return true;
  if (r.status != ScanStatus::Done) return false;
  return r.window_end == e.window_end && r.tail_end >= e.tail_end;
}

std::string record_line(const ScanRecord& r) { return to_json(r).dump() + "\n"; }

// Reads the checkpoint. A line that fails to parse (including a final line
// with no newline, the trace of an interrupted write) is corruption.
std::vector<ScanRecord> load_checkpoint(const std::string& path, bool repair) {
  std::vector<ScanRecord> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::size_t pos = 0;
  std::size_t valid_end = 0;
  long line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    const std::size_t nl = text.find('\n', pos);
    std::string error;
    if (nl == std::string::npos) {
      error = "line " + std::to_string(line_no) + " is not terminated";
    } else {
      const std::string line = text.substr(pos, nl - pos);
      try {
        out.push_back(scan_record_from_json(json::parse(line)));
      } catch (const json::exception& e) {
        error = "line " + std::to_string(line_no) + ": " + e.what();
      } catch (const CorruptCheckpoint& e) {
        error = "line " + std::to_string(line_no) + ": " + e.what();
      }
    }
    if (!error.empty()) {
      if (!repair) throw CorruptCheckpoint("checkpoint " + path + " is corrupt at " + error);
      std::filesystem::resize_file(path, valid_end);
      return out;
    }
    pos = nl + 1;
    valid_end = pos;
  }
  return out;
}

class Appender {
 public:
  explicit Appender(const std::string& path) {
    if (!path.empty()) {
      file_ = std::fopen(path.c_str(), "ab");
      if (!file_) throw InvalidArgument("cannot open checkpoint " + path);
    }
  }
  ~Appender() {
    if (file_) std::fclose(file_);
  }
  Appender(const Appender&) = delete;
  Appender& operator=(const Appender&) = delete;

  void write(const ScanRecord& r) {
    if (!file_) return;
    const std::string line = record_line(r);
    std::lock_guard lock(mutex_);
    std::fwrite(line.data(), 1, line.size(), file_);
    std::fflush(file_);
    ::fsync(fileno(file_));
  }

 private:
  std::FILE* file_ = nullptr;
  std::mutex mutex_;
};

void finalize(const std::string& path, const std::vector<ScanRecord>& records) {
  const std::string tmp = path + ".tmp";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "wb");
    if (!f) throw InvalidArgument("cannot write " + tmp);
    for (const auto& r : records) {
      const std::string line = record_line(r);
      std::fwrite(line.data(), 1, line.size(), f);
    }
    std::fflush(f);
    ::fsync(fileno(f));
    std::fclose(f);
  }
  std::filesystem::rename(tmp, path);
}

int rank(ScanStatus s) { return s == ScanStatus::Partial ? 0 : 1; }

}  // namespace

ScanSummary largest_nonneg_search(const ScanOptions& opt) {
  if (opt.mod12 != 0 && opt.mod12 != 4 && opt.mod12 != 8) {
    throw InvalidArgument("scan: mod12 must be 0, 4 or 8");
  }
  if (opt.kmin > opt.kmax) throw InvalidArgument("scan: kmin > kmax");
  if (opt.threads < 1) throw InvalidArgument("scan: threads must be >= 1");
  if (opt.margin < 0) throw InvalidArgument("scan: margin must be >= 0");

  ScanSummary summary;
  summary.effective_kmax = opt.kmax;
  if (opt.full_scale) {
    summary.effective_kmax = std::min(opt.kmax, kFullScaleThreshold[opt.mod12 / 4] - 1);
  }
  std::vector<long> weights;
  for (long k = std::max(opt.kmin, 4L); k <= summary.effective_kmax; ++k) {
    if (k % 12 == opt.mod12) weights.push_back(k);
  }

  // Latest usable record per (k, mode) from the file.
  std::vector<ScanRecord> stored;
  if (!opt.checkpoint.empty()) stored = load_checkpoint(opt.checkpoint, opt.repair);
  std::map<std::pair<long, std::string>, ScanRecord> latest;
  for (auto& r : stored) {
    const auto key = std::make_pair(r.k, r.mode);
    auto it = latest.find(key);
    if (it == latest.end() || rank(r.status) >= rank(it->second.status)) latest[key] = std::move(r);
  }

  const std::string mode = opt.full_scale ? "full" : "desk";
  std::map<long, ScanRecord> results;
  std::vector<long> pending;
  for (long k : weights) {
    auto it = latest.find({k, mode});
    if (it != latest.end() && completes(it->second, expected_window(k, opt), opt)) {
      results[k] = it->second;
      ++summary.resumed;
    } else {
      pending.push_back(k);
    }
  }
  // Full scale: the interesting weights sit at the top of the range.
  if (opt.full_scale) std::reverse(pending.begin(), pending.end());

  Appender appender(opt.checkpoint);
  std::mutex results_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> interrupted{false};
  std::exception_ptr failure;

  ScanWindowOptions wopt;
  wopt.margin = opt.margin;
  wopt.full_scale = opt.full_scale;
  wopt.size_guard_bytes = opt.size_guard_bytes;
  wopt.record_wall_time = opt.record_wall_time;

  auto worker = [&] {
    for (;;) {
      if (opt.stop && opt.stop->load()) {
        interrupted = true;
        return;
      }
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      try {
        ScanRecord r = scan_window(pending[i], wopt);
        appender.write(r);
        std::lock_guard lock(results_mutex);
        results[r.k] = std::move(r);
      } catch (...) {
        std::lock_guard lock(results_mutex);
        if (!failure) failure = std::current_exception();
        interrupted = true;
        return;
      }
    }
  };

  const long nthreads = std::min<long>(opt.threads, std::max<std::size_t>(pending.size(), 1));
  std::vector<std::thread> pool;
  for (long t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  summary.computed = 0;
  for (const auto& [k, r] : results) {
    (void)k;
    summary.records.push_back(r);
  }
  summary.computed = static_cast<long>(summary.records.size()) - summary.resumed;
  summary.interrupted = interrupted.load() && summary.records.size() < weights.size();
  for (const auto& r : summary.records) {
    if (r.status == ScanStatus::Done && r.negative_indices.empty() && r.tail_negative_indices.empty()) {
      summary.largest_clean_k = std::max(summary.largest_clean_k.value_or(r.k), r.k);
    }
  }

  if (!opt.checkpoint.empty() && !summary.interrupted) {
    // One record per (k, mode), sorted, so the file no longer depends on scheduling.
    for (const auto& r : summary.records) latest[{r.k, r.mode}] = r;
    std::vector<ScanRecord> all;
    for (const auto& [key, r] : latest) {
      (void)key;
      all.push_back(r);
    }
    std::sort(all.begin(), all.end(), [](const ScanRecord& a, const ScanRecord& b) {
      return a.k != b.k ? a.k < b.k : a.mode < b.mode;
    });
    finalize(opt.checkpoint, all);
  }
  return summary;
}

}  // namespace mf
