#pragma once

#include <gmpxx.h>

#include <atomic>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modforms/approx_real.hpp"

namespace mf {

/// Known full-scale thresholds beyond which a(ell+2) < 0, keyed by nu.
inline constexpr long kFullScaleThreshold[3] = {84636, 83332, 82532};
/// Window floor used by the full-scale mode.
inline constexpr long kFullScaleWindow = 10000;

struct Theorem2Threshold {
  long k = 0;
  long ell = 0;
  ApproxReal value;   // e^{58.366/(k-2)} (ell^3 log k)^{1/(k-2)} 1.0242382 ell
  long N = 0;         // ceiling of value; 0 when ell = 0
  bool trivial = false;
};

Theorem2Threshold theorem2_threshold(long k, long bits = ApproxReal::kDefaultBits);

/// b(m) = (2k/B_k) sigma_{k-1}(m): the coefficients of F_{k,0} - E_k for m <= ell.
mpq_class eisenstein_part_b(long k, long m);

/// (2 pi)^k/(k-1)! e^{28.466} sqrt(ell log k) (1.0242382 ell)^{k/2}, in log space.
ApproxReal ch_envelope(long k, long bits = ApproxReal::kDefaultBits);

/// 0.9997 (2pi)^k/(k-1)! n^{k-1} > 2 C(h) n^{k/2}, the explicit inequality
/// behind the threshold N(k).
bool positivity_criterion(long k, long n, long bits = ApproxReal::kDefaultBits);
/// Smallest n >= 1 for which positivity_criterion holds.
long positivity_onset(long k, long bits = ApproxReal::kDefaultBits);

/// A(n) = (-k/4n) [q^{n-1}] (E_4' E_4^{3n-k/4-1} q^n/Delta^n).
mpq_class burmann_A(long k, long n);

struct BurmannCoefficient {
  long k = 0;
  long ell = 0;
  long nu = 0;
  mpq_class A1;  // A(ell+1)
  mpq_class A2;  // A(ell+2)
  mpq_class a1;  // a(ell+1) = -A(ell+1)
  mpq_class a2;  // a(ell+2) = -A(ell+2) + A(ell+1)(24 ell - 240 nu + 744)
};

BurmannCoefficient burmann_mos(long k);

enum class ScanStatus { Done, Partial, Refuted };

std::string_view to_string(ScanStatus s);
ScanStatus scan_status_from_string(std::string_view s);

struct ScanRecord {
  long k = 0;
  long ell = 0;
  std::string mode = "desk";          // desk | full
  long window_end = 0;                // N(k), or max(N(k), 10000) at full scale
  long tail_end = 0;                  // coefficients checked through this index
  std::vector<long> negative_indices; // inside (ell, window_end]
  std::vector<long> tail_negative_indices;  // inside (window_end, tail_end]
  std::optional<long> min_value_index;      // smallest coefficient in the window
  bool siegel_positive = false;       // a(ell+1) > 0
  ScanStatus status = ScanStatus::Done;
  std::optional<long> resume_index;   // first unverified index when partial
  std::optional<double> wall_time;    // seconds; omitted unless requested
  std::string tool_version;
};

struct ScanWindowOptions {
  long margin = 0;          // extra coefficients past the window
  bool full_scale = false;
  // Estimated working-set limit in bytes; exceeded -> partial record.
  double size_guard_bytes = 4.0 * 1024 * 1024 * 1024;
  bool record_wall_time = false;
};

ScanRecord scan_window(long k, const ScanWindowOptions& opt = {});

/// FNV-1a of "modforms-<version>", hex.
std::string tool_version_hash();

struct ScanOptions {
  long kmin = 12;
  long kmax = 12;
  int mod12 = 0;
  std::string checkpoint;   // empty: no checkpoint file
  int threads = 1;
  bool full_scale = false;
  bool repair = false;
  long margin = 0;
  bool record_wall_time = false;
  double size_guard_bytes = 4.0 * 1024 * 1024 * 1024;
  const std::atomic<bool>* stop = nullptr;  // checked between weights
};

struct ScanSummary {
  std::vector<ScanRecord> records;  // sorted by k
  std::optional<long> largest_clean_k;
  long computed = 0;                // weights scanned in this run
  long resumed = 0;                 // weights taken from the checkpoint
  bool interrupted = false;
  long effective_kmax = 0;
};

/// Scans every k in [kmin, kmax] with k = mod12 (mod 12), resuming from and
/// appending to the checkpoint. Throws CorruptCheckpoint on a damaged file
/// unless `repair` is set, in which case the file is cut back to its last
/// valid line.
ScanSummary largest_nonneg_search(const ScanOptions& opt);

}  // namespace mf
