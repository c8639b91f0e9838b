#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace saxlkit {

enum class TargetStatus { Certified, BruteForced, Failed };
const char* to_string(TargetStatus s);

struct TargetRecord {
  std::string target;       // canonical partition text, or an instance label
  TargetStatus status = TargetStatus::Failed;
  std::string certificate;  // path of the emitted certificate, if any
  double millis = 0;
  std::string detail;       // failure diagnostic
};

/// Per-run record of a verification campaign. Only failures are always
/// retained; the full record list is kept when `keep_records` is set, and
/// `sink` (if any) sees every record in target order.
struct VerificationReport {
  std::string family;
  std::string range;
  std::size_t total = 0, certified = 0, brute_forced = 0, failed = 0;
  std::vector<TargetRecord> records;
  std::vector<TargetRecord> failures;
  double seconds = 0;
  bool keep_records = false;
  std::function<void(const TargetRecord&)> sink;

  bool ok() const { return failed == 0; }
  void add(TargetRecord r);
  /// `family range: total=.. certified=.. brute_forced=.. failed=.. seconds=..`
  std::string summary() const;
};

/// CSV header `target,status,certificate_path,millis`.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const TargetRecord& r);

}  // namespace saxlkit
