#include "saxlkit/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace saxlkit {

const char* to_string(TargetStatus s) {
  switch (s) {
    case TargetStatus::Certified: return "certified";
    case TargetStatus::BruteForced: return "brute-forced";
    case TargetStatus::Failed: return "failed";
  }
  return "?";
}

void VerificationReport::add(TargetRecord r) {
  ++total;
  switch (r.status) {
    case TargetStatus::Certified: ++certified; break;
    case TargetStatus::BruteForced: ++brute_forced; break;
    case TargetStatus::Failed: ++failed; failures.push_back(r); break;
  }
  if (sink) sink(r);
  if (keep_records) records.push_back(std::move(r));
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << family << ' ' << range << ": total=" << total << " certified=" << certified
     << " brute_forced=" << brute_forced << " failed=" << failed;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", seconds);
  os << " seconds=" << buf;
  return os.str();
}

namespace {
// Partitions contain commas, so fields are quoted when needed.
void field(std::ostream& os, const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    os << s;
    return;
  }
  os << '"';
  for (char c : s) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}
}  // namespace

void write_csv_header(std::ostream& os) { os << "target,status,certificate_path,millis\n"; }

void write_csv_row(std::ostream& os, const TargetRecord& r) {
  field(os, r.target);
  os << ',' << to_string(r.status) << ',';
  field(os, r.certificate);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r.millis);
  os << ',' << buf << '\n';
}

}  // namespace saxlkit
