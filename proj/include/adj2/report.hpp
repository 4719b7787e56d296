#pragma once

#include <string>
#include <vector>

namespace adj2 {

enum class Status { Pass, Fail, Error };

std::string_view status_name(Status s);

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  std::string witness;
};

/// Ordered check results of one suite run.
struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  void add(std::string id, Status status, std::string witness = {});
  void pass(std::string id, std::string witness = {}) { add(std::move(id), Status::Pass, std::move(witness)); }
  void fail(std::string id, std::string witness) { add(std::move(id), Status::Fail, std::move(witness)); }
  void error(std::string id, std::string witness) { add(std::move(id), Status::Error, std::move(witness)); }
  void append(const Report& other);

  std::size_t count(Status s) const;
  bool all_pass() const { return count(Status::Pass) == checks.size(); }
  int exit_code() const { return all_pass() ? 0 : 1; }

  /// One line per check followed by the summary counts.
  std::string text() const;
  /// key=value lines, one blank-line-separated block per check.
  std::string sidecar() const;
};

}  // namespace adj2
