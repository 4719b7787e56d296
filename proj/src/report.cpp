#include "adj2/report.hpp"

#include <algorithm>
#include <sstream>

namespace adj2 {

namespace {

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

void Report::add(std::string id, Status status, std::string witness) {
  checks.push_back(CheckRecord{std::move(id), status, one_line(std::move(witness))});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.status == s; }));
}

std::string Report::text() const {
  std::ostringstream out;
  out << "suite " << suite << '\n';
  for (const auto& c : checks) {
    out << "  " << status_name(c.status) << "  " << c.id;
    if (!c.witness.empty()) out << "  -- " << c.witness;
    out << '\n';
  }
  out << "summary: " << checks.size() << " checks, " << count(Status::Pass) << " pass, " << count(Status::Fail)
      << " fail, " << count(Status::Error) << " error\n";
  return out.str();
}

std::string Report::sidecar() const {
  std::ostringstream out;
  out << "suite=" << suite << '\n';
  out << "total=" << checks.size() << '\n';
  out << "pass=" << count(Status::Pass) << '\n';
  out << "fail=" << count(Status::Fail) << '\n';
  out << "error=" << count(Status::Error) << '\n';
  for (const auto& c : checks) {
    out << '\n' << "check=" << c.id << '\n' << "status=" << status_name(c.status) << '\n';
    out << "witness=" << c.witness << '\n';
  }
  return out.str();
}

}  // namespace adj2
