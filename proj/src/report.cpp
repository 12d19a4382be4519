#include "carlitz/report.hpp"

#include <sstream>

namespace carlitz {

std::string VerifyReport::status_string() const {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ExpectedFail: return "expected-fail";
  }
  return "?";
}

VerifyReport::Status VerifyReport::resolve(bool equal, bool in_range) {
  if (equal) return Status::Pass;
  return in_range ? Status::Fail : Status::ExpectedFail;
}

std::string VerifyReport::summary_line() const {
  std::ostringstream os;
  os << id << " [" << status_string() << "]";
  if (!label.empty()) os << " " << label;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  if (witness) os << " | lhs=" << witness->first << " rhs=" << witness->second;
  return os.str();
}

}  // namespace carlitz
