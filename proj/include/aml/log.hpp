#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace aml {

/// Stage-tagged logger. Lines go to stderr and are also retained so the
/// pipeline can drop a run log next to its artifacts.
class Log {
 public:
  explicit Log(bool quiet = false) : quiet_(quiet) {}

  template <typename... Args>
  void info(const std::string& stage, Args&&... parts) {
    std::ostringstream os;
    os << "[" << stage << "] ";
    (os << ... << parts);
    emit(os.str());
  }

  const std::vector<std::string>& lines() const { return lines_; }
  std::string text() const;

 private:
  void emit(const std::string& line);
  bool quiet_;
  std::vector<std::string> lines_;
};

}  // namespace aml
