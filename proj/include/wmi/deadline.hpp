#pragma once

#include <chrono>
#include <optional>

#include "wmi/errors.hpp"

namespace wmi {

/// Cooperative time limit: long loops call check(), which throws Timeout.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::duration<double> d) {
    Deadline r;
    r.until_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(d);
    return r;
  }
  bool active() const { return until_.has_value(); }
  bool expired() const { return until_ && std::chrono::steady_clock::now() > *until_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> until_;
};

}  // namespace wmi
