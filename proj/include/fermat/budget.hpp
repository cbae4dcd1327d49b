#pragma once

#include <chrono>

namespace fermat::budget {

using Clock = std::chrono::steady_clock;

/// Installs a wall-clock deadline for the current thread until destroyed.
/// Nested scopes keep the earliest deadline.
class Scope {
 public:
  explicit Scope(std::chrono::milliseconds limit);
  ~Scope();
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  Clock::time_point previous_;
};

/// Throws fermat::Timeout once the current thread's deadline has passed.
void check();

}  // namespace fermat::budget
