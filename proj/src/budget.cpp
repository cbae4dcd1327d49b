#include "fermat/budget.hpp"

#include <algorithm>

#include "fermat/errors.hpp"

namespace fermat::budget {

namespace {
thread_local Clock::time_point deadline = Clock::time_point::max();
}

Scope::Scope(std::chrono::milliseconds limit) : previous_(deadline) {
  auto now = Clock::now();
  auto proposed = limit.count() <= 0 ? Clock::time_point::max() : now + limit;
  deadline = std::min(previous_, proposed);
}

Scope::~Scope() { deadline = previous_; }

void check() {
  if (deadline != Clock::time_point::max() && Clock::now() > deadline) throw Timeout();
}

}  // namespace fermat::budget
