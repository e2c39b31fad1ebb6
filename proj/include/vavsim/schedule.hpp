#pragma once

#include <array>

namespace vavsim {

// Weekly occupancy calendar. Episodes start Monday 00:00; no holidays.
struct Schedule {
  int work_start_min = 480;   // 08:00
  int work_end_min = 1020;    // 17:00
  std::array<bool, 7> workdays{true, true, true, true, true, false, false};

  // clock is minutes since episode start; work interval is [start, end).
  bool is_work(double clock_min) const;
  void validate() const;
};

std::array<int, 6> rbc_policy(double clock_min, const Schedule& schedule);
std::array<int, 6> always_on_policy();
std::array<int, 6> always_off_policy();

}  // namespace vavsim
