#include "vavsim/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace vavsim {

bool Schedule::is_work(double clock_min) const {
  const double week = std::fmod(clock_min, 7.0 * 1440.0);
  const int day = static_cast<int>(week / 1440.0);  // 0 = Monday
  if (!workdays[day]) return false;
  const double minute_of_day = week - day * 1440.0;
  return minute_of_day >= work_start_min && minute_of_day < work_end_min;
}

void Schedule::validate() const {
  if (!(work_start_min >= 0 && work_end_min <= 1440 &&
        work_start_min < work_end_min))
    throw std::runtime_error("schedule: need 0 <= start < end <= 1440");
  bool any = false;
  for (bool d : workdays) any = any || d;
  if (!any) throw std::runtime_error("schedule: at least one workday required");
}

std::array<int, 6> rbc_policy(double clock_min, const Schedule& schedule) {
  return schedule.is_work(clock_min) ? always_on_policy() : always_off_policy();
}

std::array<int, 6> always_on_policy() { return {1, 1, 1, 1, 1, 1}; }

std::array<int, 6> always_off_policy() { return {0, 0, 0, 0, 0, 0}; }

}  // namespace vavsim
