#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ogan::stl {

// Multi-component discrete-time signal sampled on a uniform grid.
// Immutable after construction.
class Trace {
 public:
  Trace(double time_step, std::vector<std::string> names,
        std::vector<std::vector<double>> columns);

  double time_step() const { return time_step_; }
  std::size_t length() const { return length_; }
  std::size_t component_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  bool has_component(const std::string& name) const;
  const std::vector<double>& component(const std::string& name) const;
  const std::vector<double>& column(std::size_t i) const { return columns_[i]; }

  // New trace with this trace's components followed by `other`'s. Components
  // already present keep the values from `this`.
  Trace merged_with(const Trace& other) const;

 private:
  double time_step_;
  std::size_t length_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

// CSV with header `time,<name1>,<name2>,...` and a uniformly spaced time
// column.
Trace read_trace_csv(std::istream& in);
Trace read_trace_csv_file(const std::string& path);
void write_trace_csv(std::ostream& out, const Trace& trace);

}  // namespace ogan::stl
