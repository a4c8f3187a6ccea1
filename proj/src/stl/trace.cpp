#include "ogan/stl/trace.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ogan::stl {

Trace::Trace(double time_step, std::vector<std::string> names,
             std::vector<std::vector<double>> columns)
    : time_step_(time_step),
      names_(std::move(names)),
      columns_(std::move(columns)) {
  if (!(time_step_ > 0.0)) {
    throw std::invalid_argument("trace time step must be positive");
  }
  if (names_.size() != columns_.size()) {
    throw std::invalid_argument("trace component names and columns disagree");
  }
  if (columns_.empty()) {
    throw std::invalid_argument("trace needs at least one component");
  }
  length_ = columns_.front().size();
  if (length_ < 1) {
    throw std::invalid_argument("trace components need at least one sample");
  }
  for (const auto& col : columns_) {
    if (col.size() != length_) {
      throw std::invalid_argument("trace components have unequal lengths");
    }
  }
}

bool Trace::has_component(const std::string& name) const {
  for (const auto& n : names_) {
    if (n == name) return true;
  }
  return false;
}

const std::vector<double>& Trace::component(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return columns_[i];
  }
  throw std::out_of_range("unknown signal name: " + name);
}

Trace Trace::merged_with(const Trace& other) const {
  if (other.length() != length_) {
    throw std::invalid_argument("cannot merge traces of different lengths");
  }
  auto names = names_;
  auto columns = columns_;
  for (std::size_t i = 0; i < other.names_.size(); ++i) {
    if (!has_component(other.names_[i])) {
      names.push_back(other.names_[i]);
      columns.push_back(other.columns_[i]);
    }
  }
  return Trace(time_step_, std::move(names), std::move(columns));
}

Trace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("trace CSV is empty");
  }
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) header.push_back(field);
  }
  if (header.empty() || header.front() != "time") {
    throw std::runtime_error("trace CSV must start with a `time` column");
  }
  const std::size_t ncols = header.size();
  if (ncols < 2) {
    throw std::runtime_error("trace CSV has no signal columns");
  }

  std::vector<double> times;
  std::vector<std::vector<double>> columns(ncols - 1);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::size_t i = 0;
    while (std::getline(ss, field, ',')) {
      double v;
      try {
        v = std::stod(field);
      } catch (const std::exception&) {
        throw std::runtime_error("trace CSV line " + std::to_string(lineno) +
                                 ": bad number `" + field + "`");
      }
      if (i == 0) {
        times.push_back(v);
      } else if (i < ncols) {
        columns[i - 1].push_back(v);
      }
      ++i;
    }
    if (i != ncols) {
      throw std::runtime_error("trace CSV line " + std::to_string(lineno) +
                               ": expected " + std::to_string(ncols) +
                               " fields, got " + std::to_string(i));
    }
  }
  if (times.empty()) {
    throw std::runtime_error("trace CSV has no samples");
  }

  double step = 1.0;
  if (times.size() > 1) {
    step = times[1] - times[0];
    if (!(step > 0.0)) {
      throw std::runtime_error("trace CSV time column must increase");
    }
    for (std::size_t i = 2; i < times.size(); ++i) {
      const double d = times[i] - times[i - 1];
      if (std::abs(d - step) > 1e-9 * std::max(1.0, std::abs(step))) {
        throw std::runtime_error("trace CSV time column is not uniform");
      }
    }
  }

  std::vector<std::string> names(header.begin() + 1, header.end());
  return Trace(step, std::move(names), std::move(columns));
}

Trace read_trace_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open trace file: " + path);
  }
  return read_trace_csv(in);
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << "time";
  for (const auto& name : trace.names()) out << ',' << name;
  out << '\n';
  out << std::setprecision(17);
  for (std::size_t i = 0; i < trace.length(); ++i) {
    out << static_cast<double>(i) * trace.time_step();
    for (std::size_t c = 0; c < trace.component_count(); ++c) {
      out << ',' << trace.column(c)[i];
    }
    out << '\n';
  }
}

}  // namespace ogan::stl
