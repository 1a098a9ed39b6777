#include "padeint/time_history.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace padeint {

std::vector<double> TimeHistory::displacement_series(int slot) const {
  std::vector<double> s(t.size());
  for (size_t i = 0; i < t.size(); ++i) s[i] = u[i][slot];
  return s;
}

std::vector<double> TimeHistory::velocity_series(int slot) const {
  std::vector<double> s(t.size());
  for (size_t i = 0; i < t.size(); ++i) s[i] = v[i][slot];
  return s;
}

std::string format_double(double val) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), val);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const TimeHistory& h) {
  out << "#";
  for (const auto& [k, v] : h.metadata) out << " " << k << "=" << v;
  out << "\n";
  out << "step,t,dof_id,u,v\n";
  for (size_t i = 0; i < h.t.size(); ++i) {
    for (size_t d = 0; d < h.dofs.size(); ++d) {
      out << h.steps[i] << "," << format_double(h.t[i]) << "," << h.dofs[d]
          << "," << format_double(h.u[i][d]) << "," << format_double(h.v[i][d])
          << "\n";
    }
  }
}

void write_csv_file(const std::string& path, const TimeHistory& h) {
  std::ofstream f(path);
  if (!f) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  write_csv(f, h);
}

}  // namespace padeint
