#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace padeint {

// Sampled displacement/velocity record of selected DOFs over a run, plus
// free-form metadata that the CSV writer emits as a single comment line.
struct TimeHistory {
  std::vector<int> dofs;
  std::vector<int> steps;
  std::vector<double> t;
  std::vector<std::vector<double>> u;  // u[sample][dof slot]
  std::vector<std::vector<double>> v;
  std::vector<std::pair<std::string, std::string>> metadata;

  int samples() const { return static_cast<int>(t.size()); }
  // Series of one observed DOF slot across all samples.
  std::vector<double> displacement_series(int slot) const;
  std::vector<double> velocity_series(int slot) const;
};

// Shortest round-trip decimal representation.
std::string format_double(double v);

// Layout: one `# key=value ...` metadata line, a header, then one row per
// sample and observed DOF: step,t,dof_id,u,v.
void write_csv(std::ostream& out, const TimeHistory& h);
void write_csv_file(const std::string& path, const TimeHistory& h);

// Drives any integrator exposing step/step_index/time/displacement/velocity.
// Records the initial state, then every stride-th step and always the last.
template <typename Integrator>
TimeHistory record_history(Integrator& it, int nsteps,
                           const std::vector<int>& dofs, int stride = 1) {
  TimeHistory h;
  h.dofs = dofs;
  auto snap = [&] {
    h.steps.push_back(it.step_index());
    h.t.push_back(it.time());
    std::vector<double> us, vs;
    us.reserve(dofs.size());
    vs.reserve(dofs.size());
    for (int d : dofs) {
      us.push_back(it.displacement(d));
      vs.push_back(it.velocity(d));
    }
    h.u.push_back(std::move(us));
    h.v.push_back(std::move(vs));
  };
  snap();
  for (int s = 1; s <= nsteps; ++s) {
    it.step();
    if (s % stride == 0 || s == nsteps) snap();
  }
  return h;
}

}  // namespace padeint
