#include "sipsamp/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sipsamp {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void write_gridfn_csv(const std::string& path, const GridFn& f) {
  auto out = open_out(path);
  out << "node,weight,re,im\n";
  for (int i = 0; i < f.size(); ++i)
    out << format_double(f.grid->nodes[i]) << ',' << format_double(f.grid->weights[i]) << ','
        << format_double(f.values[i].real()) << ',' << format_double(f.values[i].imag()) << '\n';
}

GridFn read_gridfn_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
  std::string line;
  std::vector<double> nodes, weights;
  std::vector<Complex> values;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {  // tolerate files with or without a header line
      first = false;
      if (line.find_first_not_of("0123456789+-.,eE \t\r") != std::string::npos) continue;
    }
    std::istringstream ss(line);
    double n, w, re, im;
    char c;
    if (!(ss >> n >> c >> w >> c >> re >> c >> im))
      throw std::runtime_error("csv: malformed grid-function row: " + line);
    nodes.push_back(n);
    weights.push_back(w);
    values.emplace_back(re, im);
  }
  if (nodes.empty()) throw std::runtime_error("csv: no rows in '" + path + "'");
  auto grid = std::make_shared<Grid>();
  grid->nodes = Eigen::Map<const RVec>(nodes.data(), nodes.size());
  grid->weights = Eigen::Map<const RVec>(weights.data(), weights.size());
  GridFn f(grid, Eigen::Map<const CVec>(values.data(), values.size()));
  return f;
}

void write_samples_csv(const std::string& path, const SamplingSystem& sys, const CVec& samples) {
  if (samples.size() != window_size(sys.half_width))
    throw std::invalid_argument("csv: sample count does not match the window");
  auto out = open_out(path);
  out << "j,t_j,re,im\n";
  for (int r = 0; r < samples.size(); ++r)
    out << index_at(r) << ',' << format_double(sys.nodes[r]) << ','
        << format_double(samples[r].real()) << ',' << format_double(samples[r].imag()) << '\n';
}

void write_kernel_csv(const std::string& path, const Kernel& G, const std::vector<double>& s_vals,
                      const std::vector<double>& t_vals) {
  auto out = open_out(path);
  out << "s,t,re,im\n";
  for (const double s : s_vals)
    for (const double t : t_vals) {
      const Complex v = G(s, t);
      out << format_double(s) << ',' << format_double(t) << ',' << format_double(v.real()) << ','
          << format_double(v.imag()) << '\n';
    }
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  auto out = open_out(path);
  out << "t,re,im,abs_err,tail_bound\n";
  for (const SweepRow& r : rows)
    out << format_double(r.t) << ',' << format_double(r.value.real()) << ','
        << format_double(r.value.imag()) << ',' << format_double(r.abs_err) << ','
        << format_double(r.tail_bound) << '\n';
}

void write_matrix_csv(const std::string& path, const CMat& M) {
  auto out = open_out(path);
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) out << ',';
      const double re = M(i, j).real(), im = M(i, j).imag();
      out << format_double(re);
      if (im != 0.0) out << (im > 0.0 ? "+" : "-") << format_double(std::abs(im)) << 'i';
    }
    out << '\n';
  }
}

}  // namespace sipsamp
