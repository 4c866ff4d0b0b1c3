#pragma once

// CSV import/export.  All numeric output is written with 17 significant
// digits so files round-trip doubles exactly.

#include <string>
#include <vector>

#include "sipsamp/funcspace.hpp"
#include "sipsamp/kernels.hpp"

namespace sipsamp {

std::string format_double(double x);  // %.17g

/// Grid function rows: node,weight,re,im.
void write_gridfn_csv(const std::string& path, const GridFn& f);
GridFn read_gridfn_csv(const std::string& path);

/// Sample-set rows: j,t_j,re,im (rank order).
void write_samples_csv(const std::string& path, const SamplingSystem& sys, const CVec& samples);

/// Kernel lattice rows: s,t,re,im.
void write_kernel_csv(const std::string& path, const Kernel& G, const std::vector<double>& s_vals,
                      const std::vector<double>& t_vals);

struct SweepRow {
  double t = 0.0;
  Complex value{0.0};
  double abs_err = 0.0;
  double tail_bound = 0.0;
};

/// Reconstruction sweep rows: t,re,im,abs_err,tail_bound.
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

/// Dense matrix dump, one row per line.
void write_matrix_csv(const std::string& path, const CMat& M);

}  // namespace sipsamp
