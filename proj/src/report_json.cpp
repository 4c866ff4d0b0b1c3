#include "sipsamp/report_json.hpp"

#include <fstream>

namespace sipsamp {

Json to_json(const BoundEstimate& b) {
  Json j;
  j["lower_A"] = b.lower_A;
  j["upper_B"] = b.upper_B;
  j["method"] = b.method == BoundMethod::RandomSearch ? "random-search" : "exhaustive";
  j["trials"] = b.trials;
  j["seed"] = b.seed;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["note"] =
      "finite-section verification: every statement is tested on the span of "
      "{S_j : |j| <= N}; bound estimates are one-sided (A from above, B from below)";
  Json cfg;
  cfg["p"] = r.config.p;
  cfg["n_trunc"] = r.config.half_width;
  cfg["grid_order"] = r.config.grid_order;
  cfg["grid_panels"] = r.config.panels > 0 ? r.config.panels : std::max(8, r.config.half_width);
  cfg["seed"] = r.config.seed;
  cfg["trials"] = r.config.trials;
  j["config"] = cfg;
  j["interpolation_dev"] = r.interpolation_dev;
  j["biorth_SM_dev"] = r.biorth_SM_dev;
  j["biorth_SG_dev"] = r.biorth_SG_dev;
  j["bessel_B"] = to_json(r.bessel_B);
  j["frame_AB"] = to_json(r.frame_AB);
  j["riesz_AB"] = to_json(r.riesz_AB);
  j["formula3_dev"] = r.formula3_dev;
  j["formula4_dev"] = r.formula4_dev;
  j["norm_equiv_ratio_range"] = {r.norm_equiv_ratio_range.first, r.norm_equiv_ratio_range.second};
  return j;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("json: cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace sipsamp
