#include "wl1/io.hpp"

#include <cstdio>
#include <algorithm>
#include <fstream>
#include <sstream>

namespace wl1::io {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::vector<double> parse_csv_line(const std::string& line, const std::string& path) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      row.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw std::runtime_error("bad numeric value '" + cell + "' in " + path);
    }
  }
  return row;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(parse_csv_line(line, path));
    if (rows.back().size() != rows.front().size())
      throw std::runtime_error("ragged rows in matrix file " + path);
  }
  if (rows.empty()) throw std::runtime_error("empty matrix file " + path);
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  if (!m.allFinite()) throw std::runtime_error("non-finite entries in matrix file " + path);
  return m;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream out = open_out(path);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Vector read_vector(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto row = parse_csv_line(line, path);
    vals.insert(vals.end(), row.begin(), row.end());
  }
  if (vals.empty()) throw std::runtime_error("empty vector file " + path);
  Vector v(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Index>(i)] = vals[i];
  if (!v.allFinite()) throw std::runtime_error("non-finite entries in vector file " + path);
  return v;
}

void write_vector(const std::string& path, const Vector& v) {
  std::ofstream out = open_out(path);
  for (Index i = 0; i < v.size(); ++i) out << format_double(v[i]) << '\n';
}

IndexSet parse_index_set(const std::string& text) {
  IndexSet s;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    s.push_back(static_cast<Index>(std::stoll(cell)));
  }
  std::sort(s.begin(), s.end());
  return s;
}

IndexSet read_index_set(const std::string& path) {
  std::ifstream in = open_in(path);
  std::stringstream all;
  all << in.rdbuf();
  return parse_index_set(all.str());
}

std::string format_index_set(const IndexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

nlohmann::ordered_json to_json(const SolverResult& r) {
  nlohmann::ordered_json j;
  j["status"] = solve_status_name(r.status);
  j["objective"] = r.objective;
  j["constraint_residual"] = r.constraint_residual;
  j["iterations"] = r.iterations;
  j["x_hat"] = std::vector<double>(r.x_hat.data(), r.x_hat.data() + r.x_hat.size());
  return j;
}

nlohmann::ordered_json to_json(const GuaranteeReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.inputs.k;
  j["a"] = r.inputs.a;
  j["b"] = r.inputs.b;
  j["omega"] = r.inputs.omega;
  j["rho"] = r.inputs.rho.str();
  j["alpha"] = r.inputs.alpha.str();
  j["delta_a"] = r.inputs.delta_a;
  j["theta_ab"] = r.inputs.theta_ab;
  j["s"] = r.s;
  j["d"] = r.d;
  j["C_weighted"] = r.c_weighted;
  j["C_standard"] = r.c_standard;
  j["condition_met"] = r.condition_met;
  j["condition_met_standard"] = r.condition_met_standard;
  auto put = [&j](const char* key, const std::optional<double>& v) {
    if (v)
      j[key] = *v;
    else
      j[key] = nullptr;
  };
  put("D0", r.D0);
  put("D1", r.D1);
  put("D0_ds", r.D0_ds);
  put("D1_ds", r.D1_ds);
  put("C0", r.C0);
  put("C1", r.C1);
  put("C0_ds", r.C0_ds);
  put("C1_ds", r.C1_ds);
  j["prop1_case"] = prop1_case_name(r.prop1_case);
  return j;
}

nlohmann::ordered_json to_json(const Prop1Report& r) {
  nlohmann::ordered_json j;
  j["case"] = prop1_case_name(r.which);
  j["s"] = r.s;
  j["two_k_minus_a"] = r.two_k_minus_a;
  j["C_weighted"] = r.c_weighted;
  j["C_standard"] = r.c_standard;
  auto put = [&j](const char* key, const std::optional<bool>& v) {
    if (v)
      j[key] = *v;
    else
      j[key] = nullptr;
  };
  put("D0_smaller", r.d0_smaller);
  put("D0_ds_smaller", r.d0_ds_smaller);
  put("D1_smaller", r.d1_smaller);
  put("iff_rhs_holds", r.iff_rhs_holds);
  return j;
}

nlohmann::ordered_json to_json(const RicValue& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["delta"] = r.value;
  j["argmax_support"] = r.argmax_support;
  return j;
}

nlohmann::ordered_json to_json(const RocValue& r) {
  nlohmann::ordered_json j;
  j["order1"] = r.order1;
  j["order2"] = r.order2;
  j["theta"] = r.value;
  j["argmax_left"] = r.argmax_left;
  j["argmax_right"] = r.argmax_right;
  return j;
}

nlohmann::ordered_json to_json(const SharpnessReport& r) {
  nlohmann::ordered_json j;
  j["exact_enumeration"] = r.exact_enumeration;
  j["delta_a"] = r.delta_a;
  j["theta_ab"] = r.theta_ab;
  j["C_weighted"] = r.c_weighted;
  j["condition_sum"] = r.condition_sum;
  j["delta_analytic"] = r.delta_analytic;
  j["theta_analytic"] = r.theta_analytic;
  j["eta_weighted_norm"] = r.eta_weighted_norm;
  j["gamma_weighted_norm"] = r.gamma_weighted_norm;
  j["separation"] = r.separation;
  j["bp"] = to_json(r.bp);
  j["bp_distance_from_eta"] = r.bp_distance_from_eta;
  j["bp_objective_at_most_eta"] = r.bp_objective_at_most_eta;
  j["recovery_failed"] = r.recovery_failed;
  j["noise_path"] = r.noise_path;
  j["noise_path_stays_away"] = r.noise_path_stays_away;
  return j;
}

}  // namespace wl1::io
