#include "cyreg/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cyreg {

using json = nlohmann::ordered_json;

double round9(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return std::strtod(buf, nullptr);
}

namespace {

json number(double x) {
  if (std::isnan(x) || std::isinf(x)) return nullptr;
  return round9(x);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_row(const std::string& line, std::vector<double>& out) {
  out.clear();
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    if (cell.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) return false;
    out.push_back(v);
  }
  if (!line.empty() && line.back() == ',') return false;
  return !out.empty();
}

json simplex_json(const Simplex& s) { return s.vertices(); }

json chain_json(const FilteredComplex& fc, const Chain& c) {
  json out = json::array();
  for (Index i : c.terms()) out.push_back(simplex_json(fc.simplex(i)));
  return out;
}

json simplex_ref(const FilteredComplex& fc, Index i) {
  if (i == kNoSimplex || i >= fc.size()) return nullptr;
  return simplex_json(fc.simplex(i));
}

json interval_json(const FilteredComplex& fc, const PersistenceInterval& iv) {
  json j;
  j["dim"] = iv.dim;
  j["birth"] = number(iv.birth);
  j["death"] = number(iv.death);
  j["birth_simplex"] = simplex_ref(fc, iv.birth_simplex);
  j["death_simplex"] = simplex_ref(fc, iv.death_simplex);
  j["ignorable"] = iv.ignorable();
  j["representative"] = chain_json(fc, iv.representative);
  return j;
}

json image_json(const ImageInterval& iv) {
  json j;
  j["birth"] = number(iv.birth);
  j["death"] = number(iv.death);
  return j;
}

}  // namespace

PointCloud parse_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::vector<double> row;
  PointCloud pc;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(ss, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (!parse_row(trim(line), row)) {
      if (first) {
        first = false;
        continue;
      }
      fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": not a row of numbers");
    }
    first = false;
    if (!pc.empty() && row.size() != pc.dim()) {
      fail(ErrorCode::dimension_mismatch, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(pc.dim()) + " columns, got " +
                                              std::to_string(row.size()));
    }
    try {
      pc.push_back(row);
    } catch (const Error& e) {
      fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pc;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::io, "failed writing '" + path + "'");
}

PointCloud read_csv(const std::string& path) { return parse_csv(read_text(path)); }

std::string to_csv(const PointCloud& pc) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < pc.size(); ++i) {
    const auto p = pc.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", p[c]);
      if (c) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::vector<FilteredSimplex> parse_filtration_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("simplices")) fail(ErrorCode::parse, "missing \"simplices\" list");
    list = &doc["simplices"];
  }
  if (!list->is_array()) fail(ErrorCode::parse, "filtration must be a list of simplexes");
  std::vector<FilteredSimplex> out;
  out.reserve(list->size());
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto& e = (*list)[i];
    const std::string where = "simplex #" + std::to_string(i);
    if (!e.is_object() || !e.contains("vertices") || !e.contains("value")) {
      fail(ErrorCode::parse, where + ": expected {\"vertices\": [...], \"value\": v}");
    }
    if (!e["vertices"].is_array() || !e["value"].is_number()) {
      fail(ErrorCode::parse, where + ": vertices must be a list and value a number");
    }
    std::vector<Vertex> verts;
    for (const auto& v : e["vertices"]) {
      if (!v.is_number_unsigned()) {
        fail(ErrorCode::parse, where + ": vertices must be non-negative integers");
      }
      verts.push_back(v.get<Vertex>());
    }
    FilteredSimplex fs;
    try {
      fs.simplex = Simplex(std::move(verts));
    } catch (const Error& err) {
      fail(ErrorCode::validation, where + ": " + err.what());
    }
    fs.value = e["value"].get<double>();
    if (e.contains("rank")) {
      if (!e["rank"].is_number_integer()) fail(ErrorCode::parse, where + ": rank must be an integer");
      fs.rank = e["rank"].get<int>();
    }
    out.push_back(std::move(fs));
  }
  return out;
}

FilteredComplex read_filtration_json(const std::string& path) {
  return explicit_filtration(parse_filtration_json(read_text(path)));
}

std::string intervals_to_json(const FilteredComplex& fc,
                              std::span<const PersistenceInterval> intervals, int k_max) {
  json doc;
  doc["simplex_count"] = fc.size();
  doc["k_max"] = k_max;
  json diagrams = json::object();
  for (int k = 0; k <= k_max; ++k) {
    json pts = json::array();
    for (const auto& p : diagram(intervals, k)) pts.push_back({number(p.birth), number(p.death)});
    diagrams[std::to_string(k)] = std::move(pts);
  }
  doc["diagrams"] = std::move(diagrams);
  json ivs = json::array();
  for (const auto& iv : intervals) ivs.push_back(interval_json(fc, iv));
  doc["intervals"] = std::move(ivs);
  return doc.dump(2) + "\n";
}

std::string matching_to_json(const FilteredComplex& fx, const FilteredComplex& fy,
                             const FilteredComplex& fz, const MatchResult& m) {
  json doc;
  doc["k"] = m.k;
  doc["horizon"] = number(m.horizon);
  json matches = json::array();
  std::vector<char> used_x(m.x_intervals.size(), 0), used_y(m.y_intervals.size(), 0);
  for (const auto& rec : m.matches) {
    used_x[rec.gamma] = used_y[rec.delta] = 1;
    const auto& g = m.x_intervals[rec.gamma];
    const auto& d = m.y_intervals[rec.delta];
    json j;
    j["k"] = rec.dim;
    j["gamma"] = {{"birth", number(g.birth)}, {"death", number(g.death)},
                  {"birth_simplex", simplex_ref(fx, g.birth_simplex)}};
    j["delta"] = {{"birth", number(d.birth)}, {"death", number(d.death)},
                  {"birth_simplex", simplex_ref(fy, d.birth_simplex)}};
    j["gamma_image"] = image_json(rec.gamma_img);
    j["delta_image"] = image_json(rec.delta_img);
    j["shared_death_simplex"] = rec.shared_death_simplex;
    j["shared_death_vertices"] = rec.pseudo ? json(nullptr) : simplex_ref(fz, rec.shared_death_simplex);
    j["pseudo"] = rec.pseudo;
    j["a_gamma"] = number(rec.affinity.a_gamma);
    j["a_delta"] = number(rec.affinity.a_delta);
    j["c"] = number(rec.affinity.c);
    j["rho"] = number(rec.affinity.rho);
    j["gamma_representative"] = chain_json(fx, g.representative);
    j["delta_representative"] = chain_json(fy, d.representative);
    matches.push_back(std::move(j));
  }
  doc["matches"] = std::move(matches);
  auto unmatched = [&](const std::vector<PersistenceInterval>& ivs, const std::vector<char>& used) {
    json out = json::array();
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      if (!used[i] && !ivs[i].ignorable()) {
        out.push_back({{"birth", number(ivs[i].birth)}, {"death", number(ivs[i].death)}});
      }
    }
    return out;
  };
  doc["unmatched_x"] = unmatched(m.x_intervals, used_x);
  doc["unmatched_y"] = unmatched(m.y_intervals, used_y);
  return doc.dump(2) + "\n";
}

std::string prevalence_to_json(const PrevalenceReport& r) {
  json doc;
  doc["k"] = r.params.k;
  doc["B"] = r.params.B;
  doc["mode"] = to_string(r.params.mode);
  doc["seed"] = r.params.seed;
  doc["degenerate_resamples"] = r.degenerate_resamples;
  doc["warnings"] = r.warnings;
  json ivs = json::array();
  const auto order = r.ranking();
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& ip = r.intervals[order[pos]];
    json j;
    j["rank"] = pos + 1;
    j["birth"] = number(ip.interval.birth);
    j["death"] = number(ip.interval.death);
    j["p_hat"] = number(ip.p_hat);
    j["match_count"] = ip.match_count;
    json rho = json::array();
    for (double x : ip.rho) rho.push_back(number(x));
    j["rho"] = std::move(rho);
    json rep = json::array();
    for (const auto& s : ip.representative.terms()) rep.push_back(simplex_json(s));
    j["representative"] = std::move(rep);
    ivs.push_back(std::move(j));
  }
  doc["intervals"] = std::move(ivs);
  return doc.dump(2) + "\n";
}

namespace {

std::string fmt9(double x) {
  if (std::isinf(x)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

std::string prevalence_to_csv(const PrevalenceReport& r) {
  std::string out = "rank,birth,death,match_count,p_hat\n";
  const auto order = r.ranking();
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& ip = r.intervals[order[pos]];
    out += std::to_string(pos + 1) + "," + fmt9(ip.interval.birth) + "," +
           fmt9(ip.interval.death) + "," + std::to_string(ip.match_count) + "," +
           fmt9(ip.p_hat) + "\n";
  }
  return out;
}

std::string prevalence_plot_tsv(const PrevalenceReport& r, std::size_t top) {
  std::string out = "rank\tp_hat\tbirth\tdeath\n";
  const auto order = r.ranking();
  for (std::size_t pos = 0; pos < order.size() && pos < top; ++pos) {
    const auto& ip = r.intervals[order[pos]];
    out += std::to_string(pos + 1) + "\t" + fmt9(ip.p_hat) + "\t" + fmt9(ip.interval.birth) +
           "\t" + fmt9(ip.interval.death) + "\n";
  }
  return out;
}

}  // namespace cyreg
