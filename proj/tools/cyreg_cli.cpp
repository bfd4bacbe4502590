// Command-line front end over the cyreg C API.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyreg/cyreg.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum Exit { ok = 0, internal = 1, usage = 2, parse = 3, dimension = 4, io = 5, validation = 6 };

struct Failure {
  Exit code;
  std::string message;
};

[[noreturn]] void fail(Exit code, std::string message) { throw Failure{code, std::move(message)}; }

Exit exit_for(cyreg_status s) {
  switch (s) {
    case CYREG_OK: return ok;
    case CYREG_ERR_INVALID_ARGUMENT: return usage;
    case CYREG_ERR_PARSE: return parse;
    case CYREG_ERR_DIMENSION_MISMATCH: return dimension;
    case CYREG_ERR_IO: return io;
    case CYREG_ERR_VALIDATION: return validation;
    case CYREG_ERR_INTERNAL: return internal;
  }
  return internal;
}

void check(cyreg_status s, const std::string& context) {
  if (s != CYREG_OK) fail(exit_for(s), context + ": " + cyreg_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Cloud = std::unique_ptr<cyreg_point_cloud, Deleter<cyreg_point_cloud, cyreg_point_cloud_free>>;
using Filtration = std::unique_ptr<cyreg_filtration, Deleter<cyreg_filtration, cyreg_filtration_free>>;
using Persistence =
    std::unique_ptr<cyreg_persistence, Deleter<cyreg_persistence, cyreg_persistence_free>>;
using Matching = std::unique_ptr<cyreg_matching, Deleter<cyreg_matching, cyreg_matching_free>>;
using Prevalence =
    std::unique_ptr<cyreg_prevalence, Deleter<cyreg_prevalence, cyreg_prevalence_free>>;

std::string take(char* s) {
  std::string out(s);
  cyreg_string_free(s);
  return out;
}

std::string fmt9(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt9(x).c_str(), nullptr);
}

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string complex = "cech";
  std::optional<int> max_dim;
  std::optional<double> max_radius;
  std::vector<int> k{1};
  std::size_t B = 20;
  std::size_t n = 0;
  std::string mode = "resample";
  double h = 0.001;
  std::string sampler;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  double p = 1.0;
  std::string norm = "euclidean";
  std::size_t top = 10;
  std::string out;

  int max_k() const {
    int m = 0;
    for (int x : k) m = std::max(m, x);
    return m;
  }

  json to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["complex"] = complex;
    j["max_dim"] = *max_dim;
    j["max_radius"] = num(*max_radius);
    j["k"] = k;
    j["B"] = B;
    j["n"] = n;
    j["mode"] = mode;
    j["h"] = num(h);
    j["sampler"] = sampler;
    j["seed"] = seed;
    j["threads"] = threads;
    j["p"] = num(p);
    j["norm"] = norm;
    j["top"] = top;
    j["out"] = out;
    return j;
  }
};

template <class T>
T field(const json& j, const std::string& key, const char* expected) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    fail(validation, key + ": expected " + expected);
  }
}

double number_or_inf(const json& j, const std::string& key) {
  if (j.is_null()) return kInf;
  if (!j.is_number()) fail(validation, key + ": expected a number or null");
  return j.get<double>();
}

void apply_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(io, "config: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(parse, "config: " + std::string(e.what()));
  }
  if (!doc.is_object()) fail(parse, "config: expected a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "command") {
      if (field<std::string>(v, key, "a string") != c.command) {
        fail(validation, "command: config file is for '" + v.get<std::string>() + "'");
      }
    } else if (key == "inputs") {
      c.inputs = field<std::vector<std::string>>(v, key, "a list of paths");
    } else if (key == "complex") {
      c.complex = field<std::string>(v, key, "a string");
    } else if (key == "max_dim") {
      c.max_dim = field<int>(v, key, "an integer");
    } else if (key == "max_radius") {
      c.max_radius = number_or_inf(v, key);
    } else if (key == "k") {
      c.k = v.is_array() ? field<std::vector<int>>(v, key, "a list of integers")
                         : std::vector<int>{field<int>(v, key, "an integer")};
    } else if (key == "B") {
      c.B = field<std::size_t>(v, key, "a non-negative integer");
    } else if (key == "n") {
      c.n = field<std::size_t>(v, key, "a non-negative integer");
    } else if (key == "mode") {
      c.mode = field<std::string>(v, key, "a string");
    } else if (key == "h") {
      c.h = field<double>(v, key, "a number");
    } else if (key == "sampler") {
      c.sampler = field<std::string>(v, key, "a string");
    } else if (key == "seed") {
      c.seed = field<std::uint64_t>(v, key, "a non-negative integer");
    } else if (key == "threads") {
      c.threads = field<unsigned>(v, key, "a non-negative integer");
    } else if (key == "p") {
      c.p = number_or_inf(v, key);
    } else if (key == "norm") {
      c.norm = field<std::string>(v, key, "a string");
    } else if (key == "top") {
      c.top = field<std::size_t>(v, key, "a non-negative integer");
    } else if (key == "out") {
      c.out = field<std::string>(v, key, "a string");
    } else {
      fail(validation, key + ": unknown configuration key");
    }
  }
}

// Values given on the command line, applied over the config file.
struct Flags {
  std::string config;
  std::vector<std::string> inputs;
  std::string complex, mode, sampler, norm, out;
  int max_dim = 0;
  double max_radius = 0, h = 0, p = 0;
  std::vector<int> k;
  std::size_t B = 0, n = 0, top = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON file with run settings; flags override it");
  app->add_option("--out", f.out, "Output directory (default: $CYREG_OUTPUT_DIR or .)");
  app->add_option("--complex", f.complex, "rips or cech (default cech)");
  app->add_option("--max-dim", f.max_dim, "Largest simplex dimension (default max k + 1)");
  app->add_option("--max-radius", f.max_radius,
                  "Filtration cutoff (default 0.3 for prevalence, unbounded otherwise)");
  app->add_option("--k", f.k, "Homology degrees, comma separated (default 1)")
      ->delimiter(',')
      ->allow_extra_args(false);
  app->add_option("--seed", f.seed, "Random seed (default 0)");
  app->add_option("--threads", f.threads, "Worker threads, 0 for one per core (default 0)");
}

void apply_flags(RunConfig& c, const CLI::App& app, const Flags& f) {
  auto has = [&](const char* name) { return app.get_option_no_throw(name) && app.count(name); };
  if (has("inputs")) c.inputs = f.inputs;
  if (app.count("--complex")) c.complex = f.complex;
  if (app.count("--max-dim")) c.max_dim = f.max_dim;
  if (app.count("--max-radius")) c.max_radius = f.max_radius;
  if (app.count("--k")) c.k = f.k;
  if (app.count("--seed")) c.seed = f.seed;
  if (app.count("--threads")) c.threads = f.threads;
  if (app.count("--out")) c.out = f.out;
  if (has("--B")) c.B = f.B;
  if (has("--n")) c.n = f.n;
  if (has("--mode")) c.mode = f.mode;
  if (has("--h")) c.h = f.h;
  if (has("--sampler")) c.sampler = f.sampler;
  if (has("--p")) c.p = f.p;
  if (has("--norm")) c.norm = f.norm;
  if (has("--top")) c.top = f.top;
}

void validate(RunConfig& c) {
  if (c.complex != "rips" && c.complex != "cech") {
    fail(validation, "complex: expected 'rips' or 'cech', got '" + c.complex + "'");
  }
  if (c.k.empty()) fail(validation, "k: at least one degree is required");
  for (int k : c.k) {
    if (k < 0) fail(validation, "k: degrees must be non-negative");
  }
  if (!c.max_dim) c.max_dim = c.max_k() + 1;
  if (*c.max_dim <= c.max_k()) {
    fail(validation, "max_dim: must exceed the largest k (" + std::to_string(c.max_k()) + ")");
  }
  if (!c.max_radius) c.max_radius = c.command == "prevalence" ? 0.3 : kInf;
  if (std::isnan(*c.max_radius) || *c.max_radius < 0) {
    fail(validation, "max_radius: must be non-negative");
  }
  if (c.mode != "resample" && c.mode != "newsample") {
    fail(validation, "mode: expected 'resample' or 'newsample', got '" + c.mode + "'");
  }
  if (!(c.h > 0)) fail(validation, "h: must be positive");
  if (c.B == 0) fail(validation, "B: must be positive");
  if (std::isnan(c.p) || c.p < 1) fail(validation, "p: must be at least 1");
  if (c.norm != "sup" && c.norm != "euclidean") {
    fail(validation, "norm: expected 'sup' or 'euclidean', got '" + c.norm + "'");
  }
  if (c.top == 0) fail(validation, "top: must be positive");
  if (c.out.empty()) {
    const char* env = std::getenv("CYREG_OUTPUT_DIR");
    c.out = env && *env ? env : ".";
  }

  const auto n_inputs = c.inputs.size();
  if (c.command == "diagram" && n_inputs != 1) {
    fail(validation, "inputs: diagram takes one CSV or JSON file");
  }
  if (c.command == "match" && n_inputs != 2 && n_inputs != 3) {
    fail(validation, "inputs: match takes two CSV files or three JSON filtrations (x y z)");
  }
  if (c.command == "metric" && n_inputs < 2) {
    fail(validation, "inputs: metric needs at least two CSV files");
  }
  if (c.command == "prevalence") {
    const bool file_sampler = c.sampler.rfind("file:", 0) == 0;
    if (n_inputs > 1) fail(validation, "inputs: prevalence takes at most one CSV file");
    if (n_inputs == 0 && c.sampler.empty()) {
      fail(validation, "sampler: required when no base CSV is given");
    }
    if (n_inputs == 1 && file_sampler) {
      fail(validation, "sampler: a file sampler conflicts with the base CSV argument");
    }
    if (c.mode == "newsample" && (c.sampler.empty() || file_sampler)) {
      fail(validation, "sampler: newsample mode needs a generative sampler");
    }
    if (n_inputs == 0 && !file_sampler && c.n == 0) {
      fail(validation, "n: required when the base cloud is sampled");
    }
  }
  if (c.command == "sample") {
    if (c.sampler.empty()) fail(validation, "sampler: required");
    if (c.sampler.rfind("file:", 0) == 0) fail(validation, "sampler: cannot sample from a file");
    if (c.n == 0) fail(validation, "n: must be positive");
    if (n_inputs != 0) fail(validation, "inputs: sample takes no input files");
  }
}

bool is_json(const std::string& path) {
  return fs::path(path).extension() == ".json";
}

cyreg_builder builder(const RunConfig& c) {
  return cyreg_builder{c.complex == "rips" ? CYREG_RIPS : CYREG_CECH, *c.max_dim, *c.max_radius};
}

Cloud read_cloud(const std::string& path) {
  cyreg_point_cloud* pc = nullptr;
  check(cyreg_point_cloud_read_csv(path.c_str(), &pc), path);
  Cloud cloud(pc);
  if (cyreg_point_cloud_size(pc) == 0) fail(validation, "inputs: '" + path + "' holds no points");
  return cloud;
}

Filtration read_filtration(const std::string& path) {
  cyreg_filtration* f = nullptr;
  check(cyreg_filtration_read_json(path.c_str(), &f), path);
  return Filtration(f);
}

Filtration build(const cyreg_point_cloud* pc, const RunConfig& c, const std::string& what) {
  const auto b = builder(c);
  cyreg_filtration* f = nullptr;
  check(cyreg_filtration_build(pc, &b, &f), what);
  return Filtration(f);
}

json parse_json(const std::string& text) { return json::parse(text); }

// Output files are collected first and written together at the end.
class Writer {
 public:
  explicit Writer(const std::string& dir) : dir_(dir) {}

  void add(const std::string& rel, std::string text) { files_.emplace_back(rel, std::move(text)); }

  void add_json(const std::string& rel, const json& doc) { add(rel, doc.dump(2) + "\n"); }

  void commit() const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) fail(io, "out: cannot create '" + dir_.string() + "': " + ec.message());
    for (const auto& [rel, text] : files_) {
      const fs::path path = dir_ / rel;
      fs::create_directories(path.parent_path(), ec);
      if (ec) fail(io, "out: cannot create '" + path.parent_path().string() + "'");
      std::ofstream out(path, std::ios::binary);
      out << text;
      out.close();
      if (!out) fail(io, "out: cannot write '" + path.string() + "'");
    }
  }

 private:
  fs::path dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

json with_config(const RunConfig& c, json body) {
  json doc;
  doc["config"] = c.to_json();
  for (auto& [key, v] : body.items()) doc[key] = std::move(v);
  return doc;
}

void run_diagram(const RunConfig& c, Writer& w) {
  const auto& input = c.inputs.front();
  Filtration f = is_json(input) ? read_filtration(input) : build(read_cloud(input).get(), c, input);
  cyreg_persistence* p = nullptr;
  check(cyreg_persistence_compute(f.get(), c.max_k(), &p), "persistence");
  Persistence pers(p);
  char* text = nullptr;
  check(cyreg_persistence_to_json(pers.get(), &text), "persistence");
  w.add_json("diagrams.json", with_config(c, parse_json(take(text))));

  const std::size_t count = cyreg_persistence_count(pers.get());
  for (int k : c.k) {
    std::string tsv = "birth\tdeath\n";
    for (std::size_t i = 0; i < count; ++i) {
      cyreg_interval iv;
      check(cyreg_persistence_interval(pers.get(), i, &iv), "persistence");
      if (iv.dim != k || iv.ignorable) continue;
      tsv += fmt9(iv.birth) + "\t" + fmt9(iv.death) + "\n";
    }
    w.add("plotdata/diagram_k" + std::to_string(k) + ".tsv", std::move(tsv));
  }
}

Matching match_one(const RunConfig& c, const std::vector<Filtration>& fs_in,
                   const std::vector<Cloud>& clouds, int k) {
  cyreg_matching* m = nullptr;
  if (!fs_in.empty()) {
    check(cyreg_match_filtrations(fs_in[0].get(), fs_in[1].get(), fs_in[2].get(), k, &m), "match");
  } else {
    const auto b = builder(c);
    check(cyreg_match_clouds(clouds[0].get(), clouds[1].get(), &b, k, &m), "match");
  }
  return Matching(m);
}

void run_match(const RunConfig& c, Writer& w) {
  std::vector<Filtration> filtrations;
  std::vector<Cloud> clouds;
  if (c.inputs.size() == 3) {
    for (const auto& path : c.inputs) filtrations.push_back(read_filtration(path));
  } else {
    for (const auto& path : c.inputs) clouds.push_back(read_cloud(path));
    if (cyreg_point_cloud_dim(clouds[0].get()) != cyreg_point_cloud_dim(clouds[1].get())) {
      fail(dimension, "inputs: x and y have different coordinate dimensions");
    }
  }
  json results = json::array();
  for (int k : c.k) {
    Matching m = match_one(c, filtrations, clouds, k);
    char* text = nullptr;
    check(cyreg_matching_to_json(m.get(), &text), "match");
    results.push_back(parse_json(take(text)));

    std::string tsv =
        "gamma_birth\tgamma_death\tdelta_birth\tdelta_death\tgamma_image_death\t"
        "delta_image_death\trho\n";
    for (std::size_t i = 0; i < cyreg_matching_count(m.get()); ++i) {
      cyreg_match r;
      check(cyreg_matching_record(m.get(), i, &r), "match");
      tsv += fmt9(r.gamma_birth) + "\t" + fmt9(r.gamma_death) + "\t" + fmt9(r.delta_birth) +
             "\t" + fmt9(r.delta_death) + "\t" + fmt9(r.gamma_image_death) + "\t" +
             fmt9(r.delta_image_death) + "\t" + fmt9(r.rho) + "\n";
    }
    w.add("plotdata/matches_k" + std::to_string(k) + ".tsv", std::move(tsv));
  }
  w.add_json("matches.json", with_config(c, json{{"results", std::move(results)}}));
}

void run_metric(const RunConfig& c, Writer& w) {
  std::vector<Cloud> clouds;
  for (const auto& path : c.inputs) clouds.push_back(read_cloud(path));
  const std::size_t dim = cyreg_point_cloud_dim(clouds[0].get());
  for (std::size_t i = 1; i < clouds.size(); ++i) {
    if (cyreg_point_cloud_dim(clouds[i].get()) != dim) {
      fail(dimension, "inputs: '" + c.inputs[i] + "' differs in coordinate dimension");
    }
  }
  const cyreg_metric_params mp{c.p, c.norm == "sup" ? CYREG_NORM_SUP : CYREG_NORM_EUCLIDEAN};
  json pairs = json::array();
  std::string tsv = "k\tx\ty\td_im\td_wasserstein\n";
  for (int k : c.k) {
    for (std::size_t a = 0; a < clouds.size(); ++a) {
      for (std::size_t b = a + 1; b < clouds.size(); ++b) {
        const auto bp = builder(c);
        cyreg_matching* raw = nullptr;
        check(cyreg_match_clouds(clouds[a].get(), clouds[b].get(), &bp, k, &raw), "metric");
        Matching m(raw);
        cyreg_metrics out;
        check(cyreg_matching_metrics(m.get(), &mp, &out), "metric");
        json j;
        j["k"] = k;
        j["x"] = c.inputs[a];
        j["y"] = c.inputs[b];
        j["d_im"] = num(out.d_im);
        j["d_wasserstein"] = num(out.d_wasserstein);
        j["matched"] = out.matched;
        j["unmatched_x"] = out.unmatched_x;
        j["unmatched_y"] = out.unmatched_y;
        j["excluded_infinite"] = out.excluded_infinite;
        pairs.push_back(std::move(j));
        tsv += std::to_string(k) + "\t" + c.inputs[a] + "\t" + c.inputs[b] + "\t" +
               fmt9(out.d_im) + "\t" + fmt9(out.d_wasserstein) + "\n";
      }
    }
  }
  w.add_json("metrics.json", with_config(c, json{{"p", num(c.p)}, {"norm", c.norm},
                                                 {"pairs", std::move(pairs)}}));
  w.add("plotdata/metrics.tsv", std::move(tsv));
}

Cloud sample_cloud(const std::string& sampler, std::size_t n, std::uint64_t seed) {
  cyreg_point_cloud* pc = nullptr;
  check(cyreg_sample(sampler.c_str(), n, seed, &pc), "sampler");
  return Cloud(pc);
}

std::string cloud_csv(const cyreg_point_cloud* pc) {
  char* text = nullptr;
  check(cyreg_point_cloud_to_csv(pc, &text), "sample");
  return take(text);
}

void run_prevalence(const RunConfig& c, Writer& w) {
  Cloud base;
  if (!c.inputs.empty()) {
    base = read_cloud(c.inputs.front());
  } else if (c.sampler.rfind("file:", 0) == 0) {
    base = read_cloud(c.sampler.substr(5));
  } else {
    base = sample_cloud(c.sampler, c.n, c.seed);
    w.add("base.csv", cloud_csv(base.get()));
  }

  json results = json::array();
  std::string csv = "k,rank,birth,death,match_count,p_hat,top\n";
  for (int k : c.k) {
    cyreg_prevalence_params params{};
    params.builder = builder(c);
    params.k = k;
    params.B = c.B;
    params.n = c.n;
    params.mode = c.mode == "resample" ? CYREG_RESAMPLE : CYREG_NEWSAMPLE;
    params.h = c.h;
    params.sampler = c.mode == "newsample" ? c.sampler.c_str() : nullptr;
    params.seed = c.seed;
    params.threads = c.threads;
    cyreg_prevalence* raw = nullptr;
    check(cyreg_prevalence_compute(base.get(), &params, &raw), "prevalence");
    Prevalence r(raw);

    char* text = nullptr;
    check(cyreg_prevalence_to_json(r.get(), &text), "prevalence");
    results.push_back(parse_json(take(text)));
    for (std::size_t i = 0; i < cyreg_prevalence_count(r.get()); ++i) {
      cyreg_prevalence_entry e;
      check(cyreg_prevalence_get(r.get(), i, &e), "prevalence");
      csv += std::to_string(k) + "," + std::to_string(i + 1) + "," + fmt9(e.birth) + "," +
             fmt9(e.death) + "," + std::to_string(e.match_count) + "," + fmt9(e.p_hat) + "," +
             (i < c.top ? "1" : "0") + "\n";
    }
    check(cyreg_prevalence_plot_tsv(r.get(), c.top, &text), "prevalence");
    w.add("plotdata/prevalence_top_k" + std::to_string(k) + ".tsv", take(text));
  }
  w.add("prevalence.csv", std::move(csv));
  w.add_json("prevalence.json", with_config(c, json{{"results", std::move(results)}}));
}

void run_sample(const RunConfig& c, Writer& w) {
  Cloud pc = sample_cloud(c.sampler, c.n, c.seed);
  w.add("sample.csv", cloud_csv(pc.get()));
}

int run(const RunConfig& c) {
  Writer w(c.out);
  w.add_json("config.json", c.to_json());
  if (c.command == "diagram") run_diagram(c, w);
  if (c.command == "match") run_match(c, w);
  if (c.command == "metric") run_metric(c, w);
  if (c.command == "prevalence") run_prevalence(c, w);
  if (c.command == "sample") run_sample(c, w);
  w.commit();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent homology, interval matching and cycle prevalence"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cyreg_version()));

  Flags f;
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"diagram", "Persistence diagrams of a point cloud (CSV) or explicit filtration (JSON)"},
      {"match", "Interval matching between two clouds, or x y z explicit filtrations"},
      {"prevalence", "Bootstrap cycle prevalence of a base cloud"},
      {"metric", "Pairwise d_IM and Wasserstein distances between point clouds"},
      {"sample", "Draw a point cloud from a sampler"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->set_help_flag("--help", "Print this help message and exit");
    add_common(sub, f);
    const std::string name = s.name;
    if (name != "sample") sub->add_option("inputs", f.inputs, "Input files");
    if (name == "prevalence" || name == "sample") {
      sub->add_option("--sampler", f.sampler,
                      "torus:R,r | clusters:p[,sigma] | uniform[:dim] | circle:r[,noise] | file:path");
      sub->add_option("--n", f.n, "Points per sample (0: size of the base cloud)");
    }
    if (name == "prevalence") {
      sub->add_option("--B", f.B, "Number of resamples (default 20)");
      sub->add_option("--mode", f.mode, "resample or newsample (default resample)");
      sub->add_option("--h", f.h, "KDE variance for resample mode (default 0.001)");
      sub->add_option("--top", f.top, "Intervals flagged and plotted (default 10)");
    }
    if (name == "metric") {
      sub->add_option("--p", f.p, "Exponent of the distances (default 1)");
      sub->add_option("--norm", f.norm, "Point distance: sup or euclidean (default euclidean)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunConfig c;
    c.command = sub->get_name();
    if (sub->count("--config")) apply_file(c, f.config);
    apply_flags(c, *sub, f);
    validate(c);
    return run(c);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return internal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return internal;
  }
}
