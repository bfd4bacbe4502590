#include "cyreg/cyreg.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>
#include <thread>

#include "cyreg/bootstrap.hpp"
#include "cyreg/image.hpp"
#include "cyreg/io.hpp"
#include "cyreg/matching.hpp"
#include "cyreg/metric.hpp"
#include "cyreg/persistence.hpp"

struct cyreg_point_cloud {
  cyreg::PointCloud pc;
};

struct cyreg_filtration {
  cyreg::FilteredComplex fc;
};

struct cyreg_persistence {
  cyreg::FilteredComplex fc;
  std::vector<cyreg::PersistenceInterval> intervals;
  int k_max = 0;
};

struct cyreg_matching {
  cyreg::FilteredComplex fx, fy, fz;
  cyreg::MatchResult result;
};

struct cyreg_prevalence {
  cyreg::PrevalenceReport report;
  std::vector<std::size_t> order;
};

namespace {

thread_local std::string last_error;

cyreg_status to_status(cyreg::ErrorCode code) {
  switch (code) {
    case cyreg::ErrorCode::invalid_argument: return CYREG_ERR_INVALID_ARGUMENT;
    case cyreg::ErrorCode::parse: return CYREG_ERR_PARSE;
    case cyreg::ErrorCode::dimension_mismatch: return CYREG_ERR_DIMENSION_MISMATCH;
    case cyreg::ErrorCode::io: return CYREG_ERR_IO;
    case cyreg::ErrorCode::validation: return CYREG_ERR_VALIDATION;
  }
  return CYREG_ERR_INTERNAL;
}

template <class F>
cyreg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CYREG_OK;
  } catch (const cyreg::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CYREG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CYREG_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) cyreg::fail(cyreg::ErrorCode::invalid_argument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

cyreg::BuilderParams builder_params(const cyreg_builder* b) {
  require(b != nullptr, "builder is null");
  require(b->type == CYREG_RIPS || b->type == CYREG_CECH, "unknown complex type");
  cyreg::BuilderParams p;
  p.type = b->type == CYREG_RIPS ? cyreg::ComplexType::rips : cyreg::ComplexType::cech;
  p.max_dim = b->max_dim;
  p.max_radius = b->max_radius;
  return p;
}

cyreg::MatchResult match_prepared(const cyreg::FilteredComplex& fx,
                                  const cyreg::FilteredComplex& fy,
                                  const cyreg::FilteredComplex& fz, const cyreg::SimplexMap& dx,
                                  const cyreg::SimplexMap& dy, int k) {
  require(k >= 0, "k must be non-negative");
  return cyreg::match_intervals(fx, fy, fz, dx, dy, k);
}

void check_map(const cyreg::SimplexMap& f, const cyreg::FilteredComplex& from,
               const cyreg::FilteredComplex& to, const char* name) {
  if (auto v = cyreg::validate_map(f, from, to)) {
    cyreg::fail(cyreg::ErrorCode::validation, std::string(name) + ": " +
                                                  cyreg::to_string(v->kind) + " violation: " +
                                                  v->message);
  }
}

}  // namespace

extern "C" {

const char* cyreg_version(void) { return "0.1.0"; }

const char* cyreg_last_error(void) { return last_error.c_str(); }

void cyreg_string_free(char* s) { std::free(s); }

cyreg_status cyreg_point_cloud_create(size_t dim, const double* coords, size_t n_points,
                                      cyreg_point_cloud** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(coords != nullptr || n_points == 0, "coordinates are null");
    require(dim > 0 || n_points == 0, "dimension must be positive");
    std::vector<double> c(coords, coords + dim * n_points);
    *out = new cyreg_point_cloud{cyreg::PointCloud(dim, std::move(c))};
  });
}

cyreg_status cyreg_point_cloud_read_csv(const char* path, cyreg_point_cloud** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new cyreg_point_cloud{cyreg::read_csv(path)};
  });
}

cyreg_status cyreg_point_cloud_to_csv(const cyreg_point_cloud* pc, char** out) {
  return guarded([&] {
    require(pc != nullptr && out != nullptr, "null argument");
    *out = dup_string(cyreg::to_csv(pc->pc));
  });
}

size_t cyreg_point_cloud_size(const cyreg_point_cloud* pc) { return pc ? pc->pc.size() : 0; }

size_t cyreg_point_cloud_dim(const cyreg_point_cloud* pc) { return pc ? pc->pc.dim() : 0; }

const double* cyreg_point_cloud_coords(const cyreg_point_cloud* pc) {
  return pc ? pc->pc.coords().data() : nullptr;
}

void cyreg_point_cloud_free(cyreg_point_cloud* pc) { delete pc; }

cyreg_status cyreg_sample(const char* sampler, size_t n, uint64_t seed, cyreg_point_cloud** out) {
  return guarded([&] {
    require(sampler != nullptr && out != nullptr, "null argument");
    auto rng = cyreg::stream_rng(seed, 0);
    *out = new cyreg_point_cloud{cyreg::draw(cyreg::parse_sampler(sampler), n, rng)};
  });
}

cyreg_status cyreg_kde_sample(const cyreg_point_cloud* base, double h, size_t n, uint64_t seed,
                              cyreg_point_cloud** out) {
  return guarded([&] {
    require(base != nullptr && out != nullptr, "null argument");
    auto rng = cyreg::stream_rng(seed, 0);
    *out = new cyreg_point_cloud{cyreg::kde_sample(base->pc, h, n, rng)};
  });
}

cyreg_status cyreg_filtration_build(const cyreg_point_cloud* pc, const cyreg_builder* builder,
                                    cyreg_filtration** out) {
  return guarded([&] {
    require(pc != nullptr && out != nullptr, "null argument");
    *out = new cyreg_filtration{cyreg::build_filtration(pc->pc, builder_params(builder))};
  });
}

cyreg_status cyreg_filtration_from_json(const char* json, cyreg_filtration** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = new cyreg_filtration{cyreg::explicit_filtration(cyreg::parse_filtration_json(json))};
  });
}

cyreg_status cyreg_filtration_read_json(const char* path, cyreg_filtration** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new cyreg_filtration{cyreg::read_filtration_json(path)};
  });
}

size_t cyreg_filtration_size(const cyreg_filtration* f) { return f ? f->fc.size() : 0; }

void cyreg_filtration_free(cyreg_filtration* f) { delete f; }

cyreg_status cyreg_persistence_compute(const cyreg_filtration* f, int k_max,
                                       cyreg_persistence** out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null argument");
    require(k_max >= 0, "k_max must be non-negative");
    auto* p = new cyreg_persistence;
    try {
      p->fc = f->fc;
      p->intervals = cyreg::reduce(p->fc, k_max);
      p->k_max = k_max;
    } catch (...) {
      delete p;
      throw;
    }
    *out = p;
  });
}

size_t cyreg_persistence_count(const cyreg_persistence* p) { return p ? p->intervals.size() : 0; }

cyreg_status cyreg_persistence_interval(const cyreg_persistence* p, size_t i, cyreg_interval* out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    require(i < p->intervals.size(), "interval index out of range");
    const auto& iv = p->intervals[i];
    *out = cyreg_interval{iv.dim,          iv.birth,         iv.death,
                          iv.infinite(),   iv.ignorable(),   iv.birth_simplex,
                          iv.death_simplex};
  });
}

cyreg_status cyreg_persistence_to_json(const cyreg_persistence* p, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    *out = dup_string(cyreg::intervals_to_json(p->fc, p->intervals, p->k_max));
  });
}

void cyreg_persistence_free(cyreg_persistence* p) { delete p; }

cyreg_status cyreg_match_clouds(const cyreg_point_cloud* x, const cyreg_point_cloud* y,
                                const cyreg_builder* builder, int k, cyreg_matching** out) {
  return guarded([&] {
    require(x != nullptr && y != nullptr && out != nullptr, "null argument");
    const auto params = builder_params(builder);
    auto* m = new cyreg_matching;
    try {
      m->fx = cyreg::build_filtration(x->pc, params);
      m->fy = cyreg::build_filtration(y->pc, params);
      auto u = cyreg::union_filtration(x->pc, m->fx, y->pc, m->fy, params);
      m->fz = std::move(u.z);
      m->result = match_prepared(m->fx, m->fy, m->fz, u.from_x, u.from_y, k);
    } catch (...) {
      delete m;
      throw;
    }
    *out = m;
  });
}

cyreg_status cyreg_match_filtrations(const cyreg_filtration* x, const cyreg_filtration* y,
                                     const cyreg_filtration* z, int k, cyreg_matching** out) {
  return guarded([&] {
    require(x != nullptr && y != nullptr && z != nullptr && out != nullptr, "null argument");
    const auto dx = cyreg::SimplexMap::inclusion(x->fc, z->fc);
    const auto dy = cyreg::SimplexMap::inclusion(y->fc, z->fc);
    check_map(dx, x->fc, z->fc, "map X -> Z");
    check_map(dy, y->fc, z->fc, "map Y -> Z");
    auto* m = new cyreg_matching;
    try {
      m->fx = x->fc;
      m->fy = y->fc;
      m->fz = z->fc;
      m->result = match_prepared(m->fx, m->fy, m->fz, dx, dy, k);
    } catch (...) {
      delete m;
      throw;
    }
    *out = m;
  });
}

size_t cyreg_matching_count(const cyreg_matching* m) { return m ? m->result.matches.size() : 0; }

cyreg_status cyreg_matching_record(const cyreg_matching* m, size_t i, cyreg_match* out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    require(i < m->result.matches.size(), "match index out of range");
    const auto& rec = m->result.matches[i];
    const auto& g = m->result.x_intervals[rec.gamma];
    const auto& d = m->result.y_intervals[rec.delta];
    *out = cyreg_match{g.birth,
                       g.death,
                       d.birth,
                       d.death,
                       rec.gamma_img.death,
                       rec.delta_img.death,
                       rec.affinity.a_gamma,
                       rec.affinity.a_delta,
                       rec.affinity.c,
                       rec.affinity.rho,
                       rec.shared_death_simplex,
                       rec.pseudo};
  });
}

cyreg_status cyreg_matching_to_json(const cyreg_matching* m, char** out) {
  return guarded([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = dup_string(cyreg::matching_to_json(m->fx, m->fy, m->fz, m->result));
  });
}

cyreg_status cyreg_matching_metrics(const cyreg_matching* m, const cyreg_metric_params* params,
                                    cyreg_metrics* out) {
  return guarded([&] {
    require(m != nullptr && params != nullptr && out != nullptr, "null argument");
    require(params->norm == CYREG_NORM_SUP || params->norm == CYREG_NORM_EUCLIDEAN,
            "unknown norm");
    cyreg::MetricParams mp;
    mp.p = params->p;
    mp.norm = params->norm == CYREG_NORM_SUP ? cyreg::Norm::sup : cyreg::Norm::euclidean;
    const auto dim = cyreg::d_im(m->result, mp);
    const auto k = m->result.k;
    const double dw =
        std::isinf(mp.p)
            ? std::numeric_limits<double>::quiet_NaN()
            : cyreg::d_wasserstein(cyreg::diagram(m->result.x_intervals, k),
                                   cyreg::diagram(m->result.y_intervals, k), mp);
    *out = cyreg_metrics{dim.value,       dw, dim.matched, dim.unmatched_x, dim.unmatched_y,
                         dim.excluded_infinite};
  });
}

void cyreg_matching_free(cyreg_matching* m) { delete m; }

cyreg_status cyreg_validate_inclusion(const cyreg_filtration* x, const cyreg_filtration* z) {
  return guarded([&] {
    require(x != nullptr && z != nullptr, "null argument");
    check_map(cyreg::SimplexMap::inclusion(x->fc, z->fc), x->fc, z->fc, "map");
  });
}

cyreg_status cyreg_validate_vertex_map(const cyreg_filtration* x, const cyreg_filtration* z,
                                       const uint32_t* vertex_map, size_t n) {
  return guarded([&] {
    require(x != nullptr && z != nullptr && (vertex_map != nullptr || n == 0), "null argument");
    const auto f = cyreg::SimplexMap::from_vertex_map(x->fc, z->fc, [&](cyreg::Vertex v) {
      if (v >= n) {
        cyreg::fail(cyreg::ErrorCode::invalid_argument,
                    "vertex " + std::to_string(v) + " has no entry in the vertex map");
      }
      return vertex_map[v];
    });
    check_map(f, x->fc, z->fc, "map");
  });
}

cyreg_status cyreg_prevalence_compute(const cyreg_point_cloud* base,
                                      const cyreg_prevalence_params* params,
                                      cyreg_prevalence** out) {
  return guarded([&] {
    require(base != nullptr && params != nullptr && out != nullptr, "null argument");
    require(params->mode == CYREG_RESAMPLE || params->mode == CYREG_NEWSAMPLE, "unknown mode");
    cyreg::PrevalenceParams p;
    p.builder = builder_params(&params->builder);
    p.k = params->k;
    p.B = params->B;
    p.n = params->n;
    p.mode = params->mode == CYREG_RESAMPLE ? cyreg::PrevalenceMode::resample
                                            : cyreg::PrevalenceMode::newsample;
    p.h = params->h;
    if (p.mode == cyreg::PrevalenceMode::newsample) {
      require(params->sampler != nullptr, "newsample mode needs a sampler");
      p.sampler = cyreg::parse_sampler(params->sampler);
    }
    p.seed = params->seed;
    p.threads = params->threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                     : params->threads;
    auto* r = new cyreg_prevalence;
    try {
      r->report = cyreg::prevalence(base->pc, p);
      r->order = r->report.ranking();
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
  });
}

size_t cyreg_prevalence_count(const cyreg_prevalence* r) {
  return r ? r->report.intervals.size() : 0;
}

cyreg_status cyreg_prevalence_get(const cyreg_prevalence* r, size_t i,
                                  cyreg_prevalence_entry* out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    require(i < r->order.size(), "entry index out of range");
    const auto& ip = r->report.intervals[r->order[i]];
    *out = cyreg_prevalence_entry{ip.interval.birth, ip.interval.death, ip.p_hat, ip.match_count};
  });
}

cyreg_status cyreg_prevalence_to_json(const cyreg_prevalence* r, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(cyreg::prevalence_to_json(r->report));
  });
}

cyreg_status cyreg_prevalence_to_csv(const cyreg_prevalence* r, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(cyreg::prevalence_to_csv(r->report));
  });
}

cyreg_status cyreg_prevalence_plot_tsv(const cyreg_prevalence* r, size_t top, char** out) {
  return guarded([&] {
    require(r != nullptr && out != nullptr, "null argument");
    *out = dup_string(cyreg::prevalence_plot_tsv(r->report, top));
  });
}

void cyreg_prevalence_free(cyreg_prevalence* r) { delete r; }

}  // extern "C"
